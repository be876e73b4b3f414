#pragma once
// Balance verification: exhaustive searches for balanced figures, sweeps over
// the closed-form balanced families, and admissible-order arithmetic.
#include "steinhaus/figure.hpp"
#include "steinhaus/iap.hpp"
#include <json.hpp>
#include <string>
#include <vector>

namespace steinhaus {

// order residues (period `period`) for which n can divide the figure cardinality
struct AdmissibleClasses
{
	long period = 1;
	std::vector<long> residues;
};

AdmissibleClasses admissible_orders(long n, FigureKind kind);
// does n divide the cardinality of the figure of this order (and height)?
bool admissible_cardinality(long n, FigureKind kind, long m, long h = 0);

struct SearchSpec
{
	long modulus = 1;
	FigureKind kind = FigureKind::steinhaus_triangle;
	long order = 1;   // triangle order m; for pascal/lozenge the order is 2m-1
	long height = 0;  // trapezoids only
	unsigned long long budget = 0; // max DFS nodes, 0 = unlimited
	int threads = 1;
	size_t found_cap = 16; // how many witnesses to keep (all are counted)
};

struct SearchReport
{
	SearchSpec spec;
	unsigned long long examined = 0; // DFS nodes (partial assignments tried)
	unsigned long long found_count = 0;
	std::vector<std::vector<long>> found; // lexicographically merged witnesses
	bool exhaustive = true;
	bool budget_exhausted = false;
	double elapsed_ms = 0;
};

// enumerates all generating sequences, finalizing one anti-diagonal of the
// ambient triangle per fixed term and pruning on multiplicity overflow
SearchReport search_balanced(SearchSpec const &spec);

struct VerifyReport
{
	std::string claim;
	nlohmann::json parameters;
	long long checked = 0;
	std::vector<nlohmann::json> violations;
	double elapsed_ms = 0;

	bool ok() const { return violations.empty(); }
};

// balanced doubly arithmetic triangles: invertible step triples, m = 0 or -1 mod n
VerifyReport verify_thm1(long n, std::vector<long> orders = {});
// balanced figures in orbits of IAP((a0,a1,a2),(d,-2d-3s,d+3s)) for odd n
VerifyReport verify_thm3(long n, long a0, long a1, long a2, long d, long lambda_max);
// balanced figures in the orbit of IAP((a,-d,d-a),(d,-2d,d)) for odd n
VerifyReport verify_thm4(long n, long a, long d, long lambda_max);
// balanced figures in the orbit of the scaled universal sequence
VerifyReport verify_thm5(long n, long d, long lambda_max);
// the four balanced unions of consecutive universal-orbit figures
VerifyReport verify_prop10(long n, long d);
// closed forms of the iterated derivations of IAP((a,-d,d-a),(d,-2d,d))
VerifyReport verify_prop12(long n, long a, long d);

struct ProportionReport
{
	long n = 1;
	long period = 3;          // classes counted mod 3n
	long admissible_count = 0;
	long covered_count = 0;   // classes reached by the universal constructions
	long frac_num = 0, frac_den = 1;
	long omega = 0;           // number of distinct prime factors of n
	bool matches_formula = false; // fraction == 4 / (3 * 2^omega), or 1 for n = 1
};

// fraction of admissible triangle orders mod 3n realized by balanced
// triangles from the universal orbit (odd n)
ProportionReport proportion_report(long n);

nlohmann::json to_json(SearchReport const &r);
nlohmann::json to_json(VerifyReport const &r);
nlohmann::json to_json(ProportionReport const &r);

} // namespace steinhaus
