#pragma once
// Finite sequences over Z or Z/nZ and the Pascal derivation rule.
#include "steinhaus/residue.hpp"
#include <gmpxx.h>
#include <string>
#include <vector>

namespace steinhaus {

// modulus == 0 means the sequence lives in Z
struct FiniteSeq
{
	long modulus = 0;
	std::vector<mpz_class> terms;

	FiniteSeq() = default;
	FiniteSeq(long n, std::vector<mpz_class> t);
	FiniteSeq(long n, std::vector<long> const &t);

	size_t size() const { return terms.size(); }
	mpz_class const &operator[](size_t j) const { return terms[j]; }

	// canonical int values; only valid for modular sequences
	std::vector<long> values() const;

	bool operator==(FiniteSeq const &o) const = default;
};

mpz_class reduce_term(mpz_class v, long n);

// derived sequence (a_j + a_{j+1}); length shrinks by one
FiniteSeq derive(FiniteSeq const &s);
FiniteSeq derive_iterated(FiniteSeq s, long times);

// weighted derivation (sum_l alpha_l * a_{j+l}); length shrinks by |alpha|-1
FiniteSeq derive_alpha(FiniteSeq const &s, std::vector<long> const &alpha);

FiniteSeq negate(FiniteSeq const &s);
FiniteSeq reversed(FiniteSeq const &s);

// a_{m-1-j} == -a_j for all j
bool is_antisymmetric(FiniteSeq const &s);
// a_{m-1-j} == a_j for all j
bool is_symmetric(FiniteSeq const &s);

FiniteSeq parse_sequence(std::string const &csv, long modulus);
std::string format_sequence(FiniteSeq const &s);

} // namespace steinhaus
