#pragma once
// Interlaced arithmetic progressions (IAPs): doubly infinite sequences where
// a_{j0 + j*k} = a_{j0} + j * d_{j0}.  The derivation rule maps IAPs to IAPs,
// so orbits of IAP rows admit exact closed forms.
#include "steinhaus/matrix.hpp"
#include "steinhaus/sequence.hpp"
#include <gmpxx.h>
#include <vector>

namespace steinhaus {

struct IAPSpec
{
	long modulus = 0; // 0 means Z
	std::vector<mpz_class> firsts;
	std::vector<mpz_class> diffs;

	IAPSpec() = default;
	IAPSpec(long n, std::vector<mpz_class> a, std::vector<mpz_class> d);
	IAPSpec(long n, std::vector<long> const &a, std::vector<long> const &d);

	long k() const { return (long)firsts.size(); }
	// term at any index j in Z (negative allowed)
	mpz_class term(long j) const;

	bool operator==(IAPSpec const &o) const = default;
};

// one derivation step: k stays fixed
IAPSpec derive_iap(IAPSpec const &s);
// i derivation steps in closed form via (A, D) -> (A C_i + D T_i, D C_i)
IAPSpec derive_iap_iterated(IAPSpec const &s, long i);

// finite window [j0, j1] inclusive
FiniteSeq iap_window(IAPSpec const &s, long j0, long j1);

// orbit entry a_{i,j} of row 0 = window of s, by deriving i times first
mpz_class iap_orbit_entry(IAPSpec const &s, long i, long j);

// doubly arithmetic triangle {a + i*d1 + j*d2 : i,j >= 0, i+j <= m-1} rows
std::vector<std::vector<long>> dat_rows(long n, long a, long d1, long d2, long m);

// the universal integer sequence IAP((0,-1,1),(1,-2,1)) and its scalings
IAPSpec universal_integer_sequence();
IAPSpec universal_sequence(long n, long d); // d * (projection mod n)

// integer coefficient f(i,j) with a_{i,j} = d * f(i,j) for the universal orbit:
// f(i,j) = (-1)^i sum_{k>0} binom(k, j+2i-k) (-1)^k (k-i)
mpz_class universal_orbit_coeff(long i, long j);
mpz_class universal_orbit_entry(long n, long d, long i, long j);

// orbit entry of the (6,3)-IDAO family S = IAP((a0,a1,a2),(d,-2d-3s,d+3s)),
// s = a0+a1+a2, via the 18 closed-form classes (i mod 6, j mod 3); valid for
// all i >= 0 and all j in Z
mpz_class idao_orbit_entry(long n, mpz_class const &a0, mpz_class const &a1,
                           mpz_class const &a2, mpz_class const &d, long i, long j);

// the family spec itself
IAPSpec idao_family(long n, mpz_class const &a0, mpz_class const &a1,
                    mpz_class const &a2, mpz_class const &d);

} // namespace steinhaus
