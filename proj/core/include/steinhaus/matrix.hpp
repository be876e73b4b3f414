#pragma once
// Exact integer linear algebra: binomial circulants/Toeplitz blocks, Wendt's
// determinant matrix, fraction-free rank/determinant and rational kernels.
#include <gmpxx.h>
#include <vector>

namespace steinhaus {

struct ExactMatrix
{
	size_t rows = 0, cols = 0;
	std::vector<mpz_class> a; // row-major

	ExactMatrix() = default;
	ExactMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, 0) {}

	mpz_class &at(size_t r, size_t c) { return a[r * cols + c]; }
	mpz_class const &at(size_t r, size_t c) const { return a[r * cols + c]; }

	static ExactMatrix identity(size_t k);

	bool operator==(ExactMatrix const &o) const = default;
};

ExactMatrix operator*(ExactMatrix const &x, ExactMatrix const &y);
ExactMatrix operator+(ExactMatrix const &x, ExactMatrix const &y);
ExactMatrix operator-(ExactMatrix const &x, ExactMatrix const &y);
ExactMatrix transpose(ExactMatrix const &x);
ExactMatrix pow(ExactMatrix x, unsigned long e);

// row vector times matrix
std::vector<mpz_class> operator*(std::vector<mpz_class> const &v, ExactMatrix const &m);

mpz_class binom(long n, long k);

// circulant derivation matrix C_i for k-interlaced progressions:
// entry (r, s) = c_{(s-r) mod k} with c_t = sum_{l>=0} binom(i, l*k - t)
ExactMatrix circulant_c(long i, long k);
// Toeplitz correction block T_i: entry (r, s) = sum_{l>=0} l * binom(i, r - s + l*k)
ExactMatrix toeplitz_t(long i, long k);
// Wendt matrix W_k = C_k - I = Circ(binom(k,0), ..., binom(k,k-1))
ExactMatrix wendt(long k);

long exact_rank(ExactMatrix m);      // Bareiss, fraction-free
mpz_class exact_det(ExactMatrix m);  // square matrices only
// integer basis (primitive vectors) of the right kernel {x : M x = 0};
// rationals are used during elimination, then cleared to integers
std::vector<std::vector<mpz_class>> exact_kernel(ExactMatrix const &m);

} // namespace steinhaus
