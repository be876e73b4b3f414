#pragma once
// Interlaced doubly arithmetic orbits: which IAPs generate orbits whose
// (k1, k2)-strided sub-multisets are doubly arithmetic, as a linear system
// in the (A, D) parameters, plus a direct orbit-level verifier.
#include "steinhaus/iap.hpp"
#include "steinhaus/matrix.hpp"
#include <optional>
#include <vector>

namespace steinhaus {

// block system [[W^2, W T^t], [0, W]] (A^t; D^t) = 0 over Z for (k,k)-orbits
ExactMatrix idao_system_matrix(long k);

struct IdaoSolution
{
	std::vector<mpz_class> firsts, diffs; // an integer kernel vector split as (A | D)
};

// integer basis of the solution space
std::vector<IdaoSolution> idao_system_solve(long k);

struct IdaoClassWitness
{
	long i0 = 0, j0 = 0;
	mpz_class base, row_step, col_step;
};

struct IdaoVerdict
{
	bool ok = false;
	// on success: one affine description per residue class (i0, j0)
	std::vector<IdaoClassWitness> classes;
	// on failure: an orbit cell where double arithmeticity breaks
	std::optional<std::pair<long, long>> counterexample;
};

// check on the finite box 0 <= i < depth*k1, |j| <= width*k2 that every class
// {a_{i0+i*k1, j0+j*k2}} is doubly arithmetic; depth, width >= 2
IdaoVerdict idao_verify(IAPSpec const &s, long k1, long k2, long depth, long width);

} // namespace steinhaus
