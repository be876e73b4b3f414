#pragma once
// Three-dimensional analogue: triangular slices derived by the planar rule
// b(i,j) = a(i,j) + a(i,j+1) + a(i+1,j), stacked into tetrahedra.
#include "steinhaus/residue.hpp"
#include <json.hpp>
#include <vector>

namespace steinhaus {

// triangular array {(i,j) : i,j >= 0, i+j <= m-1} over Z/nZ
struct TriangleSlice
{
	long modulus = 1;
	std::vector<std::vector<long>> rows; // row i has m-i entries

	long size() const { return (long)rows.size(); }
	long at(long i, long j) const { return rows[i][j]; }

	bool operator==(TriangleSlice const &o) const = default;
};

TriangleSlice make_slice(long n, std::vector<std::vector<long>> rows);

// derived slice of size m-1
TriangleSlice derive_2d(TriangleSlice const &s);
TriangleSlice derive_2d_iterated(TriangleSlice s, long times);

// orbit entry after k derivations, by the trinomial closed form
// sum_{i'+j' <= k} trinom(k; i', j', k-i'-j') a(i+i', j+j')
long trinomial_orbit_entry(TriangleSlice const &s, long k, long i, long j);

struct Tetrahedron
{
	long modulus = 1;
	std::vector<TriangleSlice> floors;

	size_t cell_count() const;
	MultiplicityTable multiplicity() const;
	bool balanced() const { return is_balanced(multiplicity()); }
};

// floors base, derive_2d(base), ..., derive_2d^{m-1}(base); C(m+2,3) cells
Tetrahedron steinhaus_tetrahedron(TriangleSlice const &base);
// apex-down tetrahedron inside the orbit of a base slice of size 3m-2:
// floor f holds the cells (m-1-u, m-1-v), u+v <= f, of the f-th derived slice
Tetrahedron pascal_tetrahedron(TriangleSlice const &base);

struct TetraSearchSpec
{
	long modulus = 1;
	long order = 1;
	unsigned long long budget = 0; // max assignments, 0 = unlimited
	size_t found_cap = 4;
};

struct TetraSearchReport
{
	TetraSearchSpec spec;
	unsigned long long examined = 0;
	unsigned long long found_count = 0;
	std::vector<TriangleSlice> found; // base slices of balanced tetrahedra
	bool exhaustive = true;
	bool budget_exhausted = false;
	double elapsed_ms = 0;
};

// enumerate base slices anti-diagonal by anti-diagonal, finalizing tetrahedron
// cells as soon as their dependency cone is assigned and pruning on overflow
TetraSearchReport search_balanced_tetra(TetraSearchSpec const &spec);

nlohmann::json to_json(Tetrahedron const &t);
nlohmann::json to_json(TetraSearchReport const &r);

} // namespace steinhaus
