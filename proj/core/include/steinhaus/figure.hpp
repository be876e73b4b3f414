#pragma once
// Triangular figures over Z/nZ carved out of derivation orbits, plus the
// 120/240-degree rotation maps and text/JSON rendering.
#include "steinhaus/residue.hpp"
#include "steinhaus/sequence.hpp"
#include <json.hpp>
#include <string>
#include <vector>

namespace steinhaus {

enum class FigureKind
{
	steinhaus_triangle,
	steinhaus_trapezoid,
	pascal_triangle,
	pascal_trapezoid,
	lozenge,
	dat,
};

std::string to_string(FigureKind k);
FigureKind figure_kind_from_string(std::string const &s);

struct Figure
{
	FigureKind kind = FigureKind::steinhaus_triangle;
	long modulus = 1;
	std::vector<std::vector<long>> rows;
	nlohmann::json params; // construction parameters, for provenance in output

	size_t cell_count() const;
	MultiplicityTable multiplicity() const;
	bool balanced() const { return is_balanced(multiplicity()); }
};

// rows (derive^i s) for i = 0..m-1; seq must be modular (modulus >= 1)
Figure steinhaus_triangle(FiniteSeq const &s);
// first h rows of the triangle: triangle(s) minus triangle(derive^h s)
Figure steinhaus_trapezoid(FiniteSeq const &s, long h);
// for s of odd length 2m-1: row i = centered window of derive^i s, length i+1
Figure pascal_triangle(FiniteSeq const &s);
// last h rows of the Pascal triangle (rows m-h..m-1)
Figure pascal_trapezoid(FiniteSeq const &s, long h);
// pascal_triangle(s) stacked over steinhaus_triangle(derive^m s); |s| = 2m-1
Figure lozenge(FiniteSeq const &s);
// doubly arithmetic triangle {a + i*d1 + j*d2 : i+j <= m-1}
Figure dat_figure(long n, long a, long d1, long d2, long m);
// rows (derive_alpha^i s) for a length-2 weight vector alpha
Figure alpha_steinhaus_triangle(FiniteSeq const &s, std::vector<long> const &alpha);

// rotation maps on the generating sequence:
// rot120: b_j = sum_{k<=j} binom(j,k) a_{m-1-k};  rot240: b_j = sum_k binom(m-1-j,k) a_k
FiniteSeq rot120(FiniteSeq const &s);
FiniteSeq rot240(FiniteSeq const &s);

std::string render_text(Figure const &f);
nlohmann::json to_json(Figure const &f);
Figure figure_from_json(nlohmann::json const &j);

} // namespace steinhaus
