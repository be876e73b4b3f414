#include "steinhaus/balance.hpp"
#include <doctest.h>
#include <set>

using namespace steinhaus;

namespace {

// unpruned reference search: enumerate every sequence and test the figure
std::vector<std::vector<long>> naive_search(SearchSpec const &sp)
{
	long L = sp.order;
	std::vector<std::vector<long>> out;
	std::vector<long> t(L, 0);
	for (;;)
	{
		FiniteSeq s(sp.modulus, t);
		Figure f;
		switch (sp.kind)
		{
		case FigureKind::steinhaus_triangle: f = steinhaus_triangle(s); break;
		case FigureKind::steinhaus_trapezoid: f = steinhaus_trapezoid(s, sp.height); break;
		case FigureKind::pascal_triangle: f = pascal_triangle(s); break;
		default: f = lozenge(s); break;
		}
		if (f.balanced())
			out.push_back(t);
		long j = L - 1; // lexicographic order, first term most significant
		while (j >= 0 && ++t[j] == sp.modulus)
			t[j--] = 0;
		if (j < 0)
			return out;
	}
}

} // namespace

TEST_CASE("admissible order classes")
{
	auto a = admissible_orders(15, FigureKind::steinhaus_triangle);
	CHECK(a.period == 15);
	CHECK(a.residues == std::vector<long>{0, 5, 9, 14});
	auto b = admissible_orders(7, FigureKind::steinhaus_triangle);
	CHECK(b.residues == std::vector<long>{0, 6});
	auto c = admissible_orders(9, FigureKind::lozenge);
	CHECK(c.residues == std::vector<long>{0, 3, 6});
	auto d = admissible_orders(4, FigureKind::steinhaus_triangle);
	CHECK(d.period == 8);
	CHECK(d.residues == std::vector<long>{0, 7});
	CHECK(admissible_cardinality(15, FigureKind::steinhaus_triangle, 5));
	CHECK(!admissible_cardinality(15, FigureKind::steinhaus_triangle, 6));
	CHECK(admissible_cardinality(5, FigureKind::steinhaus_trapezoid, 5, 1));
	CHECK(!admissible_cardinality(5, FigureKind::steinhaus_trapezoid, 6, 4));
}

TEST_CASE("pruned search agrees with the unpruned reference")
{
	for (SearchSpec sp : {
	         SearchSpec{3, FigureKind::steinhaus_triangle, 5},
	         SearchSpec{3, FigureKind::steinhaus_triangle, 2},
	         SearchSpec{2, FigureKind::steinhaus_triangle, 3},
	         SearchSpec{3, FigureKind::pascal_triangle, 5},
	         SearchSpec{3, FigureKind::lozenge, 5},
	         SearchSpec{2, FigureKind::steinhaus_trapezoid, 4, 2},
	         SearchSpec{3, FigureKind::steinhaus_trapezoid, 4, 3},
	     })
	{
		sp.found_cap = 100000;
		auto rep = search_balanced(sp);
		auto ref = naive_search(sp);
		CHECK(rep.exhaustive);
		CHECK(rep.found_count == ref.size());
		CHECK(rep.found == ref);
	}
}

TEST_CASE("search skips inadmissible cardinalities outright")
{
	auto rep = search_balanced({3, FigureKind::steinhaus_triangle, 4});
	CHECK(rep.exhaustive);
	CHECK(rep.examined == 0);
	CHECK(rep.found_count == 0);
}

TEST_CASE("parallel prefix splitting returns the sequential result")
{
	SearchSpec seq{3, FigureKind::steinhaus_triangle, 6};
	seq.found_cap = 100000;
	SearchSpec par = seq;
	par.threads = 3;
	auto a = search_balanced(seq), b = search_balanced(par);
	CHECK(a.found_count == b.found_count);
	CHECK(a.found == b.found);
	CHECK(b.exhaustive);
}

TEST_CASE("budgeted search reports exhaustion")
{
	SearchSpec sp{5, FigureKind::steinhaus_triangle, 5};
	sp.budget = 10;
	auto rep = search_balanced(sp);
	CHECK(rep.budget_exhausted);
	CHECK(!rep.exhaustive);
	CHECK(rep.examined <= 10);
}

TEST_CASE("triangle sweeps over invertible arithmetic steps")
{
	auto r = verify_thm1(5);
	CHECK(r.ok());
	CHECK(r.checked > 0);
	CHECK_THROWS(verify_thm1(6));
}

TEST_CASE("orbit family sweeps")
{
	CHECK(verify_thm3(3, 0, 1, 2, 1, 1).ok());
	CHECK(verify_thm3(5, 1, 0, 2, 2, 1).ok());
	CHECK(verify_thm4(3, 1, 1, 1).ok());
	CHECK(verify_thm4(5, 2, 3, 1).ok());
	CHECK(verify_thm5(3, 1, 1).ok());
	CHECK(verify_thm5(7, 2, 1).ok());
	CHECK(verify_prop10(5, 2).ok());
	CHECK(verify_prop10(3, 1).ok());
	CHECK(verify_prop12(5, 1, 2).ok());
	CHECK(verify_prop12(9, 4, 1).ok());
	CHECK_THROWS(verify_thm3(5, 0, 0, 0, 5, 1)); // d not invertible
	CHECK_THROWS(verify_thm5(4, 1, 1));          // even modulus
}

TEST_CASE("coverage proportion of admissible orders")
{
	auto p1 = proportion_report(1);
	CHECK(p1.frac_num == p1.frac_den);
	CHECK(p1.matches_formula);
	auto p9 = proportion_report(9);
	CHECK(p9.frac_num == 2);
	CHECK(p9.frac_den == 3);
	CHECK(p9.matches_formula);
	auto p15 = proportion_report(15);
	CHECK(p15.frac_num == 1);
	CHECK(p15.frac_den == 3);
	CHECK(p15.omega == 2);
	CHECK(p15.matches_formula);
	auto p7 = proportion_report(7);
	CHECK(p7.frac_num == 2);
	CHECK(p7.frac_den == 3);
	CHECK(p7.matches_formula);
}

TEST_CASE("reports serialize deterministically")
{
	auto rep = search_balanced({3, FigureKind::steinhaus_triangle, 5});
	auto j = to_json(rep);
	CHECK(j["exhaustive"] == true);
	CHECK(j.contains("examined"));
	CHECK(j.contains("elapsedMs"));
	auto v = to_json(verify_thm1(3));
	CHECK(v["found"].empty());
	auto p = to_json(proportion_report(15));
	CHECK(p["fraction"]["num"] == 1);
}
