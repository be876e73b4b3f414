// acceptance gate: ten end-to-end criteria, one pass/fail line each
#include "steinhaus/balance.hpp"
#include "steinhaus/idao.hpp"
#include "steinhaus/tetra.hpp"
#include <chrono>
#include <cstdio>
#include <random>
#include <string>
#include <thread>

using namespace steinhaus;

namespace {

int failures = 0;

void report(int criterion, bool ok, std::string const &what, double ms)
{
	std::printf("[%s] criterion %2d: %s (%.0f ms)\n", ok ? "PASS" : "FAIL", criterion,
	            what.c_str(), ms);
	if (!ok)
		++failures;
}

template <class F> void criterion(int id, std::string const &what, F f)
{
	auto t0 = std::chrono::steady_clock::now();
	bool ok = false;
	try
	{
		ok = f();
	}
	catch (std::exception const &e)
	{
		std::printf("  exception: %s\n", e.what());
	}
	double ms =
	    std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
	        .count();
	report(id, ok, what, ms);
}

int env_threads()
{
	if (char const *env = std::getenv("STEINHAUS_THREADS"))
	{
		long t = std::strtol(env, nullptr, 10);
		if (t >= 1)
			return (int)t;
	}
	unsigned hw = std::thread::hardware_concurrency();
	return hw ? (int)hw : 1;
}

} // namespace

int main()
{
	int threads = env_threads();

	criterion(1, "no balanced triangle of order 5 mod 15 nor order 6 mod 21", [&] {
		SearchSpec a{15, FigureKind::steinhaus_triangle, 5};
		a.threads = threads;
		auto ra = search_balanced(a);
		SearchSpec b{21, FigureKind::steinhaus_triangle, 6};
		b.threads = threads;
		auto rb = search_balanced(b);
		return ra.exhaustive && ra.found_count == 0 && rb.exhaustive &&
		       rb.found_count == 0;
	});

	criterion(2, "invertible-step triangle sweep balanced; reference non-example is not",
	          [&] {
		          for (long n : {3L, 5L, 7L, 9L, 15L})
			          if (!verify_thm1(n).ok())
				          return false;
		          return !dat_figure(15, 0, 8, 1, 5).balanced();
	          });

	criterion(3, "Wendt rank k except k-2 at multiples of 6; determinant zero there", [&] {
		for (long k = 1; k <= 24; ++k)
		{
			long expect = (k % 6 == 0) ? k - 2 : k;
			if (exact_rank(wendt(k)) != expect)
				return false;
			if ((exact_det(wendt(k)) == 0) != (k % 6 == 0))
				return false;
		}
		return true;
	});

	criterion(4, "orbit system kernels: trivial off 6 and 12, rank 4 on them", [&] {
		for (long k : {1L, 2L, 3L, 4L, 5L, 7L, 8L, 9L, 10L, 11L})
			if (!idao_system_solve(k).empty())
				return false;
		for (long k : {6L, 12L})
			if (idao_system_solve(k).size() != 4)
				return false;
		for (auto const &s : idao_system_solve(6))
		{
			IAPSpec sp(0, s.firsts, s.diffs);
			if (!idao_verify(sp, 6, 3, 4, 4).ok || !idao_verify(sp, 6, 6, 4, 4).ok)
				return false;
			// unwrap the 3-periodicity onto the closed family
			mpz_class d = s.firsts[3] - s.firsts[0];
			mpz_class sig = s.firsts[0] + s.firsts[1] + s.firsts[2];
			std::vector<mpz_class> step = {d, -2 * d - 3 * sig, d + 3 * sig};
			for (long t = 0; t < 3; ++t)
				if (s.firsts[t + 3] - s.firsts[t] != step[t] ||
				    s.diffs[t] != 2 * step[t] || s.diffs[t + 3] != s.diffs[t])
					return false;
		}
		// the universal sequence, rewritten with interlacing period 6, solves
		// the system
		auto M = idao_system_matrix(6);
		std::vector<mpz_class> x = {0, -1, 1, 1, -3, 2, 2, -4, 2, 2, -4, 2};
		for (size_t r = 0; r < M.rows; ++r)
		{
			mpz_class acc = 0;
			for (size_t c = 0; c < M.cols; ++c)
				acc += M.at(r, c) * x[c];
			if (acc != 0)
				return false;
		}
		return true;
	});

	criterion(5, "closed-form iterated derivation bitwise equals stepping, 200 cases", [&] {
		std::mt19937 rng(101);
		for (int it = 0; it < 200; ++it)
		{
			long k = 1 + rng() % 6;
			std::vector<long> a(k), dd(k);
			for (long t = 0; t < k; ++t)
			{
				a[t] = (long)(rng() % 201) - 100;
				dd[t] = (long)(rng() % 201) - 100;
			}
			IAPSpec s(0, a, dd);
			IAPSpec step = s;
			for (long i = 0; i <= 12; ++i)
			{
				if (!(derive_iap_iterated(s, i) == step))
					return false;
				if (!(iap_window(derive_iap_iterated(s, i), -2 * k, 2 * k) ==
				      iap_window(step, -2 * k, 2 * k)))
					return false;
				step = derive_iap(step);
			}
		}
		return true;
	});

	criterion(6, "reference orbit mod 3: triangle 18, centered 35 and lozenge 35 balanced",
	          [&] {
		          IAPSpec s = idao_family(3, 0, 1, 2, 1);
		          auto tri = steinhaus_triangle(iap_window(s, 0, 17));
		          auto pas = pascal_triangle(iap_window(s, -17, 17));
		          auto loz = lozenge(iap_window(s, -17, 17));
		          return tri.balanced() && tri.multiplicity().counts[0] == 57 &&
		                 pas.balanced() && pas.multiplicity().counts[0] == 57 &&
		                 loz.balanced() && loz.multiplicity().counts[0] == 108;
	          });

	criterion(7, "balanced-family sweeps and the orbit closed form, all odd moduli", [&] {
		std::vector<long> mods = {3, 5, 7, 9, 15, 21};
		for (long n : mods)
			for (long d = 1; d < n; ++d)
			{
				if (!is_invertible(d, n))
					continue;
				for (long a : {0L, 1L, 2L})
					if (!verify_thm4(n, a, d, 3).ok())
						return false;
				if (!verify_thm5(n, d, 3).ok())
					return false;
				if (!verify_prop10(n, d).ok())
					return false;
				if (!verify_prop12(n, 1, d).ok())
					return false;
			}
		// closed form vs automaton on the box i <= 3n, j <= 6n (largest n)
		long N = 21, I = 3 * N, J = 6 * N;
		IAPSpec us = universal_integer_sequence();
		FiniteSeq row = iap_window(us, 0, J + I);
		for (long i = 0; i <= I; ++i)
		{
			for (long j = 0; j <= J; ++j)
				if (row.terms[j] != universal_orbit_coeff(i, j))
					return false;
			if (i < I)
				row = derive(row);
		}
		// and reduced entries for a non-trivial scaling
		for (long n : {5L, 21L})
			for (long i : {0L, 3L, 17L})
				for (long j : {0L, 1L, 8L})
					if (universal_orbit_entry(n, 2, i, j) !=
					    reduce_term(2 * universal_orbit_coeff(i, j), n))
						return false;
		return true;
	});

	criterion(8, "triangle multisets invariant under 120/240-degree rotation", [&] {
		std::mt19937 rng(103);
		for (int it = 0; it < 100; ++it)
		{
			long n = (it % 2) ? 5 : 7;
			long m = 2 + rng() % 10;
			std::vector<long> t(m);
			for (auto &v : t)
				v = rng() % n;
			FiniteSeq s(n, t);
			auto plain = alpha_steinhaus_triangle(s, {1, 1}).multiplicity();
			if (!(plain == alpha_steinhaus_triangle(rot120(s), {-1, 1}).multiplicity()))
				return false;
			if (!(plain == alpha_steinhaus_triangle(rot240(s), {1, -1}).multiplicity()))
				return false;
		}
		FiniteSeq fig(5, std::vector<long>{2, 2, 0, 3, 3});
		return rot120(fig) == FiniteSeq(5, std::vector<long>{3, 1, 4, 4, 0}) &&
		       rot240(fig) == FiniteSeq(5, std::vector<long>{0, 1, 1, 4, 2});
	});

	criterion(9, "tetrahedra: closed form, unit-base apex stack, cardinalities", [&] {
		std::mt19937 rng(107);
		for (int it = 0; it < 20; ++it)
		{
			long n = 2 + rng() % 9, m = 2 + rng() % 5;
			std::vector<std::vector<long>> rows(m);
			for (long i = 0; i < m; ++i)
			{
				rows[i].resize(m - i);
				for (auto &v : rows[i])
					v = rng() % n;
			}
			auto s = make_slice(n, rows);
			for (long k = 0; k < m; ++k)
			{
				auto dd = derive_2d_iterated(s, k);
				for (long i = 0; i < m - k; ++i)
					for (long j = 0; j < m - k - i; ++j)
						if (trinomial_orbit_entry(s, k, i, j) != dd.at(i, j))
							return false;
			}
		}
		for (long m = 1; m <= 6; ++m)
		{
			long L = 3 * m - 2, n = 1009;
			std::vector<std::vector<long>> rows(L);
			for (long i = 0; i < L; ++i)
				rows[i].assign(L - i, 0);
			rows[m - 1][m - 1] = 1;
			auto t = pascal_tetrahedron(make_slice(n, rows));
			for (long f = 0; f < m; ++f)
				for (long u = 0; u <= f; ++u)
					for (long v = 0; v <= f - u; ++v)
					{
						mpz_class trin = binom(f, u) * binom(f - u, v) % n;
						if (t.floors[f].at(u, v) != trin.get_si())
							return false;
					}
		}
		for (long m = 1; m <= 10; ++m)
		{
			std::vector<std::vector<long>> rows(m);
			for (long i = 0; i < m; ++i)
				rows[i].assign(m - i, 1);
			if (steinhaus_tetrahedron(make_slice(7, rows)).cell_count() !=
			    (size_t)(m * (m + 1) * (m + 2) / 6))
				return false;
		}
		return true;
	});

	criterion(10, "property suites: balance, antisymmetry, admissible orders", [&] {
		std::mt19937 rng(109);
		// balanced figures have cardinality divisible by the modulus
		for (int it = 0; it < 1000; ++it)
		{
			long n = 2 + rng() % 9, m = 1 + rng() % 9;
			std::vector<long> t(m);
			for (auto &v : t)
				v = rng() % n;
			auto f = steinhaus_triangle(FiniteSeq(n, t));
			if (f.balanced() && (long long)f.cell_count() % n != 0)
				return false;
		}
		// derivation preserves antisymmetry
		for (int it = 0; it < 1000; ++it)
		{
			long n = 3 + 2 * (rng() % 6), m = 2 + rng() % 12;
			std::vector<long> t(m);
			for (long j = 0; j < m / 2; ++j)
			{
				t[j] = rng() % n;
				t[m - 1 - j] = (n - t[j]) % n;
			}
			if (m % 2)
				t[m / 2] = 0;
			FiniteSeq s(n, t);
			if (!is_antisymmetric(s) || !is_antisymmetric(derive(s)))
				return false;
		}
		// antisymmetric generators give mirror-symmetric multiplicities
		for (int it = 0; it < 1000; ++it)
		{
			long n = 3 + 2 * (rng() % 6), m = 3 + 2 * (rng() % 5);
			std::vector<long> t(m);
			for (long j = 0; j < m / 2; ++j)
			{
				t[j] = rng() % n;
				t[m - 1 - j] = (n - t[j]) % n;
			}
			t[m / 2] = 0;
			FiniteSeq s(n, t);
			for (auto const &tab : {steinhaus_triangle(s).multiplicity(),
			                        pascal_triangle(s).multiplicity()})
				for (long v = 0; v < n; ++v)
					if (tab.counts[v] != tab.counts[(n - v) % n])
						return false;
		}
		auto adm = admissible_orders(15, FigureKind::steinhaus_triangle);
		return adm.residues == std::vector<long>{0, 5, 9, 14};
	});

	std::printf("%d of 10 criteria passed\n", 10 - failures);
	return failures == 0 ? 0 : 1;
}
