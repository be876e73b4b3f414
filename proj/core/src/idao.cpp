#include "steinhaus/idao.hpp"
#include <stdexcept>

namespace steinhaus {

ExactMatrix idao_system_matrix(long k)
{
	if (k < 1)
		throw std::invalid_argument("need k >= 1");
	ExactMatrix W = wendt(k);
	ExactMatrix W2 = W * W;
	ExactMatrix WTt = W * transpose(toeplitz_t(k, k));
	ExactMatrix M(2 * k, 2 * k);
	for (long i = 0; i < k; ++i)
		for (long j = 0; j < k; ++j)
		{
			M.at(i, j) = W2.at(i, j);
			M.at(i, k + j) = WTt.at(i, j);
			M.at(k + i, k + j) = W.at(i, j);
		}
	return M;
}

std::vector<IdaoSolution> idao_system_solve(long k)
{
	auto kernel = exact_kernel(idao_system_matrix(k));
	std::vector<IdaoSolution> out;
	for (auto &v : kernel)
	{
		IdaoSolution s;
		s.firsts.assign(v.begin(), v.begin() + k);
		s.diffs.assign(v.begin() + k, v.end());
		out.push_back(std::move(s));
	}
	return out;
}

IdaoVerdict idao_verify(IAPSpec const &s, long k1, long k2, long depth, long width)
{
	if (k1 < 1 || k2 < 1 || depth < 2 || width < 2)
		throw std::invalid_argument("need k1,k2 >= 1 and depth,width >= 2");
	long jlo = -width * k2, jhi = width * k2;
	long imax = depth * k1 - 1;

	// orbit cells on the box from one wide window of row 0
	FiniteSeq row = iap_window(s, jlo, jhi + imax);
	std::vector<std::vector<mpz_class>> cells(imax + 1);
	cells[0] = row.terms;
	for (long i = 1; i <= imax; ++i)
	{
		auto const &p = cells[i - 1];
		cells[i].resize(p.size() - 1);
		for (size_t j = 0; j + 1 < p.size(); ++j)
			cells[i][j] = reduce_term(p[j] + p[j + 1], s.modulus);
	}
	auto cell = [&](long i, long j) -> mpz_class const & { return cells[i][j - jlo]; };

	IdaoVerdict verdict;
	for (long i0 = 0; i0 < k1; ++i0)
		for (long j0 = 0; j0 < k2; ++j0)
		{
			IdaoClassWitness w{i0, j0, cell(i0, j0),
			                   reduce_term(cell(i0 + k1, j0) - cell(i0, j0), s.modulus),
			                   reduce_term(cell(i0, j0 + k2) - cell(i0, j0), s.modulus)};
			for (long i = i0; i <= imax; i += k1)
				for (long j = jlo + j0; j <= jhi; j += k2)
				{
					long di = (i - i0) / k1, dj = (j - j0) / k2;
					mpz_class expect = reduce_term(
					    w.base + di * w.row_step + dj * w.col_step, s.modulus);
					if (cell(i, j) != expect)
					{
						verdict.ok = false;
						verdict.counterexample = {{i, j}};
						return verdict;
					}
				}
			verdict.classes.push_back(std::move(w));
		}
	verdict.ok = true;
	return verdict;
}

} // namespace steinhaus
