#include "steinhaus/matrix.hpp"
#include <numeric>
#include <stdexcept>

namespace steinhaus {

ExactMatrix ExactMatrix::identity(size_t k)
{
	ExactMatrix m(k, k);
	for (size_t i = 0; i < k; ++i)
		m.at(i, i) = 1;
	return m;
}

ExactMatrix operator*(ExactMatrix const &x, ExactMatrix const &y)
{
	if (x.cols != y.rows)
		throw std::invalid_argument("matrix dimension mismatch");
	ExactMatrix z(x.rows, y.cols);
	for (size_t i = 0; i < x.rows; ++i)
		for (size_t k = 0; k < x.cols; ++k)
		{
			if (x.at(i, k) == 0)
				continue;
			for (size_t j = 0; j < y.cols; ++j)
				z.at(i, j) += x.at(i, k) * y.at(k, j);
		}
	return z;
}

ExactMatrix operator+(ExactMatrix const &x, ExactMatrix const &y)
{
	if (x.rows != y.rows || x.cols != y.cols)
		throw std::invalid_argument("matrix dimension mismatch");
	ExactMatrix z = x;
	for (size_t i = 0; i < z.a.size(); ++i)
		z.a[i] += y.a[i];
	return z;
}

ExactMatrix operator-(ExactMatrix const &x, ExactMatrix const &y)
{
	if (x.rows != y.rows || x.cols != y.cols)
		throw std::invalid_argument("matrix dimension mismatch");
	ExactMatrix z = x;
	for (size_t i = 0; i < z.a.size(); ++i)
		z.a[i] -= y.a[i];
	return z;
}

ExactMatrix transpose(ExactMatrix const &x)
{
	ExactMatrix z(x.cols, x.rows);
	for (size_t i = 0; i < x.rows; ++i)
		for (size_t j = 0; j < x.cols; ++j)
			z.at(j, i) = x.at(i, j);
	return z;
}

ExactMatrix pow(ExactMatrix x, unsigned long e)
{
	if (x.rows != x.cols)
		throw std::invalid_argument("matrix power needs square matrix");
	ExactMatrix r = ExactMatrix::identity(x.rows);
	while (e)
	{
		if (e & 1)
			r = r * x;
		x = x * x;
		e >>= 1;
	}
	return r;
}

std::vector<mpz_class> operator*(std::vector<mpz_class> const &v, ExactMatrix const &m)
{
	if (v.size() != m.rows)
		throw std::invalid_argument("matrix dimension mismatch");
	std::vector<mpz_class> r(m.cols, 0);
	for (size_t i = 0; i < m.rows; ++i)
	{
		if (v[i] == 0)
			continue;
		for (size_t j = 0; j < m.cols; ++j)
			r[j] += v[i] * m.at(i, j);
	}
	return r;
}

mpz_class binom(long n, long k)
{
	if (k < 0 || k > n || n < 0)
		return 0;
	mpz_class r;
	mpz_bin_uiui(r.get_mpz_t(), n, k);
	return r;
}

ExactMatrix circulant_c(long i, long k)
{
	if (k < 1 || i < 0)
		throw std::invalid_argument("need k >= 1, i >= 0");
	std::vector<mpz_class> c(k, 0);
	for (long t = 0; t < k; ++t)
		for (long l = 0; l * k - t <= i; ++l)
			c[t] += binom(i, l * k - t);
	ExactMatrix m(k, k);
	for (long r = 0; r < k; ++r)
		for (long s = 0; s < k; ++s)
			m.at(r, s) = c[((s - r) % k + k) % k];
	return m;
}

ExactMatrix toeplitz_t(long i, long k)
{
	if (k < 1 || i < 0)
		throw std::invalid_argument("need k >= 1, i >= 0");
	ExactMatrix m(k, k);
	for (long r = 0; r < k; ++r)
		for (long s = 0; s < k; ++s)
		{
			mpz_class acc = 0;
			for (long l = 0; r - s + l * k <= i; ++l)
				if (l >= 1)
					acc += l * binom(i, r - s + l * k);
			m.at(r, s) = acc;
		}
	return m;
}

ExactMatrix wendt(long k)
{
	return circulant_c(k, k) - ExactMatrix::identity(k);
}

// Bareiss fraction-free elimination; destroys m
static long bareiss(ExactMatrix &m, mpz_class *det_out)
{
	size_t r = 0;
	mpz_class prev = 1;
	long sign = 1;
	for (size_t c = 0; c < m.cols && r < m.rows; ++c)
	{
		size_t p = r;
		while (p < m.rows && m.at(p, c) == 0)
			++p;
		if (p == m.rows)
		{
			if (det_out)
			{
				*det_out = 0;
				det_out = nullptr;
			}
			continue;
		}
		if (p != r)
		{
			for (size_t j = 0; j < m.cols; ++j)
				std::swap(m.at(p, j), m.at(r, j));
			sign = -sign;
		}
		for (size_t i = r + 1; i < m.rows; ++i)
		{
			for (size_t j = c + 1; j < m.cols; ++j)
			{
				mpz_class v = m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j);
				mpz_divexact(m.at(i, j).get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
			}
			m.at(i, c) = 0;
		}
		prev = m.at(r, c);
		++r;
	}
	if (det_out)
		*det_out = sign * prev;
	return static_cast<long>(r);
}

long exact_rank(ExactMatrix m) { return bareiss(m, nullptr); }

mpz_class exact_det(ExactMatrix m)
{
	if (m.rows != m.cols)
		throw std::invalid_argument("determinant needs square matrix");
	if (m.rows == 0)
		return 1;
	mpz_class d = 0;
	long r = bareiss(m, &d);
	if (r < (long)m.rows)
		return 0;
	return d;
}

std::vector<std::vector<mpz_class>> exact_kernel(ExactMatrix const &m)
{
	size_t R = m.rows, C = m.cols;
	std::vector<std::vector<mpq_class>> w(R, std::vector<mpq_class>(C));
	for (size_t i = 0; i < R; ++i)
		for (size_t j = 0; j < C; ++j)
			w[i][j] = m.at(i, j);

	// Gauss-Jordan to reduced row echelon form
	std::vector<long> pivot_col;
	size_t r = 0;
	for (size_t c = 0; c < C && r < R; ++c)
	{
		size_t p = r;
		while (p < R && w[p][c] == 0)
			++p;
		if (p == R)
			continue;
		std::swap(w[p], w[r]);
		mpq_class inv = w[r][c];
		for (size_t j = 0; j < C; ++j)
			w[r][j] /= inv;
		for (size_t i = 0; i < R; ++i)
			if (i != r && w[i][c] != 0)
			{
				mpq_class f = w[i][c];
				for (size_t j = 0; j < C; ++j)
					w[i][j] -= f * w[r][j];
			}
		pivot_col.push_back((long)c);
		++r;
	}

	std::vector<bool> is_pivot(C, false);
	for (long c : pivot_col)
		is_pivot[c] = true;

	std::vector<std::vector<mpz_class>> basis;
	for (size_t f = 0; f < C; ++f)
	{
		if (is_pivot[f])
			continue;
		std::vector<mpq_class> x(C, 0);
		x[f] = 1;
		for (size_t i = 0; i < pivot_col.size(); ++i)
			x[pivot_col[i]] = -w[i][f];
		// clear denominators and divide out content
		mpz_class lcm = 1;
		for (auto const &q : x)
			mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), q.get_den().get_mpz_t());
		std::vector<mpz_class> v(C);
		mpz_class g = 0;
		for (size_t j = 0; j < C; ++j)
		{
			mpq_class q = x[j] * lcm;
			v[j] = q.get_num();
			mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v[j].get_mpz_t());
		}
		if (g > 1)
			for (auto &z : v)
				mpz_divexact(z.get_mpz_t(), z.get_mpz_t(), g.get_mpz_t());
		basis.push_back(std::move(v));
	}
	return basis;
}

} // namespace steinhaus
