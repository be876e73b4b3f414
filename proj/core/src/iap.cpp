#include "steinhaus/iap.hpp"
#include <stdexcept>

namespace steinhaus {

IAPSpec::IAPSpec(long n, std::vector<mpz_class> a, std::vector<mpz_class> d)
    : modulus(n), firsts(std::move(a)), diffs(std::move(d))
{
	if (n < 0)
		throw std::invalid_argument("modulus must be >= 0");
	if (firsts.empty() || firsts.size() != diffs.size())
		throw std::invalid_argument("firsts/diffs must be non-empty and equal-sized");
	if (n > 0)
	{
		for (auto &x : firsts)
			x = reduce_term(x, n);
		for (auto &x : diffs)
			x = reduce_term(x, n);
	}
}

IAPSpec::IAPSpec(long n, std::vector<long> const &a, std::vector<long> const &d)
    : IAPSpec(n, std::vector<mpz_class>(a.begin(), a.end()),
              std::vector<mpz_class>(d.begin(), d.end()))
{
}

mpz_class IAPSpec::term(long j) const
{
	long K = k();
	long j0 = ((j % K) + K) % K;
	long t = (j - j0) / K;
	return reduce_term(firsts[j0] + t * diffs[j0], modulus);
}

IAPSpec derive_iap(IAPSpec const &s)
{
	long K = s.k();
	std::vector<mpz_class> a(K), d(K);
	for (long t = 0; t + 1 < K; ++t)
	{
		a[t] = s.firsts[t] + s.firsts[t + 1];
		d[t] = s.diffs[t] + s.diffs[t + 1];
	}
	a[K - 1] = s.firsts[K - 1] + s.firsts[0] + s.diffs[0];
	d[K - 1] = s.diffs[K - 1] + s.diffs[0];
	return IAPSpec(s.modulus, std::move(a), std::move(d));
}

IAPSpec derive_iap_iterated(IAPSpec const &s, long i)
{
	if (i < 0)
		throw std::invalid_argument("derivation count must be >= 0");
	long K = s.k();
	ExactMatrix C = circulant_c(i, K), T = toeplitz_t(i, K);
	std::vector<mpz_class> a = s.firsts * C;
	std::vector<mpz_class> td = s.diffs * T;
	for (long t = 0; t < K; ++t)
		a[t] += td[t];
	std::vector<mpz_class> d = s.diffs * C;
	return IAPSpec(s.modulus, std::move(a), std::move(d));
}

FiniteSeq iap_window(IAPSpec const &s, long j0, long j1)
{
	if (j1 < j0)
		throw std::invalid_argument("empty window");
	std::vector<mpz_class> t;
	t.reserve(j1 - j0 + 1);
	for (long j = j0; j <= j1; ++j)
		t.push_back(s.term(j));
	return FiniteSeq{s.modulus, std::move(t)};
}

mpz_class iap_orbit_entry(IAPSpec const &s, long i, long j)
{
	return derive_iap_iterated(s, i).term(j);
}

std::vector<std::vector<long>> dat_rows(long n, long a, long d1, long d2, long m)
{
	if (n < 1 || m < 1)
		throw std::invalid_argument("need n >= 1 and m >= 1");
	std::vector<std::vector<long>> rows(m);
	for (long i = 0; i < m; ++i)
	{
		rows[i].resize(m - i);
		for (long j = 0; j < m - i; ++j)
			rows[i][j] = mod_reduce((long long)a + (long long)i * d1 + (long long)j * d2, n);
	}
	return rows;
}

IAPSpec universal_integer_sequence()
{
	return IAPSpec(0, std::vector<long>{0, -1, 1}, std::vector<long>{1, -2, 1});
}

IAPSpec universal_sequence(long n, long d)
{
	if (n < 1)
		throw std::invalid_argument("modulus must be >= 1");
	return IAPSpec(n, std::vector<long>{0, -d, d}, std::vector<long>{d, -2 * d, d});
}

mpz_class universal_orbit_coeff(long i, long j)
{
	if (i < 0)
		throw std::invalid_argument("row index must be >= 0");
	mpz_class acc = 0;
	long top = j + 2 * i;
	for (long k = 1; k <= top; ++k)
	{
		if (top - k > k)
			continue;
		mpz_class term = binom(k, top - k) * (k - i);
		if (k & 1)
			acc -= term;
		else
			acc += term;
	}
	if (i & 1)
		acc = -acc;
	return acc;
}

mpz_class universal_orbit_entry(long n, long d, long i, long j)
{
	return reduce_term(d * universal_orbit_coeff(i, j), n);
}

IAPSpec idao_family(long n, mpz_class const &a0, mpz_class const &a1,
                    mpz_class const &a2, mpz_class const &d)
{
	mpz_class s = a0 + a1 + a2;
	return IAPSpec(n, {a0, a1, a2}, {d, -2 * d - 3 * s, d + 3 * s});
}

mpz_class idao_orbit_entry(long n, mpz_class const &a0, mpz_class const &a1,
                           mpz_class const &a2, mpz_class const &d, long i, long j)
{
	if (i < 0)
		throw std::invalid_argument("row index must be >= 0");
	mpz_class S = a0 + a1 + a2;
	mpz_class u = d + 3 * S;      // column step of classes j=0 mod 3 etc.
	mpz_class v = 2 * d + 3 * S;
	long q = i / 6, i0 = i % 6;
	long r = (j >= 0) ? j / 3 : -((-j + 2) / 3); // floor division
	long j0 = j - 3 * r;
	mpz_class base, row_step, col_step;
	switch (i0 * 3 + j0)
	{
	case 0:  base = a0;                            row_step = -2 * u; col_step = d;  break;
	case 1:  base = a1;                            row_step = -2 * d; col_step = -v; break;
	case 2:  base = a2;                            row_step = 2 * v;  col_step = u;  break;
	case 3:  base = a0 + a1;                       row_step = -2 * v; col_step = -u; break;
	case 4:  base = a1 + a2;                       row_step = 2 * u;  col_step = -d; break;
	case 5:  base = a0 + a2 + d;                   row_step = 2 * d;  col_step = v;  break;
	case 6:  base = a1 + S;                        row_step = -2 * d; col_step = -v; break;
	case 7:  base = a2 + S + d;                    row_step = 2 * v;  col_step = u;  break;
	case 8:  base = a0 - 2 * S;                    row_step = -2 * u; col_step = d;  break;
	case 9:  base = a1 + a2 + 2 * S + d;           row_step = 2 * u;  col_step = -d; break;
	case 10: base = a0 + a2 - S + d;               row_step = 2 * d;  col_step = v;  break;
	case 11: base = a0 + a1 - 4 * S - 2 * d;       row_step = -2 * v; col_step = -u; break;
	case 12: base = a2 + 2 * S + 2 * d;            row_step = 2 * v;  col_step = u;  break;
	case 13: base = a0 - 4 * S - d;                row_step = -2 * u; col_step = d;  break;
	case 14: base = a1 - S - 2 * d;                row_step = -2 * d; col_step = -v; break;
	case 15: base = a0 + a2 - 2 * S + d;           row_step = 2 * d;  col_step = v;  break;
	case 16: base = a0 + a1 - 5 * S - 3 * d;       row_step = -2 * v; col_step = -u; break;
	default: base = a1 + a2 + 4 * S + d;           row_step = 2 * u;  col_step = -d; break;
	}
	return reduce_term(base + q * row_step + r * col_step, n);
}

} // namespace steinhaus
