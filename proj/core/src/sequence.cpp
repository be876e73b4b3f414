#include "steinhaus/sequence.hpp"
#include <sstream>
#include <stdexcept>

namespace steinhaus {

mpz_class reduce_term(mpz_class v, long n)
{
	if (n == 0)
		return v;
	mpz_class r = v % n;
	if (r < 0)
		r += n;
	return r;
}

FiniteSeq::FiniteSeq(long n, std::vector<mpz_class> t) : modulus(n), terms(std::move(t))
{
	if (n < 0)
		throw std::invalid_argument("modulus must be >= 0");
	if (n > 0)
		for (auto &x : terms)
			x = reduce_term(x, n);
}

FiniteSeq::FiniteSeq(long n, std::vector<long> const &t)
    : FiniteSeq(n, std::vector<mpz_class>(t.begin(), t.end()))
{
}

std::vector<long> FiniteSeq::values() const
{
	std::vector<long> v;
	v.reserve(terms.size());
	for (auto const &x : terms)
		v.push_back(x.get_si());
	return v;
}

FiniteSeq derive(FiniteSeq const &s)
{
	if (s.size() == 0)
		throw std::invalid_argument("cannot derive empty sequence");
	std::vector<mpz_class> t(s.size() - 1);
	for (size_t j = 0; j + 1 < s.size(); ++j)
		t[j] = reduce_term(s.terms[j] + s.terms[j + 1], s.modulus);
	return FiniteSeq{s.modulus, std::move(t)};
}

FiniteSeq derive_iterated(FiniteSeq s, long times)
{
	for (long i = 0; i < times; ++i)
		s = derive(s);
	return s;
}

FiniteSeq derive_alpha(FiniteSeq const &s, std::vector<long> const &alpha)
{
	size_t k = alpha.size();
	if (k == 0 || s.size() < k)
		throw std::invalid_argument("weight vector too long for sequence");
	std::vector<mpz_class> t(s.size() - k + 1);
	for (size_t j = 0; j < t.size(); ++j)
	{
		mpz_class acc = 0;
		for (size_t l = 0; l < k; ++l)
			acc += alpha[l] * s.terms[j + l];
		t[j] = reduce_term(acc, s.modulus);
	}
	return FiniteSeq{s.modulus, std::move(t)};
}

FiniteSeq negate(FiniteSeq const &s)
{
	std::vector<mpz_class> t(s.size());
	for (size_t j = 0; j < s.size(); ++j)
		t[j] = reduce_term(-s.terms[j], s.modulus);
	return FiniteSeq{s.modulus, std::move(t)};
}

FiniteSeq reversed(FiniteSeq const &s)
{
	std::vector<mpz_class> t(s.terms.rbegin(), s.terms.rend());
	return FiniteSeq{s.modulus, std::move(t)};
}

bool is_antisymmetric(FiniteSeq const &s)
{
	size_t m = s.size();
	for (size_t j = 0; j < m; ++j)
		if (reduce_term(s.terms[j] + s.terms[m - 1 - j], s.modulus) != 0)
			return false;
	return true;
}

bool is_symmetric(FiniteSeq const &s)
{
	size_t m = s.size();
	for (size_t j = 0; j < m; ++j)
		if (s.terms[j] != s.terms[m - 1 - j])
			return false;
	return true;
}

FiniteSeq parse_sequence(std::string const &csv, long modulus)
{
	std::vector<mpz_class> t;
	std::stringstream ss(csv);
	std::string item;
	while (std::getline(ss, item, ','))
	{
		size_t a = item.find_first_not_of(" \t");
		size_t b = item.find_last_not_of(" \t");
		if (a == std::string::npos)
			throw std::invalid_argument("empty term in sequence '" + csv + "'");
		t.emplace_back(item.substr(a, b - a + 1));
	}
	if (t.empty())
		throw std::invalid_argument("empty sequence");
	return FiniteSeq{modulus, std::move(t)};
}

std::string format_sequence(FiniteSeq const &s)
{
	std::string out;
	for (size_t j = 0; j < s.size(); ++j)
	{
		if (j)
			out += ",";
		out += s.terms[j].get_str();
	}
	return out;
}

} // namespace steinhaus
