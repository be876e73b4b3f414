#pragma once
// Arithmetic in Z/nZ and multiplicity bookkeeping for balance checks.
#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <vector>

namespace steinhaus {

// canonical representative of v mod n, in [0, n)
inline long mod_reduce(long long v, long n)
{
	long long r = v % n;
	if (r < 0)
		r += n;
	return static_cast<long>(r);
}

struct Residue
{
	long mod = 1; // n >= 1
	long val = 0; // canonical, in [0, mod)

	Residue() = default;
	Residue(long long v, long n) : mod(n)
	{
		if (n < 1)
			throw std::invalid_argument("modulus must be >= 1");
		val = mod_reduce(v, n);
	}

	bool operator==(Residue const &o) const = default;
};

inline Residue operator+(Residue a, Residue b)
{
	if (a.mod != b.mod)
		throw std::invalid_argument("modulus mismatch");
	return Residue((long long)a.val + b.val, a.mod);
}

inline Residue operator-(Residue a, Residue b)
{
	if (a.mod != b.mod)
		throw std::invalid_argument("modulus mismatch");
	return Residue((long long)a.val - b.val, a.mod);
}

inline Residue operator-(Residue a) { return Residue(-(long long)a.val, a.mod); }

inline Residue operator*(Residue a, Residue b)
{
	if (a.mod != b.mod)
		throw std::invalid_argument("modulus mismatch");
	return Residue((long long)a.val * b.val, a.mod);
}

inline bool is_invertible(Residue a)
{
	// every residue mod 1 (the zero ring) counts as invertible
	return std::gcd(a.val, a.mod) == 1;
}

inline bool is_invertible(long long v, long n) { return is_invertible(Residue(v, n)); }

// multiplicity of each residue class in a multiset of cells
struct MultiplicityTable
{
	long modulus = 1;
	std::vector<long long> counts; // size modulus

	explicit MultiplicityTable(long n) : modulus(n), counts(n, 0)
	{
		if (n < 1)
			throw std::invalid_argument("modulus must be >= 1");
	}

	void add(long long v) { ++counts[mod_reduce(v, modulus)]; }

	long long total() const
	{
		long long t = 0;
		for (auto c : counts)
			t += c;
		return t;
	}

	MultiplicityTable &operator+=(MultiplicityTable const &o)
	{
		if (o.modulus != modulus)
			throw std::invalid_argument("modulus mismatch");
		for (long i = 0; i < modulus; ++i)
			counts[i] += o.counts[i];
		return *this;
	}

	bool operator==(MultiplicityTable const &o) const = default;
};

template <class Seq> MultiplicityTable multiplicity_of(Seq const &values, long n)
{
	MultiplicityTable t(n);
	for (auto const &v : values)
		t.add(v);
	return t;
}

// balanced <=> every residue class occurs equally often
inline bool is_balanced(MultiplicityTable const &t)
{
	for (auto c : t.counts)
		if (c != t.counts[0])
			return false;
	return true;
}

} // namespace steinhaus
