#include "steinhaus/tetra.hpp"
#include "steinhaus/matrix.hpp"
#include <chrono>
#include <stdexcept>

namespace steinhaus {

TriangleSlice make_slice(long n, std::vector<std::vector<long>> rows)
{
	if (n < 1)
		throw std::invalid_argument("modulus must be >= 1");
	long m = (long)rows.size();
	if (m < 1)
		throw std::invalid_argument("slice must be non-empty");
	for (long i = 0; i < m; ++i)
	{
		if ((long)rows[i].size() != m - i)
			throw std::invalid_argument("row " + std::to_string(i) + " must have " +
			                            std::to_string(m - i) + " entries");
		for (auto &v : rows[i])
			v = mod_reduce(v, n);
	}
	return TriangleSlice{n, std::move(rows)};
}

TriangleSlice derive_2d(TriangleSlice const &s)
{
	long m = s.size();
	if (m < 2)
		throw std::invalid_argument("cannot derive a slice of size < 2");
	std::vector<std::vector<long>> rows(m - 1);
	for (long i = 0; i < m - 1; ++i)
	{
		rows[i].resize(m - 1 - i);
		for (long j = 0; j < m - 1 - i; ++j)
			rows[i][j] = mod_reduce(
			    (long long)s.at(i, j) + s.at(i, j + 1) + s.at(i + 1, j), s.modulus);
	}
	return TriangleSlice{s.modulus, std::move(rows)};
}

TriangleSlice derive_2d_iterated(TriangleSlice s, long times)
{
	for (long t = 0; t < times; ++t)
		s = derive_2d(s);
	return s;
}

long trinomial_orbit_entry(TriangleSlice const &s, long k, long i, long j)
{
	if (k < 0 || i < 0 || j < 0 || i + j + k > s.size() - 1)
		throw std::invalid_argument("orbit entry outside the slice cone");
	mpz_class acc = 0;
	for (long di = 0; di <= k; ++di)
		for (long dj = 0; dj <= k - di; ++dj)
			acc += binom(k, di) * binom(k - di, dj) * s.at(i + di, j + dj);
	mpz_class r = acc % s.modulus;
	if (r < 0)
		r += s.modulus;
	return r.get_si();
}

size_t Tetrahedron::cell_count() const
{
	size_t c = 0;
	for (auto const &f : floors)
		for (auto const &r : f.rows)
			c += r.size();
	return c;
}

MultiplicityTable Tetrahedron::multiplicity() const
{
	MultiplicityTable t(modulus);
	for (auto const &f : floors)
		for (auto const &r : f.rows)
			for (long v : r)
				t.add(v);
	return t;
}

Tetrahedron steinhaus_tetrahedron(TriangleSlice const &base)
{
	Tetrahedron t{base.modulus, {base}};
	while (t.floors.back().size() > 1)
		t.floors.push_back(derive_2d(t.floors.back()));
	return t;
}

Tetrahedron pascal_tetrahedron(TriangleSlice const &base)
{
	long L = base.size();
	if ((L + 2) % 3 != 0)
		throw std::invalid_argument("pascal tetrahedron needs a base of size 3m-2");
	long m = (L + 2) / 3;
	Tetrahedron t{base.modulus, {}};
	TriangleSlice cur = base;
	for (long f = 0; f < m; ++f)
	{
		std::vector<std::vector<long>> rows(f + 1);
		for (long u = 0; u <= f; ++u)
		{
			rows[u].resize(f + 1 - u);
			for (long v = 0; v <= f - u; ++v)
				rows[u][v] = cur.at(m - 1 - u, m - 1 - v);
		}
		t.floors.push_back(TriangleSlice{base.modulus, std::move(rows)});
		if (f + 1 < m)
			cur = derive_2d(cur);
	}
	return t;
}

namespace {

double ms_since(std::chrono::steady_clock::time_point t0)
{
	return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0)
	    .count();
}

struct TetraDfs
{
	long n, m;
	long long target;
	unsigned long long budget;
	size_t cap;

	// floors[f][i][j]; floor 0 is the base being assigned
	std::vector<std::vector<std::vector<long>>> floors;
	std::vector<long long> counts;
	std::vector<std::pair<long, long>> order; // base cells, anti-diagonal major
	std::vector<std::vector<long>> journal;   // residues counted at each depth
	unsigned long long examined = 0, found_count = 0;
	std::vector<TriangleSlice> found;
	bool budget_hit = false;

	TetraDfs(TetraSearchSpec const &sp, long long target_)
	    : n(sp.modulus), m(sp.order), target(target_), budget(sp.budget),
	      cap(sp.found_cap), counts(n, 0), journal()
	{
		floors.resize(m);
		for (long f = 0; f < m; ++f)
		{
			floors[f].resize(m - f);
			for (long i = 0; i < m - f; ++i)
				floors[f][i].assign(m - f - i, 0);
		}
		for (long s = 0; s <= m - 1; ++s)
			for (long i = 0; i <= s; ++i)
				order.emplace_back(i, s - i);
		journal.resize(order.size());
	}

	bool bump(long depth, long v)
	{
		if (++counts[v] > target)
		{
			--counts[v];
			return false;
		}
		journal[depth].push_back(v);
		return true;
	}

	void undo(long depth)
	{
		for (long v : journal[depth])
			--counts[v];
		journal[depth].clear();
	}

	// assign base cell at `depth` to v; finalize every tetra cell whose
	// dependency cone just completed; false (and fully undone) on overflow
	bool place(long depth, long v)
	{
		auto [i, j] = order[depth];
		floors[0][i][j] = v;
		if (!bump(depth, v))
			return false;
		if (j == 0 && i >= 1) // anti-diagonal i+j = i now complete
		{
			long s = i;
			for (long f = 1; f <= s && f <= m - 1; ++f)
				for (long u = 0; u <= s - f; ++u)
				{
					long w = s - f - u;
					long val = floors[f - 1][u][w] + floors[f - 1][u][w + 1] +
					           floors[f - 1][u + 1][w];
					val %= n;
					floors[f][u][w] = val;
					if (!bump(depth, val))
					{
						undo(depth);
						return false;
					}
				}
		}
		return true;
	}

	void run(long depth)
	{
		if (depth == (long)order.size())
		{
			++found_count;
			if (found.size() < cap)
			{
				std::vector<std::vector<long>> rows(m);
				for (long i = 0; i < m; ++i)
					rows[i] = floors[0][i];
				found.push_back(TriangleSlice{n, std::move(rows)});
			}
			return;
		}
		for (long v = 0; v < n; ++v)
		{
			if (budget && examined >= budget)
			{
				budget_hit = true;
				return;
			}
			++examined;
			if (place(depth, v))
			{
				run(depth + 1);
				undo(depth);
			}
			if (budget_hit)
				return;
		}
	}
};

} // namespace

TetraSearchReport search_balanced_tetra(TetraSearchSpec const &spec)
{
	auto t0 = std::chrono::steady_clock::now();
	if (spec.modulus < 1 || spec.order < 1)
		throw std::invalid_argument("need modulus >= 1 and order >= 1");
	TetraSearchReport rep;
	rep.spec = spec;
	long long cells = (long long)spec.order * (spec.order + 1) * (spec.order + 2) / 6;
	if (cells % spec.modulus != 0)
	{
		rep.elapsed_ms = ms_since(t0);
		return rep;
	}
	TetraDfs d(spec, cells / spec.modulus);
	d.run(0);
	rep.examined = d.examined;
	rep.found_count = d.found_count;
	rep.found = std::move(d.found);
	rep.exhaustive = !d.budget_hit;
	rep.budget_exhausted = d.budget_hit;
	rep.elapsed_ms = ms_since(t0);
	return rep;
}

nlohmann::json to_json(Tetrahedron const &t)
{
	nlohmann::json floors = nlohmann::json::array();
	for (auto const &f : t.floors)
		floors.push_back(f.rows);
	return {{"modulus", t.modulus}, {"floors", floors}};
}

nlohmann::json to_json(TetraSearchReport const &r)
{
	nlohmann::json found = nlohmann::json::array();
	for (auto const &s : r.found)
		found.push_back(s.rows);
	return {{"claim", "balanced steinhaus tetrahedron exists"},
	        {"parameters",
	         {{"modulus", r.spec.modulus},
	          {"order", r.spec.order},
	          {"budget", r.spec.budget}}},
	        {"examined", r.examined},
	        {"found", found},
	        {"foundCount", r.found_count},
	        {"exhaustive", r.exhaustive},
	        {"elapsedMs", r.elapsed_ms}};
}

} // namespace steinhaus
