#include "steinhaus/figure.hpp"
#include "steinhaus/iap.hpp"
#include "steinhaus/matrix.hpp"
#include <sstream>
#include <stdexcept>

namespace steinhaus {

std::string to_string(FigureKind k)
{
	switch (k)
	{
	case FigureKind::steinhaus_triangle: return "steinhaus_triangle";
	case FigureKind::steinhaus_trapezoid: return "steinhaus_trapezoid";
	case FigureKind::pascal_triangle: return "pascal_triangle";
	case FigureKind::pascal_trapezoid: return "pascal_trapezoid";
	case FigureKind::lozenge: return "lozenge";
	case FigureKind::dat: return "dat";
	}
	throw std::invalid_argument("bad figure kind");
}

FigureKind figure_kind_from_string(std::string const &s)
{
	if (s == "steinhaus_triangle" || s == "triangle")
		return FigureKind::steinhaus_triangle;
	if (s == "steinhaus_trapezoid" || s == "trapezoid")
		return FigureKind::steinhaus_trapezoid;
	if (s == "pascal_triangle" || s == "pascal")
		return FigureKind::pascal_triangle;
	if (s == "pascal_trapezoid" || s == "pascal-trapezoid")
		return FigureKind::pascal_trapezoid;
	if (s == "lozenge")
		return FigureKind::lozenge;
	if (s == "dat")
		return FigureKind::dat;
	throw std::invalid_argument("unknown figure kind '" + s + "'");
}

size_t Figure::cell_count() const
{
	size_t n = 0;
	for (auto const &r : rows)
		n += r.size();
	return n;
}

MultiplicityTable Figure::multiplicity() const
{
	MultiplicityTable t(modulus);
	for (auto const &r : rows)
		for (long v : r)
			t.add(v);
	return t;
}

static void require_modular(FiniteSeq const &s)
{
	if (s.modulus < 1)
		throw std::invalid_argument("figure construction needs a modular sequence");
	if (s.size() == 0)
		throw std::invalid_argument("figure construction needs a non-empty sequence");
}

// all derived rows derive^0 s .. derive^{count-1} s as int vectors
static std::vector<std::vector<long>> derived_rows(FiniteSeq const &s, long count)
{
	long n = s.modulus;
	std::vector<std::vector<long>> rows;
	rows.reserve(count);
	rows.push_back(s.values());
	for (long i = 1; i < count; ++i)
	{
		auto const &p = rows.back();
		std::vector<long> r(p.size() - 1);
		for (size_t j = 0; j + 1 < p.size(); ++j)
			r[j] = mod_reduce((long long)p[j] + p[j + 1], n);
		rows.push_back(std::move(r));
	}
	return rows;
}

Figure steinhaus_triangle(FiniteSeq const &s)
{
	require_modular(s);
	long m = (long)s.size();
	Figure f{FigureKind::steinhaus_triangle, s.modulus, derived_rows(s, m), {}};
	f.params = {{"order", m}, {"seq", format_sequence(s)}};
	return f;
}

Figure steinhaus_trapezoid(FiniteSeq const &s, long h)
{
	require_modular(s);
	long m = (long)s.size();
	if (h < 1 || h > m)
		throw std::invalid_argument("trapezoid height must be in [1, order]");
	Figure f{FigureKind::steinhaus_trapezoid, s.modulus, derived_rows(s, h), {}};
	f.params = {{"order", m}, {"height", h}, {"seq", format_sequence(s)}};
	return f;
}

Figure pascal_triangle(FiniteSeq const &s)
{
	require_modular(s);
	if (s.size() % 2 == 0)
		throw std::invalid_argument("pascal triangle needs a sequence of odd length 2m-1");
	long m = ((long)s.size() + 1) / 2;
	auto all = derived_rows(s, m);
	std::vector<std::vector<long>> rows(m);
	for (long i = 0; i < m; ++i)
		rows[i].assign(all[i].begin() + (m - 1 - i), all[i].begin() + m);
	Figure f{FigureKind::pascal_triangle, s.modulus, std::move(rows), {}};
	f.params = {{"order", 2 * m - 1}, {"seq", format_sequence(s)}};
	return f;
}

Figure pascal_trapezoid(FiniteSeq const &s, long h)
{
	require_modular(s);
	if (s.size() % 2 == 0)
		throw std::invalid_argument("pascal trapezoid needs a sequence of odd length 2m-1");
	long m = ((long)s.size() + 1) / 2;
	if (h < 1 || h > m)
		throw std::invalid_argument("trapezoid height must be in [1, m]");
	auto all = derived_rows(s, m);
	std::vector<std::vector<long>> rows(h);
	for (long i = m - h; i < m; ++i)
		rows[i - (m - h)].assign(all[i].begin() + (m - 1 - i), all[i].begin() + m);
	Figure f{FigureKind::pascal_trapezoid, s.modulus, std::move(rows), {}};
	f.params = {{"order", 2 * m - 1}, {"height", h}, {"seq", format_sequence(s)}};
	return f;
}

Figure lozenge(FiniteSeq const &s)
{
	require_modular(s);
	if (s.size() % 2 == 0)
		throw std::invalid_argument("lozenge needs a sequence of odd length 2m-1");
	long m = ((long)s.size() + 1) / 2;
	auto all = derived_rows(s, 2 * m - 1);
	std::vector<std::vector<long>> rows(2 * m - 1);
	for (long i = 0; i < m; ++i)
		rows[i].assign(all[i].begin() + (m - 1 - i), all[i].begin() + m);
	for (long i = m; i < 2 * m - 1; ++i)
		rows[i] = std::move(all[i]); // the whole triangle of derive^m s
	Figure f{FigureKind::lozenge, s.modulus, std::move(rows), {}};
	f.params = {{"order", 2 * m - 1}, {"seq", format_sequence(s)}};
	return f;
}

Figure dat_figure(long n, long a, long d1, long d2, long m)
{
	Figure f{FigureKind::dat, n, dat_rows(n, a, d1, d2, m), {}};
	f.params = {{"a", mod_reduce(a, n)}, {"d1", mod_reduce(d1, n)},
	            {"d2", mod_reduce(d2, n)}, {"order", m}};
	return f;
}

Figure alpha_steinhaus_triangle(FiniteSeq const &s, std::vector<long> const &alpha)
{
	require_modular(s);
	if (alpha.size() != 2)
		throw std::invalid_argument("alpha triangle needs a length-2 weight vector");
	long m = (long)s.size();
	std::vector<std::vector<long>> rows;
	rows.reserve(m);
	FiniteSeq cur = s;
	for (long i = 0; i < m; ++i)
	{
		rows.push_back(cur.values());
		if (i + 1 < m)
			cur = derive_alpha(cur, alpha);
	}
	Figure f{FigureKind::steinhaus_triangle, s.modulus, std::move(rows), {}};
	f.params = {{"order", m}, {"seq", format_sequence(s)},
	            {"alpha", std::vector<long>(alpha)}};
	return f;
}

FiniteSeq rot120(FiniteSeq const &s)
{
	size_t m = s.size();
	std::vector<mpz_class> t(m);
	for (size_t j = 0; j < m; ++j)
	{
		mpz_class acc = 0;
		for (size_t k = 0; k <= j; ++k)
			acc += binom((long)j, (long)k) * s.terms[m - 1 - k];
		t[j] = reduce_term(acc, s.modulus);
	}
	return FiniteSeq{s.modulus, std::move(t)};
}

FiniteSeq rot240(FiniteSeq const &s)
{
	size_t m = s.size();
	std::vector<mpz_class> t(m);
	for (size_t j = 0; j < m; ++j)
	{
		mpz_class acc = 0;
		for (size_t k = 0; k <= m - 1 - j; ++k)
			acc += binom((long)(m - 1 - j), (long)k) * s.terms[k];
		t[j] = reduce_term(acc, s.modulus);
	}
	return FiniteSeq{s.modulus, std::move(t)};
}

std::string render_text(Figure const &f)
{
	int w = 1;
	for (long v = f.modulus - 1; v >= 10; v /= 10)
		++w;
	size_t nrows = f.rows.size();
	// upward-pointing figures are indented left-to-right, pascal-style ones
	// the other way around; the lozenge combines both
	auto indent_of = [&](size_t i) -> size_t {
		switch (f.kind)
		{
		case FigureKind::pascal_triangle:
		case FigureKind::pascal_trapezoid:
			return nrows - 1 - i;
		case FigureKind::lozenge: {
			size_t m = (nrows + 1) / 2;
			return i < m ? m - 1 - i : i - (m - 1);
		}
		default:
			return i;
		}
	};
	std::ostringstream out;
	for (size_t i = 0; i < nrows; ++i)
	{
		out << std::string(indent_of(i) * (w + 1) / 2, ' ');
		for (size_t j = 0; j < f.rows[i].size(); ++j)
		{
			if (j)
				out << ' ';
			std::string v = std::to_string(f.rows[i][j]);
			out << std::string(w - v.size(), ' ') << v;
		}
		out << '\n';
	}
	return out.str();
}

nlohmann::json to_json(Figure const &f)
{
	return {{"kind", to_string(f.kind)},
	        {"modulus", f.modulus},
	        {"params", f.params},
	        {"rows", f.rows}};
}

Figure figure_from_json(nlohmann::json const &j)
{
	Figure f;
	f.kind = figure_kind_from_string(j.at("kind").get<std::string>());
	f.modulus = j.at("modulus").get<long>();
	f.rows = j.at("rows").get<std::vector<std::vector<long>>>();
	if (j.contains("params"))
		f.params = j.at("params");
	if (f.modulus < 1)
		throw std::invalid_argument("modulus must be >= 1");
	for (auto const &r : f.rows)
		for (long v : r)
			if (v < 0 || v >= f.modulus)
				throw std::invalid_argument("cell out of range for modulus");
	return f;
}

} // namespace steinhaus
