// command-line front end: construct figures, run derivations, solve the
// orbit linear systems, search for balanced figures and sweep the balanced
// families.  JSON goes to stdout, diagnostics to stderr.
#include "steinhaus/balance.hpp"
#include "steinhaus/figure.hpp"
#include "steinhaus/iap.hpp"
#include "steinhaus/idao.hpp"
#include "steinhaus/tetra.hpp"
#include <CLI11.hpp>
#include <cstdlib>
#include <iostream>
#include <map>
#include <sstream>
#include <thread>

using namespace steinhaus;
using nlohmann::json;

namespace {

constexpr int exit_ok = 0, exit_usage = 1, exit_refuted = 2, exit_budget = 3;

int default_threads()
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

void emit(json const &j, bool as_json, std::string const &text)
{
	if (as_json)
		std::cout << j.dump(2) << "\n";
	else
		std::cout << text;
}

TriangleSlice parse_slice(std::string const &s, long mod)
{
	std::vector<std::vector<long>> rows;
	std::stringstream ss(s);
	std::string row;
	while (std::getline(ss, row, ';'))
	{
		auto seq = parse_sequence(row, mod);
		rows.push_back(seq.values());
	}
	return make_slice(mod, std::move(rows));
}

std::string slice_text(TriangleSlice const &s)
{
	std::string out;
	for (auto const &r : s.rows)
	{
		for (size_t j = 0; j < r.size(); ++j)
			out += (j ? " " : "") + std::to_string(r[j]);
		out += "\n";
	}
	return out;
}

int report_exit(VerifyReport const &r) { return r.ok() ? exit_ok : exit_refuted; }

std::string verify_text(VerifyReport const &r)
{
	std::string out = r.claim + ": checked " + std::to_string(r.checked) + ", " +
	                  (r.ok() ? "all hold" : std::to_string(r.violations.size()) +
	                                             " violation(s)") +
	                  "\n";
	for (auto const &v : r.violations)
		out += "  violated at " + v.dump() + "\n";
	return out;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"exact arithmetic for derivation triangles over Z/nZ"};
	app.require_subcommand(1);
	bool as_json = false;
	std::string format = "text";
	app.add_option("--format", format, "output format: text or json")
	    ->check(CLI::IsMember({"text", "json"}))
	    ->capture_default_str();

	long mod = 0, order = 0, height = 0, dpar = 1, a0 = 0, a1 = 0, a2 = 0, apar = 0;
	long d1 = 0, d2 = 0, kpar = 3, k1 = 0, k2 = 0, depth = 3, width = 3;
	long ipar = 0, jpar = 0, from = 0, to = 0, lambda = 1, times = 1;
	unsigned long long budget = 0;
	int threads = default_threads();
	size_t limit = 16;
	std::string seq_csv, alpha_csv, base_str, a_csv, d_csv;

	// figure
	auto *fig = app.add_subcommand("figure", "construct and print a figure");
	fig->require_subcommand(1);
	std::map<std::string, CLI::App *> fig_sub;
	for (auto kind : {"triangle", "trapezoid", "pascal", "pascal-trapezoid", "lozenge"})
	{
		auto *c = fig->add_subcommand(kind);
		c->add_option("--mod", mod)->required();
		c->add_option("--seq", seq_csv, "comma-separated generating sequence")->required();
		if (std::string(kind) == "trapezoid" || std::string(kind) == "pascal-trapezoid")
			c->add_option("--height", height)->required();
		fig_sub[kind] = c;
	}
	auto *fig_dat = fig->add_subcommand("dat");
	fig_dat->add_option("--mod", mod)->required();
	fig_dat->add_option("--a", apar)->required();
	fig_dat->add_option("--d1", d1)->required();
	fig_dat->add_option("--d2", d2)->required();
	fig_dat->add_option("--order", order)->required();
	auto *fig_tetra = fig->add_subcommand("tetra");
	fig_tetra->add_option("--mod", mod)->required();
	fig_tetra->add_option("--base", base_str, "rows separated by ';'")->required();
	bool tetra_pascal = false;
	fig_tetra->add_flag("--pascal", tetra_pascal, "apex-down tetrahedron from a 3m-2 base");

	// derive
	auto *der = app.add_subcommand("derive", "apply the derivation rule");
	der->add_option("--mod", mod)->required();
	der->add_option("--seq", seq_csv)->required();
	der->add_option("--alpha", alpha_csv, "weight vector (default 1,1)");
	der->add_option("--times", times)->capture_default_str();

	// rotate
	auto *rot = app.add_subcommand("rotate", "rotate a triangle's generating sequence");
	long angle = 120;
	rot->add_option("angle", angle)->check(CLI::IsMember({120, 240}))->required();
	rot->add_option("--mod", mod)->required();
	rot->add_option("--seq", seq_csv)->required();

	// universal
	auto *uni = app.add_subcommand("universal", "scaled universal sequence and orbit");
	uni->add_option("--mod", mod)->required();
	uni->add_option("--d", dpar)->capture_default_str();
	auto *uni_i = uni->add_option("--i", ipar, "orbit row (with --j prints one entry)");
	uni->add_option("--j", jpar);
	auto *uni_from = uni->add_option("--from", from, "window start");
	uni->add_option("--to", to, "window end");

	// idao
	auto *idao = app.add_subcommand("idao", "interlaced doubly arithmetic orbits");
	idao->require_subcommand(1);
	auto *iw = idao->add_subcommand("wendt", "rank and determinant of the Wendt matrix");
	iw->add_option("--k", kpar)->required();
	auto *is = idao->add_subcommand("solve", "integer basis of the orbit system");
	is->add_option("--k", kpar)->required();
	auto *iv = idao->add_subcommand("verify", "check double arithmeticity on a box");
	iv->add_option("--mod", mod, "0 for Z")->capture_default_str();
	iv->add_option("--a", a_csv, "firsts")->required();
	iv->add_option("--d", d_csv, "diffs")->required();
	iv->add_option("--k1", k1)->required();
	iv->add_option("--k2", k2)->required();
	iv->add_option("--depth", depth)->capture_default_str();
	iv->add_option("--width", width)->capture_default_str();

	// search
	auto *sea = app.add_subcommand("search", "exhaustive search for balanced figures");
	sea->require_subcommand(1);
	std::map<std::string, CLI::App *> sea_sub;
	for (auto kind : {"triangle", "trapezoid", "pascal", "lozenge", "tetra"})
	{
		auto *c = sea->add_subcommand(kind);
		c->add_option("--mod", mod)->required();
		c->add_option("--order", order)->required();
		if (std::string(kind) == "trapezoid")
			c->add_option("--height", height)->required();
		c->add_option("--budget", budget, "max nodes examined (0 = unlimited)");
		c->add_option("--threads", threads)->capture_default_str();
		c->add_option("--limit", limit, "witnesses to keep")->capture_default_str();
		sea_sub[kind] = c;
	}

	// verify
	auto *ver = app.add_subcommand("verify", "sweep the balanced families");
	ver->require_subcommand(1);
	auto *v1 = ver->add_subcommand("thm1", "doubly arithmetic triangles");
	v1->add_option("--mod", mod)->required();
	auto *v3 = ver->add_subcommand("thm3", "orbit of the closed IDAO family");
	v3->add_option("--mod", mod)->required();
	v3->add_option("--a0", a0)->required();
	v3->add_option("--a1", a1)->required();
	v3->add_option("--a2", a2)->required();
	v3->add_option("--d", dpar)->required();
	v3->add_option("--lambda", lambda)->capture_default_str();
	auto *v4 = ver->add_subcommand("thm4", "orbit of an antisymmetric progression");
	v4->add_option("--mod", mod)->required();
	v4->add_option("--a", apar)->required();
	v4->add_option("--d", dpar)->required();
	v4->add_option("--lambda", lambda)->capture_default_str();
	auto *v5 = ver->add_subcommand("thm5", "universal orbit");
	v5->add_option("--mod", mod)->required();
	v5->add_option("--d", dpar)->required();
	v5->add_option("--lambda", lambda)->capture_default_str();
	auto *vp10 = ver->add_subcommand("prop10", "unions of consecutive figures");
	vp10->add_option("--mod", mod)->required();
	vp10->add_option("--d", dpar)->capture_default_str();
	auto *vp12 = ver->add_subcommand("prop12", "derived closed forms");
	vp12->add_option("--mod", mod)->required();
	vp12->add_option("--a", apar)->capture_default_str();
	vp12->add_option("--d", dpar)->capture_default_str();

	// admissible
	auto *adm = app.add_subcommand("admissible", "order classes with divisible cardinality");
	adm->add_option("--mod", mod)->required();
	std::string kind_str = "triangle";
	adm->add_option("--kind", kind_str)->capture_default_str();

	// proportions
	auto *pro = app.add_subcommand("proportions", "admissible orders covered by the universal orbit");
	pro->add_option("--mod", mod)->required();

	try
	{
		app.parse(argc, argv);
	}
	catch (CLI::ParseError const &e)
	{
		int rc = app.exit(e);
		return rc == 0 ? exit_ok : exit_usage;
	}

	as_json = format == "json";
	try
	{
		if (fig->parsed())
		{
			if (fig_tetra->parsed())
			{
				auto base = parse_slice(base_str, mod);
				Tetrahedron t =
				    tetra_pascal ? pascal_tetrahedron(base) : steinhaus_tetrahedron(base);
				std::string text;
				for (size_t f = 0; f < t.floors.size(); ++f)
					text += "floor " + std::to_string(f) + ":\n" + slice_text(t.floors[f]);
				emit(to_json(t), as_json, text);
				return exit_ok;
			}
			Figure f;
			if (fig_dat->parsed())
				f = dat_figure(mod, apar, d1, d2, order);
			else
			{
				FiniteSeq s = parse_sequence(seq_csv, mod);
				if (fig_sub["triangle"]->parsed())
					f = steinhaus_triangle(s);
				else if (fig_sub["trapezoid"]->parsed())
					f = steinhaus_trapezoid(s, height);
				else if (fig_sub["pascal"]->parsed())
					f = pascal_triangle(s);
				else if (fig_sub["pascal-trapezoid"]->parsed())
					f = pascal_trapezoid(s, height);
				else
					f = lozenge(s);
			}
			emit(to_json(f), as_json, render_text(f));
			return exit_ok;
		}
		if (der->parsed())
		{
			FiniteSeq s = parse_sequence(seq_csv, mod);
			for (long t = 0; t < times; ++t)
				s = alpha_csv.empty()
				        ? derive(s)
				        : derive_alpha(s, parse_sequence(alpha_csv, 0).values());
			emit({{"modulus", mod}, {"seq", format_sequence(s)}}, as_json,
			     format_sequence(s) + "\n");
			return exit_ok;
		}
		if (rot->parsed())
		{
			FiniteSeq s = parse_sequence(seq_csv, mod);
			FiniteSeq r = angle == 120 ? rot120(s) : rot240(s);
			emit({{"modulus", mod}, {"angle", angle}, {"seq", format_sequence(r)}},
			     as_json, format_sequence(r) + "\n");
			return exit_ok;
		}
		if (uni->parsed())
		{
			if (uni_i->count() > 0)
			{
				mpz_class v = universal_orbit_entry(mod, dpar, ipar, jpar);
				emit({{"modulus", mod}, {"d", dpar}, {"i", ipar}, {"j", jpar},
				      {"value", v.get_str()}},
				     as_json, v.get_str() + "\n");
				return exit_ok;
			}
			if (uni_from->count() == 0)
			{
				from = 0;
				to = 3 * mod - 1;
			}
			FiniteSeq w = iap_window(universal_sequence(mod, dpar), from, to);
			emit({{"modulus", mod}, {"d", dpar}, {"from", from}, {"to", to},
			      {"seq", format_sequence(w)}},
			     as_json, format_sequence(w) + "\n");
			return exit_ok;
		}
		if (idao->parsed())
		{
			if (iw->parsed())
			{
				ExactMatrix W = wendt(kpar);
				long rank = exact_rank(W);
				mpz_class det = exact_det(W);
				emit({{"k", kpar}, {"rank", rank}, {"det", det.get_str()}}, as_json,
				     "k=" + std::to_string(kpar) + " rank=" + std::to_string(rank) +
				         " det=" + det.get_str() + "\n");
				return exit_ok;
			}
			if (is->parsed())
			{
				auto basis = idao_system_solve(kpar);
				json jb = json::array();
				std::string text;
				for (auto const &s : basis)
				{
					json ja = json::array(), jd = json::array();
					std::string ta, td;
					for (auto const &x : s.firsts)
					{
						ja.push_back(x.get_str());
						ta += (ta.empty() ? "" : ",") + x.get_str();
					}
					for (auto const &x : s.diffs)
					{
						jd.push_back(x.get_str());
						td += (td.empty() ? "" : ",") + x.get_str();
					}
					jb.push_back({{"firsts", ja}, {"diffs", jd}});
					text += "A=(" + ta + ") D=(" + td + ")\n";
				}
				emit({{"k", kpar}, {"dimension", basis.size()}, {"basis", jb}}, as_json,
				     "dimension " + std::to_string(basis.size()) + "\n" + text);
				return exit_ok;
			}
			IAPSpec s(mod, parse_sequence(a_csv, 0).terms, parse_sequence(d_csv, 0).terms);
			auto verdict = idao_verify(s, k1, k2, depth, width);
			json jc = json::array();
			for (auto const &c : verdict.classes)
				jc.push_back({{"i0", c.i0},
				              {"j0", c.j0},
				              {"base", c.base.get_str()},
				              {"rowStep", c.row_step.get_str()},
				              {"colStep", c.col_step.get_str()}});
			json out = {{"ok", verdict.ok}, {"classes", jc}};
			std::string text = verdict.ok ? "orbit is doubly arithmetic on the box\n"
			                              : "refuted\n";
			if (verdict.counterexample)
			{
				out["counterexample"] = {{"i", verdict.counterexample->first},
				                         {"j", verdict.counterexample->second}};
				text += "counterexample at (" +
				        std::to_string(verdict.counterexample->first) + "," +
				        std::to_string(verdict.counterexample->second) + ")\n";
			}
			emit(out, as_json, text);
			return verdict.ok ? exit_ok : exit_refuted;
		}
		if (sea->parsed())
		{
			if (sea_sub["tetra"]->parsed())
			{
				TetraSearchReport r =
				    search_balanced_tetra({mod, order, budget, limit});
				std::string text = "examined " + std::to_string(r.examined) + ", found " +
				                   std::to_string(r.found_count) +
				                   (r.exhaustive ? " (exhaustive)\n" : " (budget hit)\n");
				emit(to_json(r), as_json, text);
				return r.budget_exhausted ? exit_budget : exit_ok;
			}
			SearchSpec sp;
			sp.modulus = mod;
			sp.order = order;
			sp.height = height;
			sp.budget = budget;
			sp.threads = threads;
			sp.found_cap = limit;
			if (sea_sub["trapezoid"]->parsed())
				sp.kind = FigureKind::steinhaus_trapezoid;
			else if (sea_sub["pascal"]->parsed())
				sp.kind = FigureKind::pascal_triangle;
			else if (sea_sub["lozenge"]->parsed())
				sp.kind = FigureKind::lozenge;
			SearchReport r = search_balanced(sp);
			std::string text = "examined " + std::to_string(r.examined) + ", found " +
			                   std::to_string(r.found_count) +
			                   (r.exhaustive ? " (exhaustive)\n" : " (budget hit)\n");
			for (auto const &f : r.found)
			{
				text += "  ";
				for (size_t j = 0; j < f.size(); ++j)
					text += (j ? "," : "") + std::to_string(f[j]);
				text += "\n";
			}
			emit(to_json(r), as_json, text);
			return r.budget_exhausted ? exit_budget : exit_ok;
		}
		if (ver->parsed())
		{
			VerifyReport r;
			if (v1->parsed())
				r = verify_thm1(mod);
			else if (v3->parsed())
				r = verify_thm3(mod, a0, a1, a2, dpar, lambda);
			else if (v4->parsed())
				r = verify_thm4(mod, apar, dpar, lambda);
			else if (v5->parsed())
				r = verify_thm5(mod, dpar, lambda);
			else if (vp10->parsed())
				r = verify_prop10(mod, dpar);
			else
				r = verify_prop12(mod, apar, dpar);
			emit(to_json(r), as_json, verify_text(r));
			return report_exit(r);
		}
		if (adm->parsed())
		{
			auto ac = admissible_orders(mod, figure_kind_from_string(kind_str));
			std::string text = "period " + std::to_string(ac.period) + ":";
			for (long r : ac.residues)
				text += " " + std::to_string(r);
			emit({{"modulus", mod},
			      {"kind", kind_str},
			      {"period", ac.period},
			      {"residues", ac.residues}},
			     as_json, text + "\n");
			return exit_ok;
		}
		if (pro->parsed())
		{
			auto r = proportion_report(mod);
			emit(to_json(r), as_json,
			     std::to_string(r.frac_num) + "/" + std::to_string(r.frac_den) +
			         " of admissible orders covered (period " +
			         std::to_string(r.period) + ")\n");
			return exit_ok;
		}
	}
	catch (std::exception const &e)
	{
		std::cerr << "error: " << e.what() << "\n";
		return exit_usage;
	}
	return exit_usage;
}
