#include "commands.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "wdlab/matcher.hpp"

namespace wdlab::cli {

using io::Json;

namespace {

Json document(const std::string& command, const Options& o)
{
    return Json{{"schema", io::kSchema}, {"command", command}, {"q", o.q}, {"n_max", o.n_max}, {"seed", o.seed}};
}

// Attaches the checks and the overall verdict to a document.
void finish(Outcome& out, const std::vector<std::pair<std::string, Report>>& checks)
{
    Json c = Json::object();
    for (auto& [name, r] : checks) {
        c[name] = io::to_json(r);
        out.ok = out.ok && r.overall;
    }
    out.doc["checks"] = c;
    out.doc["overall"] = out.ok;
}

std::string markdown_checks(const std::vector<std::pair<std::string, Report>>& checks)
{
    std::ostringstream md;
    md << "\n| check | key | verdict |\n|---|---:|---|\n";
    for (auto& [name, r] : checks)
        for (auto& [k, v] : r.per_component)
            md << "| " << name << " | " << k << " | " << (v == "pass" ? "✓" : "✗ " + v.substr(5)) << " |\n";
    bool ok = true;
    for (auto& c : checks)
        ok = ok && c.second.overall;
    md << "\noverall: " << (ok ? "pass" : "FAIL") << "\n";
    return md.str();
}

Report single(bool ok, const std::string& detail)
{
    Report r;
    if (ok)
        r.pass(0);
    else
        r.fail(0, detail);
    return r;
}

std::string dims(const HVector& h)
{
    return "(" + std::to_string(h[0].free_rank()) + "," + std::to_string(h[1].free_rank()) + "," +
           std::to_string(h[2].free_rank()) + ")";
}

void check_n_max(const Options& o)
{
    if (o.n_max < 1 || o.n_max > Options::kMaxN)
        throw std::invalid_argument("--n-max must be in [1, " + std::to_string(Options::kMaxN) + "]");
    make_field(o.q);
}

struct WDSummary
{
    HVector h, dual_h;
    long euler;
    Report duality;
};

WDSummary summarize(const WDRep& rep)
{
    WDSummary s{wd_cohomology(rep), wd_cohomology(tate_dual_rep(rep)), euler_char(rep), {}};
    if (rep.base == Base::Field) {
        for (int i = 0; i < 3; ++i)
            if (s.h[i].free_rank() == s.dual_h[2 - i].free_rank())
                s.duality.pass(i);
            else
                s.duality.fail(i, "h^" + std::to_string(i) + " = " + std::to_string(s.h[i].free_rank()) +
                                      " but dual h^" + std::to_string(2 - i) + " = " +
                                      std::to_string(s.dual_h[2 - i].free_rank()));
    }
    return s;
}

}  // namespace

std::pair<int, int> parse_range(const std::string& text)
{
    auto dots = text.find("..");
    if (dots == std::string::npos)
        throw std::invalid_argument("range must look like lo..hi, got '" + text + "'");
    try {
        int lo = std::stoi(text.substr(0, dots)), hi = std::stoi(text.substr(dots + 2));
        if (lo > hi)
            throw std::invalid_argument("empty range");
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("range must look like lo..hi, got '" + text + "'");
    }
}

Outcome cmd_wd(const Options& o, const std::string& file)
{
    WDRep rep = io::wdrep_from_json(io::load_file(file), o.q);
    WDSummary s = summarize(rep);
    Outcome out{document("wd", o), {}};
    out.doc["q"] = rep.q;
    out.doc["rep"] = io::to_json(rep);
    out.doc["h"] = io::to_json(s.h);
    out.doc["dual_h"] = io::to_json(s.dual_h);
    out.doc["euler"] = s.euler;
    std::vector<std::pair<std::string, Report>> checks;
    if (rep.base == Base::Field)
        checks.emplace_back("tate_duality", s.duality);
    checks.emplace_back("euler_zero", single(s.euler == 0, "chi = " + std::to_string(s.euler)));
    finish(out, checks);
    std::ostringstream md;
    md << "### Weil-Deligne cohomology (q = " << rep.q << ")\n\n";
    if (rep.base == Base::Field)
        md << "h=" << dims(s.h) << ", dual h=" << dims(s.dual_h) << ", χ=" << s.euler << "\n";
    else
        md << "h=" << to_string(s.h) << ", dual h=" << to_string(s.dual_h) << ", χ=" << s.euler << "\n";
    out.markdown = md.str() + markdown_checks(checks);
    return out;
}

Outcome cmd_iwasawa(const Options& o, bool inject_fault)
{
    check_n_max(o);
    PeriodTable p = iwasawa_normalized(o.q, o.n_max);
    GradedTable raw = iwasawa_lsheaf_table(o.q, o.n_max);
    GradedTable l = normalize_table(raw);
    if (inject_fault)
        l.weights[1].front().degree += 1;
    Report r = match_iwasawa(p, l);
    Outcome out{document("iwasawa", o), {}};
    out.doc["inject_fault"] = inject_fault;
    out.doc["period_table"] = io::to_json(p);
    out.doc["lsheaf_table"] = io::to_json(l);
    std::vector<std::pair<std::string, Report>> checks{{"iwasawa_tate_matching", r}};
    finish(out, checks);
    out.markdown = render_markdown(p) + "\n" + render_markdown(l) + markdown_checks(checks);
    return out;
}

Outcome cmd_hecke(const Options& o)
{
    check_n_max(o);
    PeriodTable p = hecke_period_normalized(o.q, o.n_max);
    HeckeLTable l = hecke_lsheaf_normalized(o.q, o.n_max);
    Report matching = match_hecke(p, l);

    // The Eisenstein rows restrict to the torus data of the unnormalized table.
    PeriodTable raw = hecke_period_table(o.q, o.n_max);
    Report unfolding;
    for (int n = -o.n_max; n <= o.n_max; ++n) {
        if (n == 0)
            continue;
        TorusEntry u = unfold_eisenstein(std::get<EisEntry>(p.components.at(n)), n);
        if (PeriodEntry{u} == raw.components.at(n))
            unfolding.pass(n);
        else
            unfolding.fail(n, to_string(PeriodEntry{u}) + " vs " + to_string(raw.components.at(n)));
    }
    Outcome out{document("hecke", o), {}};
    out.doc["period_table"] = io::to_json(p);
    out.doc["lsheaf_table"] = io::to_json(l);
    std::vector<std::pair<std::string, Report>> checks{{"hecke_matching", matching}, {"eisenstein_unfolding", unfolding}};
    finish(out, checks);
    out.markdown = render_markdown(p) + "\n" + render_markdown(l) + markdown_checks(checks);
    return out;
}

Outcome cmd_fe(const Options& o)
{
    check_n_max(o);
    std::vector<std::pair<std::string, Report>> checks{
        {"spectral_functional_equation", functional_equation_check(o.q, o.n_max)},
        {"period_functional_equation", period_fe_check(o.q, o.n_max)}};
    Outcome out{document("fe", o), {}};
    finish(out, checks);
    out.markdown = "### Functional equations (q = " + std::to_string(o.q) + ", n_max = " + std::to_string(o.n_max) +
                   ")\n" + markdown_checks(checks);
    return out;
}

Outcome cmd_mult(const Options& o, const std::string& file, const std::string& builtin)
{
    Outcome out{document("mult", o), {}};
    std::vector<std::pair<std::string, Report>> checks;
    std::ostringstream md;
    FiniteGroup g = FiniteGroup::from_table({{0}});
    CharacterTable ct;
    std::string name;
    if (!builtin.empty()) {
        std::map<std::string, NamedGroup (*)()> known{{"S3", symmetric_group_3},
                                                     {"S4", symmetric_group_4},
                                                     {"D4", dihedral_group_4},
                                                     {"Q8", quaternion_group}};
        auto it = known.find(builtin);
        if (it == known.end())
            throw std::invalid_argument("unknown group '" + builtin + "' (S3, S4, D4, Q8)");
        NamedGroup ng = it->second();
        g = ng.group;
        ct = ng.characters;
        name = ng.name;
    } else {
        Json j = io::load_file(file);
        g = io::group_from_json(io::Json(j.at("group")), "$.group");
        ct = io::character_table_from_json(g, j.at("characters"), "$.characters");
        name = file;
        Subgroup z = make_subgroup(g, j.at("z").get<std::vector<std::size_t>>());
        std::vector<Subgroup> lifts;
        for (auto& h : j.at("lifts"))
            lifts.push_back(make_subgroup(g, h.get<std::vector<std::size_t>>()));
        std::size_t rho = j.at("rho").get<std::size_t>();

        Json counts = Json::array(), fixed = Json::array();
        Report partition;
        for (std::size_t i = 0; i < lifts.size(); ++i) {
            auto cosets = double_cosets(g, z, lifts[i]);
            std::size_t total = 0;
            for (auto& c : cosets)
                total += c.elements.size();
            if (total == g.order())
                partition.pass(static_cast<int>(i));
            else
                partition.fail(static_cast<int>(i), "double cosets cover " + std::to_string(total) + " elements");
            counts.push_back(cosets.size());
            fixed.push_back(fixed_dim(g, ct, rho, lifts[i]));
        }
        std::size_t sum = prasad_sum(g, z, lifts);
        ExtReport ext = higher_ext_vanishing_report(g, ct, rho, lifts);
        out.doc["double_coset_counts"] = counts;
        out.doc["prasad_sum"] = sum;
        out.doc["rho"] = rho;
        out.doc["fixed_dims"] = fixed;
        out.doc["multiplicity"] = ext.multiplicity;
        out.doc["ext_vanishing"] = ext.statement;
        md << "### Multiplicities for " << name << "\n\n";
        md << "double cosets #(Z\\G/H): " << counts.dump() << "\n";
        md << "prasad_sum = " << sum << "\n";
        md << "dim rho^H for rho = " << ct.names[rho] << ": " << fixed.dump() << ", total " << ext.multiplicity << "\n";
        md << ext.statement << "\n";
        checks.emplace_back("double_coset_partition", partition);

        Report pairs;
        Json pair_docs = Json::array();
        if (j.contains("pairs"))
            for (std::size_t i = 0; i < j["pairs"].size(); ++i) {
                Subgroup a = make_subgroup(g, j["pairs"][i].at("a").get<std::vector<std::size_t>>());
                Subgroup b = make_subgroup(g, j["pairs"][i].at("b").get<std::vector<std::size_t>>());
                MackeyResult m = mackey_check(g, ct, a, b);
                pair_docs.push_back(Json{{"character_side", m.character_side}, {"coset_side", m.coset_side}});
                md << "Mackey pair " << i << ": " << m.character_side << " = " << m.coset_side << "\n";
                if (m.holds())
                    pairs.pass(static_cast<int>(i));
                else
                    pairs.fail(static_cast<int>(i), std::to_string(m.character_side) + " vs " +
                                                        std::to_string(m.coset_side));
            }
        out.doc["mackey_pairs"] = pair_docs;
        if (!pairs.per_component.empty())
            checks.emplace_back("mackey_pairs", pairs);
    }
    auto subs = all_subgroups(g);
    Report lattice;
    for (std::size_t i = 0; i < subs.size(); ++i) {
        lattice.pass(static_cast<int>(i));
        for (std::size_t k = 0; k < subs.size(); ++k) {
            MackeyResult m = mackey_check(g, ct, subs[i], subs[k]);
            if (!m.holds())
                lattice.fail(static_cast<int>(i), "against subgroup " + std::to_string(k) + ": " +
                                                      std::to_string(m.character_side) + " vs " +
                                                      std::to_string(m.coset_side));
        }
    }
    out.doc["group"] = name;
    out.doc["order"] = g.order();
    out.doc["subgroups"] = subs.size();
    if (!builtin.empty())
        md << "### Mackey identity over the subgroup lattice of " << name << "\n\n";
    md << "order " << g.order() << ", " << subs.size() << " subgroups\n";
    checks.emplace_back("mackey_lattice", lattice);
    finish(out, checks);
    out.markdown = md.str() + markdown_checks(checks);
    return out;
}

Outcome cmd_curve(const Options& o, int genus, int lo, int hi, int trunc, const std::string& file)
{
    make_field(o.q);
    CurveData c;
    if (!file.empty())
        c = io::curve_from_json(io::load_file(file));
    else if (genus == 0)
        c = CurveData::p1();
    else {
        std::mt19937_64 rng(o.seed);
        c = synthetic_curve(genus, 2, std::max(std::abs(lo), std::abs(hi)), rng);
    }
    Outcome out{document("curve", o), {}};
    out.doc["curve"] = io::to_json(c);
    std::ostringstream md;
    md << "### Normalized period on Bun_Gm, genus " << c.genus << ", q = " << o.q << "\n\n";
    md << "| deg | twist | P^norm(L) | P^norm(L^-1) |\n|---:|---:|---|---|\n";
    Json rows = Json::array();
    for (int d = lo; d <= hi; ++d)
        for (int t = 0; t < c.twist_order; ++t) {
            BundleLabel l{d, t};
            Scalar a = period_norm(c, o.q, l), b = period_norm(c, o.q, c.inverse(l));
            rows.push_back(Json{{"degree", d}, {"twist", t}, {"p_norm", io::to_json(a)}, {"p_norm_inverse", io::to_json(b)}});
            md << "| " << d << " | " << t << " | " << a.to_string() << " | " << b.to_string() << " |\n";
        }
    out.doc["periods"] = rows;
    std::vector<std::pair<std::string, Report>> checks{{"riemann_roch", riemann_roch_check(c, lo, hi)},
                                                       {"period_symmetry", fe_symmetry_check(c, o.q, lo, hi)},
                                                       {"asymptotics", asymptotic_check(c, o.q, lo, hi)}};
    if (c.projective_line) {
        Report p1;
        FieldCtx k(o.q);
        for (int d = lo; d <= hi; ++d) {
            Scalar want = k.q_power(HalfInt::half(std::abs(d) + 1));
            if (period_norm(c, o.q, {d, 0}) == want)
                p1.pass(d);
            else
                p1.fail(d, "expected " + want.to_string());
        }
        checks.emplace_back("p1_closed_form", p1);
        ZetaSeries z = zeta_series_p1(o.q, trunc);
        Report zr;
        for (int d = 0; d <= trunc; ++d)
            if (z.coefficients[d] == z.closed_form[d])
                zr.pass(d);
            else
                zr.fail(d, z.coefficients[d].get_str() + " vs " + z.closed_form[d].get_str());
        checks.emplace_back("zeta_p1", zr);
        out.doc["zeta"] = io::to_json(z);
    }
    finish(out, checks);
    out.markdown = md.str() + markdown_checks(checks);
    return out;
}

Outcome cmd_zeta(const Options& o, int trunc)
{
    make_field(o.q);
    ZetaSeries z = zeta_series_p1(o.q, trunc);
    Outcome out{document("zeta", o), {}};
    out.doc["zeta"] = io::to_json(z);
    Report r, recursion;
    std::ostringstream md;
    md << "### Zeta series of P^1 over F_" << o.q << "\n\n| d | c_d | closed form |\n|---:|---:|---:|\n";
    for (int d = 0; d <= trunc; ++d) {
        md << "| " << d << " | " << z.coefficients[d].get_str() << " | " << z.closed_form[d].get_str() << " |\n";
        if (z.coefficients[d] == z.closed_form[d])
            r.pass(d);
        else
            r.fail(d, "mismatch");
        if (d >= 2) {
            Integer rec = z.coefficients[d] - (1 + o.q) * z.coefficients[d - 1] + o.q * z.coefficients[d - 2];
            if (rec == 0)
                recursion.pass(d);
            else
                recursion.fail(d, "residual " + rec.get_str());
        }
    }
    std::vector<std::pair<std::string, Report>> checks{{"closed_form", r}, {"recursion", recursion}};
    finish(out, checks);
    out.markdown = md.str() + markdown_checks(checks);
    return out;
}

Outcome cmd_selftest(const Options& o)
{
    std::vector<std::pair<std::string, Report>> checks;
    Outcome out{document("selftest", o), {}};
    std::mt19937_64 rng(o.seed);
    Report wd;
    for (int i = 0; i < 60; ++i) {
        WDRep rep = random_wd_rep(o.q, 1 + i % 4, rng);
        WDSummary s = summarize(rep);
        if (s.duality.overall && s.euler == 0)
            wd.pass(i);
        else
            wd.fail(i, "h=" + dims(s.h) + " dual h=" + dims(s.dual_h) + " chi=" + std::to_string(s.euler));
    }
    checks.emplace_back("wd_duality_random", wd);
    auto take = [&](const std::string& prefix, const Outcome& sub) {
        for (auto& [name, r] : sub.doc["checks"].items())
            checks.emplace_back(prefix + "." + name, io::report_from_json(r));
    };
    take("iwasawa", cmd_iwasawa(o, false));
    take("hecke", cmd_hecke(o));
    take("fe", cmd_fe(o));
    for (const char* g : {"S3", "S4", "D4", "Q8"})
        take(std::string("mult.") + g, cmd_mult(o, "", g));
    take("curve", cmd_curve(o, 0, -10, 10, 10, ""));
    finish(out, checks);
    std::ostringstream md;
    md << "### Self test (q = " << o.q << ", n_max = " << o.n_max << ", seed = " << o.seed << ")\n\n";
    md << "| check | verdict |\n|---|---|\n";
    for (auto& [name, r] : checks)
        md << "| " << name << " | " << (r.overall ? "✓" : "✗") << " |\n";
    md << "\noverall: " << (out.ok ? "pass" : "FAIL") << "\n";
    out.markdown = md.str();
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"wdlab: explicit checks for the local Langlands duality of G_m and GL2 tables"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    app.add_option("--q", o.q, "residue field size, a prime power")->capture_default_str();
    app.add_option("--n-max", o.n_max, "largest |n| of Bun components / weights")->capture_default_str();
    app.add_option("--format", o.format, "output format")->check(CLI::IsMember({"json", "markdown"}))->capture_default_str();
    app.add_option("--seed", o.seed, "seed for randomized suites")->capture_default_str();
    app.add_option("--out", o.out, "write the report to this file");

    std::string file, builtin, range = "-10..10";
    bool inject_fault = false;
    int genus = 0, trunc = 10;

    auto* wd = app.add_subcommand("wd", "cohomology, Tate dual and Euler characteristic of a WD representation");
    wd->add_option("file", file, "WD representation JSON")->required();
    auto* iw = app.add_subcommand("iwasawa", "normalized Iwasawa-Tate period vs L-sheaf");
    iw->add_flag("--inject-fault", inject_fault, "perturb the L-sheaf table at weight 1");
    app.add_subcommand("hecke", "normalized Hecke period vs L-sheaf, with Eisenstein unfolding");
    app.add_subcommand("fe", "spectral and automorphic functional equations");
    auto* mult = app.add_subcommand("mult", "double cosets, fixed vectors and the Mackey identity");
    auto* mult_file = mult->add_option("file", file, "multiplicity input JSON");
    mult->add_option("--group", builtin, "built-in group S3, S4, D4 or Q8")->excludes(mult_file);
    auto* curve = app.add_subcommand("curve", "normalized periods on a curve over F_q");
    curve->add_option("--genus", genus, "genus of the synthetic curve")->capture_default_str();
    auto* curve_range = curve->add_option("--range", range, "degree range lo..hi, default: the whole input table")
                            ->capture_default_str();
    curve->add_option("--trunc", trunc, "zeta truncation order (P^1 only)")->capture_default_str();
    curve->add_option("--input", file, "curve h0 table JSON");
    auto* zeta = app.add_subcommand("zeta", "zeta series of P^1 against its closed form");
    zeta->add_option("--trunc", trunc, "truncation order")->capture_default_str();
    app.add_subcommand("selftest", "every quick check with the given parameters");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        std::ostringstream o_out, o_err;
        int code = app.exit(e, o_out, o_err);
        out << o_out.str();
        err << o_err.str();
        return code == 0 ? 0 : 2;
    }
    if (mult->parsed() && file.empty() && builtin.empty()) {
        err << "mult needs an input file or --group\n";
        return 2;
    }

    Outcome result;
    try {
        std::string cmd = app.get_subcommands().front()->get_name();
        if (cmd == "wd")
            result = cmd_wd(o, file);
        else if (cmd == "iwasawa")
            result = cmd_iwasawa(o, inject_fault);
        else if (cmd == "hecke")
            result = cmd_hecke(o);
        else if (cmd == "fe")
            result = cmd_fe(o);
        else if (cmd == "mult")
            result = cmd_mult(o, file, builtin);
        else if (cmd == "curve") {
            auto [lo, hi] = parse_range(range);
            if (!file.empty() && curve_range->count() == 0) {
                const CurveData c = io::curve_from_json(io::load_file(file));
                if (c.h0.empty())
                    throw std::invalid_argument("curve table is empty");
                lo = c.h0.begin()->first.degree;
                hi = c.h0.rbegin()->first.degree;
            }
            result = cmd_curve(o, genus, lo, hi, trunc, file);
        } else if (cmd == "zeta")
            result = cmd_zeta(o, trunc);
        else
            result = cmd_selftest(o);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    std::string text = o.format == "json" ? result.doc.dump(2) + "\n" : result.markdown;
    if (o.out.empty()) {
        out << text;
    } else {
        std::ofstream f(o.out);
        if (!f) {
            err << "error: cannot write " << o.out << "\n";
            return 2;
        }
        f << text;
    }
    return result.ok ? 0 : 1;
}

}  // namespace wdlab::cli
