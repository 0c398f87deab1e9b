#include "wdlab/matcher.hpp"

#include <stdexcept>

namespace wdlab {

CFTPoint cft_point(std::int64_t q, const SmoothCharacter& chi)
{
    if (chi.is_token())
        throw std::invalid_argument("no CFT point for the token " + chi.to_string());
    return {"triv", chi.value_at_pi(q)};
}

GradedTable translate_period_table(const PeriodTable& p, WeightConvention convention)
{
    if (!p.normalized)
        throw std::invalid_argument("matching needs the normalized period table");
    GradedTable t;
    t.normalized = true;
    t.q = p.q;
    t.n_max = p.n_max;
    for (auto& [n, entry] : p.components) {
        auto* c = std::get_if<CharEntry>(&entry);
        if (!c)
            throw std::invalid_argument("component " + std::to_string(n) + " is not a character entry");
        int weight = convention == WeightConvention::Direct ? n : -n;
        FgModule module;
        if (c->chi.is_token()) {
            // Per-component rule C_c^inf(F) ≅ C_c^inf(F^x); the latter is the
            // Whittaker object and corresponds to the structure sheaf.
            module = FgModule(1);
        } else {
            module = FgModule::cyclic(LaurentPoly::linear(cft_point(p.q, c->chi).t_value));
        }
        t.weights[weight].push_back({module, c->degree});
    }
    return t;
}

Report compare_tables(const GradedTable& expected, const GradedTable& actual)
{
    if (expected.n_max != actual.n_max)
        throw std::invalid_argument("tables cover different ranges: " + std::to_string(expected.n_max) + " vs " +
                                    std::to_string(actual.n_max));
    Report report;
    for (int n = -expected.n_max; n <= expected.n_max; ++n) {
        auto a = expected.at(n), b = actual.at(n);
        if (a == b) {
            report.pass(n);
            continue;
        }
        std::string detail = "weight " + std::to_string(n) + ":";
        for (auto& e : a)
            detail += " expected " + e.module.to_string() + " @" + std::to_string(e.degree);
        for (auto& e : b)
            detail += " got " + e.module.to_string() + " @" + std::to_string(e.degree);
        report.fail(n, detail);
    }
    return report;
}

Report match_iwasawa(const PeriodTable& p, const GradedTable& l, WeightConvention convention)
{
    if (!l.normalized)
        throw std::invalid_argument("matching needs the normalized L-sheaf table");
    return compare_tables(translate_period_table(p, convention), l);
}

namespace {

std::string match_eis(std::int64_t q, const EisEntry& a, const SpecEis& b)
{
    if (opposite(a.parabolic) != b.parabolic)
        return "parabolic Eis_" + to_string(a.parabolic) + " vs EisSpec_" + to_string(b.parabolic);
    if (a.datum.first != SmoothCharacter::ccfx())
        return "first torus factor " + a.datum.first.to_string() + " is not the Whittaker object";
    CFTPoint p = cft_point(q, a.datum.second);
    if (!(p.t_value == b.point))
        return "point " + p.t_value.to_string() + " vs " + b.point.to_string();
    if (a.degree != b.degree)
        return "degree " + std::to_string(a.degree) + " vs " + std::to_string(b.degree);
    return {};
}

}  // namespace

Report match_hecke(const PeriodTable& p, const HeckeLTable& l)
{
    if (!p.normalized || !l.normalized)
        throw std::invalid_argument("matching needs normalized tables");
    if (p.n_max != l.n_max)
        throw std::invalid_argument("tables cover different ranges");
    Report report;
    for (int n = -p.n_max; n <= p.n_max; ++n) {
        auto pa = p.components.find(n);
        auto lb = l.rows.find(n);
        if (pa == p.components.end() || lb == l.rows.end()) {
            report.fail(n, "missing row");
            continue;
        }
        std::string problem;
        const auto& token = lb->second.token;
        if (auto* e = std::get_if<EisEntry>(&pa->second)) {
            if (auto* s = std::get_if<SpecEis>(&token))
                problem = match_eis(p.q, *e, *s);
            else
                problem = "token shape: Eis vs fiber sequence";
        } else if (auto* f = std::get_if<FiberEntry>(&pa->second)) {
            auto* s = std::get_if<SpecFiber>(&token);
            if (!s)
                problem = "token shape: fiber sequence vs Eis";
            else if (!(f->sub == "W_psi" && s->sub == "O_Par_GL2"))
                problem = "first terms " + f->sub + " vs " + s->sub;
            else
                problem = match_eis(p.q, f->quotient, s->quotient);
        } else {
            throw std::invalid_argument("unexpected period entry " + to_string(pa->second));
        }
        if (problem.empty())
            report.pass(n);
        else
            report.fail(n, problem);
    }
    return report;
}

}  // namespace wdlab
