#include "wdlab/automorphic.hpp"

#include <sstream>
#include <stdexcept>

namespace wdlab {

Scalar SmoothCharacter::value_at_pi(std::int64_t q) const
{
    if (is_token())
        throw std::invalid_argument(to_string() + " is not a character");
    return make_field(q).q_power(-exponent);
}

std::string SmoothCharacter::to_string() const
{
    std::string twist = "norm^" + exponent.to_string();
    switch (kind) {
    case Kind::Norm:
        return twist;
    case Kind::CcF:
        return exponent == HalfInt() ? "CcF" : "CcF ⊗ " + twist;
    case Kind::CcFx:
        return exponent == HalfInt() ? "CcFx" : "CcFx ⊗ " + twist;
    }
    return twist;
}

std::string TorusDatum::to_string() const
{
    return first.to_string() + " ⊠ " + second.to_string();
}

std::string to_string(const PeriodEntry& e)
{
    struct Visitor
    {
        std::string operator()(const CharEntry& c) const { return c.chi.to_string() + " @" + std::to_string(c.degree); }
        std::string operator()(const TorusEntry& t) const
        {
            return "cInd(" + t.datum.to_string() + ") @" + std::to_string(t.degree);
        }
        std::string operator()(const EisEntry& e) const
        {
            return "Eis_" + wdlab::to_string(e.parabolic) + "!(" + e.datum.to_string() + ") @" +
                   std::to_string(e.degree);
        }
        std::string operator()(const FiberEntry& f) const
        {
            return "FiberSeq(" + f.sub + " -> P0 -> " + (*this)(f.quotient) + ")";
        }
        std::string operator()(const OpaqueEntry& o) const { return o.name + " @" + std::to_string(o.degree); }
    };
    return std::visit(Visitor{}, e);
}

PeriodTable iwasawa_period_table(std::int64_t q, int n_max)
{
    make_field(q);
    PeriodTable t{"iwasawa-tate", false, q, n_max, {}};
    for (int n = -n_max; n <= n_max; ++n) {
        if (n < 0)
            t.components.emplace(n, CharEntry{SmoothCharacter::norm(HalfInt()), 0});
        else if (n == 0)
            t.components.emplace(n, CharEntry{SmoothCharacter::ccf(), 0});
        else
            t.components.emplace(n, CharEntry{SmoothCharacter::norm(HalfInt::integer(1)), 2 * n});
    }
    return t;
}

PeriodTable degree_twist(const PeriodTable& t, int eta)
{
    if (eta == 0)
        return t;
    PeriodTable out = t;
    out.normalized = !t.normalized;
    const HalfInt twist = HalfInt::half(-eta);
    for (auto& [n, entry] : out.components) {
        if (auto* c = std::get_if<CharEntry>(&entry)) {
            c->chi = c->chi.twisted(twist);
            c->degree -= n * eta;
        } else if (auto* s = std::get_if<TorusEntry>(&entry)) {
            s->datum.second = s->datum.second.twisted(twist);
            s->degree -= n * eta;
        } else {
            throw std::invalid_argument("degree twist is not defined for " + to_string(entry));
        }
    }
    return out;
}

PeriodTable iwasawa_normalized(std::int64_t q, int n_max)
{
    return degree_twist(iwasawa_period_table(q, n_max), 1);
}

PeriodTable hecke_period_table(std::int64_t q, int n_max)
{
    make_field(q);
    PeriodTable t{"hecke", false, q, n_max, {}};
    for (int n = -n_max; n <= n_max; ++n) {
        if (n < 0)
            t.components.emplace(n, TorusEntry{TorusDatum::cind(SmoothCharacter::norm(HalfInt::integer(-1))), -2 * n});
        else if (n == 0)
            t.components.emplace(n, OpaqueEntry{"CcGL2/A", 0});
        else
            t.components.emplace(n, TorusEntry{TorusDatum::cind(SmoothCharacter::norm(HalfInt::integer(1))), 2 * n});
    }
    return t;
}

PeriodTable hecke_period_normalized(std::int64_t q, int n_max)
{
    make_field(q);
    PeriodTable t{"hecke", true, q, n_max, {}};
    const TorusDatum minus = TorusDatum::cind(SmoothCharacter::norm(HalfInt::half(-1)));
    const TorusDatum plus = TorusDatum::cind(SmoothCharacter::norm(HalfInt::half(1)));
    for (int n = -n_max; n <= n_max; ++n) {
        if (n < 0)
            t.components.emplace(n, EisEntry{Parabolic::B, minus, -n});
        else if (n == 0)
            t.components.emplace(n, FiberEntry{"W_psi", EisEntry{Parabolic::B, minus, 0}});
        else
            t.components.emplace(n, EisEntry{Parabolic::Bbar, plus, n});
    }
    return t;
}

TorusEntry unfold_eisenstein(const EisEntry& e, int n)
{
    if (n == 0)
        throw std::invalid_argument("the n = 0 stratum is not a torus stratum");
    const int sign = e.parabolic == Parabolic::B ? 1 : -1;
    TorusDatum d = e.datum;
    d.first = d.first.twisted(HalfInt::half(sign));
    d.second = d.second.twisted(HalfInt::half(-sign));
    // Twisting C_c^inf(F^x) by a character gives an isomorphic representation.
    if (d.first.kind == SmoothCharacter::Kind::CcFx)
        d.first.exponent = HalfInt();
    return {d, e.degree - sign * n};
}

PeriodTable dual_period_table(const PeriodTable& t)
{
    PeriodTable out = t;
    out.components.clear();
    for (auto& [n, entry] : t.components) {
        auto* c = std::get_if<CharEntry>(&entry);
        if (!c)
            throw std::invalid_argument("dual table needs character entries, got " + to_string(entry));
        out.components.emplace(-n, CharEntry{c->chi.inverse(), c->degree});
    }
    return out;
}

namespace {

// The Fourier transform identifies C_c^inf(F) ⊗ norm^{1/2} with C_c^inf(F) ⊗ norm^{-1/2}.
bool fourier_equal(const CharEntry& a, const CharEntry& b)
{
    using Kind = SmoothCharacter::Kind;
    if (a.chi.kind != Kind::CcF || b.chi.kind != Kind::CcF || a.degree != b.degree)
        return false;
    auto half = [](HalfInt e) { return e == HalfInt::half(1) || e == HalfInt::half(-1); };
    return half(a.chi.exponent) && half(b.chi.exponent);
}

}  // namespace

Report period_fe_check(const PeriodTable& std_norm, const PeriodTable& dual_norm)
{
    if (!std_norm.normalized || !dual_norm.normalized)
        throw std::invalid_argument("functional equation compares normalized tables");
    Report report;
    for (auto& [n, entry] : std_norm.components) {
        auto it = dual_norm.components.find(n);
        if (it == dual_norm.components.end()) {
            report.fail(n, "missing in dual table");
            continue;
        }
        auto* a = std::get_if<CharEntry>(&entry);
        auto* b = std::get_if<CharEntry>(&it->second);
        if (a && b && (*a == *b || fourier_equal(*a, *b)))
            report.pass(n);
        else
            report.fail(n, to_string(entry) + " vs " + to_string(it->second));
    }
    for (auto& [n, entry] : dual_norm.components)
        if (!std_norm.components.count(n))
            report.fail(n, "missing in std table");
    return report;
}

Report period_fe_check(std::int64_t q, int n_max)
{
    PeriodTable s = iwasawa_normalized(q, n_max);
    return period_fe_check(s, dual_period_table(s));
}

std::string render_markdown(const PeriodTable& t)
{
    std::ostringstream out;
    out << "### Period table (" << t.label << ", q = " << t.q << (t.normalized ? ", normalized" : "") << ")\n\n";
    out << "| n | entry |\n|---:|---|\n";
    for (auto& [n, e] : t.components)
        out << "| " << n << " | " << to_string(e) << " |\n";
    return out.str();
}

}  // namespace wdlab
