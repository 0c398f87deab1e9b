#include "wdlab/ffcurve.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>
#include <string>

namespace wdlab {

namespace {

std::string label_string(const BundleLabel& l)
{
    return "(deg " + std::to_string(l.degree) + ", twist " + std::to_string(l.twist) + ")";
}

int mod(int a, int m)
{
    return ((a % m) + m) % m;
}

}  // namespace

CurveData CurveData::p1()
{
    CurveData c;
    c.projective_line = true;
    return c;
}

BundleLabel CurveData::inverse(const BundleLabel& l) const
{
    return {-l.degree, mod(-l.twist, twist_order)};
}

BundleLabel CurveData::canonical_minus(const BundleLabel& l) const
{
    return {2 * genus - 2 - l.degree, mod(-l.twist, twist_order)};
}

BundleLabel CurveData::theta_twist(const BundleLabel& l) const
{
    return {l.degree + genus - 1, l.twist};
}

long CurveData::h0_of(const BundleLabel& l) const
{
    if (projective_line)
        return std::max(0, l.degree + 1);
    auto it = h0.find(l);
    if (it == h0.end())
        throw std::out_of_range("no h0 entry for " + label_string(l));
    return it->second;
}

Scalar period_p1(std::int64_t q, int d)
{
    return FieldCtx(q).q_power(HalfInt::integer(std::max(0, d)));
}

Scalar period_norm(const CurveData& c, std::int64_t q, const BundleLabel& l)
{
    BundleLabel m = c.theta_twist(l);
    return FieldCtx(q).q_power(HalfInt::integer(c.h0_of(m)) - HalfInt::half(m.degree));
}

Report riemann_roch_check(const CurveData& c)
{
    Report r;
    for (auto& [l, h] : c.h0) {
        auto partner = c.h0.find(c.canonical_minus(l));
        if (partner == c.h0.end())
            continue;
        long want = l.degree - c.genus + 1;
        if (h - partner->second == want)
            r.pass(l.degree);
        else
            r.fail(l.degree, "h0" + label_string(l) + " - h0(K - L) = " + std::to_string(h - partner->second) +
                                 ", expected " + std::to_string(want));
    }
    return r;
}

Report riemann_roch_check(const CurveData& c, int lo, int hi)
{
    Report r;
    for (int d = lo; d <= hi; ++d)
        for (int t = 0; t < c.twist_order; ++t) {
            BundleLabel m = c.theta_twist({d, t});
            long diff = c.h0_of(m) - c.h0_of(c.canonical_minus(m));
            long want = m.degree - c.genus + 1;
            if (diff == want)
                r.pass(d);
            else
                r.fail(d, "h0" + label_string(m) + " - h0(K - L) = " + std::to_string(diff) + ", expected " +
                              std::to_string(want));
        }
    return r;
}

Report fe_symmetry_check(const CurveData& c, std::int64_t q, int lo, int hi)
{
    Report r;
    for (int d = lo; d <= hi; ++d)
        for (int t = 0; t < c.twist_order; ++t) {
            BundleLabel l{d, t};
            Scalar a = period_norm(c, q, l), b = period_norm(c, q, c.inverse(l));
            if (a == b)
                r.pass(d);
            else
                r.fail(d, "P(L) = " + a.to_string() + " but P(L^-1) = " + b.to_string() + " at " + label_string(l));
        }
    return r;
}

Report asymptotic_check(const CurveData& c, std::int64_t q, int lo, int hi)
{
    Report r;
    FieldCtx k(q);
    for (int d = lo; d <= hi; ++d) {
        if (std::abs(d) < c.genus)
            continue;
        Scalar want = k.q_power(HalfInt::half(std::abs(d) + 1 - c.genus));
        for (int t = 0; t < c.twist_order; ++t) {
            Scalar got = period_norm(c, q, {d, t});
            if (got == want)
                r.pass(d);
            else
                r.fail(d, "P = " + got.to_string() + ", expected " + want.to_string());
        }
    }
    return r;
}

CurveData synthetic_curve(int genus, int twist_order, int range, std::mt19937_64& rng)
{
    if (genus < 0 || twist_order < 1)
        throw std::invalid_argument("genus must be >= 0 and twist order >= 1");
    CurveData c;
    c.genus = genus;
    c.twist_order = twist_order;
    int lo = genus - 1 - range, hi = genus - 1 + range;
    for (int e = lo; e <= hi; ++e)
        for (int t = 0; t < twist_order; ++t) {
            BundleLabel l{e, t}, partner = c.canonical_minus(l);
            if (c.h0.count(l))
                continue;
            long chi = e - genus + 1;
            long h;
            if (e < 0)
                h = 0;
            else if (e > 2 * genus - 2)
                h = chi;
            else if (l == partner)
                h = std::uniform_int_distribution<long>(0, genus)(rng);
            else
                h = std::uniform_int_distribution<long>(std::max(0L, chi), std::max(0L, chi) + 1)(rng);
            c.h0[l] = h;
            c.h0[partner] = h - chi;
        }
    return c;
}

CurveData elliptic_example(int range)
{
    CurveData c;
    c.genus = 1;
    c.twist_order = 2;
    for (int e = -range; e <= range; ++e)
        for (int t = 0; t < 2; ++t)
            c.h0[{e, t}] = e > 0 ? e : (e == 0 && t == 0 ? 1 : 0);
    return c;
}

ZetaSeries zeta_series_p1(std::int64_t q, int order)
{
    if (order < 1)
        throw std::invalid_argument("truncation order must be >= 1");
    if (q < 2)
        throw std::invalid_argument("q must be >= 2");
    ZetaSeries z;
    z.q = q;
    z.order = order;
    CurveData p1 = CurveData::p1();
    Integer qq(static_cast<long>(q));
    for (int d = 0; d <= order; ++d) {
        Integer power;
        mpz_pow_ui(power.get_mpz_t(), qq.get_mpz_t(), static_cast<unsigned long>(p1.h0_of({d, 0})));
        z.coefficients.push_back((power - 1) / (qq - 1));
    }
    // 1 / (1 - (1+q)t + q t^2) by power-series division.
    std::vector<Integer> den{1, -(1 + qq), qq};
    for (int d = 0; d <= order; ++d) {
        Integer c = d == 0 ? Integer(1) : Integer(0);
        for (int k = 1; k <= std::min(d, 2); ++k)
            c -= den[k] * z.closed_form[d - k];
        z.closed_form.push_back(c);
    }
    return z;
}

}  // namespace wdlab
