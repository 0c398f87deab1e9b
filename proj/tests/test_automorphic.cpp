#include <gtest/gtest.h>

#include "wdlab/automorphic.hpp"

using namespace wdlab;

namespace {

constexpr HalfInt half(int twice) { return HalfInt::from_twice(twice); }

using Chi = SmoothCharacter;

// Iwasawa-Tate period sheaf, written out by hand.
std::map<int, PeriodEntry> expected_iwasawa(int n_max)
{
    std::map<int, PeriodEntry> m;
    for (int n = -n_max; n <= n_max; ++n) {
        if (n < 0)
            m[n] = CharEntry{Chi::norm(half(0)), 0};
        else if (n == 0)
            m[n] = CharEntry{Chi::ccf(), 0};
        else
            m[n] = CharEntry{Chi::norm(half(2)), 2 * n};
    }
    return m;
}

std::map<int, PeriodEntry> expected_iwasawa_normalized(int n_max)
{
    std::map<int, PeriodEntry> m;
    for (int n = -n_max; n <= n_max; ++n) {
        if (n < 0)
            m[n] = CharEntry{Chi::norm(half(-1)), -n};
        else if (n == 0)
            m[n] = CharEntry{Chi::ccf(half(-1)), 0};
        else
            m[n] = CharEntry{Chi::norm(half(1)), n};
    }
    return m;
}

}  // namespace

TEST(Automorphic, CharacterValues)
{
    EXPECT_EQ(Chi::norm(half(-1)).value_at_pi(4), Scalar(2));
    EXPECT_EQ(Chi::norm(half(2)).value_at_pi(3), Scalar(Rational(1, 3)));
    EXPECT_EQ(Chi::norm(half(0)).value_at_pi(5), Scalar(1));
    FieldCtx k(2);
    EXPECT_EQ(Chi::norm(half(1)).value_at_pi(2), k.sqrt_q().inverse());
    EXPECT_THROW(Chi::ccf().value_at_pi(2), std::invalid_argument);
    EXPECT_THROW(Chi::ccfx().value_at_pi(2), std::invalid_argument);
    EXPECT_EQ(Chi::norm(half(3)).inverse(), Chi::norm(half(-3)));
    EXPECT_EQ(Chi::ccf(half(1)).twisted(half(-1)), Chi::ccf());
}

TEST(Automorphic, IwasawaTable)
{
    for (int n_max = 1; n_max <= 6; ++n_max) {
        PeriodTable t = iwasawa_period_table(3, n_max);
        EXPECT_FALSE(t.normalized);
        EXPECT_EQ(t.components, expected_iwasawa(n_max));
    }
    PeriodTable t = iwasawa_period_table(3, 3);
    EXPECT_EQ(t.components.at(-3), (PeriodEntry{CharEntry{Chi::norm(half(0)), 0}}));
    EXPECT_EQ(t.components.at(0), (PeriodEntry{CharEntry{Chi::ccf(), 0}}));
    EXPECT_EQ(t.components.at(2), (PeriodEntry{CharEntry{Chi::norm(half(2)), 4}}));
}

TEST(Automorphic, NormalizedIwasawaTable)
{
    for (std::int64_t q : {2, 3, 4, 9})
        for (int n_max = 1; n_max <= 5; ++n_max) {
            PeriodTable t = iwasawa_normalized(q, n_max);
            EXPECT_TRUE(t.normalized);
            EXPECT_EQ(t.components, expected_iwasawa_normalized(n_max));
        }
}

TEST(Automorphic, DegreeTwistIsAnAction)
{
    PeriodTable t = iwasawa_period_table(5, 4);
    EXPECT_EQ(degree_twist(t, 0).components, t.components);
    for (int a : {-2, -1, 1, 3})
        for (int b : {-1, 2}) {
            auto lhs = degree_twist(degree_twist(t, a), b).components;
            auto rhs = degree_twist(t, a + b).components;
            EXPECT_EQ(lhs, rhs) << a << " " << b;
        }
    EXPECT_EQ(degree_twist(degree_twist(t, 1), -1).components, t.components);
}

TEST(Automorphic, DegreeTwistRejectsEisensteinEntries)
{
    EXPECT_THROW(degree_twist(hecke_period_normalized(2, 2), 1), std::invalid_argument);
}

TEST(Automorphic, HeckeTable)
{
    PeriodTable t = hecke_period_table(3, 4);
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(t.components.at(-n), (PeriodEntry{TorusEntry{TorusDatum::cind(Chi::norm(half(-2))), 2 * n}}));
        EXPECT_EQ(t.components.at(n), (PeriodEntry{TorusEntry{TorusDatum::cind(Chi::norm(half(2))), 2 * n}}));
    }
    EXPECT_TRUE(std::holds_alternative<OpaqueEntry>(t.components.at(0)));
}

TEST(Automorphic, HeckeRowsMirror)
{
    // Component -n carries the inverse character of component n in the same degree.
    PeriodTable t = hecke_period_table(7, 5);
    for (int n = 1; n <= 5; ++n) {
        auto a = std::get<TorusEntry>(t.components.at(n));
        auto b = std::get<TorusEntry>(t.components.at(-n));
        EXPECT_EQ(a.datum.second.inverse(), b.datum.second);
        EXPECT_EQ(a.datum.first, b.datum.first);
        EXPECT_EQ(a.degree, b.degree);
    }
}

TEST(Automorphic, NormalizedHeckeTable)
{
    PeriodTable t = hecke_period_normalized(2, 3);
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(t.components.at(-n),
                  (PeriodEntry{EisEntry{Parabolic::B, TorusDatum::cind(Chi::norm(half(-1))), n}}));
        EXPECT_EQ(t.components.at(n),
                  (PeriodEntry{EisEntry{Parabolic::Bbar, TorusDatum::cind(Chi::norm(half(1))), n}}));
    }
    EXPECT_EQ(t.components.at(0),
              (PeriodEntry{FiberEntry{"W_psi", EisEntry{Parabolic::B, TorusDatum::cind(Chi::norm(half(-1))), 0}}}));
}

TEST(Automorphic, UnfoldingRecoversUnnormalizedTable)
{
    for (int n_max = 1; n_max <= 6; ++n_max) {
        PeriodTable norm = hecke_period_normalized(3, n_max);
        PeriodTable raw = hecke_period_table(3, n_max);
        for (int n = -n_max; n <= n_max; ++n) {
            if (n == 0)
                continue;
            TorusEntry u = unfold_eisenstein(std::get<EisEntry>(norm.components.at(n)), n);
            EXPECT_EQ(PeriodEntry{u}, raw.components.at(n)) << n;
        }
    }
}

TEST(Automorphic, UnfoldingTwists)
{
    EisEntry e{Parabolic::B, {Chi::norm(half(0)), Chi::norm(half(0))}, 0};
    TorusEntry u = unfold_eisenstein(e, 2);
    EXPECT_EQ(u.datum.first, Chi::norm(half(1)));
    EXPECT_EQ(u.datum.second, Chi::norm(half(-1)));
    EXPECT_EQ(u.degree, -2);
    e.parabolic = Parabolic::Bbar;
    u = unfold_eisenstein(e, 2);
    EXPECT_EQ(u.datum.first, Chi::norm(half(-1)));
    EXPECT_EQ(u.datum.second, Chi::norm(half(1)));
    EXPECT_EQ(u.degree, 2);
}

TEST(Automorphic, DualTable)
{
    PeriodTable d = dual_period_table(iwasawa_normalized(3, 3));
    for (int n = 1; n <= 3; ++n) {
        EXPECT_EQ(d.components.at(n), (PeriodEntry{CharEntry{Chi::norm(half(1)), n}}));
        EXPECT_EQ(d.components.at(-n), (PeriodEntry{CharEntry{Chi::norm(half(-1)), n}}));
    }
    EXPECT_EQ(d.components.at(0), (PeriodEntry{CharEntry{Chi::ccf(half(1)), 0}}));
    EXPECT_THROW(dual_period_table(hecke_period_normalized(3, 2)), std::invalid_argument);
}

TEST(Automorphic, FunctionalEquation)
{
    for (std::int64_t q : {2, 3, 4})
        for (int n_max = 1; n_max <= 6; ++n_max) {
            Report r = period_fe_check(q, n_max);
            EXPECT_TRUE(r.overall) << q << " " << n_max;
            EXPECT_EQ(r.per_component.size(), std::size_t(2 * n_max + 1));
        }
}

TEST(Automorphic, FunctionalEquationDetectsMutations)
{
    PeriodTable s = iwasawa_normalized(3, 3);
    PeriodTable base = dual_period_table(s);
    ASSERT_TRUE(period_fe_check(s, base).overall);

    PeriodTable d = base;
    std::get<CharEntry>(d.components.at(2)).chi = Chi::norm(half(2));
    Report r = period_fe_check(s, d);
    EXPECT_FALSE(r.overall);
    EXPECT_FALSE(r.passed(2));
    EXPECT_TRUE(r.passed(1));

    d = base;
    std::get<CharEntry>(d.components.at(-1)).degree += 1;
    r = period_fe_check(s, d);
    EXPECT_FALSE(r.passed(-1));

    d = base;
    std::get<CharEntry>(d.components.at(0)).chi = Chi::ccf(half(3));
    EXPECT_FALSE(period_fe_check(s, d).passed(0));

    d = base;
    std::get<CharEntry>(d.components.at(0)).degree = 1;
    EXPECT_FALSE(period_fe_check(s, d).passed(0));
}

TEST(Automorphic, Rendering)
{
    std::string md = render_markdown(iwasawa_period_table(2, 2));
    EXPECT_NE(md.find("CcF @0"), std::string::npos);
    EXPECT_NE(md.find("| 2 |"), std::string::npos);
    md = render_markdown(hecke_period_normalized(2, 1));
    EXPECT_NE(md.find("W_psi"), std::string::npos);
}
