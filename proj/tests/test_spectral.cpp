#include <gtest/gtest.h>

#include "wdlab/spectral.hpp"
#include "wdlab/sym_power.hpp"

using namespace wdlab;

namespace {

const LaurentPoly T = LaurentPoly::T();

// The decomposition of the Iwasawa-Tate L-sheaf written out by hand.
GradedTable expected_lsheaf(std::int64_t q, int n_max)
{
    GradedTable t;
    t.q = q;
    t.n_max = n_max;
    t.weights[0] = {{FgModule(1), 0}};
    for (int n = 1; n <= n_max; ++n) {
        t.weights[-n] = {{FgModule::cyclic(T - 1), 0}};
        t.weights[n] = {{FgModule::cyclic(T.scaled(Scalar(q)) - 1), 2 * n}};
    }
    return t;
}

GradedTable expected_normalized(std::int64_t q, int n_max)
{
    FieldCtx k(q);
    GradedTable t;
    t.q = q;
    t.n_max = n_max;
    t.normalized = true;
    t.weights[0] = {{FgModule(1), 0}};
    for (int n = 1; n <= n_max; ++n) {
        t.weights[-n] = {{FgModule::cyclic(T - k.sqrt_q()), n}};
        t.weights[n] = {{FgModule::cyclic(T - k.sqrt_q().inverse()), n}};
    }
    return t;
}

}  // namespace

TEST(Spectral, UniversalComplex)
{
    Complex c = universal_complex(3, Component::Triv);
    EXPECT_EQ(c.ranks(), (std::map<int, std::size_t>{{0, 1}, {1, 2}, {2, 1}}));
    EXPECT_EQ(c.diff(0), (PolyMatrix{{T - 1}, {LaurentPoly(0)}}));
    EXPECT_EQ(c.diff(1), (PolyMatrix{{LaurentPoly(0), T.scaled(Scalar(3)) - 1}}));
    GradedCohomology h = c.cohomology();
    EXPECT_EQ(h.at(1), FgModule::cyclic(T - 1));
    EXPECT_EQ(h.at(2), FgModule::cyclic(T.scaled(Scalar(3)) - 1));
    EXPECT_TRUE(universal_complex(3, Component::Nontrivial).is_zero());
}

TEST(Spectral, UniversalComplexIsTheWDComplexOfPhiEqualsT)
{
    for (std::int64_t q : {2, 3, 4}) {
        WDRep rep{Base::Ring, q, PolyMatrix{{T}}, PolyMatrix(1, 1), std::nullopt};
        EXPECT_EQ(wd_complex(rep).cohomology(), universal_complex(q, Component::Triv).cohomology());
        WDRep dual{Base::Ring, q, PolyMatrix{{T.unit_inverse()}}, PolyMatrix(1, 1), std::nullopt};
        EXPECT_EQ(wd_complex(dual).cohomology(), universal_complex(q, Component::Triv, StdRep::Dual).cohomology());
    }
}

TEST(Spectral, Charts)
{
    ChartData u1 = chart_compute(Chart::U1, 2, 3);
    EXPECT_EQ(u1.pieces.at(0).cohomology().at(0), FgModule(1));
    GradedCohomology h1 = u1.pieces.at(1).cohomology();
    ASSERT_EQ(h1.size(), 1u);
    EXPECT_EQ(h1.at(2), FgModule::cyclic(T.scaled(Scalar(2)) - 1));
    EXPECT_EQ(u1.pieces.count(-1), 0u);

    ChartData uq = chart_compute(Chart::Uq, 2, 3);
    GradedCohomology h2 = uq.pieces.at(-2).cohomology();
    ASSERT_EQ(h2.size(), 1u);
    EXPECT_EQ(h2.at(0), FgModule::cyclic(T - 1));
    EXPECT_EQ(uq.pieces.at(0).cohomology().at(0), FgModule(1));
    EXPECT_THROW(chart_compute(Chart::U1, 2, 0), std::invalid_argument);
}

TEST(Spectral, ChartPiecesMatchSymmetricPowerOracle)
{
    ChartData u1 = chart_compute(Chart::U1, 3, 4), uq = chart_compute(Chart::Uq, 3, 4);
    for (int n = 1; n <= 4; ++n) {
        EXPECT_EQ(u1.pieces.at(n).cohomology(), sym_power_oracle(e_cyc(3).shift(-1), n).cohomology());
        EXPECT_EQ(uq.pieces.at(-n).cohomology(), sym_power_oracle(e_triv().dual(), n).cohomology());
    }
}

TEST(Spectral, GlueReproducesDecomposition)
{
    for (std::int64_t q : {2, 3, 4})
        for (int n_max : {1, 3, 5}) {
            GradedTable t = iwasawa_lsheaf_table(q, n_max);
            EXPECT_EQ(t.weights, expected_lsheaf(q, n_max).weights) << render_markdown(t);
        }
    GradedTable t = iwasawa_lsheaf_table(3, 3);
    EXPECT_EQ(t.at(2), (std::vector<TableEntry>{{FgModule::cyclic(T.scaled(Scalar(3)) - 1), 4}}));
    EXPECT_EQ(t.at(-2), (std::vector<TableEntry>{{FgModule::cyclic(T - 1), 0}}));
}

TEST(Spectral, GlueIsIndependentOfBaseChart)
{
    for (StdRep rep : {StdRep::Std, StdRep::Dual}) {
        ChartData u1 = chart_compute(Chart::U1, 5, 4, rep), uq = chart_compute(Chart::Uq, 5, 4, rep);
        EXPECT_EQ(glue(u1, uq).weights, glue(uq, u1).weights);
    }
}

TEST(Spectral, GlueDetectsDisagreement)
{
    ChartData u1 = chart_compute(Chart::U1, 3, 2), uq = chart_compute(Chart::Uq, 3, 2);
    // A piece supported at T = 5 lies in the overlap and must appear on both charts.
    u1.pieces[-1] = Complex::two_term(Base::Ring, T - 5, 0);
    EXPECT_THROW(glue(u1, uq), std::domain_error);
    EXPECT_THROW(glue(u1, u1), std::invalid_argument);
}

TEST(Spectral, RamifiedComponentIsEmpty)
{
    GradedTable t = iwasawa_lsheaf_table(3, 3, StdRep::Std, Component::Nontrivial);
    EXPECT_EQ(t.component, "nontrivial");
    EXPECT_TRUE(t.weights.empty());
}

TEST(Spectral, NormalizationMatchesComparisonTable)
{
    for (std::int64_t q : {2, 3, 4})
        for (int n_max = 1; n_max <= 5; ++n_max) {
            GradedTable norm = normalize_table(iwasawa_lsheaf_table(q, n_max));
            EXPECT_EQ(norm.weights, expected_normalized(q, n_max).weights) << render_markdown(norm);
        }
    // q = 4: the square root is rational.
    GradedTable norm = normalize_table(iwasawa_lsheaf_table(4, 1));
    EXPECT_EQ(norm.at(-1), (std::vector<TableEntry>{{FgModule::cyclic(T - 2), 1}}));
    EXPECT_EQ(norm.at(1), (std::vector<TableEntry>{{FgModule::cyclic(T - Scalar(Rational(1, 2))), 1}}));
}

TEST(Spectral, NormalizeRoundTrip)
{
    for (StdRep rep : {StdRep::Std, StdRep::Dual}) {
        GradedTable t = iwasawa_lsheaf_table(7, 4, rep);
        GradedTable back = denormalize_table(normalize_table(t));
        EXPECT_EQ(back.weights, t.weights);
        EXPECT_FALSE(back.normalized);
    }
    GradedTable t = iwasawa_lsheaf_table(7, 2);
    EXPECT_THROW(denormalize_table(t), std::invalid_argument);
    EXPECT_THROW(normalize_table(normalize_table(t)), std::invalid_argument);
}

TEST(Spectral, DualTable)
{
    // Phi = T^-1: E_triv is supported at 1 and E_cyc at q; the Z-weights are
    // the G_gr weights negated.
    GradedTable t = iwasawa_lsheaf_table(3, 2, StdRep::Dual);
    EXPECT_EQ(t.at(1), (std::vector<TableEntry>{{FgModule::cyclic(T - 1), 0}}));
    EXPECT_EQ(t.at(-1), (std::vector<TableEntry>{{FgModule::cyclic(T - 3), 2}}));
    EXPECT_EQ(t.gr_weight(1), -1);
}

TEST(Spectral, FunctionalEquation)
{
    for (std::int64_t q : {2, 3, 4, 5}) {
        Report r = functional_equation_check(q, 5);
        EXPECT_TRUE(r.overall);
        EXPECT_EQ(r.per_component.size(), 11u);
    }
}

TEST(Spectral, FunctionalEquationMutations)
{
    GradedTable s = normalize_table(iwasawa_lsheaf_table(2, 4));
    GradedTable d = normalize_table(iwasawa_lsheaf_table(2, 4, StdRep::Dual));
    ASSERT_TRUE(functional_equation_check(s, d, 4).overall);
    for (int chi = -4; chi <= 4; ++chi) {
        GradedTable bad = d;
        bad.weights[chi][0].degree += 1;
        Report r = functional_equation_check(s, bad, 4);
        EXPECT_FALSE(r.overall);
        EXPECT_FALSE(r.passed(-d.gr_weight(chi)));

        bad = d;
        auto& e = bad.weights[chi][0];
        e.module = e.module.is_torsion() ? FgModule::cyclic(T - 7) : FgModule(2);
        EXPECT_FALSE(functional_equation_check(s, bad, 4).overall);
    }
    GradedTable moved = d;
    moved.weights[5] = moved.weights[1];
    moved.weights.erase(1);
    EXPECT_FALSE(functional_equation_check(s, moved, 4).overall);
    EXPECT_THROW(functional_equation_check(s, s, 4), std::invalid_argument);
}

TEST(Spectral, HeckeGradedPiece)
{
    WDRep triv{Base::Field, 3, PolyMatrix::identity(2), PolyMatrix(2, 2), std::nullopt};
    GradedCohomology h = hecke_graded_piece(triv, 2);
    EXPECT_EQ(h.at(0), FgModule(3));
    EXPECT_EQ(h.at(1), FgModule(4));
    EXPECT_EQ(h.at(2), FgModule(1));
    EXPECT_EQ(h.size(), 3u);

    WDRep st = steinberg_rep(3);
    for (int n = 1; n <= 4; ++n)
        EXPECT_TRUE(hecke_graded_piece(st, n).empty());

    HVector h1 = wd_cohomology(triv);
    GradedCohomology piece = hecke_graded_piece(triv, 1);
    for (int i = 0; i < 3; ++i)
        EXPECT_EQ(piece.count(i) ? piece.at(i) : FgModule(), h1[i]);
    EXPECT_THROW(hecke_graded_piece(character_rep(3, Scalar(1)), 2), std::invalid_argument);
    EXPECT_THROW(hecke_graded_piece(triv, 5), std::invalid_argument);
}

TEST(Spectral, HeckeGradedPieceEulerCharacteristic)
{
    std::mt19937_64 rng(77);
    for (int trial = 0; trial < 10; ++trial) {
        WDRep phi = random_wd_rep(2, 2, rng);
        for (int n = 1; n <= 3; ++n) {
            long chi = 0;
            for (auto& [d, m] : hecke_graded_piece(phi, n))
                chi += (d % 2 == 0 ? 1 : -1) * static_cast<long>(m.free_rank());
            EXPECT_EQ(chi, sym_power_euler(4, 4, n));
            EXPECT_EQ(chi, 0);
        }
    }
}

TEST(Spectral, HeckeTokens)
{
    HeckeLTable t = hecke_lsheaf_table(3, 4);
    EXPECT_TRUE(std::holds_alternative<SpecEis>(t.rows.at(-2).token));
    auto& f0 = std::get<SpecFiber>(t.rows.at(0).token);
    EXPECT_EQ(f0.sub, "O_Par_GL2");
    auto& f3 = std::get<SpecFiber>(t.rows.at(3).token);
    EXPECT_EQ(f3.sub, "SymPiece(3)");
    ASSERT_TRUE(f3.sym_piece.has_value());
    EXPECT_EQ(std::get<SpecEis>(t.rows.at(-1).token).parabolic, Parabolic::Bbar);

    HeckeLTable n = hecke_lsheaf_normalized(4, 4);
    auto e = std::get<SpecEis>(n.rows.at(-2).token);
    EXPECT_EQ(e, (SpecEis{Parabolic::Bbar, Scalar(2), 2}));
    auto p = std::get<SpecEis>(n.rows.at(3).token);
    EXPECT_EQ(p, (SpecEis{Parabolic::B, Scalar(Rational(1, 2)), 3}));
    EXPECT_TRUE(n.rows.at(3).via_fe);
    EXPECT_EQ(std::get<SpecFiber>(n.rows.at(0).token).quotient, (SpecEis{Parabolic::Bbar, Scalar(2), 0}));
}
