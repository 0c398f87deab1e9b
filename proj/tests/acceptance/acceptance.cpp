// Acceptance run: one PASS/FAIL line per criterion, each with a pinned time limit.
// Usage: acceptance [--expect-fail N,...]; exit 0 iff exactly the listed criteria fail.

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <numeric>
#include <set>
#include <sstream>
#include <string>

#include "../support.hpp"
#include "commands.hpp"
#include "wdlab/ffcurve.hpp"
#include "wdlab/matcher.hpp"
#include "wdlab/multiplicity.hpp"
#include "wdlab/sym_power.hpp"

using namespace wdlab;

namespace {

const LaurentPoly T = LaurentPoly::T();

// Collects the first few failures of a criterion.
struct Verdict
{
    std::vector<std::string> failures;
    void require(bool ok, const std::string& what)
    {
        if (!ok && failures.size() < 3)
            failures.push_back(what);
        else if (!ok)
            failures.push_back("");
    }
    std::string summary() const
    {
        std::string s;
        for (std::size_t i = 0; i < failures.size() && i < 3; ++i)
            s += (i ? "; " : "") + failures[i];
        if (failures.size() > 3)
            s += "; +" + std::to_string(failures.size() - 3) + " more";
        return s;
    }
};

std::string qs(std::int64_t q, int n)
{
    return "q=" + std::to_string(q) + " n=" + std::to_string(n);
}

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

void criterion1(Verdict& v)
{
    for (std::int64_t q : {2, 3, 4}) {
        GradedTable got = iwasawa_lsheaf_table(q, 5), want = expected_lsheaf(q, 5);
        for (int n = -5; n <= 5; ++n)
            v.require(got.at(n) == want.at(n), "weight " + std::to_string(n) + " at q=" + std::to_string(q));
        v.require(got.weights.size() == want.weights.size(), "extra weights at q=" + std::to_string(q));
    }
}

void criterion2(Verdict& v)
{
    for (std::int64_t q : {2, 3, 4}) {
        cli::Options o;
        o.q = q;
        o.n_max = 5;
        cli::Outcome out = cli::cmd_iwasawa(o, false);
        v.require(out.ok, "cmd_iwasawa fails at q=" + std::to_string(q));
        FieldCtx k(q);
        GradedTable l = normalize_table(iwasawa_lsheaf_table(q, 5));
        GradedTable translated = translate_period_table(iwasawa_normalized(q, 5));
        for (int n = 1; n <= 5; ++n) {
            std::vector<TableEntry> minus{{FgModule::cyclic(T - k.sqrt_q()), n}};
            std::vector<TableEntry> plus{{FgModule::cyclic(T - k.sqrt_q().inverse()), n}};
            v.require(l.at(-n) == minus && translated.at(-n) == minus, "weight -n at " + qs(q, n));
            v.require(l.at(n) == plus && translated.at(n) == plus, "weight n at " + qs(q, n));
        }
        // Whittaker rule at n = 0: the C_c^inf(F) token becomes the free module.
        auto zero = std::get<CharEntry>(iwasawa_normalized(q, 5).components.at(0));
        v.require(zero.chi.kind == SmoothCharacter::Kind::CcF, "component 0 is not a C_c^inf(F) token");
        v.require(translated.at(0) == std::vector<TableEntry>{{FgModule(1), 0}}, "Whittaker rule did not fire");
    }
}

void criterion3(Verdict& v)
{
    for (std::int64_t q : {2, 3, 4}) {
        v.require(functional_equation_check(q, 5).overall, "spectral FE at q=" + std::to_string(q));
        v.require(period_fe_check(q, 5).overall, "automorphic FE at q=" + std::to_string(q));

        GradedTable s = normalize_table(iwasawa_lsheaf_table(q, 5));
        GradedTable d = normalize_table(iwasawa_lsheaf_table(q, 5, StdRep::Dual));
        v.require(functional_equation_check(s, d, 5).overall, "unmutated spectral tables at q=" + std::to_string(q));
        for (auto& [w, entries] : d.weights)
            for (std::size_t i = 0; i < entries.size(); ++i) {
                GradedTable m = d;
                m.weights[w][i].degree += 1;
                v.require(!functional_equation_check(s, m, 5).overall, "degree mutation undetected at " + qs(q, w));
                m = d;
                m.weights[w][i].module = direct_sum(m.weights[w][i].module, FgModule::cyclic(T - 2));
                v.require(!functional_equation_check(s, m, 5).overall, "module mutation undetected at " + qs(q, w));
            }

        PeriodTable ps = iwasawa_normalized(q, 5), pd = dual_period_table(ps);
        for (auto& [n, entry] : pd.components) {
            PeriodTable m = pd;
            std::get<CharEntry>(m.components[n]).degree += 1;
            v.require(!period_fe_check(ps, m).overall, "period degree mutation undetected at " + qs(q, n));
            m = pd;
            auto& chi = std::get<CharEntry>(m.components[n]).chi;
            chi = chi.twisted(HalfInt::integer(1));
            v.require(!period_fe_check(ps, m).overall, "period character mutation undetected at " + qs(q, n));
        }
    }
}

void criterion4(Verdict& v)
{
    std::mt19937_64 rng(4);
    int count = 0;
    for (std::int64_t q : {2, 3, 4})
        for (int i = 0; i < 20; ++i, ++count) {
            WDRep rep = random_wd_rep(q, 1 + i % 4, rng);
            HVector h = wd_cohomology(rep), hd = wd_cohomology(tate_dual_rep(rep));
            for (int k = 0; k < 3; ++k)
                v.require(h[k].free_rank() == hd[2 - k].free_rank(), "duality at rep " + std::to_string(count));
            v.require(euler_char(rep) == 0, "Euler characteristic at rep " + std::to_string(count));
        }
    v.require(count >= 50, "fewer than 50 representations");
    for (std::int64_t q : {2, 3, 5}) {
        HVector triv = wd_cohomology(character_rep(q, Scalar(1)));
        HVector cyc = wd_cohomology(character_rep(q, Scalar(q).inverse()));
        v.require(triv[0].free_rank() == 1 && triv[1].free_rank() == 1 && triv[2].free_rank() == 0, "trivial h-vector");
        v.require(cyc[0].free_rank() == 0 && cyc[1].free_rank() == 1 && cyc[2].free_rank() == 1, "cyclotomic h-vector");
    }
}

// The complex specialized at T = c, over K.
Complex at_point(const Complex& x, const Scalar& c)
{
    std::map<int, PolyMatrix> diffs;
    for (auto& [d, r] : x.ranks())
        if (x.ranks().count(d + 1)) {
            PolyMatrix m = x.diff(d);
            for (std::size_t i = 0; i < m.rows(); ++i)
                for (std::size_t j = 0; j < m.cols(); ++j)
                    m(i, j) = LaurentPoly(m(i, j).evaluate(c));
            diffs[d] = m;
        }
    return Complex(Base::Field, x.ranks(), diffs);
}

void criterion5(Verdict& v)
{
    for (std::int64_t q : {2, 3}) {
        std::vector<std::pair<std::string, Complex>> inputs{{"E_triv", e_triv()}, {"E_cyc[-1]", e_cyc(q).shift(-1)}};
        for (const Scalar& c : {Scalar(1), Scalar(q).inverse(), Scalar(2)}) {
            inputs.emplace_back("E_triv at " + c.to_string(), at_point(e_triv(), c));
            inputs.emplace_back("E_cyc[-1] at " + c.to_string(), at_point(e_cyc(q).shift(-1), c));
        }
        for (auto& [name, e] : inputs)
            for (int n = 1; n <= 4; ++n) {
                Complex fast = sym_power_fast(e, n), oracle = sym_power_oracle(e, n);
                v.require(fast.cohomology() == oracle.cohomology(), name + " Sym^" + std::to_string(n));
                // Every permutation commutes with d on every basis tensor.
                TensorPower tp(e, n);
                std::vector<std::size_t> sigma(n);
                std::iota(sigma.begin(), sigma.end(), 0);
                do {
                    for (auto& [deg, keys] : tp.basis())
                        for (auto& key : keys) {
                            auto b = TensorPower::basis_vector(key);
                            v.require(tp.act(sigma, tp.differential(b)) == tp.differential(tp.act(sigma, b)),
                                      name + " action vs d");
                        }
                } while (std::next_permutation(sigma.begin(), sigma.end()));
            }
    }
}

void criterion6(Verdict& v)
{
    for (std::int64_t q : {2, 3, 4}) {
        cli::Options o;
        o.q = q;
        o.n_max = 4;
        v.require(cli::cmd_hecke(o).ok, "cmd_hecke fails at q=" + std::to_string(q));
        HeckeLTable l = hecke_lsheaf_normalized(q, 4);
        PeriodTable p = hecke_period_normalized(q, 4);
        for (int n = 1; n <= 4; ++n)
            v.require(l.rows.at(n).via_fe, "row " + std::to_string(n) + " not routed through the FE");
        auto* fiber = std::get_if<SpecFiber>(&l.rows.at(0).token);
        auto* pfiber = std::get_if<FiberEntry>(&p.components.at(0));
        v.require(fiber && pfiber && fiber->sub == "O_Par_GL2" && pfiber->sub == "W_psi",
                  "n=0 fiber sequence first terms");
        v.require(fiber && pfiber && fiber->quotient.parabolic == opposite(pfiber->quotient.parabolic) &&
                      fiber->quotient.point == cft_point(q, pfiber->quotient.datum.second).t_value &&
                      fiber->quotient.degree == pfiber->quotient.degree,
                  "n=0 fiber sequence quotients");
        PeriodTable raw = hecke_period_table(q, 4);
        for (int n = -4; n <= 4; ++n)
            if (n != 0)
                v.require(PeriodEntry{unfold_eisenstein(std::get<EisEntry>(p.components.at(n)), n)} ==
                              raw.components.at(n),
                          "torus datum at n=" + std::to_string(n));
    }
}

void criterion7(Verdict& v)
{
    for (auto g : {symmetric_group_3(), symmetric_group_4(), dihedral_group_4(), quaternion_group()}) {
        auto subs = all_subgroups(g.group);
        for (auto& a : subs)
            for (auto& b : subs)
                v.require(mackey_check(g.group, g.characters, a, b).holds(), "Mackey in " + g.name);
    }
    NamedGroup s3 = symmetric_group_3();
    const FiniteGroup& g = s3.group;
    Subgroup e{g.identity()};
    Subgroup h12 = generated_subgroup(g, {g.index_of({1, 0, 2})});
    Subgroup h123 = generated_subgroup(g, {g.index_of({1, 2, 0})});
    std::size_t dc = double_coset_count(g, h12, h12);
    std::size_t ps = prasad_sum(g, e, {h12, h123});
    long fd_std = fixed_dim(g, s3.characters, 2, h12), fd_sign = fixed_dim(g, s3.characters, 1, h12);
    v.require(dc == 2, "double_coset_count = " + std::to_string(dc) + ", listed 2");
    v.require(ps == 4, "prasad_sum(Z={e}, [<(12)>, <(123)>]) = " + std::to_string(ps) +
                           " (3 + 2), listed 4 (which is #(H\\G/H) summed)");
    v.require(fd_std == 1, "fixed_dim(standard) = " + std::to_string(fd_std) + ", listed 1");
    v.require(fd_sign == 0, "fixed_dim(sign) = " + std::to_string(fd_sign) + ", listed 0");
}

void criterion8(Verdict& v)
{
    CurveData p1 = CurveData::p1();
    for (std::int64_t q : {2, 3, 5}) {
        Scalar s = FieldCtx(q).sqrt_q();
        for (int d = -10; d <= 10; ++d) {
            Scalar want(1);
            for (int i = 0; i < std::abs(d) + 1; ++i)
                want = want * s;
            v.require(period_norm(p1, q, {d, 0}) == want, "P^norm(O(" + std::to_string(d) + ")) at q=" + std::to_string(q));
        }
        v.require(fe_symmetry_check(p1, q, -10, 10).overall, "P^1 symmetry");
        v.require(fe_symmetry_check(elliptic_example(10), q, -10, 10).overall, "elliptic symmetry");
        std::mt19937_64 rng(q);
        for (int i = 0; i < 10; ++i) {
            CurveData c = synthetic_curve(1, 1 + i % 3, 6, rng);
            v.require(riemann_roch_check(c).overall && fe_symmetry_check(c, q, -6, 6).overall, "synthetic genus 1");
        }
        ZetaSeries z = zeta_series_p1(q, 10);
        Integer qq(static_cast<long>(q));
        for (int d = 0; d <= 10; ++d) {
            Integer geometric = 0, p = 1;   // Σ_{k <= d} q^k
            for (int k = 0; k <= d; ++k, p *= qq)
                geometric += p;
            v.require(z.coefficients[d] == geometric, "zeta coefficient t^" + std::to_string(d));
        }
    }
}

void criterion9(Verdict& v)
{
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<int> dim(1, 4);
    for (int trial = 0; trial < 100; ++trial) {
        PolyMatrix m(dim(rng), dim(rng));
        for (std::size_t i = 0; i < m.rows(); ++i)
            for (std::size_t j = 0; j < m.cols(); ++j)
                m(i, j) = support::random_small_poly(rng, Base::Ring);
        SmithForm s = smith_normal_form(m);
        std::string tag = "matrix " + std::to_string(trial);
        v.require(s.U * m * s.V == s.D, tag + ": U M V != D");
        v.require(determinant(s.U).is_unit() && determinant(s.V).is_unit(), tag + ": non-unit transform");
        std::size_t k = std::min(m.rows(), m.cols());
        for (std::size_t i = 0; i < s.D.rows(); ++i)
            for (std::size_t j = 0; j < s.D.cols(); ++j)
                v.require(i == j || s.D(i, j).is_zero(), tag + ": off-diagonal entry");
        for (std::size_t i = 0; i + 1 < k; ++i)
            v.require(s.D(i + 1, i + 1).is_zero() || divides(s.D(i, i), s.D(i + 1, i + 1)), tag + ": divisibility");

        auto [p, pinv] = support::random_unimodular(rng, m.rows(), Base::Ring);
        auto [r, rinv] = support::random_unimodular(rng, m.cols(), Base::Ring);
        v.require(module_from_presentation(m.rows(), p * m * r) == module_from_presentation(m.rows(), m),
                  tag + ": presentation invariance");
    }
}

struct Criterion
{
    int id;
    std::string title;
    double limit_seconds;
    std::function<void(Verdict&)> body;
};

}  // namespace

int main(int argc, char** argv)
{
    std::set<int> expected_failures;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            for (std::string item; std::getline(ss, item, ',');)
                expected_failures.insert(std::stoi(item));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N,...]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria{
        {1, "Iwasawa-Tate L-sheaf table, q in {2,3,4}, n_max 5", 5, criterion1},
        {2, "normalized Iwasawa-Tate matching and Whittaker rule", 5, criterion2},
        {3, "spectral and automorphic functional equations with mutations", 5, criterion3},
        {4, "Weil-Deligne duality suite, 60 random reps", 10, criterion4},
        {5, "Sym^n fast vs oracle, Koszul action vs d", 30, criterion5},
        {6, "Hecke matching, n_max 4", 5, criterion6},
        {7, "multiplicity: Mackey over S3 S4 D4 Q8 lattices, S3 fixture 2 4 1 0", 10, criterion7},
        {8, "curve periods, symmetry and P^1 zeta to t^10", 2, criterion8},
        {9, "Smith normal form on 100 matrices, presentation invariance", 10, criterion9},
    };

    std::set<int> failed;
    for (auto& c : criteria) {
        Verdict v;
        auto start = std::chrono::steady_clock::now();
        try {
            c.body(v);
        } catch (const std::exception& e) {
            v.failures.insert(v.failures.begin(), std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs >= c.limit_seconds)
            v.failures.insert(v.failures.begin(), "over the time limit");
        bool ok = v.failures.empty();
        if (!ok)
            failed.insert(c.id);
        std::ostringstream line;
        line.precision(3);
        line << std::fixed << (ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title << " (" << secs
             << "s, limit " << c.limit_seconds << "s)";
        if (!ok)
            line << " -- " << v.summary();
        std::cout << line.str() << std::endl;
    }
    std::cout << "summary: " << criteria.size() - failed.size() << " passed, " << failed.size() << " failed";
    if (!expected_failures.empty()) {
        std::cout << " (expected to fail:";
        for (int id : expected_failures)
            std::cout << " " << id;
        std::cout << ")";
    }
    std::cout << std::endl;
    return failed == expected_failures ? 0 : 1;
}
