#include "wdlab/module.hpp"

#include <algorithm>
#include <optional>

namespace wdlab {

namespace {

// Entry of D[t.., t..] with least span; ties broken by normalized form, then position.
std::optional<std::pair<std::size_t, std::size_t>> choose_pivot(const PolyMatrix& d, std::size_t t)
{
    std::optional<std::pair<std::size_t, std::size_t>> best;
    LaurentPoly best_norm;
    for (std::size_t i = t; i < d.rows(); ++i)
        for (std::size_t j = t; j < d.cols(); ++j) {
            if (d(i, j).is_zero())
                continue;
            LaurentPoly norm = normalize_unit(d(i, j));
            if (!best || norm.compare(best_norm) < 0) {
                best = {i, j};
                best_norm = std::move(norm);
            }
        }
    return best;
}

struct SmithWork
{
    PolyMatrix U, D, V;

    void swap_rows(std::size_t a, std::size_t b)
    {
        D.swap_rows(a, b);
        U.swap_rows(a, b);
    }
    void swap_cols(std::size_t a, std::size_t b)
    {
        D.swap_cols(a, b);
        V.swap_cols(a, b);
    }
    void add_row(std::size_t dst, std::size_t src, const LaurentPoly& c)
    {
        D.add_row_multiple(dst, src, c);
        U.add_row_multiple(dst, src, c);
    }
    void add_col(std::size_t dst, std::size_t src, const LaurentPoly& c)
    {
        D.add_col_multiple(dst, src, c);
        V.add_col_multiple(dst, src, c);
    }

    // Clears row and column t below/right of the pivot. Returns false when a
    // remainder forced a pivot change and the caller must retry.
    bool clear_cross(std::size_t t)
    {
        for (std::size_t i = t + 1; i < D.rows(); ++i) {
            if (D(i, t).is_zero())
                continue;
            auto [quot, rem] = divmod(D(i, t), D(t, t));
            add_row(i, t, -quot);
            if (!rem.is_zero()) {
                swap_rows(i, t);
                return false;
            }
        }
        for (std::size_t j = t + 1; j < D.cols(); ++j) {
            if (D(t, j).is_zero())
                continue;
            auto [quot, rem] = divmod(D(t, j), D(t, t));
            add_col(j, t, -quot);
            if (!rem.is_zero()) {
                swap_cols(j, t);
                return false;
            }
        }
        return true;
    }

    // Makes the pivot divide the remaining block; false if a row was folded in.
    bool enforce_divisibility(std::size_t t)
    {
        for (std::size_t i = t + 1; i < D.rows(); ++i)
            for (std::size_t j = t + 1; j < D.cols(); ++j)
                if (!divides(D(t, t), D(i, j))) {
                    add_row(t, i, LaurentPoly(1));
                    return false;
                }
        return true;
    }
};

}  // namespace

SmithForm smith_normal_form(const PolyMatrix& m)
{
    SmithWork w{PolyMatrix::identity(m.rows()), m, PolyMatrix::identity(m.cols())};
    const std::size_t limit = std::min(m.rows(), m.cols());
    for (std::size_t t = 0; t < limit; ++t) {
        auto pivot = choose_pivot(w.D, t);
        if (!pivot)
            break;
        w.swap_rows(t, pivot->first);
        w.swap_cols(t, pivot->second);
        while (!(w.clear_cross(t) && w.enforce_divisibility(t))) {
        }
        LaurentPoly unit = exact_div(w.D(t, t), normalize_unit(w.D(t, t)));
        LaurentPoly unit_inv = unit.unit_inverse();
        w.D.scale_row(t, unit_inv);
        w.U.scale_row(t, unit_inv);
    }
    return {std::move(w.U), std::move(w.D), std::move(w.V)};
}

std::vector<LaurentPoly> invariant_factors(const PolyMatrix& m)
{
    SmithForm s = smith_normal_form(m);
    std::vector<LaurentPoly> out;
    for (std::size_t i = 0; i < std::min(m.rows(), m.cols()); ++i)
        if (!s.D(i, i).is_zero())
            out.push_back(s.D(i, i));
    return out;
}

FgModule::FgModule(std::size_t free_rank, const std::vector<LaurentPoly>& torsion) : free_rank_(free_rank)
{
    PolyMatrix rels(torsion.size(), torsion.size());
    for (std::size_t i = 0; i < torsion.size(); ++i) {
        if (torsion[i].is_zero())
            throw std::invalid_argument("zero torsion generator; use the free rank instead");
        rels(i, i) = torsion[i];
    }
    for (auto& f : invariant_factors(rels))
        if (!f.is_unit())
            torsion_.push_back(f);
}

std::string FgModule::to_string() const
{
    if (is_zero())
        return "0";
    std::string out;
    if (free_rank_ > 0)
        out = free_rank_ == 1 ? "R" : "R^" + std::to_string(free_rank_);
    for (auto& f : torsion_) {
        if (!out.empty())
            out += " + ";
        out += "R/(" + f.to_string() + ")";
    }
    return out;
}

FgModule module_from_presentation(std::size_t gens, const PolyMatrix& rels)
{
    if (rels.cols() > 0 && rels.rows() != gens)
        throw std::invalid_argument("relation matrix must have one row per generator");
    if (rels.cols() == 0)
        return FgModule(gens);
    auto factors = invariant_factors(rels);
    std::vector<LaurentPoly> torsion;
    for (auto& f : factors)
        if (!f.is_unit())
            torsion.push_back(f);
    FgModule m(gens - factors.size(), torsion);
    return m;
}

FgModule direct_sum(const FgModule& a, const FgModule& b)
{
    std::vector<LaurentPoly> torsion = a.torsion();
    torsion.insert(torsion.end(), b.torsion().begin(), b.torsion().end());
    return FgModule(a.free_rank() + b.free_rank(), torsion);
}

FgModule localize_away(const FgModule& m, const std::vector<Scalar>& points)
{
    std::vector<LaurentPoly> torsion;
    for (auto f : m.torsion()) {
        for (auto& c : points) {
            LaurentPoly lin = LaurentPoly::linear(c);
            while (!f.is_unit() && divides(lin, f))
                f = exact_div(f, lin);
        }
        if (!f.is_unit())
            torsion.push_back(f);
    }
    return FgModule(m.free_rank(), torsion);
}

FgModule substitute_scale(const FgModule& m, const Scalar& c)
{
    std::vector<LaurentPoly> torsion;
    for (auto& f : m.torsion())
        torsion.push_back(f.substitute_scale(c));
    return FgModule(m.free_rank(), torsion);
}

namespace {

std::vector<Integer> divisors(Integer n)
{
    if (n < 0)
        n = -n;
    std::vector<Integer> out;
    for (Integer d = 1; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            if (d * d != n)
                out.push_back(n / d);
        }
    return out;
}

// One root of a polynomial with rational coefficients, by the rational root test.
std::optional<Scalar> rational_root(const LaurentPoly& f)
{
    Integer lcm = 1;
    for (auto& [e, c] : f.terms()) {
        if (!c.is_rational())
            return std::nullopt;
        Integer den = c.a().get_den();
        mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), den.get_mpz_t());
    }
    Rational lead = f.leading_coefficient().a() * lcm, tail = f.coefficient(f.min_exponent()).a() * lcm;
    for (auto& p : divisors(tail.get_num()))
        for (auto& r : divisors(lead.get_num()))
            for (int sign : {1, -1}) {
                Rational x(sign * p, r);
                x.canonicalize();
                if (f.evaluate(Scalar(x)).is_zero())
                    return Scalar(x);
            }
    return std::nullopt;
}

}  // namespace

std::vector<Scalar> linear_support(const FgModule& m)
{
    std::vector<Scalar> points;
    for (auto& factor : m.torsion()) {
        LaurentPoly f = normalize_unit(factor);
        while (f.span() > 1) {
            auto root = rational_root(f);
            if (!root)
                throw std::domain_error("torsion factor does not split into linear factors: " + factor.to_string());
            points.push_back(*root);
            f = exact_div(f, LaurentPoly::linear(*root));
        }
        if (f.span() == 1)
            points.push_back(-normalize_unit(f).coefficient(0));
    }
    return points;
}

}  // namespace wdlab
