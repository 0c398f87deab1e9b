#pragma once

#include <random>

#include "wdlab/complex.hpp"

namespace wdlab::support {

inline LaurentPoly random_small_poly(std::mt19937_64& rng, Base base)
{
    std::uniform_int_distribution<long> coeff(-2, 2);
    if (base == Base::Field)
        return LaurentPoly(Scalar(coeff(rng)));
    std::uniform_int_distribution<int> expo(-1, 1);
    return LaurentPoly::monomial(Scalar(coeff(rng)), expo(rng)) + LaurentPoly::monomial(Scalar(coeff(rng)), expo(rng));
}

/// Product of random elementary matrices; the inverse is built alongside.
inline std::pair<PolyMatrix, PolyMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n, Base base)
{
    PolyMatrix p = PolyMatrix::identity(n), pinv = PolyMatrix::identity(n);
    if (n < 2)
        return {p, pinv};
    std::uniform_int_distribution<std::size_t> idx(0, n - 1);
    for (int step = 0; step < 6; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        LaurentPoly c = random_small_poly(rng, base);
        PolyMatrix e = PolyMatrix::identity(n), einv = PolyMatrix::identity(n);
        e(i, j) = c;
        einv(i, j) = -c;
        p = e * p;
        pinv = pinv * einv;
    }
    return {p, pinv};
}

/// Changes basis in every degree: d^i -> P_{i+1} d^i P_i^{-1}.
inline Complex random_base_change(std::mt19937_64& rng, const Complex& x)
{
    std::map<int, std::pair<PolyMatrix, PolyMatrix>> change;
    for (auto& [deg, r] : x.ranks())
        change.emplace(deg, random_unimodular(rng, r, x.base()));
    std::map<int, PolyMatrix> diffs;
    for (auto& [deg, r] : x.ranks()) {
        if (x.rank(deg + 1) == 0)
            continue;
        diffs.emplace(deg, change.at(deg + 1).first * x.diff(deg) * change.at(deg).second);
    }
    return Complex(x.base(), x.ranks(), diffs);
}

/// Direct sum of shifted two-term pieces [R --f--> R] and free units, then a
/// random base change. Cohomology is known from the pieces.
struct KnownComplex
{
    Complex complex;
    GradedCohomology cohomology;
};

inline KnownComplex random_known_complex(std::mt19937_64& rng, Base base, int pieces)
{
    const LaurentPoly t = LaurentPoly::T();
    std::uniform_int_distribution<int> deg(-1, 1), kind(0, 3);
    Complex x(base, {}, {});
    std::map<int, std::pair<std::size_t, std::vector<LaurentPoly>>> h;
    for (int k = 0; k < pieces; ++k) {
        int a = deg(rng);
        switch (kind(rng)) {
        case 0:
            x = direct_sum(x, Complex::unit(base).shift(-a));
            h[a].first += 1;
            break;
        case 1:
            x = direct_sum(x, Complex::two_term(base, LaurentPoly(Scalar(-2)), a));
            break;
        default:
            if (base == Base::Ring) {
                LaurentPoly f = kind(rng) % 2 ? t - 1 : (t - 1) * (t - Scalar(Rational(1, 3)));
                x = direct_sum(x, Complex::two_term(base, f, a));
                h[a + 1].second.push_back(f);
            } else {
                x = direct_sum(x, Complex::two_term(base, LaurentPoly(), a));
                h[a].first += 1;
                h[a + 1].first += 1;
            }
        }
    }
    GradedCohomology coh;
    for (auto& [d, m] : h) {
        FgModule mod(m.first, m.second);
        if (!mod.is_zero())
            coh.emplace(d, mod);
    }
    return {random_base_change(rng, x), coh};
}

}  // namespace wdlab::support
