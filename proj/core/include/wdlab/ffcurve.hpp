#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include "wdlab/report.hpp"
#include "wdlab/scalar.hpp"

namespace wdlab {

/// Line bundle label: degree plus an index in a finite group Z/m of twists.
struct BundleLabel
{
    int degree = 0;
    int twist = 0;
    auto operator<=>(const BundleLabel&) const = default;
};

/// h^0 data of a curve of genus g. K^{1/2} is the label (g-1, 0), so K is
/// (2g-2, 0) and the inverse of (d, t) is (-d, -t mod m).
struct CurveData
{
    int genus = 0;
    int twist_order = 1;
    std::map<BundleLabel, long> h0;
    bool projective_line = false;   // h0(O(m)) = max(0, m+1) in closed form

    static CurveData p1();
    BundleLabel inverse(const BundleLabel& l) const;
    BundleLabel canonical_minus(const BundleLabel& l) const;   // K ⊗ L^{-1}
    BundleLabel theta_twist(const BundleLabel& l) const;       // L ⊗ K^{1/2}
    /// Throws std::out_of_range naming the label when no value is known.
    long h0_of(const BundleLabel& l) const;
};

/// q^{max(0, d)}.
Scalar period_p1(std::int64_t q, int d);
/// q^{h0(L ⊗ K^{1/2}) - deg(L ⊗ K^{1/2})/2}.
Scalar period_norm(const CurveData& c, std::int64_t q, const BundleLabel& l);

/// h0(L) - h0(K ⊗ L^{-1}) = deg L - g + 1 for every tabulated L with a
/// tabulated partner; report keyed by degree.
Report riemann_roch_check(const CurveData& c);
/// The same relation for L ⊗ K^{1/2} with deg L in [lo, hi], all twists;
/// works for the closed-form P^1 as well.
Report riemann_roch_check(const CurveData& c, int lo, int hi);
/// P^norm(L) = P^norm(L^{-1}) for all degrees in [lo, hi] and all twists.
Report fe_symmetry_check(const CurveData& c, std::int64_t q, int lo, int hi);
/// log_q P^norm = (|d| + 1 - g)/2 exactly for |d| >= g in [lo, hi].
Report asymptotic_check(const CurveData& c, std::int64_t q, int lo, int hi);

/// Synthetic genus-g table over L ⊗ K^{1/2} for L of degree in [-range, range].
/// h0 is forced outside [0, 2g-2] and random but Riemann-Roch consistent inside.
CurveData synthetic_curve(int genus, int twist_order, int range, std::mt19937_64& rng);
/// The genus-1 table with K^{1/2} trivial and one nontrivial 2-torsion bundle.
CurveData elliptic_example(int range);

struct ZetaSeries
{
    std::int64_t q = 2;
    int order = 0;
    std::vector<Integer> coefficients;      // effective divisor counts c_0..c_N
    std::vector<Integer> closed_form;       // expansion of 1/((1-t)(1-qt))
    bool matches() const { return coefficients == closed_form; }
};

/// c_d = (q^{h0(O(d))} - 1)/(q - 1) on P^1, compared with the series of
/// 1/((1-t)(1-qt)) obtained by power-series division.
ZetaSeries zeta_series_p1(std::int64_t q, int order);

}  // namespace wdlab
