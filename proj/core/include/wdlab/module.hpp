#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wdlab/laurent.hpp"
#include "wdlab/matrix.hpp"

namespace wdlab {

struct SmithForm
{
    PolyMatrix U;  // invertible, rows x rows
    PolyMatrix D;  // diagonal, d_i | d_{i+1}, nonzero entries normalized
    PolyMatrix V;  // invertible, cols x cols
};

/// U * M * V = D over the PID K[T^-1, T].
SmithForm smith_normal_form(const PolyMatrix& m);

/// Nonzero diagonal entries of D, in order.
std::vector<LaurentPoly> invariant_factors(const PolyMatrix& m);

/// Finitely generated K[T^-1, T]-module: R^free ⊕ ⊕ R/(f_i), f_i the nonunit
/// invariant factors in normalized form (so f_i | f_{i+1}).
///
/// Over the field base only free_rank is used and it is the dimension.
class FgModule
{
public:
    FgModule() = default;
    explicit FgModule(std::size_t free_rank) : free_rank_(free_rank) {}
    /// Canonicalizes an arbitrary list of torsion generators through SNF.
    FgModule(std::size_t free_rank, const std::vector<LaurentPoly>& torsion);

    static FgModule cyclic(const LaurentPoly& f) { return FgModule(0, {f}); }

    std::size_t free_rank() const { return free_rank_; }
    const std::vector<LaurentPoly>& torsion() const { return torsion_; }
    bool is_zero() const { return free_rank_ == 0 && torsion_.empty(); }
    bool is_torsion() const { return free_rank_ == 0; }

    bool operator==(const FgModule& o) const
    {
        return free_rank_ == o.free_rank_ && torsion_ == o.torsion_;
    }

    std::string to_string() const;

private:
    std::size_t free_rank_ = 0;
    std::vector<LaurentPoly> torsion_;
};

/// Cokernel of rels: R^gens -> module, rels has `gens` rows.
FgModule module_from_presentation(std::size_t gens, const PolyMatrix& rels);
FgModule direct_sum(const FgModule& a, const FgModule& b);
/// Restriction to the open set avoiding the given points T = c: every factor
/// (T - c) is divided out of the torsion.
FgModule localize_away(const FgModule& m, const std::vector<Scalar>& points);
/// Pullback along T -> c*T: each torsion generator f becomes f(c*T).
FgModule substitute_scale(const FgModule& m, const Scalar& c);
/// Support points of the torsion part, with multiplicity. Factors of span > 1
/// are split with the rational root test; throws std::domain_error if that fails.
std::vector<Scalar> linear_support(const FgModule& m);

}  // namespace wdlab
