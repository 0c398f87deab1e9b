#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <random>

#include "wdlab/complex.hpp"

namespace wdlab {

/// Inertia acting through a cyclic quotient of order m, generated by gamma.
struct Inertia
{
    int order = 1;
    PolyMatrix generator;
};

/// Weil-Deligne representation given by matrices.
///
/// Frobenius Phi is invertible, N is nilpotent with Phi N = q^-1 N Phi, and
/// inertia (if any) is a finite-order gamma commuting with N and normalized by
/// Phi. Over the ring base gamma must be constant.
struct WDRep
{
    Base base = Base::Field;
    std::int64_t q = 2;
    PolyMatrix frobenius;
    PolyMatrix nilpotent;
    std::optional<Inertia> inertia;

    std::size_t dim() const { return frobenius.rows(); }

    /// Throws std::invalid_argument naming the first violated relation.
    void validate() const;
};

/// h^0, h^1, h^2. Over K only the free rank is meaningful.
using HVector = std::array<FgModule, 3>;

std::string to_string(const HVector& h);

struct InertiaInvariants
{
    ScalarMatrix basis;     // dim x k, columns span ker(gamma - 1)
    PolyMatrix frobenius;   // k x k
    PolyMatrix nilpotent;   // k x k
};

InertiaInvariants inertia_invariants(const WDRep& rep);

/// [M^I --(Phi - 1, N)--> M^I + M^I --(N, 1 - q Phi)--> M^I] in degrees 0..2.
Complex wd_complex(const WDRep& rep);
HVector wd_cohomology(const WDRep& rep);
/// M^v(1): Phi -> q^-1 (Phi^-1)^t, N -> -N^t, gamma -> (gamma^-1)^t.
WDRep tate_dual_rep(const WDRep& rep);
/// h^0 - h^1 + h^2 on free ranks.
long euler_char(const WDRep& rep);

/// Same representation written in another basis: P X P^-1 for Phi, N, gamma.
WDRep change_basis(const WDRep& rep, const PolyMatrix& p);

/// One-dimensional rep with Phi = c, N = 0.
WDRep character_rep(std::int64_t q, const Scalar& c);
/// Phi = diag(1, q^-1), N = E_21.
WDRep steinberg_rep(std::int64_t q);

/// Random field-base rep with trivial inertia: Phi = P diag(alpha) P^-1 and
/// N = P N0 P^-1 where N0_ij may be nonzero only if alpha_i = q^-1 alpha_j.
WDRep random_wd_rep(std::int64_t q, std::size_t dim, std::mt19937_64& rng);

}  // namespace wdlab
