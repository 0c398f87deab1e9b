#pragma once

#include <cstddef>
#include <map>
#include <string>

#include "wdlab/matrix.hpp"
#include "wdlab/module.hpp"

namespace wdlab {

enum class Base
{
    Field,  // K
    Ring,   // K[T^-1, T]
};

std::string to_string(Base base);
Base parse_base(const std::string& text);

/// Degree -> H^i. Zero groups are omitted.
using GradedCohomology = std::map<int, FgModule>;

std::string to_string(const GradedCohomology& h);

/// Bounded cochain complex of free modules over K or K[T^-1, T].
///
/// d^i maps degree i to degree i + 1 and is stored as a rank_{i+1} x rank_i
/// matrix. Degrees of rank zero are dropped. Construction checks shapes,
/// constant entries for the field base, and d^{i+1} d^i = 0.
class Complex
{
public:
    Complex() = default;
    Complex(Base base, std::map<int, std::size_t> ranks, std::map<int, PolyMatrix> diffs);

    /// The base ring placed in degree 0.
    static Complex unit(Base base);
    /// Two-term [R --f--> R] in degrees [a, a+1].
    static Complex two_term(Base base, const LaurentPoly& f, int a = 0);

    Base base() const { return base_; }
    const std::map<int, std::size_t>& ranks() const { return ranks_; }
    std::size_t rank(int degree) const;
    /// d^i, a zero matrix of the right shape when not stored.
    PolyMatrix diff(int degree) const;
    bool is_zero() const { return ranks_.empty(); }
    int min_degree() const;
    int max_degree() const;

    GradedCohomology cohomology() const;
    /// Alternating sum of ranks.
    long euler_characteristic() const;

    /// (X[k])^i = X^{i+k}, differentials multiplied by (-1)^k.
    Complex shift(int k) const;
    /// (X^v)^i = (X^{-i})^v with d^i = (-1)^{i+1} (d^{-i-1})^t.
    Complex dual() const;
    /// Entrywise pullback T -> c*T of every differential.
    Complex substitute_scale(const Scalar& c) const;

    bool operator==(const Complex& o) const;

    std::string to_string() const;

private:
    void validate() const;

    Base base_ = Base::Field;
    std::map<int, std::size_t> ranks_;
    std::map<int, PolyMatrix> diffs_;
};

/// Total complex of X ⊗ Y with d(x ⊗ y) = dx ⊗ y + (-1)^|x| x ⊗ dy.
/// Basis in degree n is ordered by the degree of the X factor, then x, then y.
Complex tensor(const Complex& x, const Complex& y);
Complex direct_sum(const Complex& x, const Complex& y);

}  // namespace wdlab
