#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <utility>

#include "wdlab/scalar.hpp"

namespace wdlab {

/// Element of R = K[T, T^-1]. Zero coefficients are never stored.
class LaurentPoly
{
public:
    using Terms = std::map<int, Scalar>;

    LaurentPoly() = default;
    LaurentPoly(long c) : LaurentPoly(Scalar(c)) {}
    LaurentPoly(const Scalar& c);
    explicit LaurentPoly(Terms terms);

    static LaurentPoly monomial(const Scalar& c, int exponent);
    /// T - c
    static LaurentPoly linear(const Scalar& root);
    static LaurentPoly T() { return monomial(Scalar(1), 1); }

    const Terms& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    /// Units of R are c*T^k with c != 0.
    bool is_unit() const { return terms_.size() == 1; }
    bool is_constant() const;
    bool is_one() const;

    int min_exponent() const;
    int max_exponent() const;
    /// Euclidean norm: max exponent - min exponent. Zero for units.
    int span() const;
    Scalar coefficient(int exponent) const;
    Scalar leading_coefficient() const;
    /// Constant value; throws if not constant.
    Scalar constant_value() const;

    LaurentPoly operator-() const;
    LaurentPoly operator+(const LaurentPoly& o) const;
    LaurentPoly operator-(const LaurentPoly& o) const;
    LaurentPoly operator*(const LaurentPoly& o) const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o) { return *this += -o; }
    LaurentPoly& operator*=(const LaurentPoly& o) { return *this = *this * o; }

    LaurentPoly scaled(const Scalar& c) const;
    LaurentPoly shifted(int k) const;
    /// Inverse of a unit c*T^k; throws std::domain_error otherwise.
    LaurentPoly unit_inverse() const;
    /// f(c*T).
    LaurentPoly substitute_scale(const Scalar& c) const;
    /// f(T^-1).
    LaurentPoly substitute_inverse() const;
    Scalar evaluate(const Scalar& t) const;

    bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
    /// Canonical order: span, then coefficients from the lowest exponent upward.
    std::strong_ordering compare(const LaurentPoly& o) const;

    std::string to_string() const;

private:
    Terms terms_;
};

/// a = quot*b + rem with rem = 0 or span(rem) < span(b). Throws on b = 0.
std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b);
/// a / b when b divides a; throws std::domain_error otherwise.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);
bool divides(const LaurentPoly& b, const LaurentPoly& a);

/// Unique associate with lowest exponent 0 and leading coefficient 1.
/// Throws std::invalid_argument on zero.
LaurentPoly normalize_unit(const LaurentPoly& f);
/// Normalized gcd; gcd(0, 0) = 0.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

}  // namespace wdlab
