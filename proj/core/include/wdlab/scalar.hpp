#pragma once

#include <cstdint>
#include <compare>
#include <string>

#include <gmpxx.h>

namespace wdlab {

using Rational = mpq_class;
using Integer = mpz_class;

/// Half-integers e in (1/2)Z, stored as 2e.
class HalfInt
{
public:
    constexpr HalfInt() = default;
    static constexpr HalfInt from_twice(std::int64_t twice)
    {
        HalfInt h;
        h.twice_ = twice;
        return h;
    }
    static constexpr HalfInt integer(std::int64_t n) { return from_twice(2 * n); }
    static constexpr HalfInt half(std::int64_t numerator) { return from_twice(numerator); }

    constexpr std::int64_t twice() const { return twice_; }
    constexpr bool is_integer() const { return twice_ % 2 == 0; }

    constexpr HalfInt operator-() const { return from_twice(-twice_); }
    constexpr HalfInt operator+(HalfInt o) const { return from_twice(twice_ + o.twice_); }
    constexpr HalfInt operator-(HalfInt o) const { return from_twice(twice_ - o.twice_); }
    constexpr HalfInt operator*(std::int64_t k) const { return from_twice(twice_ * k); }
    constexpr auto operator<=>(const HalfInt&) const = default;

    std::string to_string() const;
    /// Parses "3", "-1/2", "5/2".
    static HalfInt parse(const std::string& text);

private:
    std::int64_t twice_ = 0;
};

/// Element a + b*s of K = Q(sqrt q), s^2 = q.
///
/// A scalar remembers the q of the field it came from; q == 0 marks a plain
/// rational that can be combined with scalars of any field. When q is a
/// perfect square the canonical form has b == 0.
class Scalar
{
public:
    Scalar() = default;
    Scalar(long n) : a_(n) {}
    Scalar(const Rational& a) : a_(a) { a_.canonicalize(); }
    Scalar(const Rational& a, const Rational& b, std::int64_t q);

    const Rational& a() const { return a_; }
    const Rational& b() const { return b_; }
    std::int64_t q() const { return q_; }

    bool is_zero() const { return sgn(a_) == 0 && sgn(b_) == 0; }
    bool is_one() const { return a_ == 1 && sgn(b_) == 0; }
    bool is_rational() const { return sgn(b_) == 0; }

    Scalar operator-() const;
    Scalar operator+(const Scalar& o) const;
    Scalar operator-(const Scalar& o) const;
    Scalar operator*(const Scalar& o) const;
    Scalar operator/(const Scalar& o) const;
    Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
    Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
    Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

    /// Throws std::domain_error on zero.
    Scalar inverse() const;

    bool operator==(const Scalar& o) const;
    /// Total order on (a, b); used only for canonical sorting.
    std::strong_ordering compare(const Scalar& o) const;

    /// Re-applies the canonical form; idempotent.
    Scalar canonical() const;

    std::string to_string() const;

private:
    static std::int64_t join_q(std::int64_t p, std::int64_t r);
    void canonicalize();

    Rational a_{0};
    Rational b_{0};
    std::int64_t q_ = 0;
};

/// The coefficient field Q(sqrt q) for a prime power q.
class FieldCtx
{
public:
    /// Throws std::invalid_argument if q < 2 or q is not a prime power.
    explicit FieldCtx(std::int64_t q);

    std::int64_t q() const { return q_; }
    bool s_is_rational() const { return root_ != 0; }

    Scalar scalar(const Rational& a, const Rational& b = 0) const { return Scalar(a, b, q_); }
    Scalar sqrt_q() const { return Scalar(0, 1, q_); }
    /// q^e for a half-integer e.
    Scalar q_power(HalfInt e) const;

private:
    std::int64_t q_;
    std::int64_t root_ = 0;
};

FieldCtx make_field(std::int64_t q);

bool is_prime_power(std::int64_t n);
/// Nonnegative integer square root if n is a perfect square, 0 otherwise.
std::int64_t exact_sqrt(std::int64_t n);

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace wdlab
