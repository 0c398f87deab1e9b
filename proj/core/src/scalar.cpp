#include "wdlab/scalar.hpp"

#include <stdexcept>

namespace wdlab {

std::string HalfInt::to_string() const
{
    if (is_integer())
        return std::to_string(twice_ / 2);
    return std::to_string(twice_) + "/2";
}

HalfInt HalfInt::parse(const std::string& text)
{
    Rational r = parse_rational(text);
    Rational doubled = r * 2;
    doubled.canonicalize();
    if (doubled.get_den() != 1)
        throw std::invalid_argument("not a half-integer: " + text);
    return from_twice(doubled.get_num().get_si());
}

Scalar::Scalar(const Rational& a, const Rational& b, std::int64_t q) : a_(a), b_(b), q_(q)
{
    a_.canonicalize();
    b_.canonicalize();
    if (q_ == 0 && sgn(b_) != 0)
        throw std::invalid_argument("irrational part requires a field");
    canonicalize();
}

std::int64_t Scalar::join_q(std::int64_t p, std::int64_t r)
{
    if (p == 0)
        return r;
    if (r == 0 || p == r)
        return p;
    throw std::invalid_argument("scalars from different fields Q(sqrt " + std::to_string(p) +
                                ") and Q(sqrt " + std::to_string(r) + ")");
}

void Scalar::canonicalize()
{
    if (q_ == 0 || sgn(b_) == 0)
        return;
    if (std::int64_t root = exact_sqrt(q_); root != 0) {
        a_ += b_ * Rational(static_cast<long>(root));
        b_ = 0;
    }
}

Scalar Scalar::canonical() const
{
    Scalar c = *this;
    c.canonicalize();
    return c;
}

Scalar Scalar::operator-() const
{
    Scalar r = *this;
    r.a_ = -a_;
    r.b_ = -b_;
    return r;
}

Scalar Scalar::operator+(const Scalar& o) const
{
    Scalar r;
    r.q_ = join_q(q_, o.q_);
    r.a_ = a_ + o.a_;
    r.b_ = b_ + o.b_;
    return r;
}

Scalar Scalar::operator-(const Scalar& o) const
{
    return *this + (-o);
}

Scalar Scalar::operator*(const Scalar& o) const
{
    Scalar r;
    r.q_ = join_q(q_, o.q_);
    // (a + bs)(c + ds) = ac + bd q + (ad + bc) s
    r.a_ = a_ * o.a_ + b_ * o.b_ * Rational(static_cast<long>(r.q_));
    r.b_ = a_ * o.b_ + b_ * o.a_;
    r.canonicalize();
    return r;
}

Scalar Scalar::inverse() const
{
    if (is_zero())
        throw std::domain_error("inverse of zero scalar");
    Rational norm = a_ * a_ - b_ * b_ * Rational(static_cast<long>(q_));
    Scalar r;
    r.q_ = q_;
    r.a_ = a_ / norm;
    r.b_ = -b_ / norm;
    return r;
}

Scalar Scalar::operator/(const Scalar& o) const
{
    return *this * o.inverse();
}

bool Scalar::operator==(const Scalar& o) const
{
    if (a_ != o.a_ || b_ != o.b_)
        return false;
    return sgn(b_) == 0 || q_ == o.q_;
}

std::strong_ordering Scalar::compare(const Scalar& o) const
{
    if (int c = cmp(a_, o.a_); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    if (int c = cmp(b_, o.b_); c != 0)
        return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

std::string Scalar::to_string() const
{
    if (sgn(b_) == 0)
        return rational_to_string(a_);
    std::string root = "sqrt" + std::to_string(q_);
    std::string irr;
    if (b_ == 1)
        irr = root;
    else if (b_ == -1)
        irr = "-" + root;
    else
        irr = rational_to_string(b_) + "*" + root;
    if (sgn(a_) == 0)
        return irr;
    if (irr.front() == '-')
        return rational_to_string(a_) + " - " + irr.substr(1);
    return rational_to_string(a_) + " + " + irr;
}

FieldCtx::FieldCtx(std::int64_t q) : q_(q)
{
    if (q < 2)
        throw std::invalid_argument("q must be at least 2, got " + std::to_string(q));
    if (!is_prime_power(q))
        throw std::invalid_argument(std::to_string(q) + " is not a prime power");
    root_ = exact_sqrt(q);
}

Scalar FieldCtx::q_power(HalfInt e) const
{
    std::int64_t t = e.twice();
    std::int64_t whole = (t >= 0 ? t : -t) / 2;
    Integer p;
    mpz_ui_pow_ui(p.get_mpz_t(), static_cast<unsigned long>(q_), static_cast<unsigned long>(whole));
    Scalar value(Rational(p), 0, q_);
    if (!e.is_integer())
        value = value * sqrt_q();
    return t >= 0 ? value : value.inverse();
}

FieldCtx make_field(std::int64_t q)
{
    return FieldCtx(q);
}

bool is_prime_power(std::int64_t n)
{
    if (n < 2)
        return false;
    for (std::int64_t p = 2; p * p <= n; ++p) {
        if (n % p != 0)
            continue;
        while (n % p == 0)
            n /= p;
        return n == 1;
    }
    return true;
}

std::int64_t exact_sqrt(std::int64_t n)
{
    if (n < 0)
        return 0;
    Integer z(static_cast<long>(n));
    if (mpz_perfect_square_p(z.get_mpz_t()) == 0)
        return 0;
    Integer r = sqrt(z);
    return r.get_si();
}

Rational parse_rational(const std::string& text)
{
    Rational r;
    if (r.set_str(text, 10) != 0 || text.empty())
        throw std::invalid_argument("malformed rational: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

std::string rational_to_string(const Rational& r)
{
    return r.get_str(10);
}

}  // namespace wdlab
