#include "wdlab/laurent.hpp"

#include <stdexcept>

namespace wdlab {

LaurentPoly::LaurentPoly(const Scalar& c)
{
    if (!c.is_zero())
        terms_.emplace(0, c);
}

LaurentPoly::LaurentPoly(Terms terms)
{
    for (auto& [e, c] : terms)
        if (!c.is_zero())
            terms_.emplace(e, c);
}

LaurentPoly LaurentPoly::monomial(const Scalar& c, int exponent)
{
    LaurentPoly p;
    if (!c.is_zero())
        p.terms_.emplace(exponent, c);
    return p;
}

LaurentPoly LaurentPoly::linear(const Scalar& root)
{
    return T() - LaurentPoly(root);
}

bool LaurentPoly::is_constant() const
{
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0);
}

bool LaurentPoly::is_one() const
{
    return terms_.size() == 1 && terms_.begin()->first == 0 && terms_.begin()->second.is_one();
}

int LaurentPoly::min_exponent() const
{
    if (terms_.empty())
        throw std::domain_error("min_exponent of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exponent() const
{
    if (terms_.empty())
        throw std::domain_error("max_exponent of zero polynomial");
    return terms_.rbegin()->first;
}

int LaurentPoly::span() const
{
    return terms_.empty() ? 0 : max_exponent() - min_exponent();
}

Scalar LaurentPoly::coefficient(int exponent) const
{
    auto it = terms_.find(exponent);
    return it == terms_.end() ? Scalar() : it->second;
}

Scalar LaurentPoly::leading_coefficient() const
{
    if (terms_.empty())
        throw std::domain_error("leading coefficient of zero polynomial");
    return terms_.rbegin()->second;
}

Scalar LaurentPoly::constant_value() const
{
    if (!is_constant())
        throw std::domain_error("not a constant: " + to_string());
    return coefficient(0);
}

LaurentPoly LaurentPoly::operator-() const
{
    LaurentPoly r;
    for (auto& [e, c] : terms_)
        r.terms_.emplace(e, -c);
    return r;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o)
{
    for (auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.emplace(e, c);
        if (inserted)
            continue;
        it->second += c;
        if (it->second.is_zero())
            terms_.erase(it);
    }
    return *this;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const
{
    LaurentPoly r = *this;
    r += o;
    return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const
{
    return *this + (-o);
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const
{
    Terms acc;
    for (auto& [e1, c1] : terms_)
        for (auto& [e2, c2] : o.terms_) {
            auto [it, inserted] = acc.emplace(e1 + e2, c1 * c2);
            if (!inserted)
                it->second += c1 * c2;
        }
    return LaurentPoly(std::move(acc));
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const
{
    Terms t;
    for (auto& [e, v] : terms_)
        t.emplace(e, v * c);
    return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::shifted(int k) const
{
    LaurentPoly r;
    for (auto& [e, c] : terms_)
        r.terms_.emplace(e + k, c);
    return r;
}

LaurentPoly LaurentPoly::unit_inverse() const
{
    if (!is_unit())
        throw std::domain_error("not a unit in K[T^-1, T]: " + to_string());
    auto& [e, c] = *terms_.begin();
    return monomial(c.inverse(), -e);
}

LaurentPoly LaurentPoly::substitute_scale(const Scalar& c) const
{
    Terms t;
    for (auto& [e, v] : terms_) {
        Scalar power(1);
        Scalar base = e >= 0 ? c : c.inverse();
        for (int i = 0; i < (e >= 0 ? e : -e); ++i)
            power *= base;
        t.emplace(e, v * power);
    }
    return LaurentPoly(std::move(t));
}

LaurentPoly LaurentPoly::substitute_inverse() const
{
    LaurentPoly r;
    for (auto& [e, c] : terms_)
        r.terms_.emplace(-e, c);
    return r;
}

Scalar LaurentPoly::evaluate(const Scalar& t) const
{
    if (t.is_zero() && !terms_.empty() && min_exponent() < 0)
        throw std::domain_error("evaluation at 0 of a polynomial with negative exponents");
    Scalar sum;
    for (auto& [e, c] : terms_) {
        Scalar power(1);
        Scalar base = e >= 0 ? t : t.inverse();
        for (int i = 0; i < (e >= 0 ? e : -e); ++i)
            power *= base;
        sum += c * power;
    }
    return sum;
}

std::strong_ordering LaurentPoly::compare(const LaurentPoly& o) const
{
    if (auto c = span() <=> o.span(); c != 0)
        return c;
    if (terms_.empty() || o.terms_.empty())
        return !terms_.empty() <=> !o.terms_.empty();
    int lo = min_exponent(), olo = o.min_exponent();
    if (auto c = lo <=> olo; c != 0)
        return c;
    for (int k = 0; k <= span(); ++k)
        if (auto c = coefficient(lo + k).compare(o.coefficient(olo + k)); c != 0)
            return c;
    return std::strong_ordering::equal;
}

std::string LaurentPoly::to_string() const
{
    if (terms_.empty())
        return "0";
    std::string out;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto& [e, c] = *it;
        std::string coeff = c.to_string();
        bool compound = !c.is_rational() && sgn(c.a()) != 0;
        if (compound)
            coeff = "(" + coeff + ")";
        bool negative = !compound && coeff.front() == '-';
        if (negative)
            coeff = coeff.substr(1);
        if (out.empty())
            out = negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        std::string mono = e == 0 ? "" : (e == 1 ? "T" : "T^" + std::to_string(e));
        if (mono.empty())
            out += coeff;
        else if (coeff == "1")
            out += mono;
        else
            out += coeff + "*" + mono;
    }
    return out;
}

std::pair<LaurentPoly, LaurentPoly> divmod(const LaurentPoly& a, const LaurentPoly& b)
{
    if (b.is_zero())
        throw std::domain_error("division by zero polynomial");
    if (a.is_zero())
        return {LaurentPoly(), LaurentPoly()};
    // Work on the polynomial parts a0 = T^-ma a, b0 = T^-mb b.
    const int ma = a.min_exponent(), mb = b.min_exponent();
    LaurentPoly rem = a.shifted(-ma);
    const LaurentPoly b0 = b.shifted(-mb);
    const int db = b0.max_exponent();
    const Scalar lead_inv = b0.leading_coefficient().inverse();
    LaurentPoly quot;
    while (!rem.is_zero() && rem.max_exponent() >= db) {
        int k = rem.max_exponent() - db;
        LaurentPoly term = LaurentPoly::monomial(rem.leading_coefficient() * lead_inv, k);
        quot += term;
        rem -= term * b0;
    }
    // a = T^ma (quot b0 + rem) = (T^(ma-mb) quot) b + T^ma rem
    return {quot.shifted(ma - mb), rem.shifted(ma)};
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b)
{
    auto [quot, rem] = divmod(a, b);
    if (!rem.is_zero())
        throw std::domain_error(b.to_string() + " does not divide " + a.to_string());
    return quot;
}

bool divides(const LaurentPoly& b, const LaurentPoly& a)
{
    if (b.is_zero())
        return a.is_zero();
    return divmod(a, b).second.is_zero();
}

LaurentPoly normalize_unit(const LaurentPoly& f)
{
    if (f.is_zero())
        throw std::invalid_argument("normalize_unit of zero");
    LaurentPoly g = f.shifted(-f.min_exponent());
    return g.scaled(g.leading_coefficient().inverse());
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b)
{
    LaurentPoly x = a, y = b;
    while (!y.is_zero()) {
        LaurentPoly r = divmod(x, y).second;
        x = std::move(y);
        y = std::move(r);
    }
    return x.is_zero() ? x : normalize_unit(x);
}

}  // namespace wdlab
