#include "wdlab/complex.hpp"

#include <stdexcept>

namespace wdlab {

std::string to_string(Base base)
{
    return base == Base::Field ? "K" : "K[T±]";
}

Base parse_base(const std::string& text)
{
    if (text == "K")
        return Base::Field;
    if (text == "K[T±]" || text == "K[T^±]" || text == "K[T+-]")
        return Base::Ring;
    throw std::invalid_argument("unknown base '" + text + "'");
}

std::string to_string(const GradedCohomology& h)
{
    if (h.empty())
        return "0";
    std::string out;
    for (auto& [deg, m] : h) {
        if (!out.empty())
            out += ", ";
        out += "H^" + std::to_string(deg) + " = " + m.to_string();
    }
    return out;
}

Complex::Complex(Base base, std::map<int, std::size_t> ranks, std::map<int, PolyMatrix> diffs) : base_(base)
{
    for (auto& [deg, r] : ranks)
        if (r > 0)
            ranks_.emplace(deg, r);
    for (auto& [deg, d] : diffs) {
        std::size_t src = rank(deg), dst = rank(deg + 1);
        if (d.rows() != dst || d.cols() != src)
            throw std::invalid_argument("d^" + std::to_string(deg) + " has shape " + d.shape() + ", expected " +
                                        std::to_string(dst) + "x" + std::to_string(src));
        if (src > 0 && dst > 0 && !d.is_zero())
            diffs_.emplace(deg, d);
    }
    validate();
}

void Complex::validate() const
{
    if (base_ == Base::Field)
        for (auto& [deg, d] : diffs_)
            if (!is_constant(d))
                throw std::invalid_argument("field-base complex has non-constant entry in d^" + std::to_string(deg));
    for (auto& [deg, d] : diffs_) {
        auto next = diffs_.find(deg + 1);
        if (next == diffs_.end())
            continue;
        if (!(next->second * d).is_zero())
            throw std::invalid_argument("d^" + std::to_string(deg + 1) + " * d^" + std::to_string(deg) + " != 0");
    }
}

Complex Complex::unit(Base base)
{
    return Complex(base, {{0, 1}}, {});
}

Complex Complex::two_term(Base base, const LaurentPoly& f, int a)
{
    PolyMatrix d(1, 1);
    d(0, 0) = f;
    return Complex(base, {{a, 1}, {a + 1, 1}}, {{a, d}});
}

std::size_t Complex::rank(int degree) const
{
    auto it = ranks_.find(degree);
    return it == ranks_.end() ? 0 : it->second;
}

PolyMatrix Complex::diff(int degree) const
{
    auto it = diffs_.find(degree);
    if (it != diffs_.end())
        return it->second;
    return PolyMatrix(rank(degree + 1), rank(degree));
}

int Complex::min_degree() const
{
    if (ranks_.empty())
        throw std::domain_error("zero complex has no degrees");
    return ranks_.begin()->first;
}

int Complex::max_degree() const
{
    if (ranks_.empty())
        throw std::domain_error("zero complex has no degrees");
    return ranks_.rbegin()->first;
}

GradedCohomology Complex::cohomology() const
{
    GradedCohomology h;
    if (ranks_.empty())
        return h;
    // r[i] = rank of d^i; torsion of H^i comes from the invariant factors of d^{i-1}.
    std::map<int, std::size_t> r;
    std::map<int, std::vector<LaurentPoly>> factors;
    for (auto& [deg, d] : diffs_) {
        if (base_ == Base::Field) {
            r[deg] = wdlab::rank(to_scalar(d));
        } else {
            auto f = invariant_factors(d);
            r[deg] = f.size();
            factors[deg] = std::move(f);
        }
    }
    auto rank_of = [&](int deg) -> std::size_t {
        auto it = r.find(deg);
        return it == r.end() ? 0 : it->second;
    };
    for (auto& [deg, n] : ranks_) {
        std::size_t free = n - rank_of(deg) - rank_of(deg - 1);
        std::vector<LaurentPoly> torsion;
        if (auto it = factors.find(deg - 1); it != factors.end())
            for (auto& f : it->second)
                if (!f.is_unit())
                    torsion.push_back(f);
        FgModule m(free, torsion);
        if (!m.is_zero())
            h.emplace(deg, std::move(m));
    }
    return h;
}

long Complex::euler_characteristic() const
{
    long chi = 0;
    for (auto& [deg, n] : ranks_)
        chi += (deg % 2 == 0 ? 1 : -1) * static_cast<long>(n);
    return chi;
}

Complex Complex::shift(int k) const
{
    std::map<int, std::size_t> ranks;
    for (auto& [deg, n] : ranks_)
        ranks.emplace(deg - k, n);
    std::map<int, PolyMatrix> diffs;
    for (auto& [deg, d] : diffs_)
        diffs.emplace(deg - k, k % 2 == 0 ? d : -d);
    return Complex(base_, std::move(ranks), std::move(diffs));
}

Complex Complex::dual() const
{
    std::map<int, std::size_t> ranks;
    for (auto& [deg, n] : ranks_)
        ranks.emplace(-deg, n);
    std::map<int, PolyMatrix> diffs;
    // d_dual^i : (X^{-i})^v -> (X^{-i-1})^v is the transpose of d^{-i-1}.
    for (auto& [deg, d] : diffs_) {
        int i = -deg - 1;
        diffs.emplace(i, (i + 1) % 2 == 0 ? d.transpose() : -d.transpose());
    }
    return Complex(base_, std::move(ranks), std::move(diffs));
}

Complex Complex::substitute_scale(const Scalar& c) const
{
    std::map<int, PolyMatrix> diffs;
    for (auto& [deg, d] : diffs_) {
        PolyMatrix s = d;
        for (std::size_t i = 0; i < s.rows(); ++i)
            for (std::size_t j = 0; j < s.cols(); ++j)
                s(i, j) = s(i, j).substitute_scale(c);
        diffs.emplace(deg, std::move(s));
    }
    return Complex(base_, ranks_, std::move(diffs));
}

bool Complex::operator==(const Complex& o) const
{
    return base_ == o.base_ && ranks_ == o.ranks_ && diffs_ == o.diffs_;
}

std::string Complex::to_string() const
{
    if (ranks_.empty())
        return "0";
    std::string out;
    for (auto& [deg, n] : ranks_) {
        if (!out.empty())
            out += "  ";
        out += "[" + std::to_string(deg) + "]: rank " + std::to_string(n);
        if (auto it = diffs_.find(deg); it != diffs_.end())
            out += " --" + it->second.to_string() + "-->";
    }
    return out;
}

namespace {

Base joined_base(const Complex& x, const Complex& y)
{
    return (x.base() == Base::Ring || y.base() == Base::Ring) ? Base::Ring : Base::Field;
}

}  // namespace

Complex tensor(const Complex& x, const Complex& y)
{
    if (x.is_zero() || y.is_zero())
        return Complex(joined_base(x, y), {}, {});
    // Offsets of each (i, j) block inside total degree i + j.
    std::map<int, std::size_t> ranks;
    std::map<std::pair<int, int>, std::size_t> offset;
    for (auto& [i, rx] : x.ranks())
        for (auto& [j, ry] : y.ranks()) {
            offset[{i, j}] = ranks[i + j];
            ranks[i + j] += rx * ry;
        }
    std::map<int, PolyMatrix> diffs;
    for (auto& [n, rn] : ranks) {
        auto next = ranks.find(n + 1);
        if (next == ranks.end())
            continue;
        PolyMatrix d(next->second, rn);
        for (auto& [i, rx] : x.ranks()) {
            int j = n - i;
            std::size_t ry = y.rank(j);
            if (ry == 0)
                continue;
            std::size_t src = offset.at({i, j});
            if (x.rank(i + 1) > 0) {
                PolyMatrix dx = x.diff(i);
                std::size_t dst = offset.at({i + 1, j});
                for (std::size_t a2 = 0; a2 < dx.rows(); ++a2)
                    for (std::size_t a = 0; a < rx; ++a) {
                        if (dx(a2, a).is_zero())
                            continue;
                        for (std::size_t b = 0; b < ry; ++b)
                            d(dst + a2 * ry + b, src + a * ry + b) += dx(a2, a);
                    }
            }
            if (y.rank(j + 1) > 0) {
                PolyMatrix dy = y.diff(j);
                std::size_t ry2 = y.rank(j + 1);
                std::size_t dst = offset.at({i, j + 1});
                LaurentPoly sign(i % 2 == 0 ? 1 : -1);
                for (std::size_t a = 0; a < rx; ++a)
                    for (std::size_t b2 = 0; b2 < ry2; ++b2)
                        for (std::size_t b = 0; b < ry; ++b)
                            if (!dy(b2, b).is_zero())
                                d(dst + a * ry2 + b2, src + a * ry + b) += sign * dy(b2, b);
            }
        }
        diffs.emplace(n, std::move(d));
    }
    return Complex(joined_base(x, y), std::move(ranks), std::move(diffs));
}

Complex direct_sum(const Complex& x, const Complex& y)
{
    std::map<int, std::size_t> ranks = x.ranks();
    for (auto& [deg, n] : y.ranks())
        ranks[deg] += n;
    std::map<int, PolyMatrix> diffs;
    for (auto& [deg, n] : ranks) {
        std::size_t next = ranks.count(deg + 1) ? ranks.at(deg + 1) : 0;
        if (next == 0)
            continue;
        PolyMatrix d(next, n);
        PolyMatrix dx = x.diff(deg), dy = y.diff(deg);
        for (std::size_t i = 0; i < dx.rows(); ++i)
            for (std::size_t j = 0; j < dx.cols(); ++j)
                d(i, j) = dx(i, j);
        for (std::size_t i = 0; i < dy.rows(); ++i)
            for (std::size_t j = 0; j < dy.cols(); ++j)
                d(dx.rows() + i, dx.cols() + j) = dy(i, j);
        diffs.emplace(deg, std::move(d));
    }
    return Complex(joined_base(x, y), std::move(ranks), std::move(diffs));
}

}  // namespace wdlab
