#include "wdlab/weil_deligne.hpp"

#include <stdexcept>

namespace wdlab {

namespace {

PolyMatrix power(const PolyMatrix& m, int k)
{
    PolyMatrix r = PolyMatrix::identity(m.rows());
    for (int i = 0; i < k; ++i)
        r = r * m;
    return r;
}

[[noreturn]] void violated(const std::string& what)
{
    throw std::invalid_argument("invalid WD representation: " + what);
}

}  // namespace

void WDRep::validate() const
{
    make_field(q);
    const std::size_t d = frobenius.rows();
    if (d == 0 || frobenius.cols() != d)
        violated("frobenius must be a nonempty square matrix, got " + frobenius.shape());
    if (nilpotent.rows() != d || nilpotent.cols() != d)
        violated("nilpotent has shape " + nilpotent.shape() + ", expected " + frobenius.shape());
    if (base == Base::Field && !(is_constant(frobenius) && is_constant(nilpotent)))
        violated("field-base matrices must have constant entries");
    if (!determinant(frobenius).is_unit())
        violated("frobenius is not invertible");
    if (!power(nilpotent, static_cast<int>(d)).is_zero())
        violated("N is not nilpotent (N^dim != 0)");
    Scalar q_inv = Scalar(q).inverse();
    if (frobenius * nilpotent != (nilpotent * frobenius).scaled(q_inv))
        violated("Phi N Phi^-1 != q^-1 N");
    if (!inertia)
        return;
    const PolyMatrix& g = inertia->generator;
    if (inertia->order < 1)
        violated("inertia order must be positive");
    if (g.rows() != d || g.cols() != d)
        violated("inertia generator has shape " + g.shape());
    if (!is_constant(g))
        violated("inertia generator must have constant entries");
    if (power(g, inertia->order) != PolyMatrix::identity(d))
        violated("gamma^m != 1 for m = " + std::to_string(inertia->order));
    if (g * nilpotent != nilpotent * g)
        violated("gamma N gamma^-1 != N");
    PolyMatrix gk = PolyMatrix::identity(d);
    for (int k = 0; k < inertia->order; ++k, gk = gk * g)
        if (frobenius * g == gk * frobenius)
            return;
    violated("Phi gamma Phi^-1 is not a power of gamma");
}

std::string to_string(const HVector& h)
{
    return "(" + h[0].to_string() + ", " + h[1].to_string() + ", " + h[2].to_string() + ")";
}

InertiaInvariants inertia_invariants(const WDRep& rep)
{
    rep.validate();
    if (!rep.inertia)
        return {ScalarMatrix::identity(rep.dim()), rep.frobenius, rep.nilpotent};
    ScalarMatrix gamma = to_scalar(rep.inertia->generator);
    ScalarMatrix basis = kernel_basis(gamma - ScalarMatrix::identity(rep.dim()));
    if (basis.cols() == 0)
        return {basis, PolyMatrix(0, 0), PolyMatrix(0, 0)};
    PolyMatrix b = to_poly(basis), l = to_poly(left_inverse(basis));
    InertiaInvariants inv{basis, l * rep.frobenius * b, l * rep.nilpotent * b};
    if (rep.frobenius * b != b * inv.frobenius || rep.nilpotent * b != b * inv.nilpotent)
        throw std::logic_error("inertia invariants are not stable under Phi and N");
    return inv;
}

Complex wd_complex(const WDRep& rep)
{
    InertiaInvariants inv = inertia_invariants(rep);
    const std::size_t k = inv.frobenius.rows();
    if (k == 0)
        return Complex(rep.base, {}, {});
    PolyMatrix id = PolyMatrix::identity(k);
    PolyMatrix d0 = PolyMatrix::vstack(inv.frobenius - id, inv.nilpotent);
    PolyMatrix d1 = PolyMatrix::hstack(inv.nilpotent, id - inv.frobenius.scaled(Scalar(rep.q)));
    try {
        return Complex(rep.base, {{0, k}, {1, 2 * k}, {2, k}}, {{0, d0}, {1, d1}});
    } catch (const std::invalid_argument& e) {
        throw std::invalid_argument(std::string("WD complex: ") + e.what());
    }
}

HVector wd_cohomology(const WDRep& rep)
{
    HVector h;
    for (auto& [deg, m] : wd_complex(rep).cohomology()) {
        if (deg < 0 || deg > 2)
            throw std::logic_error("WD cohomology in degree " + std::to_string(deg));
        h[deg] = m;
    }
    return h;
}

WDRep tate_dual_rep(const WDRep& rep)
{
    rep.validate();
    WDRep dual;
    dual.base = rep.base;
    dual.q = rep.q;
    dual.frobenius = inverse(rep.frobenius).transpose().scaled(Scalar(rep.q).inverse());
    dual.nilpotent = -rep.nilpotent.transpose();
    if (rep.inertia)
        dual.inertia = Inertia{rep.inertia->order, inverse(rep.inertia->generator).transpose()};
    dual.validate();
    return dual;
}

long euler_char(const WDRep& rep)
{
    HVector h = wd_cohomology(rep);
    return static_cast<long>(h[0].free_rank()) - static_cast<long>(h[1].free_rank()) +
           static_cast<long>(h[2].free_rank());
}

WDRep change_basis(const WDRep& rep, const PolyMatrix& p)
{
    PolyMatrix pinv = inverse(p);
    WDRep out = rep;
    out.frobenius = p * rep.frobenius * pinv;
    out.nilpotent = p * rep.nilpotent * pinv;
    if (rep.inertia)
        out.inertia->generator = p * rep.inertia->generator * pinv;
    out.validate();
    return out;
}

WDRep character_rep(std::int64_t q, const Scalar& c)
{
    WDRep rep{Base::Field, q, PolyMatrix{{LaurentPoly(c)}}, PolyMatrix(1, 1), std::nullopt};
    rep.validate();
    return rep;
}

WDRep steinberg_rep(std::int64_t q)
{
    PolyMatrix phi{{LaurentPoly(1), LaurentPoly(0)}, {LaurentPoly(0), LaurentPoly(Scalar(q).inverse())}};
    PolyMatrix n{{LaurentPoly(0), LaurentPoly(0)}, {LaurentPoly(1), LaurentPoly(0)}};
    WDRep rep{Base::Field, q, phi, n, std::nullopt};
    rep.validate();
    return rep;
}

WDRep random_wd_rep(std::int64_t q, std::size_t dim, std::mt19937_64& rng)
{
    if (dim == 0)
        throw std::invalid_argument("dimension must be positive");
    const Scalar qi = Scalar(q).inverse();
    // Chains alpha, q^-1 alpha, ... make N possible; 2 and -1 add other Frobenius classes.
    const std::vector<Scalar> eigen{Scalar(1), qi, qi * qi, Scalar(2), Scalar(2) * qi, Scalar(-1)};
    std::uniform_int_distribution<std::size_t> pick(0, eigen.size() - 1), idx(0, dim - 1);
    std::uniform_int_distribution<long> small(-2, 2);
    std::vector<Scalar> alpha(dim);
    for (auto& a : alpha)
        a = eigen[pick(rng)];
    PolyMatrix phi(dim, dim), n(dim, dim);
    for (std::size_t i = 0; i < dim; ++i) {
        phi(i, i) = alpha[i];
        for (std::size_t j = 0; j < dim; ++j)
            if (alpha[i] == qi * alpha[j])
                n(i, j) = Scalar(small(rng));
    }
    PolyMatrix p = PolyMatrix::identity(dim);
    for (int step = 0; dim > 1 && step < 4; ++step) {
        std::size_t i = idx(rng), j = idx(rng);
        if (i == j)
            continue;
        PolyMatrix e = PolyMatrix::identity(dim);
        e(i, j) = Scalar(small(rng));
        p = e * p;
    }
    WDRep rep{Base::Field, q, phi, n, std::nullopt};
    return change_basis(rep, p);
}

}  // namespace wdlab
