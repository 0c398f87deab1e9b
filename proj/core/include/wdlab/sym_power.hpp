#pragma once

#include <cstddef>
#include <map>
#include <vector>

#include "wdlab/complex.hpp"

namespace wdlab {

/// Sym^n of a two-term complex with rank-1 terms in degrees [a, a+1]:
///   a even: [(E^a)^n --d--> E^{a+1} (E^a)^{n-1}] in degrees [na, na+1]
///   a odd:  [E^a (E^{a+1})^{n-1} --d--> (E^{a+1})^n] in degrees [n(a+1)-1, n(a+1)]
/// Throws std::invalid_argument for any other shape or n < 1.
Complex sym_power_fast(const Complex& e, int n);

/// Explicit model of X^{⊗n} with the Σ_n action carrying Koszul signs.
///
/// A basis tensor is a sequence of n atoms; atom k is basis vector idx of the
/// term in degree deg. Vectors are sparse maps from basis tensors to
/// coefficients in the base ring.
class TensorPower
{
public:
    static constexpr std::size_t kMaxBasis = 10000;

    /// Throws std::length_error when rank(X)^n exceeds kMaxBasis.
    TensorPower(const Complex& x, int n);

    struct Atom
    {
        int degree;
        std::size_t index;
    };
    using Key = std::vector<std::size_t>;  // atom ids
    using Vector = std::map<Key, LaurentPoly>;

    int power() const { return n_; }
    const std::vector<Atom>& atoms() const { return atoms_; }
    int degree(const Key& key) const;
    /// All basis tensors of X^{⊗n}, grouped by total degree.
    std::map<int, std::vector<Key>> basis() const;

    Vector differential(const Vector& v) const;
    /// sigma[k] is the position that factor k moves to.
    Vector act(const std::vector<std::size_t>& sigma, const Vector& v) const;
    /// (1/n!) Σ_σ σ·v.
    Vector symmetrize(const Vector& v) const;

    /// Image of the symmetrizer as a subcomplex, one basis element per
    /// Σ_n-orbit with nonzero symmetrization.
    Complex symmetric_part() const;

    static Vector basis_vector(const Key& key);

private:
    Complex x_;
    int n_;
    std::vector<Atom> atoms_;
    std::map<std::pair<int, std::size_t>, std::size_t> atom_id_;
    std::vector<std::vector<std::size_t>> permutations_;
    Rational inv_factorial_;
};

/// Sym^n(X) via the symmetrizer on X^{⊗n}, 1 <= n <= 4.
Complex sym_power_oracle(const Complex& x, int n);

/// Super-dimension count: Σ_k (-1)^k C(odd, k) C(even + n - k - 1, n - k),
/// the Euler characteristic of Sym^n of a complex with the given parity ranks.
long sym_power_euler(long even_rank, long odd_rank, int n);

}  // namespace wdlab
