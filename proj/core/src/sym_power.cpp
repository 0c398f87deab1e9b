#include "wdlab/sym_power.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace wdlab {

Complex sym_power_fast(const Complex& e, int n)
{
    if (n < 1)
        throw std::invalid_argument("Sym^n needs n >= 1");
    if (e.ranks().size() != 2 || e.max_degree() != e.min_degree() + 1 || e.rank(e.min_degree()) != 1 ||
        e.rank(e.max_degree()) != 1)
        throw std::invalid_argument("sym_power_fast expects rank-1 terms in two adjacent degrees, got " +
                                    e.to_string());
    int a = e.min_degree();
    LaurentPoly d = e.diff(a)(0, 0);
    bool even = ((a % 2) + 2) % 2 == 0;
    int low = even ? n * a : n * (a + 1) - 1;
    return Complex::two_term(e.base(), d, low);
}

namespace {

bool odd(int k)
{
    return (k % 2) != 0;
}

void accumulate(TensorPower::Vector& v, const TensorPower::Key& key, const LaurentPoly& c)
{
    if (c.is_zero())
        return;
    auto [it, fresh] = v.try_emplace(key, c);
    if (!fresh) {
        it->second += c;
        if (it->second.is_zero())
            v.erase(it);
    }
}

}  // namespace

TensorPower::TensorPower(const Complex& x, int n) : x_(x), n_(n)
{
    if (n < 1)
        throw std::invalid_argument("tensor power needs n >= 1");
    for (auto& [deg, r] : x.ranks())
        for (std::size_t i = 0; i < r; ++i) {
            atom_id_[{deg, i}] = atoms_.size();
            atoms_.push_back({deg, i});
        }
    double size = 1;
    for (int k = 0; k < n; ++k)
        size *= static_cast<double>(atoms_.size());
    if (size > static_cast<double>(kMaxBasis))
        throw std::length_error("tensor power too large: " + std::to_string(atoms_.size()) + "^" +
                                std::to_string(n) + " basis tensors");
    std::vector<std::size_t> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do
        permutations_.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));
    inv_factorial_ = Rational(1, static_cast<long>(permutations_.size()));
}

int TensorPower::degree(const Key& key) const
{
    int d = 0;
    for (auto a : key)
        d += atoms_[a].degree;
    return d;
}

std::map<int, std::vector<TensorPower::Key>> TensorPower::basis() const
{
    std::map<int, std::vector<Key>> out;
    if (atoms_.empty())
        return out;
    Key key(n_, 0);
    while (true) {
        out[degree(key)].push_back(key);
        int pos = n_ - 1;
        while (pos >= 0 && ++key[pos] == atoms_.size())
            key[pos--] = 0;
        if (pos < 0)
            break;
    }
    return out;
}

TensorPower::Vector TensorPower::basis_vector(const Key& key)
{
    return {{key, LaurentPoly(1)}};
}

TensorPower::Vector TensorPower::differential(const Vector& v) const
{
    Vector out;
    for (auto& [key, c] : v) {
        int before = 0;  // degree of the factors left of position k
        for (int k = 0; k < n_; ++k) {
            const Atom& atom = atoms_[key[k]];
            if (x_.rank(atom.degree + 1) > 0) {
                PolyMatrix d = x_.diff(atom.degree);
                LaurentPoly sign(odd(before) ? -1 : 1);
                for (std::size_t r = 0; r < d.rows(); ++r) {
                    if (d(r, atom.index).is_zero())
                        continue;
                    Key target = key;
                    target[k] = atom_id_.at({atom.degree + 1, r});
                    accumulate(out, target, sign * c * d(r, atom.index));
                }
            }
            before += atom.degree;
        }
    }
    return out;
}

TensorPower::Vector TensorPower::act(const std::vector<std::size_t>& sigma, const Vector& v) const
{
    if (sigma.size() != static_cast<std::size_t>(n_))
        throw std::invalid_argument("permutation has wrong length");
    Vector out;
    for (auto& [key, c] : v) {
        Key moved(n_);
        for (int k = 0; k < n_; ++k)
            moved[sigma[k]] = key[k];
        // Every pair of factors whose relative order flips contributes the
        // product of their degrees.
        int exponent = 0;
        for (int k = 0; k < n_; ++k)
            for (int l = k + 1; l < n_; ++l)
                if (sigma[k] > sigma[l])
                    exponent += atoms_[key[k]].degree * atoms_[key[l]].degree;
        accumulate(out, moved, odd(exponent) ? -c : c);
    }
    return out;
}

TensorPower::Vector TensorPower::symmetrize(const Vector& v) const
{
    Vector out;
    for (auto& sigma : permutations_)
        for (auto& [key, c] : act(sigma, v))
            accumulate(out, key, c);
    LaurentPoly scale{Scalar(inv_factorial_)};
    for (auto& [key, c] : out)
        c = c * scale;
    return out;
}

Complex TensorPower::symmetric_part() const
{
    // Sorted keys represent Σ_n-orbits. Distinct orbits have disjoint
    // supports, so a vector in the image is read off at the representatives.
    struct Generator
    {
        Key rep;
        Vector vec;
    };
    std::map<int, std::vector<Generator>> gens;
    for (auto& [deg, keys] : basis())
        for (auto& key : keys) {
            if (!std::is_sorted(key.begin(), key.end()))
                continue;
            Vector s = symmetrize(basis_vector(key));
            if (!s.empty())
                gens[deg].push_back({key, std::move(s)});
        }
    std::map<int, std::size_t> ranks;
    for (auto& [deg, g] : gens)
        ranks[deg] = g.size();
    std::map<int, PolyMatrix> diffs;
    for (auto& [deg, src] : gens) {
        auto next = gens.find(deg + 1);
        if (next == gens.end())
            continue;
        auto& dst = next->second;
        PolyMatrix d(dst.size(), src.size());
        for (std::size_t j = 0; j < src.size(); ++j) {
            Vector image = differential(src[j].vec);
            Vector rebuilt;
            for (std::size_t i = 0; i < dst.size(); ++i) {
                auto it = image.find(dst[i].rep);
                if (it == image.end())
                    continue;
                LaurentPoly coeff = it->second * LaurentPoly(dst[i].vec.at(dst[i].rep).constant_value().inverse());
                d(i, j) = coeff;
                for (auto& [key, c] : dst[i].vec)
                    accumulate(rebuilt, key, coeff * c);
            }
            if (rebuilt != image)
                throw std::logic_error("differential leaves the symmetric image");
        }
        diffs.emplace(deg, std::move(d));
    }
    return Complex(x_.base(), std::move(ranks), std::move(diffs));
}

Complex sym_power_oracle(const Complex& x, int n)
{
    if (n < 1 || n > 4)
        throw std::invalid_argument("sym_power_oracle supports 1 <= n <= 4");
    return TensorPower(x, n).symmetric_part();
}

namespace {

long binomial(long n, long k)
{
    if (k < 0 || n < 0 || k > n)
        return 0;
    long r = 1;
    for (long i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

}  // namespace

long sym_power_euler(long even_rank, long odd_rank, int n)
{
    if (n == 0)
        return 1;
    long total = 0;
    for (long k = 0; k <= n; ++k) {
        long term = binomial(odd_rank, k) * (even_rank == 0 ? (k == n ? 1 : 0) : binomial(even_rank + n - k - 1, n - k));
        total += (k % 2 == 0 ? term : -term);
    }
    return total;
}

}  // namespace wdlab
