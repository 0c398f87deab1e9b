#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wdlab/scalar.hpp"

namespace wdlab {

using Permutation = std::vector<int>;

/// A finite group given by its multiplication table; element i is row i.
class FiniteGroup
{
public:
    static constexpr std::size_t kMaxOrder = 48;

    /// Validates identity, inverses and associativity; throws std::invalid_argument.
    static FiniteGroup from_table(std::vector<std::vector<std::size_t>> table);
    /// Closure of the generators under composition, (a*b)(x) = a(b(x)).
    static FiniteGroup from_permutations(const std::vector<Permutation>& generators);

    std::size_t order() const { return table_.size(); }
    std::size_t identity() const { return identity_; }
    std::size_t mul(std::size_t a, std::size_t b) const { return table_[a][b]; }
    std::size_t inverse(std::size_t a) const { return inverse_[a]; }
    const std::vector<std::vector<std::size_t>>& table() const { return table_; }

    /// Permutation labels, present when built from permutations.
    const std::vector<Permutation>& permutations() const { return perms_; }
    std::size_t index_of(const Permutation& p) const;

    /// Classes ordered by their least element; each class sorted.
    const std::vector<std::vector<std::size_t>>& classes() const { return classes_; }
    std::size_t class_of(std::size_t a) const { return class_of_[a]; }

private:
    void finish();

    std::vector<std::vector<std::size_t>> table_;
    std::size_t identity_ = 0;
    std::vector<std::size_t> inverse_;
    std::vector<Permutation> perms_;
    std::vector<std::vector<std::size_t>> classes_;
    std::vector<std::size_t> class_of_;
};

/// Sorted element indices.
using Subgroup = std::vector<std::size_t>;

/// Throws std::invalid_argument unless `elements` is closed under product and inverse.
Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::size_t> elements);
Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& generators);
std::vector<Subgroup> all_subgroups(const FiniteGroup& g);
Subgroup center(const FiniteGroup& g);
bool is_subgroup_of(const Subgroup& h, const Subgroup& k);

struct DoubleCoset
{
    std::size_t representative;
    std::vector<std::size_t> elements;
};

/// A\G/B by orbit enumeration.
std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);
std::size_t double_coset_count(const FiniteGroup& g, const Subgroup& a, const Subgroup& b);

/// Σ_H #(Z\G/H); Z must be central.
std::size_t prasad_sum(const FiniteGroup& g, const Subgroup& z, const std::vector<Subgroup>& h_list);

/// Rational-valued irreducible characters, one value per conjugacy class.
struct CharacterTable
{
    std::vector<std::string> names;
    std::vector<std::vector<Rational>> values;   // values[rho][class]

    std::size_t size() const { return values.size(); }
    Rational dim(std::size_t rho) const { return values.at(rho).at(0); }
};

/// Builds a table from class functions given elementwise; throws if a
/// function is not constant on classes or orthogonality fails.
CharacterTable make_character_table(const FiniteGroup& g, std::vector<std::string> names,
                                    const std::vector<std::vector<Rational>>& by_element);
/// Row and column orthogonality, exactly; throws std::invalid_argument.
void validate_character_table(const FiniteGroup& g, const CharacterTable& ct);

/// dim rho^H = (1/|H|) Σ_h chi(h); throws std::domain_error when not integral.
long fixed_dim(const FiniteGroup& g, const CharacterTable& ct, std::size_t rho, const Subgroup& h);

struct MackeyResult
{
    long character_side = 0;   // Σ_rho dim rho^A dim rho^B
    std::size_t coset_side = 0;  // #(A\G/B)
    bool holds() const { return character_side == static_cast<long>(coset_side); }
};

MackeyResult mackey_check(const FiniteGroup& g, const CharacterTable& ct, const Subgroup& a, const Subgroup& b);

struct ExtReport
{
    long multiplicity = 0;
    std::string statement;
};

/// Σ_H dim rho^H; higher Ext vanish since finite-group representations in
/// characteristic 0 form a semisimple category.
ExtReport higher_ext_vanishing_report(const FiniteGroup& g, const CharacterTable& ct, std::size_t rho,
                                      const std::vector<Subgroup>& h_list);

struct NamedGroup
{
    std::string name;
    FiniteGroup group;
    CharacterTable characters;
};

NamedGroup symmetric_group_3();
NamedGroup symmetric_group_4();
NamedGroup dihedral_group_4();
NamedGroup quaternion_group();

}  // namespace wdlab
