#include "wdlab/multiplicity.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace wdlab {

namespace {

Permutation compose(const Permutation& a, const Permutation& b)
{
    Permutation c(b.size());
    for (std::size_t x = 0; x < b.size(); ++x)
        c[x] = a[b[x]];
    return c;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<std::size_t>> table)
{
    std::size_t n = table.size();
    if (n == 0 || n > kMaxOrder)
        throw std::invalid_argument("group order must be in [1, " + std::to_string(kMaxOrder) + "]");
    for (auto& row : table) {
        if (row.size() != n)
            throw std::invalid_argument("multiplication table is not square");
        for (auto v : row)
            if (v >= n)
                throw std::invalid_argument("multiplication table entry out of range");
    }
    FiniteGroup g;
    g.table_ = std::move(table);
    std::optional<std::size_t> e;
    for (std::size_t a = 0; a < n && !e; ++a) {
        bool ok = true;
        for (std::size_t b = 0; b < n && ok; ++b)
            ok = g.table_[a][b] == b && g.table_[b][a] == b;
        if (ok)
            e = a;
    }
    if (!e)
        throw std::invalid_argument("group has no identity");
    g.identity_ = *e;
    g.inverse_.assign(n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b)
            if (g.table_[a][b] == *e && g.table_[b][a] == *e)
                g.inverse_[a] = b;
        if (g.inverse_[a] == n)
            throw std::invalid_argument("element " + std::to_string(a) + " has no inverse");
    }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.table_[g.table_[a][b]][c] != g.table_[a][g.table_[b][c]])
                    throw std::invalid_argument("multiplication is not associative at (" + std::to_string(a) + "," +
                                                std::to_string(b) + "," + std::to_string(c) + ")");
    g.finish();
    return g;
}

FiniteGroup FiniteGroup::from_permutations(const std::vector<Permutation>& generators)
{
    if (generators.empty())
        throw std::invalid_argument("need at least one generator");
    std::size_t degree = generators.front().size();
    Permutation id(degree);
    std::iota(id.begin(), id.end(), 0);
    std::vector<Permutation> elems{id};
    std::map<Permutation, std::size_t> index{{id, 0}};
    for (std::size_t i = 0; i < elems.size(); ++i)
        for (auto& s : generators) {
            if (s.size() != degree)
                throw std::invalid_argument("generators act on different sets");
            Permutation p = compose(elems[i], s);
            if (index.emplace(p, elems.size()).second) {
                elems.push_back(p);
                if (elems.size() > kMaxOrder)
                    throw std::invalid_argument("group order exceeds " + std::to_string(kMaxOrder));
            }
        }
    std::size_t n = elems.size();
    std::vector<std::vector<std::size_t>> table(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            table[a][b] = index.at(compose(elems[a], elems[b]));
    FiniteGroup g = from_table(std::move(table));
    g.perms_ = std::move(elems);
    return g;
}

std::size_t FiniteGroup::index_of(const Permutation& p) const
{
    auto it = std::find(perms_.begin(), perms_.end(), p);
    if (it == perms_.end())
        throw std::invalid_argument("permutation is not in the group");
    return static_cast<std::size_t>(it - perms_.begin());
}

void FiniteGroup::finish()
{
    std::size_t n = order();
    class_of_.assign(n, n);
    classes_.clear();
    for (std::size_t a = 0; a < n; ++a) {
        if (class_of_[a] != n)
            continue;
        std::set<std::size_t> cls;
        for (std::size_t x = 0; x < n; ++x)
            cls.insert(mul(mul(x, a), inverse(x)));
        for (auto c : cls)
            class_of_[c] = classes_.size();
        classes_.emplace_back(cls.begin(), cls.end());
    }
}

Subgroup make_subgroup(const FiniteGroup& g, std::vector<std::size_t> elements)
{
    std::sort(elements.begin(), elements.end());
    elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
    if (elements.empty())
        throw std::invalid_argument("a subgroup is nonempty");
    auto in = [&](std::size_t x) { return std::binary_search(elements.begin(), elements.end(), x); };
    for (auto a : elements) {
        if (a >= g.order())
            throw std::invalid_argument("element " + std::to_string(a) + " is not in the group");
        if (!in(g.inverse(a)))
            throw std::invalid_argument("not a subgroup: missing inverse of " + std::to_string(a));
        for (auto b : elements)
            if (!in(g.mul(a, b)))
                throw std::invalid_argument("not a subgroup: " + std::to_string(a) + "*" + std::to_string(b) +
                                            " escapes");
    }
    return elements;
}

Subgroup generated_subgroup(const FiniteGroup& g, const std::vector<std::size_t>& generators)
{
    std::set<std::size_t> seen{g.identity()};
    std::vector<std::size_t> todo{g.identity()};
    while (!todo.empty()) {
        std::size_t x = todo.back();
        todo.pop_back();
        for (auto s : generators) {
            std::size_t y = g.mul(x, s);
            if (seen.insert(y).second)
                todo.push_back(y);
        }
    }
    return {seen.begin(), seen.end()};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g)
{
    std::set<Subgroup> found{{g.identity()}};
    std::vector<Subgroup> todo{{g.identity()}};
    while (!todo.empty()) {
        Subgroup h = todo.back();
        todo.pop_back();
        for (std::size_t x = 0; x < g.order(); ++x) {
            if (std::binary_search(h.begin(), h.end(), x))
                continue;
            std::vector<std::size_t> gens = h;
            gens.push_back(x);
            Subgroup k = generated_subgroup(g, gens);
            if (found.insert(k).second)
                todo.push_back(k);
        }
    }
    return {found.begin(), found.end()};
}

Subgroup center(const FiniteGroup& g)
{
    Subgroup z;
    for (std::size_t a = 0; a < g.order(); ++a)
        if (g.classes()[g.class_of(a)].size() == 1)
            z.push_back(a);
    return z;
}

bool is_subgroup_of(const Subgroup& h, const Subgroup& k)
{
    return std::includes(k.begin(), k.end(), h.begin(), h.end());
}

std::vector<DoubleCoset> double_cosets(const FiniteGroup& g, const Subgroup& a, const Subgroup& b)
{
    make_subgroup(g, a);
    make_subgroup(g, b);
    std::vector<bool> seen(g.order(), false);
    std::vector<DoubleCoset> out;
    for (std::size_t x = 0; x < g.order(); ++x) {
        if (seen[x])
            continue;
        std::set<std::size_t> orbit;
        for (auto s : a)
            for (auto t : b)
                orbit.insert(g.mul(g.mul(s, x), t));
        for (auto y : orbit)
            seen[y] = true;
        out.push_back({x, {orbit.begin(), orbit.end()}});
    }
    return out;
}

std::size_t double_coset_count(const FiniteGroup& g, const Subgroup& a, const Subgroup& b)
{
    return double_cosets(g, a, b).size();
}

std::size_t prasad_sum(const FiniteGroup& g, const Subgroup& z, const std::vector<Subgroup>& h_list)
{
    if (!is_subgroup_of(make_subgroup(g, z), center(g)))
        throw std::invalid_argument("Z is not central");
    std::size_t total = 0;
    for (auto& h : h_list)
        total += double_coset_count(g, z, h);
    return total;
}

CharacterTable make_character_table(const FiniteGroup& g, std::vector<std::string> names,
                                    const std::vector<std::vector<Rational>>& by_element)
{
    if (names.size() != by_element.size())
        throw std::invalid_argument("one name per character");
    CharacterTable ct;
    ct.names = std::move(names);
    for (std::size_t r = 0; r < by_element.size(); ++r) {
        auto& f = by_element[r];
        if (f.size() != g.order())
            throw std::invalid_argument("character " + ct.names[r] + " needs one value per element");
        std::vector<Rational> row;
        for (auto& cls : g.classes()) {
            for (auto x : cls)
                if (f[x] != f[cls.front()])
                    throw std::invalid_argument("character " + ct.names[r] + " is not a class function");
            row.push_back(f[cls.front()]);
        }
        ct.values.push_back(std::move(row));
    }
    validate_character_table(g, ct);
    return ct;
}

void validate_character_table(const FiniteGroup& g, const CharacterTable& ct)
{
    const auto& classes = g.classes();
    std::size_t k = classes.size();
    if (ct.values.size() != k)
        throw std::invalid_argument("expected " + std::to_string(k) + " irreducible characters, got " +
                                    std::to_string(ct.values.size()));
    for (auto& row : ct.values)
        if (row.size() != k)
            throw std::invalid_argument("character row needs one value per class");
    Rational n(static_cast<long>(g.order()));
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) {
            Rational s = 0;
            for (std::size_t c = 0; c < k; ++c)
                s += Rational(static_cast<long>(classes[c].size())) * ct.values[i][c] * ct.values[j][c];
            if (s != (i == j ? n : Rational(0)))
                throw std::invalid_argument("row orthogonality fails for characters " + std::to_string(i) + ", " +
                                            std::to_string(j));
        }
    for (std::size_t c = 0; c < k; ++c)
        for (std::size_t d = 0; d < k; ++d) {
            Rational s = 0;
            for (std::size_t i = 0; i < k; ++i)
                s += ct.values[i][c] * ct.values[i][d];
            Rational want = c == d ? n / Rational(static_cast<long>(classes[c].size())) : Rational(0);
            if (s != want)
                throw std::invalid_argument("column orthogonality fails for classes " + std::to_string(c) + ", " +
                                            std::to_string(d));
        }
}

long fixed_dim(const FiniteGroup& g, const CharacterTable& ct, std::size_t rho, const Subgroup& h)
{
    if (rho >= ct.size())
        throw std::out_of_range("no irreducible character " + std::to_string(rho));
    make_subgroup(g, h);
    Rational s = 0;
    for (auto x : h)
        s += ct.values[rho][g.class_of(x)];
    s /= Rational(static_cast<long>(h.size()));
    if (s.get_den() != 1)
        throw std::domain_error("non-integral fixed dimension " + s.get_str() + ": invalid character table");
    return s.get_num().get_si();
}

MackeyResult mackey_check(const FiniteGroup& g, const CharacterTable& ct, const Subgroup& a, const Subgroup& b)
{
    MackeyResult r;
    for (std::size_t rho = 0; rho < ct.size(); ++rho)
        r.character_side += fixed_dim(g, ct, rho, a) * fixed_dim(g, ct, rho, b);
    r.coset_side = double_coset_count(g, a, b);
    return r;
}

ExtReport higher_ext_vanishing_report(const FiniteGroup& g, const CharacterTable& ct, std::size_t rho,
                                      const std::vector<Subgroup>& h_list)
{
    ExtReport r;
    for (auto& h : h_list)
        r.multiplicity += fixed_dim(g, ct, rho, h);
    r.statement = "Ext^i = 0 for i > 0: representations of a finite group in characteristic 0 are semisimple";
    return r;
}

namespace {

std::vector<int> cycle_type(const Permutation& p)
{
    std::vector<bool> seen(p.size(), false);
    std::vector<int> lengths;
    for (std::size_t i = 0; i < p.size(); ++i) {
        int len = 0;
        for (std::size_t j = i; !seen[j]; j = p[j]) {
            seen[j] = true;
            ++len;
        }
        if (len)
            lengths.push_back(len);
    }
    std::sort(lengths.rbegin(), lengths.rend());
    return lengths;
}

// Characters of S_n given as functions of the cycle type.
NamedGroup symmetric_group(const std::string& name, const std::vector<Permutation>& gens,
                           const std::vector<std::string>& names,
                           const std::map<std::vector<int>, std::vector<long>>& table)
{
    FiniteGroup g = FiniteGroup::from_permutations(gens);
    std::vector<std::vector<Rational>> chars(names.size(), std::vector<Rational>(g.order()));
    for (std::size_t x = 0; x < g.order(); ++x) {
        auto& row = table.at(cycle_type(g.permutations()[x]));
        for (std::size_t r = 0; r < names.size(); ++r)
            chars[r][x] = row[r];
    }
    CharacterTable ct = make_character_table(g, names, chars);
    return {name, std::move(g), std::move(ct)};
}

// Characters given on class representatives.
NamedGroup from_representatives(const std::string& name, FiniteGroup g, const std::vector<std::string>& names,
                                const std::vector<std::pair<std::size_t, std::vector<long>>>& reps)
{
    std::vector<std::vector<Rational>> chars(names.size(), std::vector<Rational>(g.order()));
    std::vector<bool> filled(g.order(), false);
    for (auto& [rep, row] : reps)
        for (auto x : g.classes()[g.class_of(rep)]) {
            filled[x] = true;
            for (std::size_t r = 0; r < names.size(); ++r)
                chars[r][x] = row[r];
        }
    if (std::find(filled.begin(), filled.end(), false) != filled.end())
        throw std::logic_error("representatives miss a class of " + name);
    CharacterTable ct = make_character_table(g, names, chars);
    return {name, std::move(g), std::move(ct)};
}

}  // namespace

NamedGroup symmetric_group_3()
{
    return symmetric_group("S3", {{1, 0, 2}, {1, 2, 0}}, {"trivial", "sign", "standard"},
                           {{{1, 1, 1}, {1, 1, 2}}, {{2, 1}, {1, -1, 0}}, {{3}, {1, 1, -1}}});
}

NamedGroup symmetric_group_4()
{
    return symmetric_group("S4", {{1, 0, 2, 3}, {1, 2, 3, 0}},
                           {"trivial", "sign", "standard", "standard*sign", "two-dim"},
                           {{{1, 1, 1, 1}, {1, 1, 3, 3, 2}},
                            {{2, 1, 1}, {1, -1, 1, -1, 0}},
                            {{2, 2}, {1, 1, -1, -1, 2}},
                            {{3, 1}, {1, 1, 0, 0, -1}},
                            {{4}, {1, -1, -1, 1, 0}}});
}

NamedGroup dihedral_group_4()
{
    // Symmetries of a square with vertices 0..3; s fixes vertices 0 and 2.
    Permutation r{1, 2, 3, 0}, s{0, 3, 2, 1};
    FiniteGroup g = FiniteGroup::from_permutations({r, s});
    std::size_t ir = g.index_of(r), is = g.index_of(s);
    std::size_t ir2 = g.mul(ir, ir), isr = g.mul(is, ir), e = g.identity();
    return from_representatives("D4", std::move(g), {"trivial", "rotation", "vertex", "edge", "two-dim"},
                                {{e, {1, 1, 1, 1, 2}},
                                 {ir2, {1, 1, 1, 1, -2}},
                                 {ir, {1, 1, -1, -1, 0}},
                                 {is, {1, -1, 1, -1, 0}},
                                 {isr, {1, -1, -1, 1, 0}}});
}

NamedGroup quaternion_group()
{
    // Element 2u + s is (-1)^s times the unit u in {1, i, j, k}.
    auto unit_mul = [](int u, int v) -> std::pair<int, int> {   // (unit, sign bit)
        if (u == 0)
            return {v, 0};
        if (v == 0)
            return {u, 0};
        if (u == v)
            return {0, 1};
        int w = 6 - u - v;
        bool cyclic = (u % 3) + 1 == v;   // i->j->k->i
        return {w, cyclic ? 0 : 1};
    };
    std::vector<std::vector<std::size_t>> table(8, std::vector<std::size_t>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            auto [w, s] = unit_mul(a / 2, b / 2);
            table[a][b] = 2 * w + ((s + a % 2 + b % 2) % 2);
        }
    FiniteGroup g = FiniteGroup::from_table(std::move(table));
    return from_representatives("Q8", std::move(g), {"trivial", "i-kernel", "j-kernel", "k-kernel", "two-dim"},
                                {{0, {1, 1, 1, 1, 2}},
                                 {1, {1, 1, 1, 1, -2}},
                                 {2, {1, 1, -1, -1, 0}},
                                 {4, {1, -1, 1, -1, 0}},
                                 {6, {1, -1, -1, 1, 0}}});
}

}  // namespace wdlab
