#include "wdlab/spectral.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

#include "wdlab/sym_power.hpp"

namespace wdlab {

namespace {

const LaurentPoly T = LaurentPoly::T();

LaurentPoly frobenius_variable(StdRep rep)
{
    return rep == StdRep::Std ? T : T.unit_inverse();
}

// (T - p)-primary part of the torsion.
FgModule primary_part(const FgModule& m, const Scalar& p)
{
    LaurentPoly lin = LaurentPoly::linear(p);
    std::vector<LaurentPoly> parts;
    for (auto f : m.torsion()) {
        LaurentPoly g(1);
        while (!f.is_unit() && divides(lin, f)) {
            f = exact_div(f, lin);
            g = g * lin;
        }
        if (!g.is_unit())
            parts.push_back(g);
    }
    return FgModule(0, parts);
}

FgModule lookup(const GradedCohomology& h, int deg)
{
    auto it = h.find(deg);
    return it == h.end() ? FgModule() : it->second;
}

Scalar half_power(std::int64_t q, int twice)
{
    return make_field(q).q_power(HalfInt::from_twice(twice));
}

}  // namespace

int z_hat(StdRep rep)
{
    return rep == StdRep::Std ? 1 : -1;
}

std::string to_string(StdRep rep)
{
    return rep == StdRep::Std ? "std" : "std_dual";
}

std::string to_string(Chart chart)
{
    return chart == Chart::U1 ? "U1" : "Uq";
}

Complex e_triv(StdRep rep)
{
    return Complex::two_term(Base::Ring, frobenius_variable(rep) - 1, 0);
}

Complex e_cyc(std::int64_t q, StdRep rep)
{
    make_field(q);
    return Complex::two_term(Base::Ring, frobenius_variable(rep).scaled(Scalar(q)) - 1, 0);
}

Scalar triv_point(StdRep)
{
    return Scalar(1);
}

Scalar cyc_point(std::int64_t q, StdRep rep)
{
    return rep == StdRep::Std ? Scalar(q).inverse() : Scalar(q);
}

Complex universal_complex(std::int64_t q, Component component, StdRep rep)
{
    make_field(q);
    if (component == Component::Nontrivial)
        return Complex(Base::Ring, {}, {});
    LaurentPoly phi = frobenius_variable(rep);
    PolyMatrix d0{{phi - 1}, {LaurentPoly(0)}};
    PolyMatrix d1{{LaurentPoly(0), phi.scaled(Scalar(q)) - 1}};
    return Complex(Base::Ring, {{0, 1}, {1, 2}, {2, 1}}, {{0, d0}, {1, d1}});
}

ChartData chart_compute(Chart chart, std::int64_t q, int n_max, StdRep rep)
{
    if (n_max < 1)
        throw std::invalid_argument("n_max must be at least 1");
    Complex triv = e_triv(rep), cyc = e_cyc(q, rep);
    // The universal complex splits as E_triv + E_cyc[-1].
    if (universal_complex(q, Component::Triv, rep).cohomology() != direct_sum(triv, cyc.shift(-1)).cohomology())
        throw std::logic_error("universal complex does not split as E_triv + E_cyc[-1]");

    ChartData data{chart, rep, q, n_max, chart == Chart::U1 ? triv_point(rep) : cyc_point(q, rep), {}};
    const Complex& killed = chart == Chart::U1 ? triv : cyc;
    for (auto& [deg, m] : killed.cohomology())
        if (!localize_away(m, {data.removed}).is_zero())
            throw std::logic_error("summand expected to be acyclic on " + to_string(chart) + " is not");

    data.pieces.emplace(0, Complex::unit(Base::Ring));
    for (int n = 1; n <= n_max; ++n) {
        if (chart == Chart::U1)
            data.pieces.emplace(n, sym_power_fast(cyc.shift(-1), n));
        else
            data.pieces.emplace(-n, sym_power_fast(triv.dual(), n));
    }
    return data;
}

std::vector<TableEntry> GradedTable::at(int chi) const
{
    auto it = weights.find(chi);
    return it == weights.end() ? std::vector<TableEntry>{} : it->second;
}

GradedTable glue(const ChartData& base, const ChartData& other)
{
    if (base.chart == other.chart)
        throw std::invalid_argument("glue needs two different charts");
    if (base.q != other.q || base.rep != other.rep || base.n_max != other.n_max)
        throw std::invalid_argument("charts come from different families");
    const std::vector<Scalar> overlap{base.removed, other.removed};

    GradedTable table;
    table.rep = base.rep;
    table.q = base.q;
    table.n_max = base.n_max;

    std::set<int> gr_weights;
    for (auto& [w, c] : base.pieces)
        gr_weights.insert(w);
    for (auto& [w, c] : other.pieces)
        gr_weights.insert(w);

    for (int w : gr_weights) {
        GradedCohomology hb, ho;
        if (auto it = base.pieces.find(w); it != base.pieces.end())
            hb = it->second.cohomology();
        if (auto it = other.pieces.find(w); it != other.pieces.end())
            ho = it->second.cohomology();
        std::set<int> degrees;
        for (auto& [d, m] : hb)
            degrees.insert(d);
        for (auto& [d, m] : ho)
            degrees.insert(d);
        std::vector<TableEntry> entries;
        for (int d : degrees) {
            FgModule mb = lookup(hb, d), mo = lookup(ho, d);
            if (localize_away(mb, overlap) != localize_away(mo, overlap))
                throw std::domain_error("charts disagree on the overlap at weight " + std::to_string(w) +
                                        ", degree " + std::to_string(d) + ": " + mb.to_string() + " vs " +
                                        mo.to_string());
            FgModule glued = direct_sum(localize_away(mb, {base.removed}), primary_part(mo, base.removed));
            if (!glued.is_zero())
                entries.push_back({glued, d});
        }
        if (w == 0) {
            // Transition of the weight-0 generators is T - 1, a unit on the overlap.
            FgModule transition = FgModule::cyclic(LaurentPoly::linear(triv_point(base.rep)));
            if (!localize_away(transition, overlap).is_zero())
                throw std::logic_error("weight-0 transition is not invertible on the overlap");
        }
        if (!entries.empty())
            table.weights.emplace(table.z_weight(w), std::move(entries));
    }
    return table;
}

GradedTable iwasawa_lsheaf_table(std::int64_t q, int n_max, StdRep rep, Component component)
{
    if (component == Component::Nontrivial) {
        GradedTable t;
        t.component = "nontrivial";
        t.rep = rep;
        t.q = q;
        t.n_max = n_max;
        return t;
    }
    return glue(chart_compute(Chart::U1, q, n_max, rep), chart_compute(Chart::Uq, q, n_max, rep));
}

Scalar normalize_point(std::int64_t q, const Scalar& p, int z)
{
    return half_power(q, z) * p;
}

namespace {

GradedTable transform(const GradedTable& t, int direction)
{
    GradedTable out = t;
    out.normalized = direction > 0;
    const int z = z_hat(t.rep);
    // Pullback T -> c T with c = q^{-z/2} moves a root p to q^{z/2} p.
    Scalar c = half_power(t.q, -z * direction);
    out.weights.clear();
    for (auto& [chi, entries] : t.weights) {
        std::vector<TableEntry> moved;
        for (auto& e : entries)
            moved.push_back({substitute_scale(e.module, c), e.degree - direction * chi * z});
        out.weights.emplace(chi, std::move(moved));
    }
    return out;
}

}  // namespace

GradedTable normalize_table(const GradedTable& t)
{
    if (t.normalized)
        throw std::invalid_argument("table is already normalized");
    return transform(t, 1);
}

GradedTable denormalize_table(const GradedTable& t)
{
    if (!t.normalized)
        throw std::invalid_argument("table is not normalized");
    return transform(t, -1);
}

namespace {

std::string entries_to_string(const std::vector<TableEntry>& entries)
{
    if (entries.empty())
        return "0";
    std::string out;
    for (auto& e : entries) {
        if (!out.empty())
            out += " + ";
        out += e.module.to_string() + " @" + std::to_string(e.degree);
    }
    return out;
}

}  // namespace

Report functional_equation_check(const GradedTable& std_norm, const GradedTable& dual_norm, int n_max)
{
    if (!std_norm.normalized || !dual_norm.normalized)
        throw std::invalid_argument("functional equation compares normalized tables");
    if (std_norm.rep != StdRep::Std || dual_norm.rep != StdRep::Dual)
        throw std::invalid_argument("functional equation needs the std table and the dual table");
    Report report;
    for (int n = -n_max; n <= n_max; ++n) {
        auto a = std_norm.at(std_norm.z_weight(n));
        auto b = dual_norm.at(dual_norm.z_weight(-n));
        if (a == b)
            report.pass(n);
        else
            report.fail(n, "std weight " + std::to_string(n) + " is " + entries_to_string(a) +
                               " but dual weight " + std::to_string(-n) + " is " + entries_to_string(b));
    }
    return report;
}

Report functional_equation_check(std::int64_t q, int n_max)
{
    return functional_equation_check(normalize_table(iwasawa_lsheaf_table(q, n_max, StdRep::Std)),
                                     normalize_table(iwasawa_lsheaf_table(q, n_max, StdRep::Dual)), n_max);
}

GradedCohomology hecke_graded_piece(const WDRep& phi, int n)
{
    if (phi.base != Base::Field || phi.dim() != 2)
        throw std::invalid_argument("Hecke graded piece needs a 2-dimensional parameter over K");
    if (n < 1 || n > 4)
        throw std::invalid_argument("Hecke graded piece supports 1 <= n <= 4");
    return sym_power_oracle(wd_complex(phi), n).cohomology();
}

std::string to_string(Parabolic p)
{
    return p == Parabolic::B ? "B" : "Bbar";
}

Parabolic opposite(Parabolic p)
{
    return p == Parabolic::B ? Parabolic::Bbar : Parabolic::B;
}

namespace {

WDRep trivial_parameter(std::int64_t q)
{
    WDRep phi{Base::Field, q, PolyMatrix::identity(2), PolyMatrix(2, 2), std::nullopt};
    phi.validate();
    return phi;
}

SpecEis normalize_eis(std::int64_t q, const SpecEis& e, int chi, int z)
{
    return {e.parabolic, normalize_point(q, e.point, z), e.degree - chi * z};
}

}  // namespace

HeckeLTable hecke_lsheaf_table(std::int64_t q, int n_max)
{
    make_field(q);
    HeckeLTable t;
    t.q = q;
    t.n_max = n_max;
    WDRep phi = trivial_parameter(q);
    const SpecEis eis{Parabolic::Bbar, triv_point(StdRep::Std), 0};
    for (int n = -n_max; n <= n_max; ++n) {
        if (n < 0)
            t.rows.emplace(n, HeckeLRow{eis});
        else if (n == 0)
            t.rows.emplace(n, HeckeLRow{SpecFiber{"O_Par_GL2", std::nullopt, eis}});
        else {
            std::optional<GradedCohomology> piece;
            if (n <= 4)
                piece = hecke_graded_piece(phi, n);
            t.rows.emplace(n, HeckeLRow{SpecFiber{"SymPiece(" + std::to_string(n) + ")", piece, eis}});
        }
    }
    return t;
}

HeckeLTable hecke_lsheaf_normalized(std::int64_t q, int n_max)
{
    HeckeLTable raw = hecke_lsheaf_table(q, n_max);
    HeckeLTable t;
    t.q = q;
    t.n_max = n_max;
    t.normalized = true;
    const int z = z_hat(StdRep::Std), zd = z_hat(StdRep::Dual);
    for (auto& [n, row] : raw.rows) {
        if (n < 0) {
            t.rows.emplace(n, HeckeLRow{normalize_eis(q, std::get<SpecEis>(row.token), n * z, z)});
        } else if (n == 0) {
            SpecFiber f = std::get<SpecFiber>(row.token);
            f.quotient = normalize_eis(q, f.quotient, 0, z);
            t.rows.emplace(n, HeckeLRow{f});
        } else {
            // L_{dual, -n} = EisSpec_B(O ⊠ skyscraper at the trivial point), then
            // normalized with the dual grading.
            SpecEis dual{Parabolic::B, triv_point(StdRep::Dual), 0};
            int chi = -n * zd;
            t.rows.emplace(n, HeckeLRow{normalize_eis(q, dual, chi, zd), true});
        }
    }
    return t;
}

std::string to_string(const SpecEis& e)
{
    return "EisSpec_" + to_string(e.parabolic) + "(O_Par_Gm ⊠ T=" + e.point.to_string() + ") @" +
           std::to_string(e.degree);
}

std::string to_string(const HeckeLRow& r)
{
    std::string out;
    if (auto* e = std::get_if<SpecEis>(&r.token))
        out = to_string(*e);
    else {
        auto& f = std::get<SpecFiber>(r.token);
        out = "FiberSeq(" + f.sub + " -> L -> " + to_string(f.quotient) + ")";
        if (f.sym_piece)
            out += " [" + to_string(*f.sym_piece) + "]";
    }
    if (r.via_fe)
        out += " (via FE)";
    return out;
}

std::string render_markdown(const GradedTable& t)
{
    std::ostringstream out;
    out << "### L-sheaf table (" << t.component << ", " << to_string(t.rep) << ", q = " << t.q
        << (t.normalized ? ", normalized" : "") << ")\n\n";
    out << "| weight | entries |\n|---:|---|\n";
    for (auto& [chi, entries] : t.weights)
        out << "| " << chi << " | " << entries_to_string(entries) << " |\n";
    return out.str();
}

std::string render_markdown(const HeckeLTable& t)
{
    std::ostringstream out;
    out << "### Hecke L-sheaf (q = " << t.q << (t.normalized ? ", normalized" : "") << ")\n\n";
    out << "| n | row |\n|---:|---|\n";
    for (auto& [n, row] : t.rows)
        out << "| " << n << " | " << to_string(row) << " |\n";
    return out.str();
}

}  // namespace wdlab
