#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wdlab/complex.hpp"
#include "wdlab/report.hpp"
#include "wdlab/weil_deligne.hpp"

namespace wdlab {

enum class Component
{
    Triv,
    Nontrivial,
};

/// The universal family on the trivial component: Phi = T for std,
/// Phi = T^-1 for its dual. z_hat is +1 resp. -1 (scalar grading).
enum class StdRep
{
    Std,
    Dual,
};

int z_hat(StdRep rep);
std::string to_string(StdRep rep);

/// U1 = {T != 1}, Uq = {T != point of E_cyc}.
enum class Chart
{
    U1,
    Uq,
};

std::string to_string(Chart chart);

/// [R --f--> R] in degrees [0, 1] with f = T - 1 (std) or T^-1 - 1 (dual).
Complex e_triv(StdRep rep = StdRep::Std);
/// [R --g--> R] with g = qT - 1 (std) or qT^-1 - 1 (dual).
Complex e_cyc(std::int64_t q, StdRep rep = StdRep::Std);
/// Support of E_triv resp. E_cyc.
Scalar triv_point(StdRep rep);
Scalar cyc_point(std::int64_t q, StdRep rep);

/// Terms (1, 2, 1) in degrees 0..2 with d0 = (f, 0)^t, d1 = (0, g) on the
/// trivial component; the zero complex elsewhere.
Complex universal_complex(std::int64_t q, Component component, StdRep rep = StdRep::Std);

struct ChartData
{
    Chart chart;
    StdRep rep;
    std::int64_t q;
    int n_max;
    Scalar removed;                  // the point missing from the chart
    std::map<int, Complex> pieces;   // by G_gr weight
};

/// U1: weight 0 -> R, weight +n -> Sym^n(E_cyc[-1]) in [2n-1, 2n].
/// Uq: weight 0 -> R, weight -n -> Sym^n(E_triv^v) in [-1, 0].
ChartData chart_compute(Chart chart, std::int64_t q, int n_max, StdRep rep = StdRep::Std);

struct TableEntry
{
    FgModule module;
    int degree;

    bool operator==(const TableEntry&) const = default;
};

/// Entries by Z-weight chi; the G_gr weight is chi * z_hat.
struct GradedTable
{
    std::string component = "triv";
    bool normalized = false;
    StdRep rep = StdRep::Std;
    std::int64_t q = 2;
    int n_max = 0;
    std::map<int, std::vector<TableEntry>> weights;

    int gr_weight(int chi) const { return chi * z_hat(rep); }
    int z_weight(int gr) const { return gr * z_hat(rep); }
    /// Entries at a Z-weight; empty when absent.
    std::vector<TableEntry> at(int chi) const;
};

/// Glues two charts into a global table. The base chart's data is kept away
/// from its missing point; the other chart supplies the stalk there. Throws
/// std::domain_error if the charts disagree on the overlap.
GradedTable glue(const ChartData& base, const ChartData& other);

/// glue(chart_compute(U1), chart_compute(Uq)); empty table for ramified components.
GradedTable iwasawa_lsheaf_table(std::int64_t q, int n_max, StdRep rep = StdRep::Std,
                                 Component component = Component::Triv);

/// Shear the Z-weight chi part by [chi z] and pull back along T -> q^{-z/2} T.
GradedTable normalize_table(const GradedTable& t);
GradedTable denormalize_table(const GradedTable& t);
/// Image of a support point under the normalization: p -> q^{z/2} p.
Scalar normalize_point(std::int64_t q, const Scalar& p, int z);

/// Compares L^norm_std at G_gr weight n with L^norm_dual at G_gr weight -n.
Report functional_equation_check(const GradedTable& std_norm, const GradedTable& dual_norm, int n_max);
Report functional_equation_check(std::int64_t q, int n_max);

/// Sym^n of the WD complex of a 2-dimensional field-base parameter, 1 <= n <= 4.
GradedCohomology hecke_graded_piece(const WDRep& phi, int n);

enum class Parabolic
{
    B,
    Bbar,
};

std::string to_string(Parabolic p);
Parabolic opposite(Parabolic p);

/// EisSpec_P(O_Par_Gm ⊠ skyscraper at T = point), placed in `degree`.
struct SpecEis
{
    Parabolic parabolic;
    Scalar point;
    int degree = 0;

    bool operator==(const SpecEis&) const = default;
};

/// sub -> L_n -> quotient.
struct SpecFiber
{
    std::string sub;                              // "O_Par_GL2" or "SymPiece(n)"
    std::optional<GradedCohomology> sym_piece;    // at the trivial parameter, n <= 4
    SpecEis quotient;

    bool operator==(const SpecFiber&) const = default;
};

struct HeckeLRow
{
    std::variant<SpecEis, SpecFiber> token;
    bool via_fe = false;   // computed as L_{dual, -n}
};

struct HeckeLTable
{
    std::int64_t q = 2;
    bool normalized = false;
    int n_max = 0;
    std::map<int, HeckeLRow> rows;   // by G_gr weight of std
};

HeckeLTable hecke_lsheaf_table(std::int64_t q, int n_max);
/// n < 0 and n = 0 normalized with z = 1; n > 0 from the dual table at -n with z = -1.
HeckeLTable hecke_lsheaf_normalized(std::int64_t q, int n_max);

std::string to_string(const SpecEis& e);
std::string to_string(const HeckeLRow& r);
std::string render_markdown(const GradedTable& t);
std::string render_markdown(const HeckeLTable& t);

}  // namespace wdlab
