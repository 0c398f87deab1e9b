#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <variant>

#include "wdlab/report.hpp"
#include "wdlab/scalar.hpp"
#include "wdlab/spectral.hpp"

namespace wdlab {

/// norm^e, or one of the C_c^infinity tokens twisted by norm^e.
struct SmoothCharacter
{
    enum class Kind
    {
        Norm,   // norm^e: value q^{-e} at a uniformizer
        CcF,    // C_c^inf(F) ⊗ norm^e
        CcFx,   // C_c^inf(F^x) ⊗ norm^e
    };
    Kind kind = Kind::Norm;
    HalfInt exponent;

    static SmoothCharacter norm(HalfInt e) { return {Kind::Norm, e}; }
    static SmoothCharacter ccf(HalfInt e = {}) { return {Kind::CcF, e}; }
    static SmoothCharacter ccfx(HalfInt e = {}) { return {Kind::CcFx, e}; }

    bool is_token() const { return kind != Kind::Norm; }
    SmoothCharacter inverse() const { return {kind, -exponent}; }
    SmoothCharacter twisted(HalfInt e) const { return {kind, exponent + e}; }
    /// Value at a uniformizer; throws for tokens.
    Scalar value_at_pi(std::int64_t q) const;

    bool operator==(const SmoothCharacter&) const = default;
    std::string to_string() const;
};

/// A smooth representation of T(F) = F^x × F^x written as first ⊠ second.
struct TorusDatum
{
    SmoothCharacter first;
    SmoothCharacter second;

    /// cInd_A^T(chi) = C_c^inf(F^x) ⊠ chi.
    static TorusDatum cind(const SmoothCharacter& chi) { return {SmoothCharacter::ccfx(), chi}; }

    bool operator==(const TorusDatum&) const = default;
    std::string to_string() const;
};

struct CharEntry
{
    SmoothCharacter chi;
    int degree = 0;
    bool operator==(const CharEntry&) const = default;
};

/// i^{b_n}_! of a torus representation.
struct TorusEntry
{
    TorusDatum datum;
    int degree = 0;
    bool operator==(const TorusEntry&) const = default;
};

/// Eis_{P!}(i_! datum) placed in `degree`.
struct EisEntry
{
    Parabolic parabolic;
    TorusDatum datum;
    int degree = 0;
    bool operator==(const EisEntry&) const = default;
};

/// sub -> P_0 -> quotient.
struct FiberEntry
{
    std::string sub;   // "W_psi"
    EisEntry quotient;
    bool operator==(const FiberEntry&) const = default;
};

/// A representation carried only by name, e.g. C_c^inf(GL2(F)/A(F)).
struct OpaqueEntry
{
    std::string name;
    int degree = 0;
    bool operator==(const OpaqueEntry&) const = default;
};

using PeriodEntry = std::variant<CharEntry, TorusEntry, EisEntry, FiberEntry, OpaqueEntry>;

std::string to_string(const PeriodEntry& e);

struct PeriodTable
{
    std::string label;   // "iwasawa-tate" or "hecke"
    bool normalized = false;
    std::int64_t q = 2;
    int n_max = 0;
    std::map<int, PeriodEntry> components;
};

/// n < 0: trivial character @0; n = 0: C_c^inf(F) @0; n > 0: norm @2n.
PeriodTable iwasawa_period_table(std::int64_t q, int n_max);
/// Component n twisted by norm^{-eta/2} and shifted by [n eta].
PeriodTable degree_twist(const PeriodTable& t, int eta);
/// degree_twist(iwasawa_period_table, 1).
PeriodTable iwasawa_normalized(std::int64_t q, int n_max);

/// Unnormalized Hecke period: cInd norm^{-1} @-2n (n<0), cInd norm @2n (n>0),
/// C_c^inf(GL2/A) at n = 0.
PeriodTable hecke_period_table(std::int64_t q, int n_max);
/// Eisenstein description: Eis_B!(cInd norm^{-1/2}) @-n (n<0),
/// Eis_Bbar!(cInd norm^{1/2}) @n (n>0), W_psi -> P_0 -> Eis_B!(cInd norm^{-1/2}).
PeriodTable hecke_period_normalized(std::int64_t q, int n_max);
/// Restriction of an Eisenstein entry on component n to its stratum:
/// tensor by (norm ⊠ norm^-1)^{1/2}[n] for B, (norm^-1 ⊠ norm)^{1/2}[-n] for Bbar.
TorusEntry unfold_eisenstein(const EisEntry& e, int n);

/// Component n of the dual table is the inverse of component -n of `t`.
PeriodTable dual_period_table(const PeriodTable& t);
/// Compares the normalized table with its dual; C_c^inf(F) twists are
/// identified by the Fourier transform at n = 0.
Report period_fe_check(const PeriodTable& std_norm, const PeriodTable& dual_norm);
Report period_fe_check(std::int64_t q, int n_max);

std::string render_markdown(const PeriodTable& t);

}  // namespace wdlab
