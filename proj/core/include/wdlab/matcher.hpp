#pragma once

#include "wdlab/automorphic.hpp"
#include "wdlab/report.hpp"
#include "wdlab/spectral.hpp"

namespace wdlab {

/// Point T = chi(pi) on the trivial component of Par_Gm.
struct CFTPoint
{
    std::string component = "triv";
    Scalar t_value;

    bool operator==(const CFTPoint&) const = default;
};

/// norm^e -> T = q^{-e}. C_c tokens correspond to free modules, not points,
/// and are rejected with std::invalid_argument.
CFTPoint cft_point(std::int64_t q, const SmoothCharacter& chi);

/// Which spectral weight a Bun component is compared with.
enum class WeightConvention
{
    Direct,    // component n <-> weight n
    Flipped,   // component n <-> weight -n, for auditing
};

/// Translates a normalized character table into the spectral table it
/// should equal: norm^e @d -> R/(T - q^{-e}) @d, and C_c^inf(F) twists
/// (rewritten to C_c^inf(F^x)) -> free rank 1.
GradedTable translate_period_table(const PeriodTable& p, WeightConvention convention = WeightConvention::Direct);

/// Entry-by-entry comparison of two spectral tables over a common range.
Report compare_tables(const GradedTable& expected, const GradedTable& actual);

Report match_iwasawa(const PeriodTable& p, const GradedTable& l,
                     WeightConvention convention = WeightConvention::Direct);

/// Eis_{P!}(CcFx ⊠ chi) @d <-> EisSpec_{opposite P}(O ⊠ cft_point(chi)) @d;
/// W_psi <-> O_Par_GL2 at n = 0.
Report match_hecke(const PeriodTable& p, const HeckeLTable& l);

}  // namespace wdlab
