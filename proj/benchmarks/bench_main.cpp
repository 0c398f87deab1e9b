#include <benchmark/benchmark.h>

#include <random>

#include "wdlab/ffcurve.hpp"
#include "wdlab/matcher.hpp"
#include "wdlab/multiplicity.hpp"
#include "wdlab/sym_power.hpp"

using namespace wdlab;

namespace {

PolyMatrix random_matrix(std::mt19937_64& rng, std::size_t n)
{
    std::uniform_int_distribution<long> c(-3, 3);
    std::uniform_int_distribution<int> e(-1, 2);
    PolyMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            m(i, j) = LaurentPoly::monomial(Scalar(c(rng)), e(rng)) + LaurentPoly(Scalar(c(rng)));
    return m;
}

void BM_SmithNormalForm(benchmark::State& state)
{
    std::mt19937_64 rng(1);
    std::vector<PolyMatrix> inputs;
    for (int i = 0; i < 16; ++i)
        inputs.push_back(random_matrix(rng, static_cast<std::size_t>(state.range(0))));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(smith_normal_form(inputs[i++ % inputs.size()]));
}
BENCHMARK(BM_SmithNormalForm)->DenseRange(2, 5);

void BM_IwasawaLSheafTable(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(iwasawa_lsheaf_table(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_IwasawaLSheafTable)->Arg(5)->Arg(10)->Arg(16);

void BM_MatchIwasawa(benchmark::State& state)
{
    int n = static_cast<int>(state.range(0));
    PeriodTable p = iwasawa_normalized(3, n);
    GradedTable l = normalize_table(iwasawa_lsheaf_table(3, n));
    for (auto _ : state)
        benchmark::DoNotOptimize(match_iwasawa(p, l));
}
BENCHMARK(BM_MatchIwasawa)->Arg(5)->Arg(16);

void BM_HeckeLSheaf(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(hecke_lsheaf_normalized(3, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_HeckeLSheaf)->Arg(4)->Arg(8);

void BM_SymPowerOracle(benchmark::State& state)
{
    Complex e = e_cyc(3).shift(-1);
    for (auto _ : state)
        benchmark::DoNotOptimize(sym_power_oracle(e, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_SymPowerOracle)->DenseRange(1, 4);

void BM_WDCohomology(benchmark::State& state)
{
    std::mt19937_64 rng(2);
    std::vector<WDRep> reps;
    for (int i = 0; i < 16; ++i)
        reps.push_back(random_wd_rep(3, static_cast<std::size_t>(state.range(0)), rng));
    std::size_t i = 0;
    for (auto _ : state)
        benchmark::DoNotOptimize(wd_cohomology(reps[i++ % reps.size()]));
}
BENCHMARK(BM_WDCohomology)->DenseRange(1, 4);

void BM_MackeyLattice(benchmark::State& state)
{
    NamedGroup g = symmetric_group_4();
    auto subs = all_subgroups(g.group);
    for (auto _ : state)
        for (auto& a : subs)
            for (auto& b : subs)
                benchmark::DoNotOptimize(mackey_check(g.group, g.characters, a, b));
}
BENCHMARK(BM_MackeyLattice);

void BM_ZetaSeries(benchmark::State& state)
{
    for (auto _ : state)
        benchmark::DoNotOptimize(zeta_series_p1(5, static_cast<int>(state.range(0))));
}
BENCHMARK(BM_ZetaSeries)->Arg(10)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
