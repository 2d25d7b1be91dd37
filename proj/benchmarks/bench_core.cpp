#include <benchmark/benchmark.h>

#include "zeta_forge/coeff_extract.hpp"
#include "zeta_forge/series_eval.hpp"
#include "zeta_forge/wz_verify.hpp"

using namespace zeta_forge;

namespace {

void BM_CheckPairGrid(benchmark::State& state) {
  const auto pair = static_cast<PairId>(state.range(0));
  const long size = state.range(1);
  const std::vector<BigRational> a = {make_rational(1, 3)};
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_pair(pair, size, size, a));
  }
  state.SetLabel(std::string(to_string(pair)));
  state.SetItemsProcessed(state.iterations() * (size + 1) * (size + 1));
}
BENCHMARK(BM_CheckPairGrid)
    ->ArgsProduct({{static_cast<long>(PairId::Koecher), static_cast<long>(PairId::Thm1), static_cast<long>(PairId::Thm4)},
                   {10, 25}})
    ->Unit(benchmark::kMillisecond);

void BM_SumRhs(benchmark::State& state) {
  const auto id = static_cast<IdentityId>(state.range(0));
  const long digits = state.range(1);
  const BigRational a = make_rational(1, 3);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_rhs(id, a, digits));
  }
  state.SetLabel(std::string(to_string(id)));
}
BENCHMARK(BM_SumRhs)
    ->ArgsProduct({{static_cast<long>(IdentityId::Eq01Koecher), static_cast<long>(IdentityId::Eq05Thm1),
                    static_cast<long>(IdentityId::Eq07Thm4)},
                   {30, 100, 300}})
    ->Unit(benchmark::kMillisecond);

void BM_ZetaNamed(benchmark::State& state) {
  const long digits = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(zeta_named(NamedFormulaId::AzZ3, digits));
  }
}
BENCHMARK(BM_ZetaNamed)->Arg(50)->Arg(500)->Arg(2000)->Unit(benchmark::kMillisecond);

void BM_EulerMaclaurin(benchmark::State& state) {
  const auto family = static_cast<LhsFamily>(state.range(0));
  const long digits = state.range(1);
  const BigRational a = make_rational(2, 5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(sum_lhs_direct(family, a, digits));
  }
  state.SetLabel(std::string(to_string(family)));
}
BENCHMARK(BM_EulerMaclaurin)
    ->ArgsProduct({{static_cast<long>(LhsFamily::Odd), static_cast<long>(LhsFamily::AltEven)}, {25, 60}})
    ->Unit(benchmark::kMillisecond);

void BM_GfCoefficients(benchmark::State& state) {
  const auto order = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(gf_coefficients(IdentityId::Eq07Thm4, order, 30));
  }
}
BENCHMARK(BM_GfCoefficients)->Arg(1)->Arg(4)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_Prop1Residual(benchmark::State& state) {
  const long truncation = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(check_prop1(PairId::Thm1, truncation, make_rational(1, 3), 30));
  }
}
BENCHMARK(BM_Prop1Residual)->Arg(32)->Arg(128)->Unit(benchmark::kMillisecond);

}  // namespace
BENCHMARK_MAIN();
