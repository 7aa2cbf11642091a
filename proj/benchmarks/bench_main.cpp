#include <benchmark/benchmark.h>

#include "nu2sigma/extremal.hpp"
#include "nu2sigma/factor.hpp"
#include "nu2sigma/natural.hpp"
#include "nu2sigma/oracle.hpp"
#include "nu2sigma/valuation.hpp"

namespace {

using namespace nu2sigma;

Factorization huge_input() {
  return Factorization::from_factors({{2, 13},
                                      {3, 1},
                                      {pow_ui(2, 127) - 1, 1},
                                      {pow_ui(2, 521) - 1, 1}});
}

void BM_Nu2SigmaSmall(benchmark::State& state) {
  Factorization f = factorize(8001);
  OrderK k{Natural(1)};
  for (auto _ : state) {
    auto breakdown = nu2_sigma(f, k);
    benchmark::DoNotOptimize(breakdown.total);
  }
}
BENCHMARK(BM_Nu2SigmaSmall);

void BM_Nu2Sigma200DigitsK1(benchmark::State& state) {
  Factorization f = huge_input();
  OrderK k{Natural(1)};
  for (auto _ : state) {
    auto breakdown = nu2_sigma(f, k);
    benchmark::DoNotOptimize(breakdown.total);
  }
}
BENCHMARK(BM_Nu2Sigma200DigitsK1);

void BM_Nu2Sigma200DigitsK1e18(benchmark::State& state) {
  Factorization f = huge_input();
  OrderK k{Natural("1000000000000000000")};
  for (auto _ : state) {
    auto breakdown = nu2_sigma(f, k);
    benchmark::DoNotOptimize(breakdown.total);
  }
}
BENCHMARK(BM_Nu2Sigma200DigitsK1e18);

void BM_Classify(benchmark::State& state) {
  Factorization f = factorize(Natural(state.range(0)));
  OrderK k{Natural(1)};
  for (auto _ : state) {
    auto report = classify(f, k);
    benchmark::DoNotOptimize(report.gap);
  }
}
BENCHMARK(BM_Classify)->Arg(93)->Arg(8001)->Arg(99991);

void BM_FactorizeSweep(benchmark::State& state) {
  const std::uint64_t limit = state.range(0);
  for (auto _ : state) {
    std::uint64_t total = 0;
    for (std::uint64_t n = 2; n <= limit; ++n)
      total += factorize(Natural(n)).factors().size();
    benchmark::DoNotOptimize(total);
  }
  state.SetItemsProcessed(state.iterations() * (limit - 1));
}
BENCHMARK(BM_FactorizeSweep)->Arg(10000)->Arg(100000);

void BM_FactorizeSemiprime(benchmark::State& state) {
  Natural n = Natural(1000003) * 1000033;
  for (auto _ : state) {
    auto f = factorize(n);
    benchmark::DoNotOptimize(f.value());
  }
}
BENCHMARK(BM_FactorizeSemiprime);

void BM_SigmaKExact(benchmark::State& state) {
  Factorization f = factorize(8001);
  for (auto _ : state) {
    Natural sigma = sigma_k_exact(f, state.range(0));
    benchmark::DoNotOptimize(sigma);
  }
}
BENCHMARK(BM_SigmaKExact)->Arg(1)->Arg(6);

void BM_LucasLehmer(benchmark::State& state) {
  for (auto _ : state)
    benchmark::DoNotOptimize(lucas_lehmer(state.range(0)));
}
BENCHMARK(BM_LucasLehmer)->Arg(127)->Arg(521);

}  // namespace

BENCHMARK_MAIN();
