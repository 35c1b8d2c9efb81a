#include <benchmark/benchmark.h>

#include <vector>

#include "clonelab/canonical/canonical.hpp"
#include "clonelab/finite/closure.hpp"
#include "clonelab/finite/ideal.hpp"
#include "clonelab/symbolic/constructions.hpp"
#include "clonelab/symbolic/properties.hpp"
#include "clonelab/symbolic/registry.hpp"
#include "clonelab/terms/partial_eval.hpp"

using namespace clonelab;

static void BM_CiClosure(benchmark::State& state) {
  const unsigned k = static_cast<unsigned>(state.range(0));
  const unsigned cap = static_cast<unsigned>(state.range(1));
  const finite::PrincipalIdeal ideal{finite::Carrier(k), static_cast<finite::Element>(k - 1)};
  const auto ops = finite::ci_operations(ideal, 2);
  for (auto _ : state) {
    auto slices = finite::close_generators(finite::Carrier(k), ops, cap, false);
    benchmark::DoNotOptimize(slices.slice(cap).size());
  }
}
BENCHMARK(BM_CiClosure)->Args({2, 3})->Args({3, 2})->Unit(benchmark::kMillisecond);

static void BM_PairingInjectivity(benchmark::State& state) {
  const auto pr = symbolic::std_pairing();
  const auto dr = symbolic::dr_pairing(symbolic::dr_boundary_h(), pr, symbolic::Box(0, 16));
  const symbolic::Box box(0, static_cast<Nat>(state.range(0)), symbolic::Region::offdiag);
  for (auto _ : state) benchmark::DoNotOptimize(symbolic::check_injective_on(dr, box));
}
BENCHMARK(BM_PairingInjectivity)->Arg(64)->Arg(128)->Unit(benchmark::kMillisecond);

static void BM_PartialEval(benchmark::State& state) {
  const auto c = combinatorics::Coloring::sum_mod(8);
  auto reg = symbolic::Registry::standard();
  reg.add(symbolic::f_A(combinatorics::ColorSet(8, {1, 2, 3}), c, symbolic::std_pairing()).renamed("F_B"));
  const auto t = terms::parse_term("(b:F_B (b:max x (u:succ y)) (b:F_B (u:double x) y))", reg);
  const auto s = terms::SubsetSpec::naturals(1);
  for (auto _ : state) benchmark::DoNotOptimize(terms::partial_eval(t, s, 64));
}
BENCHMARK(BM_PartialEval);

static void BM_CanonicalSubset(benchmark::State& state) {
  const auto pr = symbolic::std_pairing();
  const symbolic::Box box(0, static_cast<Nat>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(canonical::canonical_subset(pr, box));
}
BENCHMARK(BM_CanonicalSubset)->Arg(24)->Arg(64);

BENCHMARK_MAIN();
