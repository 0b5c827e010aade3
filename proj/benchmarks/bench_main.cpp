#include <benchmark/benchmark.h>

#include "eqrr/equivariant.hpp"
#include "eqrr/families.hpp"

namespace {

void BM_CyclotomicMultiply(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  eqrr::Cyclotomic a, b;
  for (int k = 0; k < n; k += 2) a += eqrr::root_of_unity(n, k) * eqrr::Rational(k + 1, 3);
  for (int k = 1; k < n; k += 3) b += eqrr::root_of_unity(n, k) * eqrr::Rational(-k, 7);
  for (auto _ : state) benchmark::DoNotOptimize(a * b);
}
BENCHMARK(BM_CyclotomicMultiply)->Arg(7)->Arg(21)->Arg(60)->Arg(105);

void BM_MetacyclicTable(benchmark::State& state) {
  const auto m = static_cast<int>(state.range(0)), k = static_cast<int>(state.range(1)),
             t = static_cast<int>(state.range(2));
  for (auto _ : state) benchmark::DoNotOptimize(eqrr::build_metacyclic_table(m, k, t));
}
BENCHMARK(BM_MetacyclicTable)->Args({7, 3, 2})->Args({13, 12, 2})->Args({11, 10, 2});

void BM_AbelianTable(benchmark::State& state) {
  const auto group = std::make_shared<const eqrr::FiniteGroup>(eqrr::cyclic_group(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqrr::build_abelian_table(group));
}
BENCHMARK(BM_AbelianTable)->Arg(12)->Arg(60);

void BM_Analysis(benchmark::State& state) {
  const auto action = state.range(0) == 0 ? eqrr::family_klein() : eqrr::family_fermat(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(eqrr::EquivariantAnalysis(action));
}
BENCHMARK(BM_Analysis)->Arg(0)->Arg(5)->Arg(11);

void BM_KleinDecompose(benchmark::State& state) {
  const eqrr::EquivariantAnalysis an(eqrr::family_klein());
  const auto d = eqrr::build_divisor(an.action(), {{eqrr::Site::branch(0), 1}});
  for (auto _ : state) benchmark::DoNotOptimize(an.decompose(d));
}
BENCHMARK(BM_KleinDecompose);

void BM_FermatDecompose(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const eqrr::EquivariantAnalysis an(eqrr::family_fermat(p));
  const auto d = eqrr::build_divisor(an.action(), {{eqrr::Site::branch(0), p * (p - 3) + 1}});
  for (auto _ : state) benchmark::DoNotOptimize(an.decompose(d));
}
BENCHMARK(BM_FermatDecompose)->Arg(5)->Arg(7)->Arg(11);

void BM_KleinCrosscheck(benchmark::State& state) {
  const eqrr::EquivariantAnalysis an(eqrr::family_klein());
  const auto d = eqrr::build_divisor(an.action(), {{eqrr::Site::branch(0), 4}, {eqrr::Site::free_orbit(0), 1}});
  for (auto _ : state) benchmark::DoNotOptimize(an.crosscheck_lemma(d));
}
BENCHMARK(BM_KleinCrosscheck);

}  // namespace
BENCHMARK_MAIN();
