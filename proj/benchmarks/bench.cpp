#include <random>

#include "benchmark/benchmark.h"
#include "koszul/classical.hpp"
#include "koszul/cspace.hpp"

using namespace koszul;

namespace {

void BM_build_root_system_e8(benchmark::State& state) {
  const LieType e8 = make_lie_type(Family::E8, 8);
  for (auto _ : state) {
    RootSystem rs = build_root_system(e8);
    benchmark::DoNotOptimize(rs.positive_roots.size());
  }
}
BENCHMARK(BM_build_root_system_e8);

void BM_koszul_all_paintings_e7(benchmark::State& state) {
  const auto rs = shared_root_system(make_lie_type(Family::E7, 7));
  for (auto _ : state) {
    Int acc = 0;
    for (unsigned mask = 0; mask + 1 < (1u << 7); ++mask) {
      std::set<int> white;
      for (int i = 0; i < 7; ++i)
        if (mask & (1u << i)) white.insert(i + 1);
      acc += koszul_form(make_painting(rs, white)).koszul_vector.front();
    }
    benchmark::DoNotOptimize(acc);
  }
}
BENCHMARK(BM_koszul_all_paintings_e7);

void BM_t_root_table_e8_full(benchmark::State& state) {
  const auto rs = shared_root_system(make_lie_type(Family::E8, 8));
  const Painting full = make_painting(rs, {});
  for (auto _ : state) {
    benchmark::DoNotOptimize(t_root_table(full).d());
  }
}
BENCHMARK(BM_t_root_table_e8_full);

void BM_hnf_random8(benchmark::State& state) {
  std::mt19937_64 rng(5);
  std::uniform_int_distribution<int> entry(-9, 9);
  std::vector<Mat> inputs(64, Mat(8, Vec(8)));
  for (Mat& m : inputs)
    for (Vec& row : m)
      for (Int& x : row) x = entry(rng);
  std::size_t i = 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(hnf(inputs[i++ % inputs.size()]));
  }
}
BENCHMARK(BM_hnf_random8);

void BM_classical_sweep_rank8(benchmark::State& state) {
  for (auto _ : state) {
    long cases = 0;
    for (Family f : {Family::A, Family::B, Family::C, Family::D}) {
      for (const ClassicalParams& params : enumerate_params(f, 8)) {
        benchmark::DoNotOptimize(koszul_closed_form(params));
        benchmark::DoNotOptimize(koszul_string_count(params));
        ++cases;
      }
    }
    benchmark::DoNotOptimize(cases);
  }
}
BENCHMARK(BM_classical_sweep_rank8);

}  // namespace

BENCHMARK_MAIN();
