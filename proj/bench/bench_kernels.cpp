#include <benchmark/benchmark.h>

#include <random>

#include "modwitt/restricted.hpp"

using namespace modwitt;

namespace {

void rref_parallel(benchmark::State& state) {
  const PrimeField f(static_cast<std::int64_t>(state.range(0)));
  const Matrix m = delta2_res_matrix(f);
  for (auto _ : state) benchmark::DoNotOptimize(rref(m));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

void rref_serial(benchmark::State& state) {
  const PrimeField f(static_cast<std::int64_t>(state.range(0)));
  const Matrix m = delta2_res_matrix(f);
  for (auto _ : state) benchmark::DoNotOptimize(serial::rref(m));
  state.SetLabel(std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
}

struct StarInput {
  Cochain2Ord phi;
  WittElement g, h;
};

StarInput star_input(Scalar p) {
  const PrimeField f(p);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<Scalar> d(0, p - 1);
  StarInput in{Cochain2Ord(f), WittElement(f), WittElement(f)};
  for (auto& a : in.phi.a) a = d(rng);
  for (int i = -1; i <= static_cast<int>(p) - 2; ++i) {
    in.g[i] = d(rng);
    in.h[i] = d(rng);
  }
  return in;
}

void star_parallel(benchmark::State& state) {
  const auto in = star_input(static_cast<Scalar>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(star_correction(in.phi, in.g, in.h));
}

void star_serial(benchmark::State& state) {
  const auto in = star_input(static_cast<Scalar>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(serial::star_correction(in.phi, in.g, in.h));
}

}  // namespace

BENCHMARK(rref_serial)->Arg(13)->Arg(23)->Arg(31)->Unit(benchmark::kMillisecond);
BENCHMARK(rref_parallel)->Arg(13)->Arg(23)->Arg(31)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(star_serial)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond);
BENCHMARK(star_parallel)->Arg(7)->Arg(11)->Arg(13)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
