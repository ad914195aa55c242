#include <benchmark/benchmark.h>

#include <cmath>
#include <random>
#include <vector>

#include "adf/adaptive_filter.hpp"
#include "adf/linear_filtered_differentiator.hpp"
#include "adf/robust_exact_differentiator.hpp"

namespace {

constexpr double kTs = 5e-4;

// Noisy ramp long enough to keep the window saturated.
std::vector<adf::Sample> make_stream(std::size_t n) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> noise(-1e-4, 1e-4);
  std::vector<adf::Sample> s(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double t = static_cast<double>(i) * kTs;
    s[i] = {t, 0.01 * t + noise(rng)};
  }
  return s;
}

template <typename Filter>
void run(benchmark::State& state, Filter& f) {
  const auto stream = make_stream(1 << 16);
  double t_offset = 0.0;
  std::size_t i = 0;
  for (auto _ : state) {
    if (i == stream.size()) {
      i = 0;
      t_offset += static_cast<double>(stream.size()) * kTs;
    }
    adf::Sample s = stream[i++];
    s.t += t_offset;
    benchmark::DoNotOptimize(f.step(s));
  }
  state.SetItemsProcessed(state.iterations());
}

void BM_AdfStep(benchmark::State& state) {
  adf::AdaptiveDifferentiatingFilter f({1e-4, static_cast<std::size_t>(state.range(0)), {}});
  run(state, f);
}
BENCHMARK(BM_AdfStep)->Arg(35)->Arg(70)->Arg(140)->Arg(280);

void BM_AdfStepUniform(benchmark::State& state) {
  adf::AdaptiveDifferentiatingFilter f({1e-4, static_cast<std::size_t>(state.range(0)), kTs});
  run(state, f);
}
BENCHMARK(BM_AdfStepUniform)->Arg(35)->Arg(70)->Arg(140)->Arg(280);

void BM_LdfStep(benchmark::State& state) {
  adf::LinearFilteredDifferentiator f({600, kTs});
  run(state, f);
}
BENCHMARK(BM_LdfStep);

void BM_RedStep(benchmark::State& state) {
  adf::RobustExactDifferentiator f({8, kTs});
  run(state, f);
}
BENCHMARK(BM_RedStep);

}  // namespace

BENCHMARK_MAIN();
