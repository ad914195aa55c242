#pragma once

// Hand-rolled generators for the property tests. Every generator takes the
// engine by reference so a failing seed reproduces the whole case.

#include <cmath>
#include <cstddef>
#include <random>
#include <vector>

#include "adf/sample.hpp"

namespace adf::testing {

using Rng = std::mt19937_64;

inline double uniform(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

inline double log_uniform(Rng& rng, double lo, double hi) {
  return std::exp(uniform(rng, std::log(lo), std::log(hi)));
}

/// n samples with strictly increasing, irregular times (gaps in
/// [0.2, 1.8] * dt) and values of magnitude ~scale around a random line.
inline std::vector<Sample> random_window(Rng& rng, std::size_t n, double scale, double dt = 1.0) {
  std::vector<Sample> w(n);
  double t = uniform(rng, -10.0, 10.0) * dt;
  const double slope = uniform(rng, -2.0, 2.0) * scale / dt;
  const double base = uniform(rng, -5.0, 5.0) * scale;
  for (std::size_t i = 0; i < n; ++i) {
    if (i > 0) t += uniform(rng, 0.2, 1.8) * dt;
    w[i] = {t, base + slope * t + uniform(rng, -1.0, 1.0) * scale};
  }
  return w;
}

/// Uniformly sampled stream: a smooth random walk in slope plus bounded
/// uniform noise of amplitude `noise`.
inline std::vector<Sample> random_stream(Rng& rng, std::size_t n, double ts, double noise,
                                         double accel = 1.0) {
  std::vector<Sample> s(n);
  double x = 0.0;
  double v = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    v += uniform(rng, -accel, accel) * ts * 50.0;
    x += v * ts;
    s[i] = {static_cast<double>(i) * ts, x + uniform(rng, -noise, noise)};
  }
  return s;
}

}  // namespace adf::testing
