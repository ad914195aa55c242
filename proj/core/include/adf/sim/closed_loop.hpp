#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "adf/differentiator.hpp"
#include "adf/sim/pid.hpp"
#include "adf/sim/plant.hpp"
#include "adf/sim/signals.hpp"

namespace adf::sim {

struct LoopConfig {
  PlantModel plant;
  PidParams pid;
  NoiseModel noise;
  ReferenceSignal reference;
  double duration = 1.0;  // s

  /// Checks every part plus the shared sampling period.
  void validate() const;
};

/// Per-sample record of a closed-loop run. Sample n is taken at n * ts.
struct LoopTrace {
  std::vector<double> t;
  std::vector<double> r;
  std::vector<double> x_true;
  std::vector<double> v_true;
  std::vector<double> x_meas;
  std::vector<double> noise;
  std::vector<std::optional<double>> dx_est;
  std::vector<double> u;
  std::vector<std::optional<std::size_t>> r_star;

  std::size_t size() const { return t.size(); }
};

/// Runs the sampled loop: measure (position + noise), estimate the velocity
/// with `diff`, compute the PID command, hold it on the plant for one period.
/// The reference rate comes from the reference generator; `diff` only ever
/// sees the measurement. Deterministic for a given config and seed.
LoopTrace run_closed_loop(const LoopConfig& cfg, Differentiator& diff);

}  // namespace adf::sim
