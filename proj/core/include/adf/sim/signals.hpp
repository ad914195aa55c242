#pragma once

#include <cstdint>
#include <limits>
#include <random>
#include <string_view>

namespace adf::sim {

enum class NoiseKind { none, uniform, truncated_gaussian };

/// Bounded measurement noise: every draw satisfies |w| <= amplitude.
struct NoiseModel {
  NoiseKind kind = NoiseKind::uniform;
  double amplitude = 1e-4;  // d, signal units
  std::uint64_t seed = 1;

  void validate() const;
};

/// Seeded noise generator (mt19937_64). Uniform draws cover [-d, d);
/// truncated-Gaussian draws use sigma = d / 3 and redraw outside [-d, d].
class NoiseSource {
 public:
  explicit NoiseSource(const NoiseModel& model);

  double next();
  const NoiseModel& model() const { return model_; }

 private:
  NoiseModel model_;
  std::mt19937_64 rng_;
  std::uniform_real_distribution<double> uniform_;
  std::normal_distribution<double> normal_;
};

enum class SignalKind { step, slope, chirp, sine };

/// Designed reference/test signal with an analytic derivative.
///
///  step:  offset + amplitude for t >= start
///  slope: offset + rate * (t - start) for t >= start, held once it has
///         travelled `amplitude` (amplitude <= 0 means never held)
///  chirp: offset + amplitude * sin(phase(t)) for t >= start, exponential
///         sweep from omega_lo to omega_hi over sweep_time, then held at omega_hi
///  sine:  offset + amplitude * sin(omega_lo * (t - start)) for t >= start
struct ReferenceSignal {
  SignalKind kind = SignalKind::step;
  double amplitude = 0.01;
  double rate = 0.01;
  double offset = 0.0;
  double start = 0.0;
  double omega_lo = 1.0;
  double omega_hi = 100.0;
  double sweep_time = 10.0;
  /// Upper bound on |dr/dt| that slope and chirp references must respect.
  double rate_bound = std::numeric_limits<double>::infinity();

  void validate() const;
};

struct ReferencePoint {
  double value = 0.0;
  double rate = 0.0;
};

ReferencePoint evaluate(const ReferenceSignal& ref, double t);

/// Phase of the exponential chirp at time `tau` after its start.
double chirp_phase(const ReferenceSignal& ref, double tau);
/// Instantaneous angular frequency of the chirp at time `tau` after its start.
double chirp_frequency(const ReferenceSignal& ref, double tau);

std::string_view to_string(NoiseKind k);
std::string_view to_string(SignalKind k);

}  // namespace adf::sim
