#pragma once

#include <span>
#include <string>
#include <vector>

#include "adf/differentiator.hpp"
#include "adf/sim/signals.hpp"

namespace adf::exp {

struct FrfOptions {
  double omega_lo = 1.0;   // rad/s, first analysis frequency
  double omega_hi = 800.0;  // rad/s, last analysis frequency
  int points_per_decade = 10;
  /// Analysis window length in chirp cycles (Hann-weighted in phase).
  double cycles = 6.0;
};

/// Gains in dB of |derivative estimate| / |input|. Points whose analysis
/// window does not fit inside the record are dropped.
struct FrfTable {
  std::vector<double> omega;
  std::vector<double> ideal_db;      // 20 log10(omega), the exact differentiator
  std::vector<double> ideal_est_db;  // analytic derivative through the same estimator
  std::vector<std::string> names;
  std::vector<std::vector<double>> gain_db;  // [filter][point]
};

/// Drives each differentiator with the noise-free chirp `chirp` for
/// `duration` seconds and demodulates the responses against the chirp phase.
///
/// Around each analysis frequency w the window spans +-cycles/2 chirp
/// periods centred where the instantaneous frequency equals w. Both input and
/// output are multiplied by exp(-j phase(t)) with Hann weights applied per
/// unit of phase, and the gain is the ratio of the two magnitudes. Slow
/// sweeps keep the estimate quasi-stationary; at the low end ripple from
/// the sweep remains.
FrfTable estimate_frf(const sim::ReferenceSignal& chirp, double ts, double duration,
                      std::span<Differentiator* const> filters, const FrfOptions& opts);

}  // namespace adf::exp
