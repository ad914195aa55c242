#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace adf::exp {

/// Summary numbers for one run. Fields that do not apply stay empty.
struct Metrics {
  std::size_t samples = 0;
  std::optional<double> derivative_rmse;  // signal units / s
  std::optional<double> output_rmse;      // signal units
  std::optional<double> hf_power;         // V^2, control signal above the cutoff
  std::optional<double> overshoot;        // step references, fraction of the step
  std::optional<double> final_error;      // reference minus output at the end
  std::optional<double> mean_r_star;
  std::optional<double> max_r_star;
  double ns_per_sample = 0.0;

  std::vector<std::pair<std::string, std::string>> to_key_values() const;
};

/// Root mean square of a - b over indices where both are present.
std::optional<double> rmse(std::span<const std::optional<double>> a, std::span<const double> b);
double rmse(std::span<const double> a, std::span<const double> b);

/// Mean square of `signal` after a second-order Butterworth high-pass with
/// cutoff `cutoff` rad/s (bilinear, prewarped). The filter starts at rest
/// on the first value. Samples before `skip` still drive the filter but are
/// left out of the mean.
double highpass_power(std::span<const double> signal, double ts, double cutoff,
                      std::size_t skip = 0);

}  // namespace adf::exp
