#pragma once

namespace adf {

/// One timestamped measurement. `t` is in seconds and strictly increasing
/// within a stream; `x` is in signal units.
struct Sample {
  double t = 0.0;
  double x = 0.0;

  friend bool operator==(const Sample&, const Sample&) = default;
};

}  // namespace adf
