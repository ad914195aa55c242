#pragma once

#include <array>
#include <cstddef>
#include <vector>

namespace adf::sim {

/// G(s) = gain * exp(-delay s) / (den3 s^3 + den2 s^2 + den1 s), input in
/// volts, output position in meters. Defaults are the identified voice-coil
/// actuator.
struct PlantModel {
  double gain = 3.28;
  double den3 = 0.00064;
  double den2 = 0.634;
  double den1 = 80.0;
  double delay = 0.011;  // s; must be a whole number of periods
  double ts = 5e-4;

  /// Constant input-referred load in volts subtracted from u (a gravity
  /// stand-in). Zero keeps the model linear.
  double load = 0.0;

  /// Hard stops at [x_min, x_max]. Off by default for linear analysis.
  bool clamp_position = false;
  double x_min = 0.0;
  double x_max = 0.018;

  void validate() const;
  std::size_t delay_samples() const;
};

/// Zero-order-hold discretisation of PlantModel plus an integer input delay.
///
/// State is (position, velocity, acceleration) in controllable form. The
/// delay line holds the last delay_samples() inputs, so an input applied at
/// sample n first moves the position returned at sample n + delay + 1.
class Plant {
 public:
  explicit Plant(const PlantModel& model);

  /// Holds u for one period and returns the position at the next sample.
  /// Throws std::invalid_argument for a NaN input.
  double step(double u);

  double position() const { return state_[0]; }
  double velocity() const { return state_[1]; }
  double acceleration() const { return state_[2]; }
  const PlantModel& model() const { return model_; }

  /// Discrete transition matrix (row-major) and input vector.
  const std::array<double, 9>& transition() const { return ad_; }
  const std::array<double, 3>& input_gain() const { return bd_; }

  void reset();

 private:
  PlantModel model_;
  std::array<double, 9> ad_{};
  std::array<double, 3> bd_{};
  std::array<double, 3> state_{};
  std::vector<double> delay_line_;
  std::size_t delay_head_ = 0;
};

}  // namespace adf::sim
