#pragma once

#include <optional>

namespace adf::sim {

/// Parallel-form PID  v = kp (e + (1/ti) integral(e) + td de/dt),  u = v + gamma,
/// saturated to [u_min, u_max]. Defaults are the symmetrical-optimum gains.
struct PidParams {
  double kp = 420.0;
  double ti = 0.07;  // s
  double td = 0.03;  // s
  double gamma = 0.0;  // constant offset, V
  double u_min = 0.0;
  double u_max = 10.0;
  double ts = 5e-4;

  void validate() const;
};

/// Discrete PID with trapezoidal integration and conditional anti-windup: the
/// integrator holds whenever its increment would drive a saturated output
/// further into saturation.
class PidController {
 public:
  explicit PidController(const PidParams& params);

  /// r and x_meas in meters; dx_est and dr in m/s. The derivative of the
  /// error is dr - dx_est; with no estimate yet the derivative term is left
  /// out. Returns the saturated command in volts.
  double step(double r, double x_meas, std::optional<double> dx_est, double dr);

  /// Integral of the error in m*s, including the latest sample.
  double integral() const { return integral_; }
  /// Unsaturated command of the latest step.
  double raw_output() const { return raw_; }
  const PidParams& params() const { return params_; }

  void reset();

 private:
  PidParams params_;
  double integral_ = 0.0;
  std::optional<double> prev_error_;
  double raw_ = 0.0;
};

}  // namespace adf::sim
