#include "adf/sim/pid.hpp"

#include <algorithm>
#include <stdexcept>

namespace adf::sim {

void PidParams::validate() const {
  if (!(kp > 0.0)) throw std::invalid_argument("pid.kp: must be positive");
  if (!(ti > 0.0)) throw std::invalid_argument("pid.ti: must be positive");
  if (!(td > 0.0)) throw std::invalid_argument("pid.td: must be positive");
  if (!(ts > 0.0)) throw std::invalid_argument("pid.ts: must be positive");
  if (!(u_min < u_max)) throw std::invalid_argument("pid.u_min: must be below u_max");
}

PidController::PidController(const PidParams& params) : params_(params) {
  params_.validate();
}

void PidController::reset() {
  integral_ = 0.0;
  prev_error_.reset();
  raw_ = 0.0;
}

double PidController::step(double r, double x_meas, std::optional<double> dx_est, double dr) {
  const PidParams& p = params_;
  const double e = r - x_meas;
  const double increment = prev_error_ ? 0.5 * p.ts * (e + *prev_error_) : 0.0;
  prev_error_ = e;

  const double d_term = dx_est ? p.td * (dr - *dx_est) : 0.0;
  auto command = [&](double integral) {
    return p.kp * (e + integral / p.ti + d_term) + p.gamma;
  };

  double candidate = integral_ + increment;
  double v = command(candidate);
  const bool pushes_high = v > p.u_max && increment > 0.0;
  const bool pushes_low = v < p.u_min && increment < 0.0;
  if (pushes_high || pushes_low) {
    candidate = integral_;
    v = command(candidate);
  }
  integral_ = candidate;
  raw_ = v;
  return std::clamp(v, p.u_min, p.u_max);
}

}  // namespace adf::sim
