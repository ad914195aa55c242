#include <cmath>
#include <numbers>
#include <stdexcept>

#include "adf/finite_difference.hpp"
#include "adf/linear_filtered_differentiator.hpp"
#include "adf/robust_exact_differentiator.hpp"

namespace adf {

FiniteDifference::FiniteDifference(double ts) : ts_(ts) {
  if (!(ts > 0.0)) throw std::invalid_argument("ts: must be positive");
}

std::optional<double> FiniteDifference::step(const Sample& s) {
  std::optional<double> out;
  if (prev_) out = finite_difference(s.x, *prev_, ts_);
  prev_ = s.x;
  return out;
}

// ---------------------------------------------------------------------------

void LdfParams::validate() const {
  if (!(omega0 > 0.0)) throw std::invalid_argument("omega0: must be positive");
  if (!(ts > 0.0)) throw std::invalid_argument("ts: must be positive");
  if (!(omega0 * ts < 2.0)) throw std::invalid_argument("omega0: omega0 * ts must be below 2");
}

namespace {

Biquad tustin_ldf(const LdfParams& p) {
  const double k = 2.0 / p.ts;
  const double w2 = p.omega0 * p.omega0;
  const double a0 = (k + p.omega0) * (k + p.omega0);
  Biquad c;
  c.b0 = k * w2 / a0;
  c.b1 = 0.0;
  c.b2 = -k * w2 / a0;
  c.a1 = 2.0 * (w2 - k * k) / a0;
  c.a2 = (k - p.omega0) * (k - p.omega0) / a0;
  return c;
}

const LdfParams& checked(const LdfParams& p) {
  p.validate();
  return p;
}

}  // namespace

LinearFilteredDifferentiator::LinearFilteredDifferentiator(const LdfParams& params)
    : params_(checked(params)), coeffs_(tustin_ldf(params_)) {}

void LinearFilteredDifferentiator::reset() {
  primed_ = false;
  s1_ = s2_ = 0.0;
}

std::optional<double> LinearFilteredDifferentiator::step(const Sample& s) {
  const Biquad& c = coeffs_;
  if (!primed_) {
    // steady state for a constant input equal to the first sample (output 0)
    s2_ = c.b2 * s.x;
    s1_ = c.b1 * s.x + s2_;
    primed_ = true;
  }
  // transposed direct form II
  const double y = c.b0 * s.x + s1_;
  s1_ = c.b1 * s.x - c.a1 * y + s2_;
  s2_ = c.b2 * s.x - c.a2 * y;
  return y;
}

std::complex<double> LinearFilteredDifferentiator::frequency_response(double omega) const {
  const std::complex<double> zi = std::polar(1.0, -omega * params_.ts);  // z^-1
  const Biquad& c = coeffs_;
  return (c.b0 + c.b1 * zi + c.b2 * zi * zi) / (1.0 + c.a1 * zi + c.a2 * zi * zi);
}

// ---------------------------------------------------------------------------

void RedParams::validate() const {
  if (!(kappa > 0.0)) throw std::invalid_argument("kappa: must be positive");
  if (!(ts > 0.0)) throw std::invalid_argument("ts: must be positive");
}

namespace {

double sign(double v) { return (v > 0.0) - (v < 0.0); }

const RedParams& checked(const RedParams& p) {
  p.validate();
  return p;
}

}  // namespace

RedState red_step(const RedState& z, double x, const RedParams& p) {
  const double e = x - z.z0;
  const double mag = std::abs(e);
  const double sg = sign(e);
  const double k = p.kappa;
  RedState next;
  next.z0 = z.z0 + p.ts * (z.z1 + 3.1 * k * std::cbrt(mag * mag) * sg);
  next.z1 = z.z1 + p.ts * (z.z2 + 3.2 * k * k * std::cbrt(mag) * sg);
  next.z2 = z.z2 + p.ts * (1.1 * k * k * k * sg);
  return next;
}

RobustExactDifferentiator::RobustExactDifferentiator(const RedParams& params)
    : params_(checked(params)) {}

std::optional<double> RobustExactDifferentiator::step(const Sample& s) {
  state_ = red_step(state_, s.x, params_);
  return state_.z1;
}

}  // namespace adf
