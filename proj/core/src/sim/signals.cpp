#include "adf/sim/signals.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace adf::sim {

void NoiseModel::validate() const {
  if (!(amplitude >= 0.0) || !std::isfinite(amplitude)) {
    throw std::invalid_argument("noise.d: must be a non-negative finite number");
  }
}

NoiseSource::NoiseSource(const NoiseModel& model)
    : model_(model),
      rng_(model.seed),
      uniform_(-model.amplitude, model.amplitude),
      normal_(0.0, model.amplitude / 3.0) {
  model_.validate();
}

double NoiseSource::next() {
  const double d = model_.amplitude;
  if (model_.kind == NoiseKind::none || d == 0.0) return 0.0;
  if (model_.kind == NoiseKind::uniform) return uniform_(rng_);
  for (;;) {
    const double w = normal_(rng_);
    if (std::abs(w) <= d) return w;
  }
}

void ReferenceSignal::validate() const {
  if (!std::isfinite(amplitude) || !std::isfinite(offset) || !std::isfinite(start)) {
    throw std::invalid_argument("signal: amplitude, offset and start must be finite");
  }
  switch (kind) {
    case SignalKind::step:
      break;
    case SignalKind::slope:
      if (!std::isfinite(rate)) throw std::invalid_argument("signal.rate: must be finite");
      if (!(std::abs(rate) < rate_bound)) {
        throw std::invalid_argument("signal.rate: |rate| must stay below rate_bound");
      }
      break;
    case SignalKind::chirp:
      if (!(omega_lo > 0.0 && omega_hi > omega_lo)) {
        throw std::invalid_argument("signal.omega_lo: need 0 < omega_lo < omega_hi");
      }
      if (!(sweep_time > 0.0)) throw std::invalid_argument("signal.sweep_time: must be positive");
      if (!(std::abs(amplitude) * omega_hi < rate_bound)) {
        throw std::invalid_argument("signal.amplitude: peak chirp rate exceeds rate_bound");
      }
      break;
    case SignalKind::sine:
      if (!(omega_lo > 0.0)) throw std::invalid_argument("signal.omega_lo: must be positive");
      if (!(std::abs(amplitude) * omega_lo < rate_bound)) {
        throw std::invalid_argument("signal.amplitude: peak sine rate exceeds rate_bound");
      }
      break;
  }
}

double chirp_frequency(const ReferenceSignal& ref, double tau) {
  if (tau >= ref.sweep_time) return ref.omega_hi;
  const double beta = std::log(ref.omega_hi / ref.omega_lo) / ref.sweep_time;
  return ref.omega_lo * std::exp(beta * tau);
}

double chirp_phase(const ReferenceSignal& ref, double tau) {
  const double beta = std::log(ref.omega_hi / ref.omega_lo) / ref.sweep_time;
  const double sweep = std::min(tau, ref.sweep_time);
  const double phase = ref.omega_lo * std::expm1(beta * sweep) / beta;
  // past the sweep the frequency holds at omega_hi
  return phase + ref.omega_hi * std::max(0.0, tau - ref.sweep_time);
}

ReferencePoint evaluate(const ReferenceSignal& ref, double t) {
  const double tau = t - ref.start;
  if (tau < 0.0) return {ref.offset, 0.0};
  switch (ref.kind) {
    case SignalKind::step:
      return {ref.offset + ref.amplitude, 0.0};
    case SignalKind::slope: {
      const double travel = ref.rate * tau;
      if (ref.amplitude > 0.0 && std::abs(travel) >= ref.amplitude) {
        return {ref.offset + std::copysign(ref.amplitude, ref.rate), 0.0};
      }
      return {ref.offset + travel, ref.rate};
    }
    case SignalKind::chirp: {
      const double phase = chirp_phase(ref, tau);
      return {ref.offset + ref.amplitude * std::sin(phase),
              ref.amplitude * std::cos(phase) * chirp_frequency(ref, tau)};
    }
    case SignalKind::sine: {
      const double phase = ref.omega_lo * tau;
      return {ref.offset + ref.amplitude * std::sin(phase),
              ref.amplitude * ref.omega_lo * std::cos(phase)};
    }
  }
  return {ref.offset, 0.0};
}

std::string_view to_string(NoiseKind k) {
  switch (k) {
    case NoiseKind::none: return "none";
    case NoiseKind::uniform: return "uniform";
    case NoiseKind::truncated_gaussian: return "gaussian";
  }
  return "?";
}

std::string_view to_string(SignalKind k) {
  switch (k) {
    case SignalKind::step: return "step";
    case SignalKind::slope: return "slope";
    case SignalKind::chirp: return "chirp";
    case SignalKind::sine: return "sine";
  }
  return "?";
}

}  // namespace adf::sim
