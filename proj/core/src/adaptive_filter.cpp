#include "adf/adaptive_filter.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace adf {

namespace {

// Relative tolerance on the sample spacing accepted by the uniform-grid path.
constexpr double kGridTolerance = 1e-6;

}  // namespace

void AdfParams::validate() const {
  if (!(delta > 0.0) || !std::isfinite(delta)) {
    throw std::invalid_argument("delta: must be a positive finite number");
  }
  if (r_max < 1) {
    throw std::invalid_argument("r_max: must be at least 1");
  }
  if (uniform_ts && (!(*uniform_ts > 0.0) || !std::isfinite(*uniform_ts))) {
    throw std::invalid_argument("uniform_ts: must be a positive finite number");
  }
}

namespace {

const AdfParams& checked(const AdfParams& p) {
  p.validate();
  return p;
}

}  // namespace

AdaptiveDifferentiatingFilter::AdaptiveDifferentiatingFilter(const AdfParams& params)
    : params_(checked(params)),
      history_(params.r_max + 1),
      envelope_(params.delta, params.r_max) {
  if (params_.uniform_ts) table_.emplace(params_.r_max, *params_.uniform_ts);
}

void AdaptiveDifferentiatingFilter::reset() {
  history_.clear();
  envelope_.clear();
  last_window_.reset();
}

std::optional<std::size_t> AdaptiveDifferentiatingFilter::window() const {
  return last_window_;
}

FilterOutput AdaptiveDifferentiatingFilter::update(const Sample& s) {
  if (!std::isfinite(s.t) || !std::isfinite(s.x)) {
    throw std::invalid_argument("sample: non-finite time or value");
  }
  if (!history_.empty()) {
    const double dt = s.t - history_.back().t;
    if (!(dt > 0.0)) {
      throw std::invalid_argument("sample: time " + std::to_string(s.t) +
                                  " does not follow " + std::to_string(history_.back().t));
    }
    if (table_ && std::abs(dt - table_->ts()) > kGridTolerance * table_->ts()) {
      throw std::invalid_argument("sample: spacing " + std::to_string(dt) +
                                  " is off the uniform grid");
    }
  }

  history_.push(s);
  if (history_.size() == 1) {
    last_window_ = 0;
    return {s.x, std::nullopt, 0, false};
  }

  envelope_.add_right(history_);
  // R = 1 (two samples) is always feasible, so the loop stops there.
  while (envelope_.size() > 1 && !envelope_.feasible()) envelope_.remove_left();

  const std::size_t r = envelope_.size();
  const auto window = history_.newest(r + 1);
  const LineFit fit =
      table_ ? table_->fit(window, params_.delta) : fit_line_constrained(window, params_.delta);
  last_window_ = r;
  return {fit.value, fit.slope, r, fit.constrained};
}

bool feasible(std::span<const Sample> window, double delta) {
  if (window.size() < 2) return true;
  SampleRing ring(window.size());
  SlopeEnvelope env(delta, window.size() - 1);
  for (const Sample& s : window) {
    ring.push(s);
    if (ring.size() >= 2) env.add_right(ring);
  }
  return env.feasible();
}

}  // namespace adf
