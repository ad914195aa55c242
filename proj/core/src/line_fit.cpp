#include "adf/line_fit.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace adf {

namespace {

// Band edge nearest to `toward`, rounded inward so |x - edge| <= delta holds
// in floating point as well.
double band_edge(double x, double delta, double toward) {
  double edge = x + std::copysign(delta, toward - x);
  while (std::abs(x - edge) > delta) edge = std::nextafter(edge, x);
  return edge;
}

// Re-solves for the slope with the intercept pinned to the nearer band edge.
LineFit pin_intercept(std::span<const Sample> window, double delta,
                      const LineFit& free_fit) {
  const Sample& last = window.back();
  const double pinned = band_edge(last.x, delta, free_fit.value);
  double num = 0.0;
  double den = 0.0;
  for (const Sample& s : window) {
    const double shifted = s.t - last.t;
    num += shifted * (s.x - pinned);
    den += shifted * shifted;
  }
  return {num / den, pinned, true};
}

}  // namespace

LineFit fit_line(std::span<const Sample> window) {
  assert(window.size() >= 2);
  const double n = static_cast<double>(window.size());
  const double t_last = window.back().t;

  double mean_s = 0.0;
  double mean_x = 0.0;
  for (const Sample& s : window) {
    mean_s += s.t - t_last;
    mean_x += s.x;
  }
  mean_s /= n;
  mean_x /= n;

  double sxx = 0.0;
  double sxy = 0.0;
  for (const Sample& s : window) {
    const double ds = (s.t - t_last) - mean_s;
    sxx += ds * ds;
    sxy += ds * (s.x - mean_x);
  }
  const double slope = sxy / sxx;
  return {slope, mean_x - slope * mean_s, false};
}

LineFit fit_line_constrained(std::span<const Sample> window, double delta) {
  const LineFit free_fit = fit_line(window);
  if (std::abs(window.back().x - free_fit.value) <= delta) return free_fit;
  return pin_intercept(window, delta, free_fit);
}

FitWeights uniform_fit_weights(std::size_t r, double ts) {
  if (r < 1) throw std::invalid_argument("uniform_fit_weights: r must be >= 1");
  if (!(ts > 0.0)) throw std::invalid_argument("uniform_fit_weights: ts must be positive");

  const std::size_t n = r + 1;
  std::vector<double> shifted(n);
  double mean_s = 0.0;
  for (std::size_t i = 0; i < n; ++i) {
    shifted[i] = -static_cast<double>(r - i) * ts;
    mean_s += shifted[i];
  }
  const double sum_s = mean_s;
  mean_s /= static_cast<double>(n);

  double sxx = 0.0;
  double sum_ss = 0.0;
  for (double s : shifted) {
    sxx += (s - mean_s) * (s - mean_s);
    sum_ss += s * s;
  }

  FitWeights w;
  w.slope_w.resize(n);
  w.value_w.resize(n);
  w.pinned_slope_w.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    w.slope_w[i] = (shifted[i] - mean_s) / sxx;
    w.value_w[i] = 1.0 / static_cast<double>(n) - mean_s * w.slope_w[i];
    w.pinned_slope_w[i] = shifted[i] / sum_ss;
  }
  w.pinned_offset = sum_s / sum_ss;
  return w;
}

UniformFitTable::UniformFitTable(std::size_t r_max, double ts)
    : r_max_(r_max), ts_(ts) {
  if (r_max < 1) throw std::invalid_argument("UniformFitTable: r_max must be >= 1");
  const std::size_t total = offset(r_max + 1);
  slope_w_.reserve(total);
  value_w_.reserve(total);
  pinned_w_.reserve(total);
  pinned_offset_.reserve(r_max);
  for (std::size_t r = 1; r <= r_max; ++r) {
    const FitWeights w = uniform_fit_weights(r, ts);
    slope_w_.insert(slope_w_.end(), w.slope_w.begin(), w.slope_w.end());
    value_w_.insert(value_w_.end(), w.value_w.begin(), w.value_w.end());
    pinned_w_.insert(pinned_w_.end(), w.pinned_slope_w.begin(), w.pinned_slope_w.end());
    pinned_offset_.push_back(w.pinned_offset);
  }
}

std::span<const double> UniformFitTable::slope_weights(std::size_t r) const {
  assert(r >= 1 && r <= r_max_);
  return {slope_w_.data() + offset(r), r + 1};
}

std::span<const double> UniformFitTable::value_weights(std::size_t r) const {
  assert(r >= 1 && r <= r_max_);
  return {value_w_.data() + offset(r), r + 1};
}

LineFit UniformFitTable::fit(std::span<const Sample> window, double delta) const {
  assert(window.size() >= 2 && window.size() <= r_max_ + 1);
  const std::size_t r = window.size() - 1;
  const double* slope_w = slope_w_.data() + offset(r);
  const double* value_w = value_w_.data() + offset(r);

  // weights sum to 0 (slope) and 1 (value), so work relative to the newest
  // sample to keep large offsets from cancelling
  const double x_last = window.back().x;
  double slope = 0.0;
  double value = 0.0;
  for (std::size_t i = 0; i < window.size(); ++i) {
    const double dx = window[i].x - x_last;
    slope += slope_w[i] * dx;
    value += value_w[i] * dx;
  }
  value += x_last;
  if (std::abs(x_last - value) <= delta) return {slope, value, false};

  const double pinned = band_edge(x_last, delta, value);
  const double* pinned_w = pinned_w_.data() + offset(r);
  double pinned_slope = -pinned_offset_[r - 1] * (pinned - x_last);
  for (std::size_t i = 0; i < window.size(); ++i) {
    pinned_slope += pinned_w[i] * (window[i].x - x_last);
  }
  return {pinned_slope, pinned, true};
}

}  // namespace adf
