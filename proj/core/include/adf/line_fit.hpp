#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "adf/sample.hpp"

namespace adf {

/// A line x = slope * (t - t_l) + value, anchored at the newest sample time t_l.
struct LineFit {
  double slope = 0.0;
  double value = 0.0;
  /// True when the intercept was clamped onto the delta band around x_l.
  bool constrained = false;
};

/// Least-squares line over `window` (oldest first, >= 2 samples, strictly
/// increasing times). Times are shifted so the newest sample sits at 0, which
/// makes `value` the fitted signal at the newest time.
LineFit fit_line(std::span<const Sample> window);

/// Least-squares line subject to |x_l - value| <= delta.
///
/// When the unconstrained intercept already lies in the band it is returned
/// unchanged. Otherwise the intercept is pinned to the nearer band edge and
/// the slope is re-minimised with the intercept fixed:
///   slope = sum s_i (x_i - value) / sum s_i^2,   s_i = t_i - t_l.
LineFit fit_line_constrained(std::span<const Sample> window, double delta);

/// Linear weights of the least-squares fit over r + 1 samples on a uniform
/// grid with period ts (oldest first, newest at shifted time 0).
///
///   slope = sum slope_w[i] x_i,   value = sum value_w[i] x_i
///
/// `pinned_slope_w` and `pinned_offset` give the slope for a fixed intercept
/// b: slope = sum pinned_slope_w[i] x_i - pinned_offset * b.
struct FitWeights {
  std::vector<double> slope_w;
  std::vector<double> value_w;
  std::vector<double> pinned_slope_w;
  double pinned_offset = 0.0;
};

/// Requires r >= 1 and ts > 0.
FitWeights uniform_fit_weights(std::size_t r, double ts);

/// Table of uniform-grid weights for every window size 1..r_max, stored flat
/// so lookups do not allocate.
class UniformFitTable {
 public:
  UniformFitTable(std::size_t r_max, double ts);

  std::size_t r_max() const { return r_max_; }
  double ts() const { return ts_; }

  std::span<const double> slope_weights(std::size_t r) const;
  std::span<const double> value_weights(std::size_t r) const;

  /// Same contract as fit_line_constrained for the last r + 1 samples of a
  /// uniformly sampled stream. Only the x values of `window` are read.
  LineFit fit(std::span<const Sample> window, double delta) const;

 private:
  std::size_t offset(std::size_t r) const { return (r - 1) * (r + 2) / 2; }

  std::size_t r_max_;
  double ts_;
  std::vector<double> slope_w_;
  std::vector<double> value_w_;
  std::vector<double> pinned_w_;
  std::vector<double> pinned_offset_;
};

}  // namespace adf
