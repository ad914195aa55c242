#pragma once

#include <cstddef>
#include <optional>
#include <span>

#include "adf/differentiator.hpp"
#include "adf/line_fit.hpp"
#include "adf/sample.hpp"
#include "adf/sample_ring.hpp"
#include "adf/slope_envelope.hpp"

namespace adf {

struct AdfParams {
  /// Approximation band in signal units. Tune just above the noise bound.
  double delta = 0.0;
  /// Largest window size R (the window spans R + 1 samples).
  std::size_t r_max = 0;
  /// When set, least-squares fits use weights precomputed for this sampling
  /// period, and samples whose spacing is off that grid are rejected.
  std::optional<double> uniform_ts;

  /// Throws std::invalid_argument naming the offending field.
  void validate() const;
};

struct FilterOutput {
  /// Signal estimate at the newest time; always within delta of the newest x.
  double x_hat = 0.0;
  /// Derivative estimate. Empty for the very first sample of a stream.
  std::optional<double> dx_hat;
  /// Window size used for this output (0 for the first sample).
  std::size_t r_star = 0;
  /// True when the delta constraint on the intercept was active.
  bool constrained = false;
};

/// Adaptive differentiating filter.
///
/// Each step grows the window by one sample (up to r_max), shrinks it one
/// sample at a time until a line within +-delta of every windowed sample
/// exists, then fits that window by least squares with the intercept held
/// within delta of the newest sample. The feasibility test uses incrementally
/// maintained slope envelopes, so a step costs O(r_max) and allocates nothing.
class AdaptiveDifferentiatingFilter final : public Differentiator {
 public:
  explicit AdaptiveDifferentiatingFilter(const AdfParams& params);

  /// Throws std::invalid_argument for non-finite values, non-increasing
  /// times, or (uniform mode) off-grid spacing. The state is unchanged then.
  FilterOutput update(const Sample& s);

  std::optional<double> step(const Sample& s) override { return update(s).dx_hat; }
  void reset() override;
  std::string_view name() const override { return "adf"; }
  std::optional<std::size_t> window() const override;

  const AdfParams& params() const { return params_; }
  const SlopeEnvelope& envelope() const { return envelope_; }
  const SampleRing& history() const { return history_; }
  /// Current window size R (1 before the second sample arrives).
  std::size_t r() const { return envelope_.size() == 0 ? 1 : envelope_.size(); }

 private:
  AdfParams params_;
  SampleRing history_;
  SlopeEnvelope envelope_;
  std::optional<UniformFitTable> table_;
  std::optional<std::size_t> last_window_;
};

/// True iff some line stays within delta of every sample of `window`
/// (strictly increasing times). Evaluated through the slope envelopes; a
/// window of fewer than two samples is feasible by convention.
bool feasible(std::span<const Sample> window, double delta);

}  // namespace adf
