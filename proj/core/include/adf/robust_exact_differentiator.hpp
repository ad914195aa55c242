#pragma once

#include "adf/differentiator.hpp"

namespace adf {

struct RedParams {
  /// Scaling factor; kappa^3 bounds the magnitude of the third derivative.
  double kappa = 8.0;
  /// Sampling period, s.
  double ts = 5e-4;

  void validate() const;
};

struct RedState {
  double z0 = 0.0;  // signal
  double z1 = 0.0;  // first derivative
  double z2 = 0.0;  // second derivative
};

/// Second-order homogeneous sliding-mode differentiator
///
///   z0' = z1 + 3.1 k   |e|^(2/3) sign(e)
///   z1' = z2 + 3.2 k^2 |e|^(1/3) sign(e)
///   z2' =      1.1 k^3           sign(e),     e = x - z0,
///
/// integrated with one explicit Euler step per sample. sign(0) = 0 and the
/// state starts at zero.
class RobustExactDifferentiator final : public Differentiator {
 public:
  explicit RobustExactDifferentiator(const RedParams& params);

  /// Advances the state by one period and returns the new z1.
  std::optional<double> step(const Sample& s) override;
  void reset() override { state_ = {}; }
  std::string_view name() const override { return "red"; }

  const RedState& state() const { return state_; }
  const RedParams& params() const { return params_; }

 private:
  RedParams params_;
  RedState state_;
};

/// One explicit Euler step of the differentiator ODEs for input x.
RedState red_step(const RedState& z, double x, const RedParams& p);

}  // namespace adf
