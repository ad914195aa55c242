#pragma once

#include <complex>

#include "adf/differentiator.hpp"

namespace adf {

struct LdfParams {
  /// Natural frequency of the critically damped low-pass, rad/s.
  double omega0 = 600.0;
  /// Sampling period, s. omega0 * ts must stay below 2.
  double ts = 5e-4;

  void validate() const;
};

/// Biquad coefficients, normalised so a0 = 1.
struct Biquad {
  double b0 = 0.0, b1 = 0.0, b2 = 0.0;
  double a1 = 0.0, a2 = 0.0;
};

/// Differentiator cascaded with a unity-gain, critically damped second-order
/// low-pass:  H(s) = s * w0^2 / (s^2 + 2 w0 s + w0^2).
///
/// Discretised with the bilinear (Tustin) transform at ts, giving
///   b0 = K w0^2 / a,  b1 = 0,  b2 = -K w0^2 / a,
///   a1 = 2 (w0^2 - K^2) / a,  a2 = (K - w0)^2 / a,
/// with K = 2 / ts and a = (K + w0)^2. The filter state is primed from the
/// first sample as if the input had been constant before it.
class LinearFilteredDifferentiator final : public Differentiator {
 public:
  explicit LinearFilteredDifferentiator(const LdfParams& params);

  std::optional<double> step(const Sample& s) override;
  void reset() override;
  std::string_view name() const override { return "ldf"; }

  const Biquad& coefficients() const { return coeffs_; }
  const LdfParams& params() const { return params_; }

  /// H(e^{j omega ts}) of the discrete filter.
  std::complex<double> frequency_response(double omega) const;

 private:
  LdfParams params_;
  Biquad coeffs_;
  bool primed_ = false;
  double s1_ = 0.0;
  double s2_ = 0.0;
};

}  // namespace adf
