#pragma once

#include <optional>

#include "adf/differentiator.hpp"

namespace adf {

/// Two-point difference quotient (x_now - x_prev) / ts.
inline double finite_difference(double x_now, double x_prev, double ts) {
  return (x_now - x_prev) / ts;
}

/// Raw backward difference at a fixed sampling period.
class FiniteDifference final : public Differentiator {
 public:
  explicit FiniteDifference(double ts);

  std::optional<double> step(const Sample& s) override;
  void reset() override { prev_.reset(); }
  std::string_view name() const override { return "fd"; }

 private:
  double ts_;
  std::optional<double> prev_;
};

}  // namespace adf
