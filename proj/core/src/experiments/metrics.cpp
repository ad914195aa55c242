#include "adf/experiments/metrics.hpp"

#include <cassert>
#include <cmath>

#include "adf/experiments/csv.hpp"

namespace adf::exp {

std::vector<std::pair<std::string, std::string>> Metrics::to_key_values() const {
  std::vector<std::pair<std::string, std::string>> kv;
  kv.emplace_back("samples", std::to_string(samples));
  auto opt = [&](const char* key, const std::optional<double>& v) {
    if (v) kv.emplace_back(key, format_number(*v));
  };
  opt("derivative_rmse", derivative_rmse);
  opt("output_rmse", output_rmse);
  opt("hf_power", hf_power);
  opt("overshoot", overshoot);
  opt("final_error", final_error);
  opt("mean_r_star", mean_r_star);
  opt("max_r_star", max_r_star);
  kv.emplace_back("ns_per_sample", format_number(ns_per_sample));
  return kv;
}

std::optional<double> rmse(std::span<const std::optional<double>> a, std::span<const double> b) {
  assert(a.size() == b.size());
  double sum = 0.0;
  std::size_t n = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i]) continue;
    const double d = *a[i] - b[i];
    sum += d * d;
    ++n;
  }
  if (n == 0) return std::nullopt;
  return std::sqrt(sum / static_cast<double>(n));
}

double rmse(std::span<const double> a, std::span<const double> b) {
  assert(a.size() == b.size() && !a.empty());
  double sum = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) sum += (a[i] - b[i]) * (a[i] - b[i]);
  return std::sqrt(sum / static_cast<double>(a.size()));
}

double highpass_power(std::span<const double> signal, double ts, double cutoff, std::size_t skip) {
  if (signal.size() <= skip) return 0.0;
  const double k = 2.0 / ts;
  const double wc = k * std::tan(0.5 * cutoff * ts);
  const double r2 = std::sqrt(2.0) * wc * k;
  const double a0 = k * k + r2 + wc * wc;
  const double b0 = k * k / a0;
  const double b1 = -2.0 * k * k / a0;
  const double b2 = k * k / a0;
  const double a1 = (2.0 * wc * wc - 2.0 * k * k) / a0;
  const double a2 = (k * k - r2 + wc * wc) / a0;

  double s2 = b2 * signal[0];
  double s1 = b1 * signal[0] + s2;
  double sum = 0.0;
  for (std::size_t i = 0; i < signal.size(); ++i) {
    const double x = signal[i];
    const double y = b0 * x + s1;
    s1 = b1 * x - a1 * y + s2;
    s2 = b2 * x - a2 * y;
    if (i >= skip) sum += y * y;
  }
  return sum / static_cast<double>(signal.size() - skip);
}

}  // namespace adf::exp
