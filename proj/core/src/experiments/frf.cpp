#include "adf/experiments/frf.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>

namespace adf::exp {

namespace {

struct Demodulator {
  std::span<const double> phase;
  std::size_t begin;
  std::size_t end;
  double centre;
  double half_width;

  std::complex<double> operator()(std::span<const double> signal) const {
    std::complex<double> acc{0.0, 0.0};
    for (std::size_t n = begin; n < end; ++n) {
      const double u = (phase[n] - centre) / (2.0 * half_width);  // in [-1/2, 1/2]
      const double hann = std::cos(std::numbers::pi * u);
      const double dphi = phase[n + 1] - phase[n];
      acc += signal[n] * hann * hann * dphi * std::polar(1.0, -phase[n]);
    }
    return acc;
  }
};

}  // namespace

FrfTable estimate_frf(const sim::ReferenceSignal& chirp, double ts, double duration,
                      std::span<Differentiator* const> filters, const FrfOptions& opts) {
  if (chirp.kind != sim::SignalKind::chirp) throw std::invalid_argument("signal: frf needs a chirp");
  chirp.validate();
  const auto n = static_cast<std::size_t>(std::llround(duration / ts));
  if (n < 4) throw std::invalid_argument("duration: too short for an frf");

  std::vector<double> phase(n + 1);
  std::vector<double> x(n);
  std::vector<double> dx(n);
  for (std::size_t k = 0; k <= n; ++k) {
    const double t = static_cast<double>(k) * ts;
    phase[k] = sim::chirp_phase(chirp, std::max(0.0, t - chirp.start));
    if (k < n) {
      const sim::ReferencePoint p = sim::evaluate(chirp, t);
      x[k] = p.value - chirp.offset;
      dx[k] = p.rate;
    }
  }

  std::vector<std::vector<double>> outputs;
  for (Differentiator* f : filters) {
    f->reset();
    std::vector<double> y(n);
    for (std::size_t k = 0; k < n; ++k) {
      const double t = static_cast<double>(k) * ts;
      y[k] = f->step({t, x[k] + chirp.offset}).value_or(0.0);
    }
    outputs.push_back(std::move(y));
  }

  FrfTable table;
  for (Differentiator* f : filters) table.names.emplace_back(f->name());
  table.gain_db.resize(filters.size());

  const double sweep_rate = std::log(chirp.omega_hi / chirp.omega_lo) / chirp.sweep_time;
  const double half_width = std::numbers::pi * opts.cycles;
  const double decades = std::log10(opts.omega_hi / opts.omega_lo);
  const int points = static_cast<int>(std::floor(decades * opts.points_per_decade + 1e-9)) + 1;

  for (int i = 0; i < points; ++i) {
    const double w = opts.omega_lo * std::pow(10.0, static_cast<double>(i) / opts.points_per_decade);
    if (w < chirp.omega_lo || w > chirp.omega_hi) continue;
    const double tau = std::log(w / chirp.omega_lo) / sweep_rate;
    const double centre = sim::chirp_phase(chirp, tau);
    if (centre - half_width < phase.front() || centre + half_width > phase[n - 1]) continue;

    const auto first = std::lower_bound(phase.begin(), phase.end() - 1, centre - half_width);
    const auto last = std::upper_bound(phase.begin(), phase.end() - 1, centre + half_width);
    const Demodulator demod{phase, static_cast<std::size_t>(first - phase.begin()),
                            static_cast<std::size_t>(last - phase.begin()), centre, half_width};

    const double in = std::abs(demod(x));
    table.omega.push_back(w);
    table.ideal_db.push_back(20.0 * std::log10(w));
    table.ideal_est_db.push_back(20.0 * std::log10(std::abs(demod(dx)) / in));
    for (std::size_t f = 0; f < filters.size(); ++f) {
      table.gain_db[f].push_back(20.0 * std::log10(std::abs(demod(outputs[f])) / in));
    }
  }
  return table;
}

}  // namespace adf::exp
