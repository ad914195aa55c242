#include "adf/experiments/runner.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <ostream>

#include "adf/adaptive_filter.hpp"
#include "adf/experiments/csv.hpp"
#include "adf/finite_difference.hpp"
#include "adf/linear_filtered_differentiator.hpp"
#include "adf/robust_exact_differentiator.hpp"

namespace adf::exp {

namespace {

using Clock = std::chrono::steady_clock;

std::size_t sample_count(const ExperimentConfig& cfg) {
  return static_cast<std::size_t>(std::llround(cfg.duration / cfg.ts));
}

std::size_t settle_index(const ExperimentConfig& cfg, std::size_t n) {
  return std::min(n, static_cast<std::size_t>(std::ceil(cfg.settle / cfg.ts - 1e-9)));
}

template <typename T>
std::optional<double> as_double(const std::optional<T>& v) {
  if (!v) return std::nullopt;
  return static_cast<double>(*v);
}

void window_stats(std::span<const std::optional<double>> r_star, std::size_t skip, Metrics& m) {
  double sum = 0.0;
  double max = 0.0;
  std::size_t count = 0;
  for (std::size_t i = skip; i < r_star.size(); ++i) {
    if (!r_star[i]) continue;
    sum += *r_star[i];
    max = std::max(max, *r_star[i]);
    ++count;
  }
  if (count == 0) return;
  m.mean_r_star = sum / static_cast<double>(count);
  m.max_r_star = max;
}

template <typename Result>
void write_to(const std::string& path, const Result& r) {
  if (path.empty()) return;
  std::ofstream os(path, std::ios::binary);
  if (!os) throw CsvError("cannot write " + path);
  write_csv(os, r);
  if (!os) throw CsvError("write failed for " + path);
}

}  // namespace

std::unique_ptr<Differentiator> make_differentiator(FilterKind kind, const ExperimentConfig& cfg) {
  switch (kind) {
    case FilterKind::adf:
      return std::make_unique<AdaptiveDifferentiatingFilter>(cfg.adf_params());
    case FilterKind::ldf:
      return std::make_unique<LinearFilteredDifferentiator>(LdfParams{cfg.omega0, cfg.ts});
    case FilterKind::red:
      return std::make_unique<RobustExactDifferentiator>(RedParams{cfg.kappa, cfg.ts});
    case FilterKind::fd:
      return std::make_unique<FiniteDifference>(cfg.ts);
  }
  throw ConfigError("filter", "unknown filter");
}

BenchResult run_filter_bench(const ExperimentConfig& cfg) {
  cfg.validate();
  const std::size_t n = sample_count(cfg);
  BenchResult res;
  BenchTrace& tr = res.trace;

  sim::NoiseSource noise(cfg.noise);
  tr.t.resize(n);
  tr.x_true.resize(n);
  tr.x_meas.resize(n);
  tr.dx_true.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double t = static_cast<double>(k) * cfg.ts;
    const sim::ReferencePoint p = sim::evaluate(cfg.signal, t);
    tr.t[k] = t;
    tr.x_true[k] = p.value;
    tr.dx_true[k] = p.rate;
    tr.x_meas[k] = p.value + noise.next();
  }

  tr.dx_est.resize(n);
  tr.x_hat.resize(n);
  tr.r_star.resize(n);
  const auto start = Clock::now();
  if (cfg.filter == FilterKind::adf) {
    AdaptiveDifferentiatingFilter adf(cfg.adf_params());
    for (std::size_t k = 0; k < n; ++k) {
      const FilterOutput out = adf.update({tr.t[k], tr.x_meas[k]});
      tr.dx_est[k] = out.dx_hat;
      tr.x_hat[k] = out.x_hat;
      tr.r_star[k] = static_cast<double>(out.r_star);
    }
  } else {
    auto diff = make_differentiator(cfg.filter, cfg);
    for (std::size_t k = 0; k < n; ++k) tr.dx_est[k] = diff->step({tr.t[k], tr.x_meas[k]});
  }
  const auto elapsed = std::chrono::duration<double, std::nano>(Clock::now() - start).count();

  Metrics& m = res.metrics;
  m.samples = n;
  m.ns_per_sample = elapsed / static_cast<double>(n);
  const std::size_t skip = settle_index(cfg, n);
  const auto tail = [skip](const auto& v) { return std::span(v).subspan(skip); };
  m.derivative_rmse = rmse(tail(tr.dx_est), tail(tr.dx_true));
  if (cfg.filter == FilterKind::adf) m.output_rmse = rmse(tail(tr.x_hat), tail(tr.x_true));
  window_stats(tr.r_star, skip, m);

  write_to(cfg.out, tr);
  return res;
}

FrfTable run_frf(const ExperimentConfig& cfg) {
  cfg.validate();
  std::vector<std::unique_ptr<Differentiator>> owned;
  std::vector<Differentiator*> filters;
  for (FilterKind k : cfg.filters) {
    owned.push_back(make_differentiator(k, cfg));
    filters.push_back(owned.back().get());
  }
  const FrfOptions opts{cfg.frf_lo, cfg.frf_hi, cfg.frf_points_per_decade, cfg.frf_cycles};
  FrfTable table = estimate_frf(cfg.signal, cfg.ts, cfg.duration, filters, opts);
  write_to(cfg.out, table);
  return table;
}

sim::LoopConfig loop_config(const ExperimentConfig& cfg) {
  sim::LoopConfig lc;
  lc.plant.ts = cfg.ts;
  lc.plant.load = cfg.load;
  lc.plant.clamp_position = cfg.clamp;
  lc.pid.kp = cfg.kp;
  lc.pid.ti = cfg.ti;
  lc.pid.td = cfg.td;
  lc.pid.gamma = cfg.gamma;
  lc.pid.ts = cfg.ts;
  lc.noise = cfg.noise;
  lc.reference = cfg.signal;
  lc.duration = cfg.duration;
  return lc;
}

LoopResult run_closed_loop_experiment(const ExperimentConfig& cfg) {
  cfg.validate();
  const sim::LoopConfig lc = loop_config(cfg);
  try {
    lc.validate();
  } catch (const std::invalid_argument& e) {
    throw ConfigError("loop", e.what());
  }
  auto diff = make_differentiator(cfg.filter, cfg);

  LoopResult res;
  const auto start = Clock::now();
  res.trace = sim::run_closed_loop(lc, *diff);
  const auto elapsed = std::chrono::duration<double, std::nano>(Clock::now() - start).count();

  const sim::LoopTrace& tr = res.trace;
  const std::size_t n = tr.size();
  Metrics& m = res.metrics;
  m.samples = n;
  m.ns_per_sample = elapsed / static_cast<double>(n);
  const std::size_t skip = settle_index(cfg, n);
  const auto tail = [skip](const auto& v) { return std::span(v).subspan(skip); };
  m.derivative_rmse = rmse(tail(tr.dx_est), tail(tr.v_true));
  m.output_rmse = rmse(tail(tr.x_true), tail(tr.r));
  m.hf_power = highpass_power(tr.u, cfg.ts, cfg.hf_cutoff, skip);
  m.final_error = tr.r.back() - tr.x_true.back();
  if (cfg.signal.kind == sim::SignalKind::step && cfg.signal.amplitude != 0.0) {
    const double peak = cfg.signal.amplitude > 0.0
                            ? *std::max_element(tr.x_true.begin(), tr.x_true.end())
                            : *std::min_element(tr.x_true.begin(), tr.x_true.end());
    m.overshoot = (peak - cfg.signal.offset - cfg.signal.amplitude) / cfg.signal.amplitude;
  }
  std::vector<std::optional<double>> windows(n);
  std::transform(tr.r_star.begin(), tr.r_star.end(), windows.begin(),
                 [](const auto& w) { return as_double(w); });
  window_stats(windows, skip, m);

  write_to(cfg.out, tr);
  return res;
}

IngestResult run_ingest(const ExperimentConfig& cfg) {
  cfg.validate();
  IngestResult res;
  res.samples = ingest_csv(cfg.input);
  const std::size_t n = res.samples.size();
  res.x_hat.resize(n);
  res.dx_est.resize(n);
  res.r_star.resize(n);

  const auto start = Clock::now();
  if (cfg.filter == FilterKind::adf) {
    AdaptiveDifferentiatingFilter adf(cfg.adf_params());
    for (std::size_t k = 0; k < n; ++k) {
      const FilterOutput out = adf.update(res.samples[k]);
      res.x_hat[k] = out.x_hat;
      res.dx_est[k] = out.dx_hat;
      res.r_star[k] = static_cast<double>(out.r_star);
    }
  } else {
    auto diff = make_differentiator(cfg.filter, cfg);
    for (std::size_t k = 0; k < n; ++k) res.dx_est[k] = diff->step(res.samples[k]);
  }
  const auto elapsed = std::chrono::duration<double, std::nano>(Clock::now() - start).count();

  res.metrics.samples = n;
  res.metrics.ns_per_sample = elapsed / static_cast<double>(n);
  window_stats(res.r_star, 0, res.metrics);

  write_to(cfg.out, res);
  return res;
}

void write_csv(std::ostream& os, const BenchTrace& tr) {
  CsvWriter w(os, {"t", "x_true", "x_meas", "dx_true", "dx_est", "r_star"});
  for (std::size_t k = 0; k < tr.t.size(); ++k) {
    w.row({tr.t[k], tr.x_true[k], tr.x_meas[k], tr.dx_true[k], tr.dx_est[k], tr.r_star[k]});
  }
}

void write_csv(std::ostream& os, const FrfTable& table) {
  std::vector<std::string> header = {"omega", "ideal_db", "ideal_est_db"};
  for (const auto& name : table.names) header.push_back(name + "_db");
  CsvWriter w(os, header);
  for (std::size_t i = 0; i < table.omega.size(); ++i) {
    std::vector<std::optional<double>> row = {table.omega[i], table.ideal_db[i],
                                              table.ideal_est_db[i]};
    for (const auto& g : table.gain_db) row.emplace_back(g[i]);
    w.row(row);
  }
}

void write_csv(std::ostream& os, const sim::LoopTrace& tr) {
  CsvWriter w(os, {"t", "r", "x_true", "x_meas", "u", "dx_est", "r_star"});
  for (std::size_t k = 0; k < tr.size(); ++k) {
    w.row({tr.t[k], tr.r[k], tr.x_true[k], tr.x_meas[k], tr.u[k], tr.dx_est[k],
           as_double(tr.r_star[k])});
  }
}

void write_csv(std::ostream& os, const IngestResult& res) {
  CsvWriter w(os, {"t", "x", "x_hat", "dx_est", "r_star"});
  for (std::size_t k = 0; k < res.samples.size(); ++k) {
    w.row({res.samples[k].t, res.samples[k].x, res.x_hat[k], res.dx_est[k], res.r_star[k]});
  }
}

}  // namespace adf::exp
