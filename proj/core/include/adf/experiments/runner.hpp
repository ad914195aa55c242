#pragma once

#include <iosfwd>
#include <memory>
#include <optional>
#include <vector>

#include "adf/differentiator.hpp"
#include "adf/experiments/config.hpp"
#include "adf/experiments/frf.hpp"
#include "adf/experiments/metrics.hpp"
#include "adf/sim/closed_loop.hpp"

namespace adf::exp {

std::unique_ptr<Differentiator> make_differentiator(FilterKind kind, const ExperimentConfig& cfg);

/// Open-loop filter run on a generated noisy signal.
struct BenchTrace {
  std::vector<double> t;
  std::vector<double> x_true;
  std::vector<double> x_meas;
  std::vector<double> dx_true;
  std::vector<std::optional<double>> dx_est;
  std::vector<std::optional<double>> x_hat;  // adf only
  std::vector<std::optional<double>> r_star;
};

struct BenchResult {
  Metrics metrics;
  BenchTrace trace;
};

struct LoopResult {
  Metrics metrics;
  sim::LoopTrace trace;
};

struct IngestResult {
  Metrics metrics;
  std::vector<Sample> samples;
  std::vector<std::optional<double>> x_hat;
  std::vector<std::optional<double>> dx_est;
  std::vector<std::optional<double>> r_star;
};

/// Each runner validates `cfg` (ConfigError) and, when cfg.out is set, writes
/// its CSV there (CsvError if the path cannot be written).
BenchResult run_filter_bench(const ExperimentConfig& cfg);
FrfTable run_frf(const ExperimentConfig& cfg);
LoopResult run_closed_loop_experiment(const ExperimentConfig& cfg);
IngestResult run_ingest(const ExperimentConfig& cfg);

sim::LoopConfig loop_config(const ExperimentConfig& cfg);

// CSV layouts
void write_csv(std::ostream& os, const BenchTrace& tr);
void write_csv(std::ostream& os, const FrfTable& table);
void write_csv(std::ostream& os, const sim::LoopTrace& tr);
void write_csv(std::ostream& os, const IngestResult& res);

}  // namespace adf::exp
