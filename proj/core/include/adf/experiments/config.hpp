#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "adf/adaptive_filter.hpp"
#include "adf/sim/signals.hpp"

namespace adf::exp {

/// Raised for any invalid experiment configuration. `field()` names the
/// offending key.
class ConfigError : public std::runtime_error {
 public:
  ConfigError(std::string field, const std::string& why)
      : std::runtime_error(field + ": " + why), field_(std::move(field)) {}
  const std::string& field() const { return field_; }

 private:
  std::string field_;
};

enum class ExperimentKind { bench, frf, loop, ingest };
enum class FilterKind { adf, ldf, red, fd };

std::string_view to_string(ExperimentKind k);
std::string_view to_string(FilterKind k);

/// Everything needed to reproduce one run. Keys of the flat text format are
/// listed by config_keys(); the echo written next to every result uses them.
struct ExperimentConfig {
  ExperimentKind kind = ExperimentKind::bench;

  // filter selection; `filters` is used by frf, `filter` everywhere else
  FilterKind filter = FilterKind::adf;
  std::vector<FilterKind> filters = {FilterKind::adf, FilterKind::ldf, FilterKind::red};
  double delta = 1e-4;
  std::size_t r_max = 140;
  bool uniform = false;
  double omega0 = 600.0;
  double kappa = 8.0;

  sim::ReferenceSignal signal;
  sim::NoiseModel noise;

  double duration = 2.0;  // s
  double ts = 5e-4;       // s
  double settle = 0.1;    // s, metrics ignore samples before this time
  double hf_cutoff = 300.0;  // rad/s

  // closed loop
  double kp = 420.0;
  double ti = 0.07;
  double td = 0.03;
  double gamma = 0.0;
  double load = 0.0;
  bool clamp = false;

  // frf analysis grid
  double frf_lo = 1.0;
  double frf_hi = 800.0;
  int frf_points_per_decade = 10;
  double frf_cycles = 6.0;

  std::string out;    // CSV output path; empty disables the CSV
  std::string input;  // ingest source

  /// Defaults tuned for each experiment kind.
  static ExperimentConfig defaults(ExperimentKind kind);

  AdfParams adf_params() const;

  /// Throws ConfigError naming the first invalid field.
  void validate() const;
};

/// All recognised keys, in echo order.
const std::vector<std::string>& config_keys();

/// Sets one key from its text form. Throws ConfigError.
void set_value(ExperimentConfig& cfg, std::string_view key, std::string_view value);

/// Resolved parameters as (key, value) pairs. Feeding them back through
/// set_value reproduces the config.
std::vector<std::pair<std::string, std::string>> echo(const ExperimentConfig& cfg);

/// Parses "key = value" lines ('#' starts a comment) on top of `base`.
/// The `kind` key, when present, resets to that kind's defaults first.
ExperimentConfig parse_config(std::string_view text, ExperimentConfig base);

}  // namespace adf::exp
