// adf: run filter benchmarks, frequency responses, closed-loop simulations and
// CSV ingestion from the command line.
//
// Every successful run prints one JSON object on stdout holding the resolved
// configuration and the run's metrics. Failures print one JSON object on
// stderr and exit nonzero:
//   2  invalid configuration or command line
//   3  file input/output
//   1  anything else

#include "CLI11.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>
#include <string>

#include "adf/experiments/config.hpp"
#include "adf/experiments/csv.hpp"
#include "adf/experiments/runner.hpp"

namespace {

using adf::exp::ExperimentConfig;
using adf::exp::ExperimentKind;
using json = nlohmann::ordered_json;

constexpr int kExitConfig = 2;
constexpr int kExitIo = 3;
constexpr int kExitOther = 1;

int fail(int code, std::string_view kind, std::string_view field, std::string_view message) {
  json err = {{"status", "error"}, {"error", kind}};
  if (!field.empty()) err["field"] = field;
  err["message"] = message;
  std::cerr << err.dump() << '\n';
  return code;
}

json number_or_text(const std::string& text) {
  if (auto v = adf::exp::parse_number(text)) {
    if (text.find_first_of(".eE") == std::string::npos && std::abs(*v) < 9e15) {
      return static_cast<long long>(*v);
    }
    return *v;
  }
  return text;
}

json config_json(const ExperimentConfig& cfg) {
  json j = json::object();
  for (const auto& [k, v] : adf::exp::echo(cfg)) j[k] = v;
  return j;
}

json metrics_json(const adf::exp::Metrics& m) {
  json j = json::object();
  for (const auto& [k, v] : m.to_key_values()) j[k] = number_or_text(v);
  return j;
}

json frf_json(const adf::exp::FrfTable& t) {
  json j = {{"points", t.omega.size()}};
  if (t.omega.empty()) return j;
  j["omega_min"] = t.omega.front();
  j["omega_max"] = t.omega.back();
  json gains = json::object();
  for (std::size_t f = 0; f < t.names.size(); ++f) {
    json g = json::object();
    g["gain_db_min_omega"] = t.gain_db[f].front();
    g["gain_db_max_omega"] = t.gain_db[f].back();
    gains[t.names[f]] = g;
  }
  j["filters"] = gains;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw adf::exp::CsvError("cannot open " + path);
  std::ostringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

struct Command {
  ExperimentKind kind;
  CLI::App* app = nullptr;
  std::string config_path;
  std::map<std::string, std::string> overrides;
};

ExperimentConfig resolve(const Command& cmd) {
  ExperimentConfig cfg = ExperimentConfig::defaults(cmd.kind);
  if (!cmd.config_path.empty()) {
    cfg = adf::exp::parse_config(read_file(cmd.config_path), cfg);
    if (cfg.kind != cmd.kind) {
      throw adf::exp::ConfigError(
          "kind", "config file is for '" + std::string(adf::exp::to_string(cfg.kind)) +
                      "' but the command is '" + std::string(adf::exp::to_string(cmd.kind)) + "'");
    }
  }
  for (const auto& key : adf::exp::config_keys()) {
    if (auto it = cmd.overrides.find(key); it != cmd.overrides.end()) {
      adf::exp::set_value(cfg, key, it->second);
    }
  }
  cfg.kind = cmd.kind;
  cfg.validate();
  return cfg;
}

json run(const ExperimentConfig& cfg) {
  json out = {{"status", "ok"}, {"command", adf::exp::to_string(cfg.kind)}};
  out["config"] = config_json(cfg);
  switch (cfg.kind) {
    case ExperimentKind::bench:
      out["metrics"] = metrics_json(adf::exp::run_filter_bench(cfg).metrics);
      break;
    case ExperimentKind::frf:
      out["frf"] = frf_json(adf::exp::run_frf(cfg));
      break;
    case ExperimentKind::loop:
      out["metrics"] = metrics_json(adf::exp::run_closed_loop_experiment(cfg).metrics);
      break;
    case ExperimentKind::ingest:
      out["metrics"] = metrics_json(adf::exp::run_ingest(cfg).metrics);
      break;
  }
  if (!cfg.out.empty()) out["csv"] = cfg.out;
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adaptive differentiating filter experiments"};
  app.require_subcommand(1);

  const std::pair<ExperimentKind, const char*> kinds[] = {
      {ExperimentKind::bench, "Filter a generated noisy signal and score the derivative"},
      {ExperimentKind::frf, "Estimate frequency responses with a chirp"},
      {ExperimentKind::loop, "Simulate the PID position loop"},
      {ExperimentKind::ingest, "Filter a t,x CSV file"},
  };
  std::vector<Command> commands;
  commands.reserve(std::size(kinds));
  for (const auto& [kind, help] : kinds) {
    Command& cmd = commands.emplace_back();
    cmd.kind = kind;
    cmd.app = app.add_subcommand(std::string(adf::exp::to_string(kind)), help);
    cmd.app->add_option("-c,--config", cmd.config_path, "key = value file applied before flags");
    for (const auto& key : adf::exp::config_keys()) {
      if (key == "kind") continue;
      cmd.app->add_option_function<std::string>(
          "--" + key, [&cmd, key](const std::string& v) { cmd.overrides[key] = v; },
          "config key '" + key + "'");
    }
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kExitConfig, "usage", "", e.what());
  }

  const Command* active = nullptr;
  for (const Command& cmd : commands) {
    if (cmd.app->parsed()) active = &cmd;
  }

  try {
    const ExperimentConfig cfg = resolve(*active);
    std::cout << run(cfg).dump() << '\n';
    std::cout.flush();
    if (!std::cout) return fail(kExitIo, "io", "", "cannot write to stdout");
    return 0;
  } catch (const adf::exp::ConfigError& e) {
    return fail(kExitConfig, "config", e.field(), e.what());
  } catch (const adf::exp::CsvError& e) {
    return fail(kExitIo, "io", "", e.what());
  } catch (const std::exception& e) {
    return fail(kExitOther, "runtime", "", e.what());
  }
}
