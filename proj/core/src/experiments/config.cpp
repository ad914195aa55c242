#include "adf/experiments/config.hpp"

#include <charconv>
#include <cmath>
#include <functional>
#include <limits>

#include "adf/experiments/csv.hpp"
#include "adf/linear_filtered_differentiator.hpp"
#include "adf/robust_exact_differentiator.hpp"
#include "adf/sim/pid.hpp"

namespace adf::exp {

std::string_view to_string(ExperimentKind k) {
  switch (k) {
    case ExperimentKind::bench: return "bench";
    case ExperimentKind::frf: return "frf";
    case ExperimentKind::loop: return "loop";
    case ExperimentKind::ingest: return "ingest";
  }
  return "?";
}

std::string_view to_string(FilterKind k) {
  switch (k) {
    case FilterKind::adf: return "adf";
    case FilterKind::ldf: return "ldf";
    case FilterKind::red: return "red";
    case FilterKind::fd: return "fd";
  }
  return "?";
}

namespace {

using Setter = std::function<void(ExperimentConfig&, std::string_view)>;
using Getter = std::function<std::string(const ExperimentConfig&)>;

struct Field {
  std::string key;
  Setter set;
  Getter get;
};

double to_double(std::string_view key, std::string_view v) {
  const auto d = parse_number(v);
  if (!d) throw ConfigError(std::string(key), "not a number: '" + std::string(v) + "'");
  return *d;
}

long long to_integer(std::string_view key, std::string_view v) {
  const double d = to_double(key, v);
  if (d != std::floor(d) || std::abs(d) > 9.0e15) {
    throw ConfigError(std::string(key), "not an integer: '" + std::string(v) + "'");
  }
  return static_cast<long long>(d);
}

bool to_bool(std::string_view key, std::string_view v) {
  if (v == "true" || v == "1" || v == "yes" || v == "on") return true;
  if (v == "false" || v == "0" || v == "no" || v == "off") return false;
  throw ConfigError(std::string(key), "not a boolean: '" + std::string(v) + "'");
}

FilterKind to_filter(std::string_view key, std::string_view v) {
  for (auto k : {FilterKind::adf, FilterKind::ldf, FilterKind::red, FilterKind::fd}) {
    if (v == to_string(k)) return k;
  }
  throw ConfigError(std::string(key), "unknown filter '" + std::string(v) + "' (adf|ldf|red|fd)");
}

ExperimentKind to_kind(std::string_view key, std::string_view v) {
  for (auto k : {ExperimentKind::bench, ExperimentKind::frf, ExperimentKind::loop,
                 ExperimentKind::ingest}) {
    if (v == to_string(k)) return k;
  }
  throw ConfigError(std::string(key), "unknown experiment '" + std::string(v) + "'");
}

Field number(std::string key, double ExperimentConfig::*member) {
  return {key,
          [member, key](ExperimentConfig& c, std::string_view v) { c.*member = to_double(key, v); },
          [member](const ExperimentConfig& c) { return format_number(c.*member); }};
}

Field signal_number(std::string key, double sim::ReferenceSignal::*member) {
  return {key,
          [member, key](ExperimentConfig& c, std::string_view v) {
            c.signal.*member = to_double(key, v);
          },
          [member](const ExperimentConfig& c) { return format_number(c.signal.*member); }};
}

Field flag(std::string key, bool ExperimentConfig::*member) {
  return {key,
          [member, key](ExperimentConfig& c, std::string_view v) { c.*member = to_bool(key, v); },
          [member](const ExperimentConfig& c) { return std::string(c.*member ? "true" : "false"); }};
}

const std::vector<Field>& fields() {
  static const std::vector<Field> table = [] {
    std::vector<Field> f;
    f.push_back({"kind",
                 [](ExperimentConfig& c, std::string_view v) { c.kind = to_kind("kind", v); },
                 [](const ExperimentConfig& c) { return std::string(to_string(c.kind)); }});
    f.push_back({"filter",
                 [](ExperimentConfig& c, std::string_view v) { c.filter = to_filter("filter", v); },
                 [](const ExperimentConfig& c) { return std::string(to_string(c.filter)); }});
    f.push_back({"filters",
                 [](ExperimentConfig& c, std::string_view v) {
                   std::vector<FilterKind> list;
                   std::size_t pos = 0;
                   while (pos <= v.size()) {
                     const std::size_t comma = std::min(v.find(',', pos), v.size());
                     list.push_back(to_filter("filters", v.substr(pos, comma - pos)));
                     pos = comma + 1;
                   }
                   c.filters = std::move(list);
                 },
                 [](const ExperimentConfig& c) {
                   std::string s;
                   for (auto k : c.filters) s += (s.empty() ? "" : ",") + std::string(to_string(k));
                   return s;
                 }});
    f.push_back(number("delta", &ExperimentConfig::delta));
    f.push_back({"r_max",
                 [](ExperimentConfig& c, std::string_view v) {
                   const long long r = to_integer("r_max", v);
                   if (r < 1) throw ConfigError("r_max", "must be at least 1");
                   c.r_max = static_cast<std::size_t>(r);
                 },
                 [](const ExperimentConfig& c) { return std::to_string(c.r_max); }});
    f.push_back(flag("uniform", &ExperimentConfig::uniform));
    f.push_back(number("omega0", &ExperimentConfig::omega0));
    f.push_back(number("kappa", &ExperimentConfig::kappa));

    f.push_back({"signal",
                 [](ExperimentConfig& c, std::string_view v) {
                   for (auto k : {sim::SignalKind::step, sim::SignalKind::slope,
                                  sim::SignalKind::chirp, sim::SignalKind::sine}) {
                     if (v == sim::to_string(k)) {
                       c.signal.kind = k;
                       return;
                     }
                   }
                   throw ConfigError("signal", "unknown signal '" + std::string(v) + "'");
                 },
                 [](const ExperimentConfig& c) { return std::string(sim::to_string(c.signal.kind)); }});
    f.push_back(signal_number("amplitude", &sim::ReferenceSignal::amplitude));
    f.push_back(signal_number("rate", &sim::ReferenceSignal::rate));
    f.push_back(signal_number("offset", &sim::ReferenceSignal::offset));
    f.push_back(signal_number("start", &sim::ReferenceSignal::start));
    f.push_back(signal_number("omega_lo", &sim::ReferenceSignal::omega_lo));
    f.push_back(signal_number("omega_hi", &sim::ReferenceSignal::omega_hi));
    f.push_back(signal_number("sweep_time", &sim::ReferenceSignal::sweep_time));
    f.push_back(signal_number("rate_bound", &sim::ReferenceSignal::rate_bound));

    f.push_back({"noise",
                 [](ExperimentConfig& c, std::string_view v) {
                   for (auto k : {sim::NoiseKind::none, sim::NoiseKind::uniform,
                                  sim::NoiseKind::truncated_gaussian}) {
                     if (v == sim::to_string(k)) {
                       c.noise.kind = k;
                       return;
                     }
                   }
                   throw ConfigError("noise", "unknown noise '" + std::string(v) +
                                                  "' (none|uniform|gaussian)");
                 },
                 [](const ExperimentConfig& c) { return std::string(sim::to_string(c.noise.kind)); }});
    f.push_back({"noise_d",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.noise.amplitude = to_double("noise_d", v);
                 },
                 [](const ExperimentConfig& c) { return format_number(c.noise.amplitude); }});
    f.push_back({"seed",
                 [](ExperimentConfig& c, std::string_view v) {
                   std::uint64_t s = 0;
                   const auto res = std::from_chars(v.data(), v.data() + v.size(), s);
                   if (res.ec != std::errc{} || res.ptr != v.data() + v.size()) {
                     throw ConfigError("seed", "not an unsigned integer: '" + std::string(v) + "'");
                   }
                   c.noise.seed = s;
                 },
                 [](const ExperimentConfig& c) { return std::to_string(c.noise.seed); }});

    f.push_back(number("duration", &ExperimentConfig::duration));
    f.push_back(number("ts", &ExperimentConfig::ts));
    f.push_back(number("settle", &ExperimentConfig::settle));
    f.push_back(number("hf_cutoff", &ExperimentConfig::hf_cutoff));
    f.push_back(number("kp", &ExperimentConfig::kp));
    f.push_back(number("ti", &ExperimentConfig::ti));
    f.push_back(number("td", &ExperimentConfig::td));
    f.push_back(number("gamma", &ExperimentConfig::gamma));
    f.push_back(number("load", &ExperimentConfig::load));
    f.push_back(flag("clamp", &ExperimentConfig::clamp));
    f.push_back(number("frf_lo", &ExperimentConfig::frf_lo));
    f.push_back(number("frf_hi", &ExperimentConfig::frf_hi));
    f.push_back({"frf_points_per_decade",
                 [](ExperimentConfig& c, std::string_view v) {
                   c.frf_points_per_decade = static_cast<int>(to_integer("frf_points_per_decade", v));
                 },
                 [](const ExperimentConfig& c) { return std::to_string(c.frf_points_per_decade); }});
    f.push_back(number("frf_cycles", &ExperimentConfig::frf_cycles));
    f.push_back({"out",
                 [](ExperimentConfig& c, std::string_view v) { c.out = std::string(v); },
                 [](const ExperimentConfig& c) { return c.out; }});
    f.push_back({"input",
                 [](ExperimentConfig& c, std::string_view v) { c.input = std::string(v); },
                 [](const ExperimentConfig& c) { return c.input; }});
    return f;
  }();
  return table;
}

std::string_view trim(std::string_view s) {
  const auto blank = [](char c) { return c == ' ' || c == '\t' || c == '\r'; };
  while (!s.empty() && blank(s.front())) s.remove_prefix(1);
  while (!s.empty() && blank(s.back())) s.remove_suffix(1);
  return s;
}

}  // namespace

ExperimentConfig ExperimentConfig::defaults(ExperimentKind kind) {
  ExperimentConfig c;
  c.kind = kind;
  switch (kind) {
    case ExperimentKind::bench:
      // noisy ramp
      c.signal.kind = sim::SignalKind::slope;
      c.signal.rate = 0.01;
      c.signal.amplitude = 0.0;
      c.duration = 2.0;
      break;
    case ExperimentKind::frf:
      c.signal.kind = sim::SignalKind::chirp;
      c.signal.amplitude = 3e-3;
      c.signal.omega_lo = 0.1;
      c.signal.omega_hi = 1000.0;
      c.signal.sweep_time = 300.0;
      c.noise.kind = sim::NoiseKind::none;
      c.duration = 300.0;
      c.settle = 0.0;
      break;
    case ExperimentKind::loop:
      c.signal.kind = sim::SignalKind::step;
      c.signal.amplitude = 0.01;
      c.signal.start = 0.1;
      c.duration = 3.0;
      c.settle = 0.0;
      // gravity stand-in so the 0..10 V actuator can brake
      c.gamma = 5.0;
      c.load = 5.0;
      break;
    case ExperimentKind::ingest:
      c.settle = 0.0;
      break;
  }
  return c;
}

AdfParams ExperimentConfig::adf_params() const {
  AdfParams p{delta, r_max, std::nullopt};
  if (uniform) p.uniform_ts = ts;
  return p;
}

void ExperimentConfig::validate() const {
  if (!(ts > 0.0) || !std::isfinite(ts)) throw ConfigError("ts", "must be positive");
  if (kind != ExperimentKind::ingest && !(duration > 0.0)) {
    throw ConfigError("duration", "must be positive");
  }
  if (kind != ExperimentKind::ingest && duration / ts < 1.0) {
    throw ConfigError("duration", "shorter than one sample");
  }
  if (!(settle >= 0.0)) throw ConfigError("settle", "must be non-negative");
  if (!(hf_cutoff > 0.0 && hf_cutoff * ts < 3.14159)) {
    throw ConfigError("hf_cutoff", "must lie in (0, pi/ts)");
  }

  auto rethrow = [](auto&& check) {
    try {
      check();
    } catch (const std::invalid_argument& e) {
      const std::string msg = e.what();
      const auto colon = msg.find(':');
      throw ConfigError(colon == std::string::npos ? "config" : msg.substr(0, colon),
                        colon == std::string::npos ? msg : std::string(trim(msg.substr(colon + 1))));
    }
  };
  rethrow([&] { adf_params().validate(); });
  rethrow([&] { LdfParams{omega0, ts}.validate(); });
  rethrow([&] { RedParams{kappa, ts}.validate(); });
  rethrow([&] { noise.validate(); });
  rethrow([&] { signal.validate(); });

  if (kind == ExperimentKind::frf) {
    if (filters.empty()) throw ConfigError("filters", "must name at least one filter");
    if (signal.kind != sim::SignalKind::chirp) throw ConfigError("signal", "frf needs a chirp");
    const double nyquist = 3.141592653589793 / ts;
    if (!(signal.omega_hi < nyquist)) throw ConfigError("omega_hi", "must be below pi/ts");
    if (!(frf_lo > 0.0 && frf_lo < frf_hi)) throw ConfigError("frf_lo", "need 0 < frf_lo < frf_hi");
    if (!(frf_hi < nyquist)) throw ConfigError("frf_hi", "must be below pi/ts");
    if (frf_points_per_decade < 1) throw ConfigError("frf_points_per_decade", "must be >= 1");
    if (!(frf_cycles >= 1.0)) throw ConfigError("frf_cycles", "must be >= 1");
  }
  if (kind == ExperimentKind::loop) {
    rethrow([&] { sim::PidParams{kp, ti, td, gamma, 0.0, 10.0, ts}.validate(); });
  }
  if (kind == ExperimentKind::ingest && input.empty()) {
    throw ConfigError("input", "ingest needs an input path");
  }
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = [] {
    std::vector<std::string> k;
    for (const Field& f : fields()) k.push_back(f.key);
    return k;
  }();
  return keys;
}

void set_value(ExperimentConfig& cfg, std::string_view key, std::string_view value) {
  for (const Field& f : fields()) {
    if (f.key == key) {
      f.set(cfg, trim(value));
      return;
    }
  }
  throw ConfigError(std::string(key), "unknown key");
}

std::vector<std::pair<std::string, std::string>> echo(const ExperimentConfig& cfg) {
  std::vector<std::pair<std::string, std::string>> out;
  for (const Field& f : fields()) out.emplace_back(f.key, f.get(cfg));
  return out;
}

ExperimentConfig parse_config(std::string_view text, ExperimentConfig base) {
  std::vector<std::pair<std::string, std::string>> entries;
  std::size_t line_no = 0;
  while (!text.empty()) {
    const std::size_t nl = text.find('\n');
    std::string_view line = text.substr(0, nl);
    text = nl == std::string_view::npos ? std::string_view{} : text.substr(nl + 1);
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("line " + std::to_string(line_no), "expected key = value");
    }
    entries.emplace_back(std::string(trim(line.substr(0, eq))),
                         std::string(trim(line.substr(eq + 1))));
  }

  ExperimentConfig cfg = std::move(base);
  for (const auto& [key, value] : entries) {
    if (key == "kind") cfg = ExperimentConfig::defaults(to_kind("kind", value));
  }
  for (const auto& [key, value] : entries) set_value(cfg, key, value);
  return cfg;
}

}  // namespace adf::exp
