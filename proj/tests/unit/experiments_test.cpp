#include <gtest/gtest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "adf/adaptive_filter.hpp"
#include "adf/experiments/config.hpp"
#include "adf/experiments/csv.hpp"
#include "adf/experiments/metrics.hpp"
#include "adf/experiments/runner.hpp"
#include "adf/linear_filtered_differentiator.hpp"

namespace adf::exp {
namespace {

TEST(Config, ParseOverridesAndComments) {
  const auto cfg = parse_config(
      "# comment\n"
      "kind = loop\n"
      "filter = red   # trailing\n"
      "\n"
      "kappa=10\n"
      "noise = gaussian\n"
      "seed = 99\n"
      "filters = adf,fd\n",
      ExperimentConfig{});
  EXPECT_EQ(cfg.kind, ExperimentKind::loop);
  EXPECT_EQ(cfg.filter, FilterKind::red);
  EXPECT_EQ(cfg.kappa, 10.0);
  EXPECT_EQ(cfg.noise.kind, sim::NoiseKind::truncated_gaussian);
  EXPECT_EQ(cfg.noise.seed, 99u);
  EXPECT_EQ(cfg.gamma, 5.0);  // loop defaults applied before the overrides
  ASSERT_EQ(cfg.filters.size(), 2u);
  EXPECT_EQ(cfg.filters[1], FilterKind::fd);
}

TEST(Config, EchoRoundTrips) {
  for (auto kind : {ExperimentKind::bench, ExperimentKind::frf, ExperimentKind::loop,
                    ExperimentKind::ingest}) {
    auto cfg = ExperimentConfig::defaults(kind);
    cfg.delta = 0.1 + 0.2;
    cfg.noise.seed = 18446744073709551615ull;
    cfg.out = "a b.csv";
    std::string text;
    for (const auto& [k, v] : echo(cfg)) text += k + " = " + v + "\n";
    const auto back = parse_config(text, ExperimentConfig{});
    EXPECT_EQ(echo(back), echo(cfg));
    EXPECT_EQ(back.delta, cfg.delta);
  }
  EXPECT_EQ(echo(ExperimentConfig{}).size(), config_keys().size());
}

TEST(Config, ErrorsNameTheField) {
  auto expect_field = [](std::string_view text, const std::string& field) {
    try {
      parse_config(text, ExperimentConfig{}).validate();
      ADD_FAILURE() << "no error for " << text;
    } catch (const ConfigError& e) {
      EXPECT_EQ(e.field(), field) << e.what();
    }
  };
  expect_field("delta = abc", "delta");
  expect_field("delta = 0", "delta");
  expect_field("r_max = 0", "r_max");
  expect_field("filter = magic", "filter");
  expect_field("bogus = 1", "bogus");
  expect_field("duration = 0", "duration");
  expect_field("just words", "line 1");
  expect_field("kind = frf\nfrf_hi = 7000", "frf_hi");
  expect_field("kind = ingest", "input");
}

TEST(Csv, NumbersRoundTrip) {
  for (double v : {0.0, -0.0, 1e-300, 0.1, 1.0 / 3.0, -123456.789, 5e-4}) {
    EXPECT_EQ(parse_number(format_number(v)), v);
  }
  EXPECT_FALSE(parse_number("1.0x"));
  EXPECT_FALSE(parse_number(""));
  EXPECT_EQ(parse_number(" 2.5 "), 2.5);
}

TEST(Csv, ReadsSamples) {
  std::istringstream is("t,x\n0,0\n0.0005,0.0001");
  const auto s = read_samples(is);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].t, 0.0005);
  EXPECT_EQ(s[1].x, 0.0001);
}

TEST(Csv, ExtraColumnsAndOrder) {
  std::istringstream is("x,junk,t\n1,a,0\n2,b,1\n");
  const auto s = read_samples(is);
  ASSERT_EQ(s.size(), 2u);
  EXPECT_EQ(s[1].x, 2.0);
  EXPECT_EQ(s[1].t, 1.0);
}

TEST(Csv, Errors) {
  auto message = [](const std::string& text) {
    std::istringstream is(text);
    try {
      read_samples(is);
    } catch (const CsvError& e) {
      return std::string(e.what());
    }
    return std::string();
  };
  EXPECT_EQ(message(""), "no samples");
  EXPECT_EQ(message("t,x\n"), "no samples");
  EXPECT_NE(message("t,x\n0,0\n1,1\n0.5,2\n").find("line 4"), std::string::npos);
  EXPECT_NE(message("t,x\n0,0\n0,1\n").find("line 3"), std::string::npos);
  EXPECT_NE(message("a,b\n0,0\n").find("line 1"), std::string::npos);
  EXPECT_NE(message("t,x\n0,zz\n").find("line 2"), std::string::npos);
}

TEST(Csv, WriteReadRoundTrip) {
  std::vector<Sample> in;
  for (int i = 0; i < 50; ++i) in.push_back({i * 5e-4, std::sin(i * 0.37) * 1e-3});
  std::stringstream ss;
  write_samples(ss, in);
  EXPECT_EQ(read_samples(ss), in);
}

TEST(Metrics, HighpassRemovesSlowSignal) {
  const double ts = 5e-4;
  std::vector<double> slow, fast;
  for (int i = 0; i < 20000; ++i) {
    slow.push_back(std::sin(5.0 * i * ts));
    fast.push_back(std::sin(3000.0 * i * ts));
  }
  EXPECT_LT(highpass_power(slow, ts, 300, 2000), 1e-4);
  EXPECT_NEAR(highpass_power(fast, ts, 300, 2000), 0.5, 0.05);
}

TEST(Metrics, Rmse) {
  const std::vector<std::optional<double>> a = {std::nullopt, 1.0, 3.0};
  const std::vector<double> b = {100.0, 0.0, 3.0};
  EXPECT_NEAR(*rmse(a, b), std::sqrt(0.5), 1e-15);
}

TEST(Runner, AdfBeatsFiniteDifferenceOnNoisyRamp) {
  auto cfg = ExperimentConfig::defaults(ExperimentKind::bench);
  const auto adf = run_filter_bench(cfg);
  cfg.filter = FilterKind::fd;
  const auto fd = run_filter_bench(cfg);
  ASSERT_TRUE(adf.metrics.derivative_rmse && fd.metrics.derivative_rmse);
  EXPECT_LT(10.0 * *adf.metrics.derivative_rmse, *fd.metrics.derivative_rmse);
  EXPECT_EQ(adf.metrics.max_r_star, 140.0);
}

TEST(Runner, NoiseFreeTracking) {
  auto cfg = ExperimentConfig::defaults(ExperimentKind::bench);
  cfg.noise.kind = sim::NoiseKind::none;
  cfg.settle = 0.5;
  const std::pair<FilterKind, double> limits[] = {
      {FilterKind::adf, 1e-9}, {FilterKind::ldf, 1e-6}, {FilterKind::red, 0.16}, {FilterKind::fd, 1e-9}};
  for (const auto& [kind, limit] : limits) {
    cfg.filter = kind;
    EXPECT_LT(*run_filter_bench(cfg).metrics.derivative_rmse, limit) << to_string(kind);
  }
}

TEST(Runner, ZeroLengthSignalRejected) {
  auto cfg = ExperimentConfig::defaults(ExperimentKind::bench);
  cfg.duration = 0.0;
  EXPECT_THROW(run_filter_bench(cfg), ConfigError);
}

TEST(Runner, UnwritableOutput) {
  auto cfg = ExperimentConfig::defaults(ExperimentKind::bench);
  cfg.duration = 0.01;
  cfg.out = "/nonexistent-dir/x.csv";
  EXPECT_THROW(run_filter_bench(cfg), CsvError);
}

TEST(Runner, IngestMatchesDirectFilter) {
  const auto path = std::filesystem::temp_directory_path() / "adf_ingest_test.csv";
  std::vector<Sample> in;
  for (int i = 0; i < 300; ++i) in.push_back({i * 1e-3 + (i % 3) * 1e-4, 0.2 * i * 1e-3});
  {
    std::ofstream os(path);
    write_samples(os, in);
  }
  auto cfg = ExperimentConfig::defaults(ExperimentKind::ingest);
  cfg.input = path.string();
  cfg.delta = 1e-3;
  cfg.r_max = 20;
  const auto res = run_ingest(cfg);
  AdaptiveDifferentiatingFilter f(cfg.adf_params());
  ASSERT_EQ(res.samples.size(), in.size());
  for (std::size_t k = 0; k < in.size(); ++k) EXPECT_EQ(res.dx_est[k], f.update(in[k]).dx_hat);
  std::filesystem::remove(path);
}

TEST(Frf, LdfMatchesAnalyticResponse) {
  sim::ReferenceSignal chirp;
  chirp.kind = sim::SignalKind::chirp;
  chirp.amplitude = 1e-3;
  chirp.omega_lo = 50;
  chirp.omega_hi = 1000;
  chirp.sweep_time = 60;
  LinearFilteredDifferentiator ldf({600, 5e-4});
  Differentiator* filters[] = {&ldf};
  const auto table = estimate_frf(chirp, 5e-4, 60, filters, {100, 800, 10, 6});
  ASSERT_FALSE(table.omega.empty());
  for (std::size_t i = 0; i < table.omega.size(); ++i) {
    const double w = table.omega[i];
    const double analytic = 20 * std::log10(std::abs(ldf.frequency_response(w)));
    EXPECT_NEAR(table.gain_db[0][i], analytic, 0.5) << w;
    EXPECT_NEAR(table.ideal_est_db[i], table.ideal_db[i], 0.5) << w;
  }
}

}  // namespace
}  // namespace adf::exp
