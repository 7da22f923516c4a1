#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "geqw/experiments.hpp"

using namespace geqw;

namespace {
struct TempFile {
  std::string path;
  explicit TempFile(const std::string& name)
      : path("/tmp/geqw_test_" + name) {}
  ~TempFile() { std::remove(path.c_str()); }
};
}  // namespace

TEST_CASE("parse_grid") {
  CHECK(parse_grid("1,2,3", "x") == std::vector<double>{1, 2, 3});
  CHECK(parse_grid("0:90:45", "x") == std::vector<double>{0, 45, 90});
  const auto with_inf = parse_grid("0.5,inf", "q");
  CHECK(with_inf.size() == 2);
  CHECK(std::isinf(with_inf[1]));
  CHECK_THROWS_WITH_AS(parse_grid("1,abc", "q"),
                       "q: malformed numeric value 'abc'",
                       std::invalid_argument);
  CHECK_THROWS_AS(parse_grid("", "q"), std::invalid_argument);
}

TEST_CASE("parse_config key=value files") {
  TempFile file("config.cfg");
  {
    std::ofstream out(file.path);
    out << "# comment\n"
        << "kind = entropy-vs-q\n"
        << "q = 0.5,0.6,inf\n"
        << "theta-grid = 45\n"
        << "steps = 200\n"
        << "ensemble = 10\n"
        << "seed = 42\n"
        << "coin = kempe\n"
        << "phi = orthey\n"
        << "out = /tmp/geqw_test_out.csv\n";
  }
  const auto spec = parse_config(file.path);
  CHECK(spec.kind == ExperimentKind::EntropyVsQ);
  CHECK(spec.q_grid.size() == 3);
  CHECK(std::isinf(spec.q_grid[2]));
  CHECK(spec.theta_grid == std::vector<double>{45});
  CHECK(spec.steps == 200);
  CHECK(spec.ensemble == 10);
  CHECK(spec.seed == 42);
  CHECK(spec.phi_orthey);
  // defaults fill unset fields
  CHECK(spec.window_fraction == 0.5);
}

TEST_CASE("parse_config rejects bad input naming the key") {
  TempFile file("bad.cfg");
  SUBCASE("unknown key") {
    std::ofstream(file.path) << "frobnicate = 3\n";
    CHECK_THROWS_WITH_AS(parse_config(file.path), "unknown key 'frobnicate'",
                         std::invalid_argument);
  }
  SUBCASE("malformed numeric") {
    std::ofstream(file.path) << "steps = twelve\n";
    CHECK_THROWS_WITH_AS(parse_config(file.path),
                         "steps: malformed numeric value 'twelve'",
                         std::invalid_argument);
  }
  SUBCASE("missing file") {
    CHECK_THROWS_AS(parse_config("/nonexistent/geqw.cfg"),
                    std::invalid_argument);
  }
}

TEST_CASE("spec round-trips through JSON") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::TraceDistanceSeries;
  spec.q_grid = {0.5, 1.0, kQInfinity};
  spec.theta_grid = {45.0};
  spec.sigma2_grid = {0.0, 100.0};
  spec.phi_orthey = true;
  spec.steps = 321;
  spec.ensemble = 7;
  spec.seed = 99;
  spec.window_fraction = 0.25;
  spec.out = "somewhere.csv";

  const auto restored = spec_from_json(spec_to_json(spec));
  CHECK(restored.kind == spec.kind);
  CHECK(restored.q_grid.size() == 3);
  CHECK(std::isinf(restored.q_grid[2]));
  CHECK(restored.sigma2_grid == spec.sigma2_grid);
  CHECK(restored.phi_orthey);
  CHECK(restored.steps == spec.steps);
  CHECK(restored.ensemble == spec.ensemble);
  CHECK(restored.seed == spec.seed);
  CHECK(restored.window_fraction == spec.window_fraction);
  CHECK(restored.out == spec.out);
}

TEST_CASE("surface grid completeness") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::EntropySurface;
  spec.theta_grid = {0.0, 45.0, 90.0};
  spec.omega_grid = {0.0, 90.0};
  spec.q_grid = {0.5};
  spec.steps = 50;
  spec.ensemble = 1;
  const auto table = exp_entropy_surface(spec);
  CHECK(table.rows.size() == 6);
  CHECK(table.columns.size() == 4);
  for (const auto& row : table.rows) CHECK(row.size() == 4);
}

TEST_CASE("entropy-vs-q rows carry zero std at q = 0.5") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::EntropyVsQ;
  spec.q_grid = {0.5};
  spec.theta_grid = {45.0};
  spec.omega_grid = {90.0};
  spec.steps = 100;
  spec.ensemble = 5;
  const auto table = exp_entropy_vs_q(spec);
  REQUIRE(table.rows.size() == 1);
  CHECK(table.rows[0][5] == 0.0);
}

TEST_CASE("diffusion pipeline recovers a planted exponent") {
  // feed a synthetic t^3 variance through the same fit the driver uses
  const long T = 1000;
  Eigen::VectorXd series(T + 1);
  series(0) = 0.0;
  for (long t = 1; t <= T; ++t) {
    series(t) = std::pow(static_cast<double>(t), 3.0);
  }
  const auto fit = fit_power_law(series, (T + 1) / 2, T);
  CHECK(std::abs(fit.exponent - 3.0) < 1e-9);
}

TEST_CASE("stationary series fits to exponent zero") {
  const long T = 500;
  Eigen::VectorXd series = Eigen::VectorXd::Constant(T + 1, 0.125);
  const auto fit = fit_power_law_binned(series, 50, T);
  CHECK(std::abs(fit.exponent) < 1e-9);
}

TEST_CASE("write_results and bit-exact replay from the sidecar") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::EntropySeries;
  spec.q_grid = {1.0};
  spec.theta_grid = {45.0};
  spec.omega_grid = {90.0};
  spec.steps = 40;
  spec.ensemble = 3;
  spec.seed = 5;
  TempFile csv("replay.csv");
  TempFile sidecar("replay.csv.meta.json");
  spec.out = csv.path;

  const auto first = exp_series(spec);
  write_results(first, csv.path);

  const auto respec = parse_config(csv.path + ".meta.json");
  const auto second = run_experiment(respec);
  REQUIRE(first.rows.size() == second.rows.size());
  for (std::size_t i = 0; i < first.rows.size(); ++i) {
    CHECK(first.rows[i] == second.rows[i]);  // bit-exact
  }

  // CSV has a header line and one line per row
  std::ifstream in(csv.path);
  std::string line;
  long lines = 0;
  while (std::getline(in, line)) ++lines;
  CHECK(lines == static_cast<long>(first.rows.size()) + 1);
}

TEST_CASE("series experiment basics") {
  ExperimentSpec spec;
  spec.kind = ExperimentKind::IprSeries;
  spec.q_grid = {0.5};
  spec.theta_grid = {45.0};
  spec.omega_grid = {90.0};
  spec.steps = 20;
  spec.ensemble = 1;
  const auto table = exp_series(spec);
  // IPR at t = 0 for a localized start is exactly 1
  CHECK(table.rows[0][0] == 0.0);
  CHECK(table.rows[0][3] == doctest::Approx(1.0));
}
