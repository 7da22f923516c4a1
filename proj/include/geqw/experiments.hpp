#pragma once

#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "geqw/evolution.hpp"

namespace geqw {

inline constexpr const char* kEngineVersion = "0.1.0";

enum class ExperimentKind {
  EntropySurface,
  EntropyVsQ,
  DiffusionVsQ,
  EntropySeries,
  CoherenceSeries,
  VarianceSeries,
  IprSeries,
  TraceDistanceSeries,
};

std::string to_string(ExperimentKind kind);
ExperimentKind experiment_kind_from_string(const std::string& name);

/// Resolved description of one experiment run. Angle grids are stored in
/// degrees, matching the CLI and the figure axes; they are converted to
/// radians at the point where a WalkConfig is built.
struct ExperimentSpec {
  ExperimentKind kind = ExperimentKind::EntropySeries;
  std::vector<double> theta_grid{45.0};
  std::vector<double> omega_grid{90.0};
  std::vector<double> beta_grid;
  std::vector<double> q_grid{0.5};          // kQInfinity for q = inf
  std::vector<double> sigma2_grid{0.0};
  double phi_deg = 0.0;
  bool phi_orthey = false;   // phi = orthey_phase(omega) per curve
  std::string coin = "kempe";  // kempe | hadamard | general
  long steps = 1000;
  long ensemble = 50;
  std::uint64_t seed = 1;
  double window_fraction = 0.5;
  std::string out = "result.csv";
};

/// Rectangular numeric table plus a metadata block sufficient to replay
/// the run bit-exactly.
struct ResultTable {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
  nlohmann::json metadata;
};

/// Time-averaged entropy over a (theta, omega) grid, or (theta, beta)
/// when a beta grid is given. One row per grid point.
ResultTable exp_entropy_surface(const ExperimentSpec& spec);

/// Time-averaged entropy versus q for each (theta, omega, sigma2).
ResultTable exp_entropy_vs_q(const ExperimentSpec& spec);

/// Mean diffusion exponent versus q: per-run log-log fit of the position
/// variance over the quasi-stationary window, averaged over the ensemble.
ResultTable exp_diffusion_vs_q(const ExperimentSpec& spec);

/// Time series of one observable (entropy, coherence, variance or IPR),
/// one curve per (q, sigma2) pair.
ResultTable exp_series(const ExperimentSpec& spec);

/// Ensemble-averaged trace distance between successive coin states, one
/// curve per (q, sigma2); fitted decay exponents land in the metadata
/// under "decay_exponents".
ResultTable exp_trace_distance(const ExperimentSpec& spec);

ResultTable run_experiment(const ExperimentSpec& spec);

/// Parse a flat key=value config file (keys named like the CLI flags,
/// without the leading dashes) or a JSON metadata sidecar produced by
/// write_results. Unknown keys and malformed values raise errors naming
/// the offending key.
ExperimentSpec parse_config(const std::string& path);
ExperimentSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const ExperimentSpec& spec);

/// Parse one grid flag value: comma-separated numbers, "lo:hi:step"
/// ranges, and "inf" for the uniform limit.
std::vector<double> parse_grid(const std::string& text, const std::string& key);

/// Write the CSV data file and the JSON metadata sidecar
/// ("<path>.meta.json"). Re-running from the sidecar reproduces the
/// data bit-exactly.
void write_results(const ResultTable& table, const std::string& path);

}  // namespace geqw
