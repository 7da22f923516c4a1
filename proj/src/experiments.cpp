#include "geqw/experiments.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace geqw {

namespace {

constexpr double kDegToRad = M_PI / 180.0;

// Stride between per-grid-point base seeds; larger than any ensemble.
constexpr std::uint64_t kSeedStride = 1000003;

CoinOperator build_coin(const ExperimentSpec& spec, double theta_deg,
                        double beta_deg) {
  if (spec.coin == "kempe") return coin_kempe(theta_deg * kDegToRad);
  if (spec.coin == "hadamard") return coin_hadamard();
  if (spec.coin == "general") {
    return coin_general(theta_deg * kDegToRad, beta_deg * kDegToRad, 0.0);
  }
  throw std::invalid_argument("coin: expected kempe, hadamard or general, got '" +
                              spec.coin + "'");
}

double resolve_phi(const ExperimentSpec& spec, double omega_rad) {
  return spec.phi_orthey ? orthey_phase(omega_rad) : spec.phi_deg * kDegToRad;
}

WalkConfig build_config(const ExperimentSpec& spec, double q, double theta_deg,
                        double beta_deg, double omega_deg, double sigma2,
                        std::uint64_t point_index) {
  WalkConfig config;
  config.coin = build_coin(spec, theta_deg, beta_deg);
  config.step_q = q;
  config.total_steps = spec.steps;
  config.bloch.omega = omega_deg * kDegToRad;
  config.bloch.phi = resolve_phi(spec, config.bloch.omega);
  config.sigma2 = sigma2;
  config.base_seed = spec.seed + point_index * kSeedStride;
  // q = 0.5 walks are deterministic, one run suffices
  config.ensemble_size = q == 0.5 ? 1 : spec.ensemble;
  return config;
}

nlohmann::json base_metadata(const ExperimentSpec& spec) {
  nlohmann::json meta;
  meta["spec"] = spec_to_json(spec);
  meta["engine_version"] = kEngineVersion;
  meta["seed_stride"] = kSeedStride;
  return meta;
}

void stamp_wall_clock(ResultTable& table,
                      std::chrono::steady_clock::time_point start) {
  const auto elapsed = std::chrono::duration<double>(
      std::chrono::steady_clock::now() - start);
  table.metadata["wall_clock_seconds"] = elapsed.count();
}

}  // namespace

std::string to_string(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::EntropySurface: return "entropy-surface";
    case ExperimentKind::EntropyVsQ: return "entropy-vs-q";
    case ExperimentKind::DiffusionVsQ: return "diffusion-vs-q";
    case ExperimentKind::EntropySeries: return "entropy-series";
    case ExperimentKind::CoherenceSeries: return "coherence-series";
    case ExperimentKind::VarianceSeries: return "variance-series";
    case ExperimentKind::IprSeries: return "ipr-series";
    case ExperimentKind::TraceDistanceSeries: return "trace-distance-series";
  }
  return "unknown";
}

ExperimentKind experiment_kind_from_string(const std::string& name) {
  for (auto kind : {ExperimentKind::EntropySurface, ExperimentKind::EntropyVsQ,
                    ExperimentKind::DiffusionVsQ, ExperimentKind::EntropySeries,
                    ExperimentKind::CoherenceSeries,
                    ExperimentKind::VarianceSeries, ExperimentKind::IprSeries,
                    ExperimentKind::TraceDistanceSeries}) {
    if (to_string(kind) == name) return kind;
  }
  throw std::invalid_argument("kind: unknown experiment kind '" + name + "'");
}

ResultTable exp_entropy_surface(const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  const bool beta_surface = !spec.beta_grid.empty();
  const auto& inner = beta_surface ? spec.beta_grid : spec.omega_grid;
  const double q = spec.q_grid.at(0);
  const double sigma2 = spec.sigma2_grid.at(0);

  ResultTable table;
  table.columns = {beta_surface ? "theta_deg" : "theta_deg",
                   beta_surface ? "beta_deg" : "omega_deg", "mean_entropy",
                   "std_entropy"};
  std::uint64_t point = 0;
  for (double theta : spec.theta_grid) {
    for (double second : inner) {
      const double beta_deg = beta_surface ? second : 0.0;
      const double omega_deg = beta_surface ? 90.0 : second;
      const WalkConfig config =
          build_config(spec, q, theta, beta_deg, omega_deg, sigma2, point++);
      const EnsembleResult ens = run_ensemble(config);
      QuasiStationaryWindow window{spec.window_fraction};
      double mean_sum = 0.0, mean_sq = 0.0;
      for (const auto& run : ens.runs) {
        const auto [m, s] = time_average(run.entropy, window);
        (void)s;
        mean_sum += m;
        mean_sq += m * m;
      }
      const double k = static_cast<double>(ens.runs.size());
      const double mean = mean_sum / k;
      const double var = k > 1 ? (mean_sq - k * mean * mean) / (k - 1) : 0.0;
      table.rows.push_back({theta, second, mean,
                            std::sqrt(std::max(var, 0.0))});
    }
  }
  table.metadata = base_metadata(spec);
  stamp_wall_clock(table, start);
  return table;
}

ResultTable exp_entropy_vs_q(const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  ResultTable table;
  table.columns = {"q",       "theta_deg",    "omega_deg",
                   "sigma2",  "mean_entropy", "std_entropy"};
  std::uint64_t point = 0;
  for (double q : spec.q_grid) {
    for (double theta : spec.theta_grid) {
      for (double omega : spec.omega_grid) {
        for (double sigma2 : spec.sigma2_grid) {
          const WalkConfig config =
              build_config(spec, q, theta, 0.0, omega, sigma2, point++);
          const EnsembleResult ens = run_ensemble(config);
          QuasiStationaryWindow window{spec.window_fraction};
          double sum = 0.0, sumsq = 0.0;
          for (const auto& run : ens.runs) {
            const double m = time_average(run.entropy, window).first;
            sum += m;
            sumsq += m * m;
          }
          const double k = static_cast<double>(ens.runs.size());
          const double mean = sum / k;
          const double var =
              k > 1 ? (sumsq - k * mean * mean) / (k - 1) : 0.0;
          table.rows.push_back(
              {q, theta, omega, sigma2, mean, std::sqrt(std::max(var, 0.0))});
        }
      }
    }
  }
  table.metadata = base_metadata(spec);
  stamp_wall_clock(table, start);
  return table;
}

ResultTable exp_diffusion_vs_q(const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  ResultTable table;
  table.columns = {"q", "mean_alpha", "std_alpha"};
  std::uint64_t point = 0;
  for (double q : spec.q_grid) {
    const WalkConfig config = build_config(
        spec, q, spec.theta_grid.at(0), 0.0, spec.omega_grid.at(0),
        spec.sigma2_grid.at(0), point++);
    const EnsembleResult ens = run_ensemble(config);
    const long T = config.total_steps;
    const long t_min =
        std::max<long>(1, static_cast<long>(spec.window_fraction * (T + 1)));
    double sum = 0.0, sumsq = 0.0;
    for (const auto& run : ens.runs) {
      const double alpha = fit_power_law(run.variance, t_min, T).exponent;
      sum += alpha;
      sumsq += alpha * alpha;
    }
    const double k = static_cast<double>(ens.runs.size());
    const double mean = sum / k;
    const double var = k > 1 ? (sumsq - k * mean * mean) / (k - 1) : 0.0;
    table.rows.push_back({q, mean, std::sqrt(std::max(var, 0.0))});
  }
  table.metadata = base_metadata(spec);
  stamp_wall_clock(table, start);
  return table;
}

namespace {
const Eigen::VectorXd& select_series(const EnsembleResult& ens,
                                     ExperimentKind kind, bool std_part) {
  switch (kind) {
    case ExperimentKind::EntropySeries:
      return std_part ? ens.entropy_std : ens.entropy_mean;
    case ExperimentKind::CoherenceSeries:
      return std_part ? ens.coherence_std : ens.coherence_mean;
    case ExperimentKind::VarianceSeries:
      return std_part ? ens.variance_std : ens.variance_mean;
    case ExperimentKind::IprSeries:
      return std_part ? ens.ipr_std : ens.ipr_mean;
    default:
      throw std::invalid_argument("exp_series: not a series kind");
  }
}
}  // namespace

ResultTable exp_series(const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  ResultTable table;
  table.columns = {"t", "q", "sigma2", "value", "std"};
  std::uint64_t point = 0;
  for (double q : spec.q_grid) {
    for (double sigma2 : spec.sigma2_grid) {
      const WalkConfig config = build_config(
          spec, q, spec.theta_grid.at(0), 0.0, spec.omega_grid.at(0), sigma2,
          point++);
      const EnsembleResult ens = run_ensemble(config);
      const auto& mean = select_series(ens, spec.kind, false);
      const auto& stdev = select_series(ens, spec.kind, true);
      for (long t = 0; t < mean.size(); ++t) {
        table.rows.push_back(
            {static_cast<double>(t), q, sigma2, mean(t), stdev(t)});
      }
    }
  }
  table.metadata = base_metadata(spec);
  stamp_wall_clock(table, start);
  return table;
}

ResultTable exp_trace_distance(const ExperimentSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  ResultTable table;
  table.columns = {"t", "q", "sigma2", "mean_trace_distance"};
  nlohmann::json fits = nlohmann::json::array();
  std::uint64_t point = 0;
  for (double q : spec.q_grid) {
    for (double sigma2 : spec.sigma2_grid) {
      const WalkConfig config = build_config(
          spec, q, spec.theta_grid.at(0), 0.0, spec.omega_grid.at(0), sigma2,
          point++);
      const EnsembleResult ens = run_ensemble(config);
      const auto& mean = ens.trace_dist_mean;
      for (long t = 1; t < mean.size(); ++t) {
        table.rows.push_back({static_cast<double>(t), q, sigma2, mean(t)});
      }
      const long T = config.total_steps;
      const long t_min = std::max<long>(10, T / 10);
      const PowerLawFit fit = fit_power_law_binned(mean, t_min, T);
      fits.push_back({{"q", std::isinf(q) ? -1.0 : q},
                      {"q_is_inf", std::isinf(q)},
                      {"sigma2", sigma2},
                      {"beta", -fit.exponent},
                      {"stderr", fit.stderr_},
                      {"t_min", fit.t_min},
                      {"t_max", fit.t_max},
                      {"r_squared", fit.r_squared}});
    }
  }
  table.metadata = base_metadata(spec);
  table.metadata["decay_exponents"] = fits;
  stamp_wall_clock(table, start);
  return table;
}

ResultTable run_experiment(const ExperimentSpec& spec) {
  switch (spec.kind) {
    case ExperimentKind::EntropySurface: return exp_entropy_surface(spec);
    case ExperimentKind::EntropyVsQ: return exp_entropy_vs_q(spec);
    case ExperimentKind::DiffusionVsQ: return exp_diffusion_vs_q(spec);
    case ExperimentKind::TraceDistanceSeries: return exp_trace_distance(spec);
    default: return exp_series(spec);
  }
}

std::vector<double> parse_grid(const std::string& text,
                               const std::string& key) {
  std::vector<double> values;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    if (item == "inf" || item == "infinity") {
      values.push_back(kQInfinity);
      continue;
    }
    const auto c1 = item.find(':');
    try {
      if (c1 != std::string::npos) {
        const auto c2 = item.find(':', c1 + 1);
        if (c2 == std::string::npos) {
          throw std::invalid_argument("range needs lo:hi:step");
        }
        const double lo = std::stod(item.substr(0, c1));
        const double hi = std::stod(item.substr(c1 + 1, c2 - c1 - 1));
        const double step = std::stod(item.substr(c2 + 1));
        if (!(step > 0.0)) throw std::invalid_argument("step must be > 0");
        for (double v = lo; v <= hi + 1e-9 * step; v += step) {
          values.push_back(v);
        }
      } else {
        std::size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw std::invalid_argument("trailing junk");
        values.push_back(v);
      }
    } catch (const std::exception&) {
      throw std::invalid_argument(key + ": malformed numeric value '" + item +
                                  "'");
    }
  }
  if (values.empty()) {
    throw std::invalid_argument(key + ": empty grid");
  }
  return values;
}

nlohmann::json spec_to_json(const ExperimentSpec& spec) {
  nlohmann::json j;
  j["kind"] = to_string(spec.kind);
  j["theta-grid"] = spec.theta_grid;
  j["omega-grid"] = spec.omega_grid;
  j["beta-grid"] = spec.beta_grid;
  // infinity is not representable in JSON, encode as string
  nlohmann::json qs = nlohmann::json::array();
  for (double q : spec.q_grid) {
    if (std::isinf(q)) {
      qs.push_back("inf");
    } else {
      qs.push_back(q);
    }
  }
  j["q"] = qs;
  j["sigma2"] = spec.sigma2_grid;
  j["phi"] = spec.phi_orthey ? nlohmann::json("orthey")
                             : nlohmann::json(spec.phi_deg);
  j["coin"] = spec.coin;
  j["steps"] = spec.steps;
  j["ensemble"] = spec.ensemble;
  j["seed"] = spec.seed;
  j["window-fraction"] = spec.window_fraction;
  j["out"] = spec.out;
  return j;
}

ExperimentSpec spec_from_json(const nlohmann::json& j) {
  ExperimentSpec spec;
  for (const auto& [key, value] : j.items()) {
    try {
      if (key == "kind") {
        spec.kind = experiment_kind_from_string(value.get<std::string>());
      } else if (key == "theta-grid") {
        spec.theta_grid = value.get<std::vector<double>>();
      } else if (key == "omega-grid") {
        spec.omega_grid = value.get<std::vector<double>>();
      } else if (key == "beta-grid") {
        spec.beta_grid = value.get<std::vector<double>>();
      } else if (key == "q") {
        spec.q_grid.clear();
        for (const auto& q : value) {
          if (q.is_string()) {
            if (q.get<std::string>() != "inf") {
              throw std::invalid_argument("bad q");
            }
            spec.q_grid.push_back(kQInfinity);
          } else {
            spec.q_grid.push_back(q.get<double>());
          }
        }
      } else if (key == "sigma2") {
        spec.sigma2_grid = value.get<std::vector<double>>();
      } else if (key == "phi") {
        if (value.is_string()) {
          if (value.get<std::string>() != "orthey") {
            throw std::invalid_argument("bad phi");
          }
          spec.phi_orthey = true;
        } else {
          spec.phi_deg = value.get<double>();
        }
      } else if (key == "coin") {
        spec.coin = value.get<std::string>();
      } else if (key == "steps") {
        spec.steps = value.get<long>();
      } else if (key == "ensemble") {
        spec.ensemble = value.get<long>();
      } else if (key == "seed") {
        spec.seed = value.get<std::uint64_t>();
      } else if (key == "window-fraction") {
        spec.window_fraction = value.get<double>();
      } else if (key == "out") {
        spec.out = value.get<std::string>();
      } else {
        throw std::invalid_argument("unknown key '" + key + "'");
      }
    } catch (const nlohmann::json::exception&) {
      throw std::invalid_argument(key + ": type mismatch");
    }
  }
  return spec;
}

ExperimentSpec parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw std::invalid_argument("cannot open config file '" + path + "'");
  }
  if (path.size() > 5 && path.substr(path.size() - 5) == ".json") {
    nlohmann::json j = nlohmann::json::parse(in);
    // accept either a bare spec or a metadata sidecar wrapping one
    return spec_from_json(j.contains("spec") ? j["spec"] : j);
  }
  nlohmann::json j = nlohmann::json::object();
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    const auto eq = line.find('=');
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    if (eq == std::string::npos) {
      throw std::invalid_argument("config line missing '=': " + line);
    }
    auto trim = [](std::string s) {
      const auto a = s.find_first_not_of(" \t\r");
      const auto b = s.find_last_not_of(" \t\r");
      return a == std::string::npos ? std::string() : s.substr(a, b - a + 1);
    };
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key == "kind" || key == "coin" || key == "out") {
      j[key] = value;
    } else if (key == "phi" && value == "orthey") {
      j[key] = value;
    } else if (key == "theta-grid" || key == "omega-grid" ||
               key == "beta-grid" || key == "q" || key == "sigma2") {
      nlohmann::json grid = nlohmann::json::array();
      for (double v : parse_grid(value, key)) {
        if (std::isinf(v)) {
          grid.push_back("inf");
        } else {
          grid.push_back(v);
        }
      }
      j[key] = grid;
    } else {
      try {
        std::size_t pos = 0;
        const double v = std::stod(value, &pos);
        if (pos != value.size()) throw std::invalid_argument("junk");
        if (key == "steps" || key == "ensemble" || key == "seed") {
          j[key] = static_cast<std::uint64_t>(v);
        } else {
          j[key] = v;
        }
      } catch (const std::exception&) {
        throw std::invalid_argument(key + ": malformed numeric value '" +
                                    value + "'");
      }
    }
  }
  return spec_from_json(j);
}

void write_results(const ResultTable& table, const std::string& path) {
  std::ofstream csv(path);
  if (!csv) {
    throw std::runtime_error("cannot write '" + path + "'");
  }
  csv.precision(17);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    csv << (i ? "," : "") << table.columns[i];
  }
  csv << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      csv << (i ? "," : "") << row[i];
    }
    csv << "\n";
  }
  std::ofstream meta(path + ".meta.json");
  meta << table.metadata.dump(2) << "\n";
}

}  // namespace geqw
