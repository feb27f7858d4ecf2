#include "pointpat/pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

#include <json.hpp>

#include "pointpat/csv.hpp"
#include "pointpat/fitting.hpp"
#include "pointpat/generators.hpp"
#include "pointpat/kernel_intensity.hpp"
#include "pointpat/knuth.hpp"
#include "pointpat/random.hpp"
#include "pointpat/secondstats.hpp"
#include "pointpat/stone.hpp"

namespace fs = std::filesystem;

namespace pointpat {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

const std::set<std::string> kKnownAnalyses = {
    "knuth", "kernel", "K", "L", "g", "K2", "envelope", "fit-thomas", "indices",
    "stone-compare"};

}  // namespace

std::string RunConfig::get(const std::string& key, const std::string& fallback) const {
  const auto it = values.find(key);
  return it == values.end() ? fallback : it->second;
}

double RunConfig::get_double(const std::string& key, double fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    return std::stod(it->second);
  } catch (const std::exception&) {
    throw ConfigError("bad numeric value for '" + key + "': " + it->second);
  }
}

long RunConfig::get_long(const std::string& key, long fallback) const {
  const auto it = values.find(key);
  if (it == values.end()) return fallback;
  try {
    return std::stol(it->second);
  } catch (const std::exception&) {
    throw ConfigError("bad integer value for '" + key + "': " + it->second);
  }
}

std::string RunConfig::require(const std::string& key) const {
  const auto it = values.find(key);
  if (it == values.end()) throw ConfigError("missing required key '" + key + "'");
  return it->second;
}

std::vector<std::string> RunConfig::analyses() const {
  std::vector<std::string> out;
  std::stringstream ss(require("analyses"));
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item.empty()) continue;
    if (!kKnownAnalyses.count(item)) throw ConfigError("unknown analysis '" + item + "'");
    out.push_back(item);
  }
  if (out.empty()) throw ConfigError("at least one analysis is required");
  return out;
}

std::optional<Window> RunConfig::window() const {
  const auto it = values.find("window");
  if (it == values.end()) return std::nullopt;
  std::stringstream ss(it->second);
  double a, b, c, d;
  if (!(ss >> a >> b >> c >> d))
    throw ConfigError("window must be 'x_min x_max y_min y_max'");
  return Window(a, b, c, d);
}

RunConfig parse_config_text(const std::string& text) {
  RunConfig config;
  std::stringstream ss(text);
  std::string line;
  int line_no = 0;
  while (std::getline(ss, line)) {
    ++line_no;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    if (key.empty()) throw ConfigError("config line " + std::to_string(line_no) + ": empty key");
    config.values[key] = value;
  }
  return config;
}

RunConfig parse_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config_text(ss.str());
}

PointPattern generate_from_config(const RunConfig& config) {
  const std::string kind = config.require("generator");
  const std::optional<Window> win_opt = config.window();
  if (!win_opt) throw ConfigError("generator runs need an explicit window");
  const Window win = *win_opt;
  RandomStream rng(static_cast<std::uint64_t>(config.get_long("seed", 0)));

  if (kind == "csr") {
    return gen_csr(win, config.get_double("lambda", 1.0 / 500.0), rng);
  }
  if (kind == "inhomogeneous-poisson") {
    const std::string axis = config.get("gradient-axis", "y");
    if (axis != "x" && axis != "y") throw ConfigError("gradient-axis must be x or y");
    const double ratio = config.get_double("gradient-ratio", 4.0);
    const double mean = config.get_double("lambda", 1.0 / 250.0);
    // linear gradient with the requested far/near intensity ratio and the
    // given mean intensity
    const double lo = 2.0 * mean / (1.0 + ratio);
    const double hi = ratio * lo;
    auto lambda_fn = [=](Point p) {
      const double t = axis == "y" ? (p.y - win.y_min) / win.height()
                                   : (p.x - win.x_min) / win.width();
      return lo + (hi - lo) * t;
    };
    return gen_inhomogeneous_poisson(win, lambda_fn, hi, rng);
  }
  if (kind == "thomas" || kind == "thomas-fixed") {
    ThomasParams params{config.get_double("rho", 2e-4), config.get_double("sigma", 10.0),
                        config.get_double("mu", 10.0)};
    if (kind == "thomas")
      return gen_thomas(win, params, ThomasMode::PoissonOffspring, rng);
    return gen_thomas(win, params, ThomasMode::FixedN, rng, config.get_long("n", 1000));
  }
  if (kind == "matern") {
    return gen_matern(win, config.get_double("rho", 2e-4),
                      config.get_double("radius", 10.0), config.get_double("mu", 10.0),
                      rng);
  }
  if (kind == "hardcore") {
    return gen_hardcore(win, config.get_long("n", 500), config.get_double("radius", 10.0),
                        rng);
  }
  if (kind == "cluster") {
    const std::string shape_name = config.get("shape", "gaussian");
    ClusterShape shape;
    if (shape_name == "square")
      shape.kind = ClusterKind::SquareUniform;
    else if (shape_name == "disk")
      shape.kind = ClusterKind::DiskUniform;
    else if (shape_name == "gaussian")
      shape.kind = ClusterKind::Gaussian;
    else
      throw ConfigError("shape must be square, disk or gaussian");
    shape.size = config.get_double("size", 50.0);
    shape.rotation_deg = config.get_double("rotation", 0.0);
    shape.axis_ratio = config.get_double("axis-ratio", 1.0);
    shape.center = {(win.x_min + win.x_max) / 2.0, (win.y_min + win.y_max) / 2.0};
    return gen_shaped_cluster(win, shape, config.get_long("n", 1000), rng);
  }
  throw ConfigError("unknown generator '" + kind + "'");
}

namespace {

StatisticKind statistic_from_name(const std::string& name) {
  if (name == "K") return StatisticKind::K;
  if (name == "L") return StatisticKind::L;
  if (name == "g") return StatisticKind::G;
  if (name == "K2") return StatisticKind::K2;
  throw ConfigError("unknown statistic '" + name + "'");
}

void write_curve_csv(const std::string& path, const CurveEstimate& curve) {
  std::ofstream out(path);
  out << "r,value\n";
  for (std::size_t i = 0; i < curve.r_grid.size(); ++i)
    out << format_double(curve.r_grid[i]) << ',' << format_double(curve.values[i]) << '\n';
}

void write_envelope_csv(const std::string& path, const CurveEstimate& observed,
                        const EnvelopeBand& band) {
  std::ofstream out(path);
  out << "r,value,lower,upper,theory\n";
  for (std::size_t i = 0; i < band.r_grid.size(); ++i)
    out << format_double(band.r_grid[i]) << ',' << format_double(observed.values[i]) << ','
        << format_double(band.lower[i]) << ',' << format_double(band.upper[i]) << ','
        << format_double(band.theory[i]) << '\n';
}

struct SpeciesOutput {
  std::vector<std::string> files;
};

struct IndicesRow {
  std::string species;
  double a = 0, equivalent_radius = 0, binning_diameter = 0, i_an = 0;
  std::optional<double> delta;
  std::optional<double> omega;
  long abundance = 0;
};

struct FitRow {
  std::string species;
  ThomasFit fit;
  FilterDecision decision;
};

}  // namespace

int run_pipeline(const RunConfig& config) {
  const std::vector<std::string> analyses = config.analyses();
  auto wants = [&](const std::string& name) {
    return std::find(analyses.begin(), analyses.end(), name) != analyses.end();
  };
  const std::string out_dir = config.require("output");

  // gather input patterns before touching the output directory
  std::vector<std::pair<std::string, PointPattern>> species;
  if (config.has("input")) {
    const CensusTable table = read_census_csv(config.require("input"), config.window());
    const long n_min = config.get_long("abundance-min", 0);
    const long n_max = config.get_long("abundance-max", std::numeric_limits<long>::max());
    for (const std::string& id : table.species_ids()) {
      PointPattern pattern = table.pattern_for(id);
      const long n = static_cast<long>(pattern.size());
      if (n < n_min || n > n_max) continue;
      species.emplace_back(id, std::move(pattern));
    }
  } else if (config.has("generator")) {
    species.emplace_back("pattern", generate_from_config(config));
  } else if (!wants("stone-compare")) {
    throw ConfigError("config needs 'input' or 'generator'");
  }

  fs::create_directories(out_dir);
  const std::uint64_t seed = static_cast<std::uint64_t>(config.get_long("seed", 0));

  nlohmann::json manifest;
  manifest["version"] = kVersion;
  manifest["seed"] = seed;
  manifest["parameters"] = nlohmann::json::object();
  for (const auto& [k, v] : config.values) manifest["parameters"][k] = v;
  nlohmann::json outputs = nlohmann::json::array();
  nlohmann::json failures = nlohmann::json::array();

  std::vector<FitRow> fit_rows;
  std::vector<IndicesRow> indices_rows;
  auto emit = [&](const std::string& name) { outputs.push_back(name); };

  for (const auto& [id, pattern] : species) {
    const std::string prefix = out_dir + "/" + id + "_";
    try {
      std::optional<OptimalHistogram> knuth_hist;
      if (wants("knuth") || wants("indices")) {
        KnuthSearchConfig kc;
        kc.c_x = static_cast<int>(config.get_long("c-x", 50));
        kc.c_y = static_cast<int>(config.get_long("c-y", 50));
        auto [hist, surface] = optimal_binning(pattern, kc);
        knuth_hist = hist;
        if (wants("knuth")) {
          {
            std::ofstream out(prefix + "histogram.csv");
            out << "x_index,y_index,count,mu,sigma2\n";
            for (int iy = 0; iy < hist.grid.m_y; ++iy)
              for (int ix = 0; ix < hist.grid.m_x; ++ix) {
                const std::size_t k = static_cast<std::size_t>(iy * hist.grid.m_x + ix);
                out << ix << ',' << iy << ',' << hist.counts[k] << ','
                    << format_double(hist.heights_mean[k]) << ','
                    << format_double(hist.heights_var[k]) << '\n';
              }
          }
          emit(id + "_histogram.csv");
          {
            std::ofstream out(prefix + "posterior_surface.csv");
            out << "m_x,m_y,log_posterior\n";
            for (int my = 1; my <= surface.c_y; ++my)
              for (int mx = 1; mx <= surface.c_x; ++mx)
                out << mx << ',' << my << ',' << format_double(surface.at(mx, my)) << '\n';
          }
          emit(id + "_posterior_surface.csv");
        }
      }

      if (wants("kernel")) {
        const double bw =
            config.get_double("kernel-bandwidth", kernel_default_bandwidth(pattern));
        const IntensityRaster raster = epanechnikov_intensity(
            pattern, bw, static_cast<int>(config.get_long("raster-nx", 256)),
            static_cast<int>(config.get_long("raster-ny", 128)));
        std::ofstream out(prefix + "raster.csv");
        out << "x_index,y_index,intensity\n";
        for (int iy = 0; iy < raster.ny; ++iy)
          for (int ix = 0; ix < raster.nx; ++ix)
            out << ix << ',' << iy << ',' << format_double(raster.at(ix, iy)) << '\n';
        emit(id + "_raster.csv");
      }

      const bool needs_curves = wants("K") || wants("L") || wants("g") || wants("K2");
      std::vector<double> r_grid;
      double bandwidth = 0;
      if (needs_curves || wants("envelope")) {
        bandwidth = config.get_double("bandwidth", default_bandwidth(pattern));
        r_grid = default_r_grid(pattern, static_cast<int>(config.get_long("r-points", 512)),
                                bandwidth);
      }
      if (wants("K") || wants("L")) {
        const CurveEstimate k = ripley_k(pattern, r_grid);
        if (wants("K")) {
          write_curve_csv(prefix + "K.csv", k);
          emit(id + "_K.csv");
        }
        if (wants("L")) {
          write_curve_csv(prefix + "L.csv", l_function(k));
          emit(id + "_L.csv");
        }
      }
      if (wants("g") || wants("K2")) {
        const CurveEstimate g = pair_correlation(pattern, r_grid, bandwidth);
        if (wants("g")) {
          write_curve_csv(prefix + "g.csv", g);
          emit(id + "_g.csv");
        }
        if (wants("K2")) {
          write_curve_csv(prefix + "K2.csv",
                          k2_index(g, static_cast<int>(config.get_long("k2-window", 5))));
          emit(id + "_K2.csv");
        }
      }

      if (wants("envelope")) {
        const std::string stat_name = config.get("envelope-statistic", "g");
        const StatisticKind stat = statistic_from_name(stat_name);
        const int n_sims = static_cast<int>(config.get_long("n-sims", 199));
        const double level = config.get_double("level", 0.99);
        RandomStream rng(seed + 1000003);
        const EnvelopeBand band =
            csr_envelope(pattern, stat, r_grid, n_sims, level, rng, bandwidth,
                         static_cast<int>(config.get_long("k2-window", 5)));
        CurveEstimate observed;
        switch (stat) {
          case StatisticKind::K:
            observed = ripley_k(pattern, r_grid);
            break;
          case StatisticKind::L:
            observed = l_function(ripley_k(pattern, r_grid));
            break;
          case StatisticKind::G:
            observed = pair_correlation(pattern, r_grid, bandwidth);
            break;
          default:
            observed = k2_index(pair_correlation(pattern, r_grid, bandwidth),
                                static_cast<int>(config.get_long("k2-window", 5)));
        }
        write_envelope_csv(prefix + "envelope_" + stat_name + ".csv", observed, band);
        emit(id + "_envelope_" + stat_name + ".csv");
      }

      std::optional<ThomasFit> fit;
      if (wants("fit-thomas") || wants("indices")) {
        try {
          fit = fit_thomas(pattern, config.get_double("d-max", 300.0),
                           config.get_double("grid-step", 1.0));
          if (wants("fit-thomas"))
            fit_rows.push_back({id, *fit,
                                species_filter(*fit, static_cast<long>(pattern.size()),
                                               pattern.window.area())});
        } catch (const Error&) {
          if (wants("fit-thomas")) throw;
          // indices proceed without delta when the fit is unavailable
        }
      }

      if (wants("indices") && knuth_hist) {
        IndicesRow row;
        row.species = id;
        row.abundance = static_cast<long>(pattern.size());
        row.a = knuth_hist->grid.bin_area();
        row.equivalent_radius = std::sqrt(row.a / M_PI);
        row.binning_diameter = 2.0 * row.equivalent_radius;
        row.i_an = anisotropy_index(*knuth_hist);
        const double omega_radius = config.get_double("omega-radius", 10.0);
        row.omega = relative_neighbourhood_density(pattern, omega_radius);
        if (fit) {
          // one seeded mTp realization of the fitted model, same abundance
          RandomStream rng(seed + 2000003);
          const PointPattern counterpart = gen_thomas(
              pattern.window, {fit->rho_hat, fit->sigma_hat, fit->mu_hat},
              ThomasMode::FixedN, rng, static_cast<long>(pattern.size()));
          KnuthSearchConfig kc;
          kc.c_x = static_cast<int>(config.get_long("c-x", 50));
          kc.c_y = static_cast<int>(config.get_long("c-y", 50));
          const auto [mtp_hist, mtp_surface] = optimal_binning(counterpart, kc);
          row.delta = difference_index(mtp_hist.grid.bin_area(), row.a);
        }
        indices_rows.push_back(row);
      }
    } catch (const Error& e) {
      failures.push_back({{"species", id}, {"error", e.what()}});
    }
  }

  if (wants("stone-compare")) {
    const long datasets = config.get_long("stone-datasets", 50);
    const long n = config.get_long("stone-n", 1000);
    const int c = static_cast<int>(config.get_long("c-x", 50));
    std::ofstream out(out_dir + "/stone_compare.csv");
    out << "dataset,knuth_m,stone_m,knuth_l2,stone_l2\n";
    auto normal_pdf = [](double x) {
      return std::exp(-x * x / 2.0) / std::sqrt(2.0 * M_PI);
    };
    for (long i = 0; i < datasets; ++i) {
      RandomStream rng(seed + 3000017 + static_cast<std::uint64_t>(i));
      std::vector<double> samples(static_cast<std::size_t>(n));
      for (double& s : samples) s = rng.normal();
      const Knuth1DResult knuth = optimal_binning_1d(samples, c);
      const StoneResult stone = stone_optimal_bins(samples, c);
      const Histogram1D stone_hist = fixed_bin_histogram(samples, stone.m_hat);
      const double knuth_l2 =
          histogram_density_distance(knuth.histogram, normal_pdf, 2, 1e-3);
      const double stone_l2 =
          histogram_density_distance(stone_hist, normal_pdf, 2, 1e-3);
      out << i << ',' << knuth.m_hat << ',' << stone.m_hat << ','
          << format_double(knuth_l2) << ',' << format_double(stone_l2) << '\n';
    }
    emit("stone_compare.csv");
  }

  if (wants("fit-thomas")) {
    std::ofstream out(out_dir + "/fits.csv");
    out << "species,rho,sigma,mu,contrast,accept,reason\n";
    for (const FitRow& row : fit_rows)
      out << row.species << ',' << format_double(row.fit.rho_hat) << ','
          << format_double(row.fit.sigma_hat) << ',' << format_double(row.fit.mu_hat)
          << ',' << format_double(row.fit.contrast) << ','
          << (row.decision.accept ? "accept" : "reject") << ',' << row.decision.reason
          << '\n';
    emit("fits.csv");
  }

  if (wants("indices")) {
    std::ofstream out(out_dir + "/indices.csv");
    out << "species,a,equivalent_radius,binning_diameter,I_an,delta,omega,abundance\n";
    for (const IndicesRow& row : indices_rows) {
      out << row.species << ',' << format_double(row.a) << ','
          << format_double(row.equivalent_radius) << ','
          << format_double(row.binning_diameter) << ',' << format_double(row.i_an) << ',';
      if (row.delta) out << format_double(*row.delta);
      out << ',';
      if (row.omega) out << format_double(*row.omega);
      out << ',' << row.abundance << '\n';
    }
    emit("indices.csv");
  }

  nlohmann::json file_list = nlohmann::json::array();
  for (const auto& name : outputs)
    file_list.push_back({{"file", name},
                         {"digest", file_digest(out_dir + "/" + name.get<std::string>())}});
  manifest["outputs"] = file_list;
  manifest["failures"] = failures;
  const auto now = std::chrono::system_clock::now().time_since_epoch();
  manifest["timestamp_ms"] =
      std::chrono::duration_cast<std::chrono::milliseconds>(now).count();

  std::ofstream out(out_dir + "/manifest.json");
  out << manifest.dump(2) << '\n';

  return failures.empty() ? 0 : 2;
}

}  // namespace pointpat
