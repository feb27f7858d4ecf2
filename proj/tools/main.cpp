// Command-line front end: generate point patterns, run analysis
// pipelines, compare 1D binning rules, and compute CSR envelopes.

#include <cstdio>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "pointpat/csv.hpp"
#include "pointpat/knuth.hpp"
#include "pointpat/pipeline.hpp"
#include "pointpat/random.hpp"
#include "pointpat/secondstats.hpp"
#include "pointpat/stone.hpp"

using namespace pointpat;

namespace {

// "key=value" pairs from the command line into a RunConfig
RunConfig config_from_pairs(const std::vector<std::string>& pairs) {
  std::string text;
  for (const auto& p : pairs) text += p + "\n";
  return parse_config_text(text);
}

int cmd_generate(const std::vector<std::string>& params, const std::string& out_path) {
  RunConfig config = config_from_pairs(params);
  const PointPattern pattern = generate_from_config(config);
  write_pattern_csv(out_path, pattern);
  std::cout << "wrote " << pattern.size() << " points to " << out_path << "\n";
  return 0;
}

int cmd_analyze(const std::string& config_path) {
  const RunConfig config = parse_config(config_path);
  return run_pipeline(config);
}

int cmd_compare_binning(long datasets, long n, int c, std::uint64_t seed,
                        const std::string& out_dir) {
  RunConfig config;
  config.values["analyses"] = "stone-compare";
  config.values["output"] = out_dir;
  config.values["seed"] = std::to_string(seed);
  config.values["stone-datasets"] = std::to_string(datasets);
  config.values["stone-n"] = std::to_string(n);
  config.values["c-x"] = std::to_string(c);
  return run_pipeline(config);
}

int cmd_envelope(const std::string& input, const std::string& statistic, int sims,
                 double level, std::uint64_t seed, const std::string& out_dir) {
  RunConfig config;
  config.values["input"] = input;
  config.values["analyses"] = "envelope";
  config.values["envelope-statistic"] = statistic;
  config.values["n-sims"] = std::to_string(sims);
  config.values["level"] = std::to_string(level);
  config.values["seed"] = std::to_string(seed);
  config.values["output"] = out_dir;
  return run_pipeline(config);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spatial point-pattern analysis with Bayesian optimal binning"};
  app.require_subcommand(1);

  auto* generate = app.add_subcommand("generate", "Generate a point pattern CSV");
  std::vector<std::string> gen_params;
  std::string gen_out = "pattern.csv";
  generate->add_option("-p,--param", gen_params,
                       "generator parameters as key=value (generator, window, seed, ...)");
  generate->add_option("-o,--out", gen_out, "output CSV path");

  auto* analyze = app.add_subcommand("analyze", "Run an analysis pipeline from a config file");
  std::string config_path;
  analyze->add_option("config", config_path, "config file path")->required();

  auto* compare = app.add_subcommand("compare-binning", "1D Knuth-vs-Stone comparison study");
  long cb_datasets = 50, cb_n = 1000;
  int cb_c = 50;
  std::uint64_t cb_seed = 0;
  std::string cb_out = "compare-out";
  compare->add_option("--datasets", cb_datasets, "number of Gaussian datasets");
  compare->add_option("--n", cb_n, "samples per dataset");
  compare->add_option("--max-bins", cb_c, "bin cap");
  compare->add_option("--seed", cb_seed, "base seed");
  compare->add_option("-o,--out", cb_out, "output directory");

  auto* envelope = app.add_subcommand("envelope", "Monte Carlo CSR envelope for a statistic");
  std::string env_input, env_stat = "g", env_out = "envelope-out";
  int env_sims = 199;
  double env_level = 0.99;
  std::uint64_t env_seed = 0;
  envelope->add_option("input", env_input, "pattern CSV")->required();
  envelope->add_option("--statistic", env_stat, "K, L, g or K2");
  envelope->add_option("--sims", env_sims, "number of simulations");
  envelope->add_option("--level", env_level, "pointwise confidence level");
  envelope->add_option("--seed", env_seed, "base seed");
  envelope->add_option("-o,--out", env_out, "output directory");

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed()) return cmd_generate(gen_params, gen_out);
    if (analyze->parsed()) return cmd_analyze(config_path);
    if (compare->parsed())
      return cmd_compare_binning(cb_datasets, cb_n, cb_c, cb_seed, cb_out);
    if (envelope->parsed())
      return cmd_envelope(env_input, env_stat, env_sims, env_level, env_seed, env_out);
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return 1;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
