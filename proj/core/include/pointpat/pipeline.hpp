#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pointpat/geometry.hpp"

namespace pointpat {

inline constexpr const char* kVersion = "0.1.0";

/// Flat key/value run configuration ("key = value" lines, '#' comments).
struct RunConfig {
  std::map<std::string, std::string> values;

  bool has(const std::string& key) const { return values.count(key) > 0; }
  std::string get(const std::string& key, const std::string& fallback = "") const;
  double get_double(const std::string& key, double fallback) const;
  long get_long(const std::string& key, long fallback) const;
  /// Required key; throws ConfigError when absent.
  std::string require(const std::string& key) const;

  std::vector<std::string> analyses() const;
  std::optional<Window> window() const;
};

RunConfig parse_config(const std::string& path);
RunConfig parse_config_text(const std::string& text);

/// Build a pattern from the config's generator description
/// (generator = csr | inhomogeneous-poisson | thomas | thomas-fixed |
/// matern | hardcore | cluster).
PointPattern generate_from_config(const RunConfig& config);

/// Execute the configured analyses and write one CSV per result plus a
/// manifest.  Returns 0 on success, 2 when some species failed (the
/// manifest lists the failures).  Configuration errors throw ConfigError
/// before anything is written.
int run_pipeline(const RunConfig& config);

}  // namespace pointpat
