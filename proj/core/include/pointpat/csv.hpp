#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pointpat/geometry.hpp"

namespace pointpat {

struct CensusRow {
  std::string species;
  double x, y;
};

struct CensusTable {
  std::vector<CensusRow> rows;
  Window window;

  /// Species ids in sorted order.
  std::vector<std::string> species_ids() const;
  /// Pattern for one species, sharing the table window.
  PointPattern pattern_for(const std::string& species) const;
};

/// Parse a "species,x,y" (or "x,y") CSV.  The window defaults to the tight
/// bounding box over all rows.
CensusTable read_census_csv(const std::string& path,
                            std::optional<Window> window = std::nullopt);

/// Decimal with 17 significant digits; round-trips doubles bit-exactly.
std::string format_double(double v);

/// Write a single pattern as an "x,y" CSV.
void write_pattern_csv(const std::string& path, const PointPattern& pattern);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex chars.
std::string file_digest(const std::string& path);

}  // namespace pointpat
