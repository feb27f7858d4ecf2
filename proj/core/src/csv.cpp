#include "pointpat/csv.hpp"

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <limits>
#include <set>
#include <sstream>

namespace pointpat {

std::vector<std::string> CensusTable::species_ids() const {
  std::set<std::string> ids;
  for (const CensusRow& r : rows) ids.insert(r.species);
  return {ids.begin(), ids.end()};
}

PointPattern CensusTable::pattern_for(const std::string& species) const {
  std::vector<Point> points;
  for (const CensusRow& r : rows)
    if (r.species == species) points.push_back({r.x, r.y});
  return PointPattern(std::move(points), window);
}

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char c : line) {
    if (c == ',') {
      fields.push_back(cur);
      cur.clear();
    } else if (c != '\r') {
      cur += c;
    }
  }
  fields.push_back(cur);
  return fields;
}

double parse_number(const std::string& s, int line_no) {
  try {
    std::size_t pos = 0;
    const double v = std::stod(s, &pos);
    if (pos != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (const std::exception&) {
    throw ParseError("line " + std::to_string(line_no) + ": bad number '" + s + "'");
  }
}

}  // namespace

CensusTable read_census_csv(const std::string& path, std::optional<Window> window) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);

  std::string line;
  if (!std::getline(in, line)) throw ParseError("empty file " + path);
  const std::vector<std::string> header = split_csv_line(line);
  bool has_species;
  if (header.size() == 3 && header[0] == "species" && header[1] == "x" && header[2] == "y")
    has_species = true;
  else if (header.size() == 2 && header[0] == "x" && header[1] == "y")
    has_species = false;
  else
    throw ParseError("line 1: expected header 'species,x,y' or 'x,y'");

  std::vector<CensusRow> rows;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string> fields = split_csv_line(line);
    const std::size_t expected = has_species ? 3 : 2;
    if (fields.size() != expected)
      throw ParseError("line " + std::to_string(line_no) + ": expected " +
                       std::to_string(expected) + " fields");
    CensusRow row;
    if (has_species) {
      row.species = fields[0];
      if (row.species.empty())
        throw ParseError("line " + std::to_string(line_no) + ": empty species id");
      row.x = parse_number(fields[1], line_no);
      row.y = parse_number(fields[2], line_no);
    } else {
      row.species = "pattern";
      row.x = parse_number(fields[0], line_no);
      row.y = parse_number(fields[1], line_no);
    }
    rows.push_back(row);
  }
  if (rows.empty()) throw ParseError("no data rows in " + path);

  Window win = window ? *window : [&] {
    double x_lo = std::numeric_limits<double>::infinity();
    double x_hi = -x_lo, y_lo = x_lo, y_hi = -x_lo;
    for (const CensusRow& r : rows) {
      x_lo = std::min(x_lo, r.x);
      x_hi = std::max(x_hi, r.x);
      y_lo = std::min(y_lo, r.y);
      y_hi = std::max(y_hi, r.y);
    }
    if (!(x_lo < x_hi) || !(y_lo < y_hi))
      throw DegenerateSpan("rows span a degenerate bounding box");
    return Window(x_lo, x_hi, y_lo, y_hi);
  }();

  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!win.contains({rows[i].x, rows[i].y}))
      throw OutOfWindow("row " + std::to_string(i + 2) + " outside window");
  }
  return CensusTable{std::move(rows), win};
}

std::string format_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

void write_pattern_csv(const std::string& path, const PointPattern& pattern) {
  std::ofstream out(path);
  if (!out) throw Error("cannot write " + path);
  out << "x,y\n";
  for (const Point& p : pattern.points)
    out << format_double(p.x) << ',' << format_double(p.y) << '\n';
}

std::string file_digest(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open " + path);
  std::uint64_t h = 1469598103934665603ull;
  char c;
  while (in.get(c)) {
    h ^= static_cast<unsigned char>(c);
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

}  // namespace pointpat
