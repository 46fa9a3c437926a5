#pragma once

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "mpbh/instance.hpp"
#include "mpbh/rng.hpp"

namespace mpbh {

class ParseError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Point lists read from one OR-Library-style file; "nr" indexing is 1-based
// to match the usual benchmark tables.
struct InstanceFile {
  std::vector<std::vector<Point>> instances;
  std::vector<std::string> warnings;

  int count() const { return static_cast<int>(instances.size()); }
  const std::vector<Point>& by_nr(int nr) const {
    if (nr < 1 || nr > count()) throw std::out_of_range("instance nr out of range");
    return instances[nr - 1];
  }
};

namespace detail {

// Whitespace-agnostic numeric tokenizer; the source files mix newlines and
// spaces freely.
struct NumberReader {
  std::istream& in;

  bool next(double& out) {
    std::string tok;
    if (!(in >> tok)) return false;
    char* end = nullptr;
    out = std::strtod(tok.c_str(), &end);
    if (end != tok.c_str() + tok.size())
      throw ParseError("non-numeric token '" + tok + "'");
    return true;
  }
  double require(const char* what) {
    double v;
    if (!next(v)) throw ParseError(std::string("unexpected end of input while reading ") + what);
    return v;
  }
  int require_count(const char* what) {
    const double v = require(what);
    if (v < 0.0 || v > 1e9 || v != std::floor(v))
      throw ParseError(std::string("expected a non-negative integer for ") + what);
    return static_cast<int>(v);
  }
};

}  // namespace detail

// Format: instance count P, then P blocks of (point count m, 2m coordinates).
// Points outside the unit square warn but do not fail.
inline InstanceFile parse_orlib(std::istream& in) {
  detail::NumberReader reader{in};
  InstanceFile file;
  const int problems = reader.require_count("the instance count");
  for (int p = 0; p < problems; ++p) {
    const int m = reader.require_count("a point count");
    std::vector<Point> pts;
    pts.reserve(m);
    for (int i = 0; i < m; ++i) {
      Point pt;
      pt.x = reader.require("a coordinate");
      pt.y = reader.require("a coordinate");
      if (pt.x < 0.0 || pt.x > 1.0 || pt.y < 0.0 || pt.y > 1.0)
        file.warnings.push_back("instance " + std::to_string(p + 1) + ": point " +
                                std::to_string(i + 1) + " lies outside the unit square");
      pts.push_back(pt);
    }
    file.instances.push_back(std::move(pts));
  }
  double extra;
  if (reader.next(extra)) throw ParseError("trailing tokens after the declared instances");
  return file;
}

inline InstanceFile parse_orlib(const std::string& text) {
  std::istringstream in(text);
  return parse_orlib(in);
}

inline InstanceFile load_orlib_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  return parse_orlib(in);
}

// Shortest decimal form that parses back to the same double.
inline std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

inline std::string serialize_orlib(const InstanceFile& file) {
  std::string out = std::to_string(file.count()) + "\n";
  for (const auto& pts : file.instances) {
    out += std::to_string(pts.size()) + "\n";
    for (const Point& p : pts)
      out += format_double(p.x) + " " + format_double(p.y) + "\n";
  }
  return out;
}

// n i.i.d. uniform points in the unit square, reproducible from the seed.
inline std::vector<Point> generate_uniform(int n, std::uint64_t seed) {
  if (n < 2) throw std::invalid_argument("need at least 2 points");
  Rng rng = make_rng(seed);
  std::vector<Point> pts(n);
  for (Point& p : pts) {
    p.x = next_unit(rng);
    p.y = next_unit(rng);
  }
  return pts;
}

}  // namespace mpbh
