#pragma once

// JSON algebra files. Rationals are strings ("p/q" or "p"); mul and comul are
// sparse lists of [i, j, k, "c"] quadruples; antipode is dense row-major.
// An optional "modules" array carries catalog seed modules:
//   {"name": ..., "dim": m, "action": [[m*m row-major entries] per basis element]}

#include <filesystem>
#include <stdexcept>
#include <string>

#include "cohopf/hopf.hpp"

namespace cohopf {

struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

HopfAlgebraData parse_algebra(const std::string& text, const std::string& origin = "<input>");
HopfAlgebraData load_algebra(const std::filesystem::path& path);
/// Deterministic serialization; parse_algebra(write_algebra(h)) reproduces h.
std::string write_algebra(const HopfAlgebraData& h);

/// Hopf map file: {"target": path relative to the map file, "rows": r, "cols": c, "map": dense row-major
/// entries with r = dim(target), c = dim(source)}. The source is the algebra it is used with.
struct MapFile {
  std::filesystem::path target;
  Matrix map;
};
MapFile load_map(const std::filesystem::path& path);

}  // namespace cohopf
