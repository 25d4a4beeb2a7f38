#pragma once

// End-to-end orchestration behind the command-line tool: build the adjunction
// for an algebra and a map, run every applicable suite and assemble a report
// whose bytes do not depend on scheduling.

#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohopf/cohopf.hpp"
#include "cohopf/io.hpp"

namespace cohopf {

/// Bad command-line input: unknown seed, unreadable map, unparsable file.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline constexpr const char* kToolVersion = "0.1.0";

/// Catalog seeds of h as objects: every shipped module except the trivial one,
/// or those named in `names` (in that order).
std::vector<Object> catalog_seeds(const HopfPtr& h, const std::vector<std::string>& names = {});

/// Seeds for Rep(D(H)). For a group algebra: pullbacks of `seeds_h` along
/// D(H) → H, f⊗a ↦ f(1)a, followed by one module per non-identity conjugacy
/// class C (basis v_y, y ∈ C, (δ_x⊗a) v_y = [x = aya⁻¹] v_{aya⁻¹}). Otherwise the
/// coinduced seeds R(V).
std::vector<Object> double_seeds(const HopfPtr& h, const HopfPtr& d, const std::vector<Object>& seeds_h,
                                 const Functor& coinduction);

struct RunOptions {
  std::filesystem::path algebra;
  std::string map = "double-inclusion";  // "identity", "double-inclusion" or a map file
  std::vector<std::string> seeds;        // empty: catalog seeds
  int depth = 2;
  bool normalize_form = true;
  unsigned threads = 1;
};

struct Section {
  std::string name;
  Report report;
};

struct TheoremReport {
  std::string algebra, map, target;
  std::vector<std::string> seeds, target_seeds;
  int depth = 0;
  bool normalize_form = true;
  std::vector<Section> sections;

  bool ok() const;
};

/// The adjunction, generators and Frobenius form behind one run. `report`
/// holds the hopf, build and form sections; `adj` is null when the Hopf data
/// failed or U ⊣ R could not be built, `construction` when no form exists.
struct Instance {
  TheoremReport report;
  HopfPtr a, b;
  Matrix phi;
  CategoryPtr rep_a, rep_b;
  AdjunctionPtr adj;
  std::vector<Object> seeds_a, seeds_b;
  GeneratorSet gen_a, gen_b;
  std::size_t length = 2;
  std::optional<FrobeniusAlgebraData> form;
  ConstructionPtr construction;

  void clear_cache() const;
};

/// Hopf axioms plus pivot, quasitriangularity and ribbon data when present.
Report verify_hopf_data(const HopfAlgebraData& h);

Instance prepare_instance(const RunOptions& options);

/// Throws InputError on bad input and TheoremViolation when an identity the
/// theory guarantees comes out false.
TheoremReport run_theorems(const RunOptions& options);

TheoremReport hopf_report(const HopfAlgebraData& h, const std::string& file);

/// Deterministic JSON (two-space indent, trailing newline).
std::string to_json(const TheoremReport& report);

}  // namespace cohopf
