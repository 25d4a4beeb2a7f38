#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "cohopf/pipeline.hpp"

using namespace cohopf;

namespace {

enum Exit { kOk = 0, kCheckFailed = 1, kInputError = 2, kTheoremViolation = 3 };

void emit(const std::string& text, const std::string& path) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

int verify_hopf(const std::string& file, const std::string& report) {
  const HopfAlgebraData h = load_algebra(file);
  const TheoremReport r = hopf_report(h, std::filesystem::path(file).filename().string());
  emit(to_json(r), report);
  for (const auto& c : r.sections.front().report.checks())
    if (c.status == Status::fail) std::cerr << "fail: " << c.id << " (" << c.witness << ")\n";
  return r.ok() ? kOk : kCheckFailed;
}

int make_double(const std::string& file, const std::string& output) {
  const HopfAlgebraData h = load_algebra(file);
  if (const Report r = verify_hopf_axioms(h); !r.ok()) {
    std::cerr << "input is not a Hopf algebra\n";
    return kCheckFailed;
  }
  const HopfAlgebraData d = drinfeld_double(h);
  const std::string text = write_algebra(d);
  const HopfAlgebraData back = parse_algebra(text, "<double>");
  if (!same_structure(back, d) || !verify_hopf_axioms(back).ok() || !verify_quasitriangular(back).ok()) {
    std::cerr << "double failed verification after round trip\n";
    return kCheckFailed;
  }
  emit(text, output);
  return kOk;
}

int run(const RunOptions& o, const std::string& report) {
  const TheoremReport r = run_theorems(o);
  emit(to_json(r), report);
  for (const auto& s : r.sections)
    for (const auto& c : s.report.checks())
      if (c.status == Status::fail) std::cerr << "fail: " << s.name << "/" << c.id << " (" << c.witness << ")\n";
  return r.ok() ? kOk : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Frobenius monoidal structures on right adjoints, checked exactly"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  std::string file, report, output;
  auto* verify = app.add_subcommand("verify-hopf", "Check the Hopf axioms and optional structure of an algebra file");
  verify->add_option("file", file, "Algebra file")->required();
  verify->add_option("--report", report, "Report path (default stdout)");

  auto* dbl = app.add_subcommand("double", "Write the Drinfeld double of an algebra file");
  dbl->add_option("file", file, "Algebra file")->required();
  dbl->add_option("-o,--output", output, "Output path (default stdout)");

  RunOptions o;
  std::string algebra, normalize = "on";
  auto* thm = app.add_subcommand("run-theorems", "Build U ⊣ R and run every applicable suite");
  thm->add_option("file", algebra, "Algebra file")->required();
  thm->add_option("--map", o.map, "identity, double-inclusion or a map file")->capture_default_str();
  thm->add_option("--seeds", o.seeds, "Seed module names (default: catalog modules)")->delimiter(',');
  thm->add_option("--depth", o.depth, "Generator word depth")->capture_default_str()->check(CLI::PositiveNumber);
  thm->add_option("--report", report, "Report path (default stdout)");
  thm->add_option("--normalize-form", normalize, "Rescale ν toward mΔ = id")
      ->capture_default_str()
      ->check(CLI::IsMember({"on", "off"}));
  thm->add_option("--threads", o.threads, "Worker threads")->capture_default_str()->check(CLI::PositiveNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }

  try {
    if (*verify) return verify_hopf(file, report);
    if (*dbl) return make_double(file, output);
    o.algebra = algebra;
    o.normalize_form = normalize == "on";
    return run(o, report);
  } catch (const TheoremViolation& e) {
    std::cerr << "theorem violation: " << e.what() << "\n";
    return kTheoremViolation;
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const ParseError& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    std::cerr << "input error: " << e.what() << "\n";
    return kInputError;
  }
}
