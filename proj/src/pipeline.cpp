#include "cohopf/pipeline.hpp"

#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include <nlohmann/json.hpp>

namespace cohopf {

namespace {

using Task = std::function<Report()>;

int group_product(const HopfAlgebraData& g, int a, int b) { return g.product(a, b).front().index; }

int group_inverse(const HopfAlgebraData& g, int a) {
  for (int b = 0; b < g.dim; ++b)
    if (g.unit(group_product(g, a, b)) == Rational(1)) return b;
  throw ConstructionError("no inverse for " + g.basis[static_cast<std::size_t>(a)]);
}

Report skipped(const std::string& id, const std::string& why) {
  Report r;
  r.add(id, "hypothesis", Status::skipped, why);
  return r;
}

// Runs tasks on up to `threads` workers; results come back in task order.
std::vector<Report> run_all(const std::vector<Task>& tasks, unsigned threads, const std::function<void()>& after_each) {
  std::vector<Report> out(tasks.size());
  std::vector<std::exception_ptr> errors(tasks.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < tasks.size(); i = next++) {
      try {
        out[i] = tasks[i]();
        after_each();
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(tasks.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned i = 0; i < n; ++i) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::vector<std::string> keys(const std::vector<Object>& xs) {
  std::vector<std::string> out;
  for (const auto& x : xs) out.push_back(x.key());
  return out;
}

HopfPtr load(const std::filesystem::path& path) {
  try {
    return std::make_shared<const HopfAlgebraData>(load_algebra(path));
  } catch (const ParseError& e) {
    throw InputError(e.what());
  }
}

}  // namespace

std::vector<Object> catalog_seeds(const HopfPtr& h, const std::vector<std::string>& names) {
  std::vector<Object> out;
  auto object = [&](const ModuleSpec& m) { return Object(make_atom(m.name, explicit_module(h, m.action))); };
  if (names.empty()) {
    for (const auto& m : h->modules)
      if (m.name != "triv") out.push_back(object(m));
    return out;
  }
  for (const auto& n : names) {
    auto it = std::find_if(h->modules.begin(), h->modules.end(), [&](const ModuleSpec& m) { return m.name == n; });
    if (it == h->modules.end()) throw InputError("no module named " + n + " in " + h->name);
    out.push_back(object(*it));
  }
  return out;
}

std::vector<Object> double_seeds(const HopfPtr& h, const HopfPtr& d, const std::vector<Object>& seeds_h,
                                 const Functor& coinduction) {
  std::vector<Object> out;
  if (!is_group_algebra(*h)) {
    for (const Object& x : seeds_h) out.push_back(coinduction(x));
    return out;
  }
  const int n = h->dim;
  const RepCategory rep_h(h);
  for (const Object& x : seeds_h) {
    std::vector<Matrix> action;
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) action.push_back(h->unit(a) * rep_h.action(x, b));
    out.emplace_back(make_atom("π*" + x.key(), explicit_module(d, std::move(action))));
  }
  std::vector<bool> seen(static_cast<std::size_t>(n), false);
  for (int y = 0; y < n; ++y) {
    if (seen[static_cast<std::size_t>(y)] || h->unit(y) == Rational(1)) continue;
    std::vector<int> cls;
    for (int a = 0; a < n; ++a) {
      const int c = group_product(*h, group_product(*h, a, y), group_inverse(*h, a));
      if (!seen[static_cast<std::size_t>(c)]) {
        seen[static_cast<std::size_t>(c)] = true;
        cls.push_back(c);
      }
    }
    std::sort(cls.begin(), cls.end());
    const int k = static_cast<int>(cls.size());
    auto position = [&](int g) { return static_cast<int>(std::find(cls.begin(), cls.end(), g) - cls.begin()); };
    std::vector<Matrix> action;
    for (int x = 0; x < n; ++x)
      for (int a = 0; a < n; ++a) {
        Matrix m = Matrix::Zero(k, k);
        for (int i = 0; i < k; ++i) {
          const int c = group_product(*h, group_product(*h, a, cls[static_cast<std::size_t>(i)]), group_inverse(*h, a));
          if (c == x) m(position(c), i) = 1;
        }
        action.push_back(std::move(m));
      }
    out.emplace_back(make_atom("class(" + h->basis[static_cast<std::size_t>(y)] + ")", explicit_module(d, std::move(action))));
  }
  return out;
}

bool TheoremReport::ok() const {
  return std::all_of(sections.begin(), sections.end(), [](const Section& s) { return s.report.ok(); });
}

Report verify_hopf_data(const HopfAlgebraData& h) {
  Report r = verify_hopf_axioms(h);  // includes the pivot checks
  if (h.rmatrix) r.merge(verify_quasitriangular(h));
  if (h.ribbon) r.merge(verify_ribbon_element(h));
  return r;
}

TheoremReport hopf_report(const HopfAlgebraData& h, const std::string& file) {
  TheoremReport out;
  out.algebra = file;
  out.map = "none";
  out.target = h.name;
  out.sections.push_back({"hopf", verify_hopf_data(h)});
  return out;
}

Instance prepare_instance(const RunOptions& o) {
  if (o.depth < 1) throw InputError("depth must be at least 1");
  Instance in;
  in.report.algebra = o.algebra.filename().string();
  in.report.depth = o.depth;
  in.report.normalize_form = o.normalize_form;
  in.length = static_cast<std::size_t>(o.depth);

  in.a = load(o.algebra);
  if (o.map == "identity") {
    in.report.map = "identity";
    in.b = in.a;
  } else if (o.map == "double-inclusion") {
    in.report.map = "double-inclusion";
    in.b = std::make_shared<const HopfAlgebraData>(drinfeld_double(*in.a));
    in.phi = double_inclusion(*in.a);
  } else {
    MapFile mf;
    try {
      mf = load_map(o.map);
    } catch (const ParseError& e) {
      throw InputError(e.what());
    }
    in.report.map = std::filesystem::path(o.map).filename().string();
    in.b = load(mf.target);
    in.phi = mf.map;
  }
  const HopfPtr& a = in.a;
  const HopfPtr& b = in.b;
  in.report.target = b->name;

  Report hopf = verify_hopf_data(*a);
  if (b != a) hopf.merge(verify_hopf_data(*b), "target.");
  const bool hopf_ok = hopf.ok();
  in.report.sections.push_back({"hopf", std::move(hopf)});
  if (!hopf_ok) return in;

  in.rep_a = std::make_shared<const RepCategory>(a);
  in.rep_b = b == a ? in.rep_a : std::make_shared<const RepCategory>(b);
  Report build;
  try {
    in.adj = b == a ? identity_adjunction(in.rep_a) : coinduction_adjunction(in.rep_b, in.rep_a, in.phi);
    build.add("adjunction.construct", "U ⊣ R built", Status::pass);
  } catch (const ConstructionError& e) {
    build.add("adjunction.construct", "U ⊣ R built", Status::fail, e.what());
  } catch (const UnsupportedExtensionError& e) {
    build.add("adjunction.construct", "U ⊣ R built", Status::fail, e.what());
  }
  in.report.sections.push_back({"build", build});
  if (!in.adj) return in;

  in.seeds_a = catalog_seeds(a, o.seeds);
  if (b == a) in.seeds_b = in.seeds_a;
  else if (o.map == "double-inclusion") in.seeds_b = double_seeds(a, b, in.seeds_a, in.adj->right());
  else in.seeds_b = catalog_seeds(b);
  in.report.seeds = keys(in.seeds_a);
  in.report.target_seeds = keys(in.seeds_b);
  in.gen_a = make_generator_set(in.seeds_a, o.depth);
  in.gen_b = make_generator_set(in.seeds_b, o.depth);

  const auto [m, u] = unit_algebra(*in.adj);
  const Object r1 = in.adj->right()(Object());
  const FormSearch search = solve_frobenius_form(*in.rep_b, r1, m, u);
  Report form;
  Check f{"form.frobenius", "Frobenius form on R(1) extending (R₂(1,1), R₀)", Status::pass, {}, {}, {}};
  f.scalars["invariant_functionals"] = std::to_string(search.invariant_functionals);
  f.scalars["candidates_tried"] = std::to_string(search.tried.size());
  f.scalars["exhaustive"] = search.exhaustive ? "true" : "false";
  if (!search.algebra) {
    f.status = Status::unavailable;
    f.witness = "Frobenius form (" + search.certificate + ")";
  } else {
    in.form = o.normalize_form ? normalize_form(*in.rep_b, *search.algebra) : *search.algebra;
    f.scalars["nu_u"] = compose(in.form->nu, in.form->u).matrix(0, 0).str();
    in.construction = construct_frobenius_on_right_adjoint(in.adj, *in.form);
  }
  form.add(std::move(f));
  in.report.sections.push_back({"form", form});
  return in;
}

TheoremReport run_theorems(const RunOptions& o) {
  Instance in = prepare_instance(o);
  if (!in.adj) return std::move(in.report);
  const AdjunctionPtr& adj = in.adj;
  const ConstructionPtr& c = in.construction;
  const GeneratorSet& gen_a = in.gen_a;
  const GeneratorSet& gen_b = in.gen_b;
  const CategoryPtr& rep_b = in.rep_b;
  const std::size_t length = in.length;

  std::vector<std::pair<std::string, Task>> tasks;
  tasks.emplace_back("condition", [&] { return check_condition_main(*adj, gen_a, gen_b, length); });
  tasks.emplace_back("adjunction", [&] {
    Report r = check_snakes(*adj, gen_b, gen_a);
    r.merge(check_adjunction_monoidal(*adj, gen_b, gen_a, length));
    return r;
  });
  tasks.emplace_back("operators", [&] { return verify_operator_relations(*adj, gen_a, length + 1); });

  const std::vector<std::string> frob_suites{"construction", "separable", "half_braiding", "pivotal",
                                             "braiding",     "ribbon",    "duality"};
  if (c) {
    tasks.emplace_back("construction", [&] { return check_construction(*c, gen_a, gen_b, length + 1); });
    tasks.emplace_back("separable", [&] { return theorem_separable_equivalence(*c, gen_a, length); });
    tasks.emplace_back("half_braiding", [&] {
      const HalfBraidingData hb = half_braiding_on_R1(*adj, gen_b);
      return check_tensor_endofunctor(rep_b, c->unit_algebra(), hb, gen_b, length);
    });
    tasks.emplace_back("pivotal", [&] { return theorem_pivotal_equivalence(*c, gen_a, gen_b, length); });
    tasks.emplace_back("braiding", [&] { return adjoint_braiding_check(*c, gen_a, gen_b, length); });
    tasks.emplace_back("ribbon", [&] { return theorem_ribbon_equivalence(*c, gen_a, gen_b, length); });
    tasks.emplace_back("duality", [&] {
      Report r = check_duality_transforms(adj->left(), *c->functor(), gen_a);
      r.merge(check_duality_transforms(*c->functor(), adj->left(), make_generator_set(in.seeds_b, 1)), "RU.");
      return r;
    });
  } else {
    for (const auto& s : frob_suites)
      tasks.emplace_back(s, [s] { return skipped(s, "hypothesis unavailable: no Frobenius form on R(1)"); });
  }

  std::vector<Task> run;
  for (const auto& t : tasks) run.push_back(t.second);
  // Memo tables grow with every suite; dropping them between suites bounds the peak.
  std::vector<Report> reports = run_all(run, o.threads, [&] { in.clear_cache(); });
  for (std::size_t i = 0; i < tasks.size(); ++i) in.report.sections.push_back({tasks[i].first, std::move(reports[i])});
  return std::move(in.report);
}

void Instance::clear_cache() const {
  if (construction) construction->clear_cache();
  if (adj) adj->clear_cache();
}

std::string to_json(const TheoremReport& r) {
  using json = nlohmann::ordered_json;
  json doc;
  doc["tool"] = {{"name", "cohopf"}, {"version", kToolVersion}};
  json inst;
  inst["algebra"] = r.algebra;
  inst["map"] = r.map;
  inst["target"] = r.target;
  inst["seeds"] = r.seeds;
  inst["target_seeds"] = r.target_seeds;
  inst["depth"] = r.depth;
  inst["normalize_form"] = r.normalize_form;
  doc["instance"] = inst;
  std::map<std::string, int> totals{{"pass", 0}, {"fail", 0}, {"unavailable", 0}, {"skipped", 0}};
  json sections = json::array();
  for (const auto& s : r.sections) {
    json checks = json::array();
    for (const auto& c : s.report.checks()) {
      json j;
      j["id"] = c.id;
      j["anchor"] = c.anchor;
      j["status"] = to_string(c.status);
      if (!c.witness.empty()) j["witness"] = c.witness;
      if (!c.scope.empty()) j["scope"] = c.scope;
      if (!c.scalars.empty()) {
        json sc;
        for (const auto& [k, v] : c.scalars) sc[k] = v;
        j["scalars"] = sc;
      }
      ++totals[to_string(c.status)];
      checks.push_back(std::move(j));
    }
    sections.push_back({{"name", s.name}, {"checks", std::move(checks)}});
  }
  doc["sections"] = std::move(sections);
  doc["summary"] = {{"pass", totals["pass"]},
                    {"fail", totals["fail"]},
                    {"unavailable", totals["unavailable"]},
                    {"skipped", totals["skipped"]},
                    {"ok", r.ok()}};
  return doc.dump(2) + "\n";
}

}  // namespace cohopf
