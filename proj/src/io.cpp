#include "cohopf/io.hpp"

#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

namespace cohopf {

namespace {

using json = nlohmann::ordered_json;

struct Reader {
  std::string origin;

  [[noreturn]] void fail(const std::string& where, const std::string& what) const {
    throw ParseError(origin + ": " + where + ": " + what);
  }

  const json& field(const json& obj, const char* key) const {
    if (!obj.is_object()) fail("document", "expected an object");
    auto it = obj.find(key);
    if (it == obj.end()) fail(key, "missing field");
    return *it;
  }

  Rational rational(const json& v, const std::string& where) const {
    if (v.is_number_integer()) return Rational(v.get<long long>());
    if (!v.is_string()) fail(where, "expected a rational string");
    try {
      return Rational::parse(v.get<std::string>());
    } catch (const std::invalid_argument& e) {
      fail(where, e.what());
    }
  }

  int index(const json& v, int n, const std::string& where) const {
    if (!v.is_number_integer()) fail(where, "expected an integer index");
    const long long i = v.get<long long>();
    if (i < 0 || i >= n) fail(where, "index " + std::to_string(i) + " out of range");
    return static_cast<int>(i);
  }

  Vector vector(const json& v, Eigen::Index n, const std::string& where) const {
    if (!v.is_array() || static_cast<Eigen::Index>(v.size()) != n)
      fail(where, "expected " + std::to_string(n) + " entries");
    Vector out(n);
    for (Eigen::Index i = 0; i < n; ++i)
      out(i) = rational(v[static_cast<std::size_t>(i)], where + "[" + std::to_string(i) + "]");
    return out;
  }

  Matrix matrix(const json& v, Eigen::Index rows, Eigen::Index cols, const std::string& where) const {
    const Vector flat = vector(v, rows * cols, where);
    Matrix m(rows, cols);
    for (Eigen::Index i = 0; i < rows; ++i)
      for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = flat(i * cols + j);
    return m;
  }

  std::vector<std::vector<std::vector<Rational>>> tensor(const json& v, int n, const std::string& where) const {
    if (!v.is_array()) fail(where, "expected a list of [i, j, k, c] entries");
    std::vector<std::vector<std::vector<Rational>>> t(
        static_cast<std::size_t>(n), std::vector<std::vector<Rational>>(
                                         static_cast<std::size_t>(n), std::vector<Rational>(static_cast<std::size_t>(n))));
    for (std::size_t e = 0; e < v.size(); ++e) {
      const std::string w = where + "[" + std::to_string(e) + "]";
      const json& q = v[e];
      if (!q.is_array() || q.size() != 4) fail(w, "expected [i, j, k, c]");
      const int i = index(q[0], n, w), j = index(q[1], n, w), k = index(q[2], n, w);
      t[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)][static_cast<std::size_t>(k)] += rational(q[3], w);
    }
    return t;
  }
};

json rational_json(const Rational& r) { return r.str(); }

json vector_json(const Vector& v) {
  json a = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) a.push_back(rational_json(v(i)));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) a.push_back(rational_json(m(i, j)));
  return a;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path.string() + ": cannot open");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json parse_json(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(origin + ": byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace

HopfAlgebraData parse_algebra(const std::string& text, const std::string& origin) {
  const Reader r{origin};
  const json doc = parse_json(text, origin);
  const json& name = r.field(doc, "name");
  if (!name.is_string()) r.fail("name", "expected a string");
  const json& dimj = r.field(doc, "dim");
  if (!dimj.is_number_integer() || dimj.get<long long>() <= 0 || dimj.get<long long>() > 4096)
    r.fail("dim", "expected a positive integer");
  const int n = dimj.get<int>();
  const json& basisj = r.field(doc, "basis");
  if (!basisj.is_array() || static_cast<int>(basisj.size()) != n) r.fail("basis", "expected dim labels");
  std::vector<std::string> basis;
  for (const auto& b : basisj) {
    if (!b.is_string()) r.fail("basis", "labels must be strings");
    basis.push_back(b.get<std::string>());
  }
  HopfAlgebraData h;
  try {
    h = make_hopf(name.get<std::string>(), basis, r.tensor(r.field(doc, "mul"), n, "mul"),
                  r.vector(r.field(doc, "unit"), n, "unit"), r.tensor(r.field(doc, "comul"), n, "comul"),
                  r.vector(r.field(doc, "counit"), n, "counit"),
                  r.matrix(r.field(doc, "antipode"), n, n, "antipode"));
  } catch (const ShapeError& e) {
    r.fail("document", e.what());
  }
  if (doc.contains("pivot")) h.pivot = r.vector(doc["pivot"], n, "pivot");
  if (doc.contains("rmatrix")) h.rmatrix = r.vector(doc["rmatrix"], static_cast<Eigen::Index>(n) * n, "rmatrix");
  if (doc.contains("ribbon")) h.ribbon = r.vector(doc["ribbon"], n, "ribbon");
  if (doc.contains("modules")) {
    const json& mods = doc["modules"];
    if (!mods.is_array()) r.fail("modules", "expected a list");
    for (std::size_t m = 0; m < mods.size(); ++m) {
      const std::string w = "modules[" + std::to_string(m) + "]";
      const json& mj = mods[m];
      ModuleSpec spec;
      const json& mname = r.field(mj, "name");
      if (!mname.is_string()) r.fail(w + ".name", "expected a string");
      spec.name = mname.get<std::string>();
      const json& mdim = r.field(mj, "dim");
      if (!mdim.is_number_integer() || mdim.get<long long>() <= 0 || mdim.get<long long>() > 4096)
        r.fail(w + ".dim", "expected a positive integer");
      const int d = mdim.get<int>();
      const json& action = r.field(mj, "action");
      if (!action.is_array() || static_cast<int>(action.size()) != n)
        r.fail(w + ".action", "expected one matrix per basis element");
      for (int i = 0; i < n; ++i)
        spec.action.push_back(r.matrix(action[static_cast<std::size_t>(i)], d, d,
                                       w + ".action[" + std::to_string(i) + "]"));
      h.modules.push_back(std::move(spec));
    }
  }
  return h;
}

HopfAlgebraData load_algebra(const std::filesystem::path& path) {
  return parse_algebra(read_file(path), path.string());
}

std::string write_algebra(const HopfAlgebraData& h) {
  const int n = h.dim;
  json doc;
  doc["name"] = h.name;
  doc["dim"] = n;
  doc["basis"] = h.basis;
  json mul = json::array();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& t : h.product(i, j)) mul.push_back(json::array({i, j, t.index, t.coeff.str()}));
  doc["mul"] = std::move(mul);
  doc["unit"] = vector_json(h.unit);
  json comul = json::array();
  for (int i = 0; i < n; ++i)
    for (const auto& t : h.comul[static_cast<std::size_t>(i)])
      comul.push_back(json::array({i, t.left, t.right, t.coeff.str()}));
  doc["comul"] = std::move(comul);
  doc["counit"] = vector_json(h.counit);
  doc["antipode"] = matrix_json(h.antipode);
  if (h.pivot) doc["pivot"] = vector_json(*h.pivot);
  if (h.rmatrix) doc["rmatrix"] = vector_json(*h.rmatrix);
  if (h.ribbon) doc["ribbon"] = vector_json(*h.ribbon);
  if (!h.modules.empty()) {
    json mods = json::array();
    for (const auto& m : h.modules) {
      json mj;
      mj["name"] = m.name;
      mj["dim"] = m.action.front().rows();
      json action = json::array();
      for (const auto& a : m.action) action.push_back(matrix_json(a));
      mj["action"] = std::move(action);
      mods.push_back(std::move(mj));
    }
    doc["modules"] = std::move(mods);
  }
  return doc.dump(1) + "\n";
}

MapFile load_map(const std::filesystem::path& path) {
  const Reader r{path.string()};
  const json doc = parse_json(read_file(path), path.string());
  const json& target = r.field(doc, "target");
  if (!target.is_string()) r.fail("target", "expected a path");
  MapFile out;
  out.target = path.parent_path() / target.get<std::string>();
  const json& entries = r.field(doc, "map");
  const json& rows = r.field(doc, "rows");
  const json& cols = r.field(doc, "cols");
  if (!rows.is_number_integer() || !cols.is_number_integer() || rows.get<long long>() <= 0 ||
      cols.get<long long>() <= 0)
    r.fail("rows/cols", "expected positive integers");
  out.map = r.matrix(entries, rows.get<int>(), cols.get<int>(), "map");
  return out;
}

}  // namespace cohopf
