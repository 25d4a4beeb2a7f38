#include "cohopf/hopf.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <utility>

namespace cohopf {

namespace {

using Terms = std::vector<std::pair<Eigen::Index, Rational>>;

Terms nonzeros(const Vector& v) {
  Terms out;
  for (Eigen::Index i = 0; i < v.size(); ++i)
    if (!v(i).is_zero()) out.emplace_back(i, v(i));
  return out;
}

Eigen::Index ipow(Eigen::Index n, int k) {
  Eigen::Index r = 1;
  for (int i = 0; i < k; ++i) r *= n;
  return r;
}

std::vector<int> digits(Eigen::Index index, int n, int legs) {
  std::vector<int> d(static_cast<std::size_t>(legs));
  for (int l = legs - 1; l >= 0; --l) {
    d[static_cast<std::size_t>(l)] = static_cast<int>(index % n);
    index /= n;
  }
  return d;
}

Eigen::Index flatten(const std::vector<int>& d, int n) {
  Eigen::Index idx = 0;
  for (int x : d) idx = idx * n + x;
  return idx;
}

Vector product_vector(const HopfAlgebraData& h, int i, int j) {
  Vector v = Vector::Zero(h.dim);
  for (const auto& t : h.product(i, j)) v(t.index) += t.coeff;
  return v;
}

std::string label_tuple(const HopfAlgebraData& h, std::initializer_list<int> idx) {
  std::string s = "(";
  bool first = true;
  for (int i : idx) {
    if (!first) s += ", ";
    s += h.basis[static_cast<std::size_t>(i)];
    first = false;
  }
  return s + ")";
}

// Records one check when it goes out of scope, keeping the first failure's witness.
struct CheckBuilder {
  CheckBuilder(Report& r, std::string i, std::string a)
      : report(r), id(std::move(i)), anchor(std::move(a)) {}
  CheckBuilder(const CheckBuilder&) = delete;
  CheckBuilder& operator=(const CheckBuilder&) = delete;

  Report& report;
  std::string id;
  std::string anchor;
  std::string witness;
  bool failed = false;

  void fail(std::string w) {
    if (!failed) witness = std::move(w);
    failed = true;
  }
  ~CheckBuilder() { report.add(id, anchor, failed ? Status::fail : Status::pass, witness); }
};

std::vector<std::vector<ProductTerm>> compress_mul(const std::vector<Rational>& dense, int n) {
  std::vector<std::vector<ProductTerm>> out(static_cast<std::size_t>(n * n));
  for (int ij = 0; ij < n * n; ++ij)
    for (int k = 0; k < n; ++k) {
      const Rational& c = dense[static_cast<std::size_t>(ij * n + k)];
      if (!c.is_zero()) out[static_cast<std::size_t>(ij)].push_back({k, c});
    }
  return out;
}

std::vector<std::vector<CoproductTerm>> compress_comul(const std::vector<Rational>& dense, int n) {
  std::vector<std::vector<CoproductTerm>> out(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const Rational& c = dense[static_cast<std::size_t>((i * n + j) * n + k)];
        if (!c.is_zero()) out[static_cast<std::size_t>(i)].push_back({j, k, c});
      }
  return out;
}

std::vector<Rational> dense_mul(const HopfAlgebraData& h) {
  const int n = h.dim;
  std::vector<Rational> d(static_cast<std::size_t>(n * n * n));
  for (int ij = 0; ij < n * n; ++ij)
    for (const auto& t : h.mul[static_cast<std::size_t>(ij)])
      d[static_cast<std::size_t>(ij * n + t.index)] += t.coeff;
  return d;
}

std::vector<Rational> dense_comul(const HopfAlgebraData& h) {
  const int n = h.dim;
  std::vector<Rational> d(static_cast<std::size_t>(n * n * n));
  for (int i = 0; i < n; ++i)
    for (const auto& t : h.comul[static_cast<std::size_t>(i)])
      d[static_cast<std::size_t>((i * n + t.left) * n + t.right)] += t.coeff;
  return d;
}

bool in_span(const Matrix& rows_basis, const Vector& v) {
  if (rows_basis.rows() == 0) return v.isZero();
  Matrix stacked(rows_basis.rows() + 1, rows_basis.cols());
  stacked << rows_basis, v.transpose();
  return rank(stacked) == rows_basis.rows();
}

Matrix append_row(const Matrix& m, const Vector& v) {
  Matrix out(m.rows() + 1, v.size());
  if (m.rows() > 0) out.topRows(m.rows()) = m;
  out.row(m.rows()) = v.transpose();
  return out;
}

}  // namespace

HopfAlgebraData make_hopf(std::string name, std::vector<std::string> basis,
                          const std::vector<std::vector<std::vector<Rational>>>& mul_dense,
                          Vector unit,
                          const std::vector<std::vector<std::vector<Rational>>>& comul_dense,
                          Vector counit, Matrix antipode) {
  const int n = static_cast<int>(basis.size());
  auto check3 = [n](const auto& t, const char* what) {
    bool ok = static_cast<int>(t.size()) == n;
    for (const auto& a : t) {
      ok = ok && static_cast<int>(a.size()) == n;
      for (const auto& b : a) ok = ok && static_cast<int>(b.size()) == n;
    }
    if (!ok) throw ShapeError(std::string(what) + ": expected " + std::to_string(n) + "^3 tensor");
  };
  check3(mul_dense, "mul");
  check3(comul_dense, "comul");
  std::vector<Rational> m(static_cast<std::size_t>(n * n * n)), c(m.size());
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int k = 0; k < n; ++k) {
        const auto idx = static_cast<std::size_t>((i * n + j) * n + k);
        m[idx] = mul_dense[i][j][k];
        c[idx] = comul_dense[i][j][k];
      }
  HopfAlgebraData h;
  h.name = std::move(name);
  h.dim = n;
  h.basis = std::move(basis);
  h.mul = compress_mul(m, n);
  h.unit = std::move(unit);
  h.comul = compress_comul(c, n);
  h.counit = std::move(counit);
  h.antipode = std::move(antipode);
  validate_shapes(h);
  return h;
}

void validate_shapes(const HopfAlgebraData& h) {
  const int n = h.dim;
  auto bad = [&](const std::string& what) { throw ShapeError(h.name + ": " + what); };
  if (n <= 0) bad("dim must be positive");
  if (static_cast<int>(h.basis.size()) != n) bad("basis has wrong length");
  if (static_cast<int>(h.mul.size()) != n * n) bad("mul table has wrong size");
  for (const auto& ts : h.mul)
    for (const auto& t : ts)
      if (t.index < 0 || t.index >= n) bad("mul index out of range");
  if (static_cast<int>(h.comul.size()) != n) bad("comul table has wrong size");
  for (const auto& ts : h.comul)
    for (const auto& t : ts)
      if (t.left < 0 || t.left >= n || t.right < 0 || t.right >= n) bad("comul index out of range");
  if (h.unit.size() != n) bad("unit has wrong length");
  if (h.counit.size() != n) bad("counit has wrong length");
  if (h.antipode.rows() != n || h.antipode.cols() != n) bad("antipode has wrong shape");
  if (h.pivot && h.pivot->size() != n) bad("pivot has wrong length");
  if (h.ribbon && h.ribbon->size() != n) bad("ribbon has wrong length");
  if (h.rmatrix && h.rmatrix->size() != n * n) bad("rmatrix has wrong length");
  for (const auto& m : h.modules) {
    if (static_cast<int>(m.action.size()) != n) bad("module " + m.name + " needs one matrix per basis element");
    for (const auto& a : m.action)
      if (a.rows() != a.cols() || a.rows() != m.action.front().rows())
        bad("module " + m.name + " has inconsistent action shapes");
  }
}

Vector basis_vector(int n, int i) {
  Vector v = Vector::Zero(n);
  v(i) = 1;
  return v;
}

Vector multiply(const HopfAlgebraData& h, const Vector& x, const Vector& y) {
  return tensor_multiply(h, 1, x, y);
}

Vector comultiply(const HopfAlgebraData& h, const Vector& x) {
  const Eigen::Index n = h.dim;
  Vector out = Vector::Zero(n * n);
  for (const auto& [i, c] : nonzeros(x))
    for (const auto& t : h.comul[static_cast<std::size_t>(i)]) out(t.left * n + t.right) += c * t.coeff;
  return out;
}

Rational counit(const HopfAlgebraData& h, const Vector& x) {
  Rational r = 0;
  for (const auto& [i, c] : nonzeros(x)) r += c * h.counit(i);
  return r;
}

Vector antipode(const HopfAlgebraData& h, const Vector& x) { return multiply(h.antipode, Matrix(x)); }

Matrix left_multiplication(const HopfAlgebraData& h, const Vector& a) {
  Matrix m(h.dim, h.dim);
  for (int j = 0; j < h.dim; ++j) m.col(j) = multiply(h, a, basis_vector(h.dim, j));
  return m;
}

std::optional<Vector> inverse_element(const HopfAlgebraData& h, const Vector& x) {
  // x y = 1 has a solution iff left multiplication by x is invertible (finite dimension).
  auto inv = try_inverse(left_multiplication(h, x));
  if (!inv) return std::nullopt;
  return Vector(multiply(*inv, Matrix(h.unit)));
}

Vector tensor(const Vector& x, const Vector& y) {
  Vector out = Vector::Zero(x.size() * y.size());
  for (const auto& [i, a] : nonzeros(x))
    for (const auto& [j, b] : nonzeros(y)) out(i * y.size() + j) = a * b;
  return out;
}

Vector tensor_multiply(const HopfAlgebraData& h, int legs, const Vector& x, const Vector& y) {
  const int n = h.dim;
  const Eigen::Index size = ipow(n, legs);
  if (x.size() != size || y.size() != size) throw ShapeError("tensor_multiply: wrong element length");
  Vector out = Vector::Zero(size);
  const Terms xs = nonzeros(x), ys = nonzeros(y);
  for (const auto& [ix, cx] : xs) {
    const auto dx = digits(ix, n, legs);
    for (const auto& [iy, cy] : ys) {
      const auto dy = digits(iy, n, legs);
      const Rational c0 = cx * cy;
      std::function<void(int, Eigen::Index, const Rational&)> rec =
          [&](int leg, Eigen::Index idx, const Rational& c) {
            if (leg == legs) {
              out(idx) += c;
              return;
            }
            for (const auto& t : h.product(dx[static_cast<std::size_t>(leg)], dy[static_cast<std::size_t>(leg)]))
              rec(leg + 1, idx * n + t.index, c * t.coeff);
          };
      rec(0, 0, c0);
    }
  }
  return out;
}

Vector embed_legs(const HopfAlgebraData& h, const Vector& x, int first, int second) {
  const int n = h.dim;
  const int other = 3 - first - second;
  Vector out = Vector::Zero(ipow(n, 3));
  const Terms unit = nonzeros(h.unit);
  for (const auto& [idx, c] : nonzeros(x)) {
    std::vector<int> d(3);
    d[static_cast<std::size_t>(first)] = static_cast<int>(idx / n);
    d[static_cast<std::size_t>(second)] = static_cast<int>(idx % n);
    for (const auto& [u, cu] : unit) {
      d[static_cast<std::size_t>(other)] = static_cast<int>(u);
      out(flatten(d, n)) += c * cu;
    }
  }
  return out;
}

Vector comultiply_leg(const HopfAlgebraData& h, const Vector& x, int leg) {
  const int n = h.dim;
  Vector out = Vector::Zero(ipow(n, 3));
  for (const auto& [idx, c] : nonzeros(x)) {
    const int a = static_cast<int>(idx / n), b = static_cast<int>(idx % n);
    const int split = leg == 0 ? a : b;
    for (const auto& t : h.comul[static_cast<std::size_t>(split)]) {
      const std::vector<int> d = leg == 0 ? std::vector<int>{t.left, t.right, b}
                                          : std::vector<int>{a, t.left, t.right};
      out(flatten(d, n)) += c * t.coeff;
    }
  }
  return out;
}

Vector flip(const HopfAlgebraData& h, const Vector& x) {
  const int n = h.dim;
  Vector out = Vector::Zero(x.size());
  for (const auto& [idx, c] : nonzeros(x)) out((idx % n) * n + idx / n) = c;
  return out;
}

Vector apply_to_leg(const HopfAlgebraData& h, const Matrix& op, const Vector& x, int leg) {
  const int n = h.dim;
  Vector out = Vector::Zero(x.size());
  for (const auto& [idx, c] : nonzeros(x)) {
    const Eigen::Index a = idx / n, b = idx % n;
    for (Eigen::Index r = 0; r < n; ++r) {
      const Rational& s = op(r, leg == 0 ? a : b);
      if (s.is_zero()) continue;
      out(leg == 0 ? r * n + b : a * n + r) += c * s;
    }
  }
  return out;
}

std::vector<int> algebra_generators(const HopfAlgebraData& h) {
  const int n = h.dim;
  std::vector<int> gens;
  Matrix span(0, n);
  std::vector<Vector> elems;
  auto add = [&](const Vector& v) {
    if (in_span(span, v)) return false;
    span = append_row(span, v);
    elems.push_back(v);
    return true;
  };
  add(h.unit);
  for (int i = 0; i < n && span.rows() < n; ++i) {
    const Vector e = basis_vector(n, i);
    if (in_span(span, e)) continue;
    gens.push_back(i);
    add(e);
    // Close the span under right multiplication by generators.
    for (std::size_t k = 0; k < elems.size() && span.rows() < n; ++k)
      for (int g : gens) add(multiply(h, elems[k], basis_vector(n, g)));
  }
  return gens;
}

Report verify_hopf_axioms(const HopfAlgebraData& h) {
  validate_shapes(h);
  const int n = h.dim;
  Report report;
  std::vector<Vector> e;
  for (int i = 0; i < n; ++i) e.push_back(basis_vector(n, i));

  {
    CheckBuilder c{report, "hopf.associative", "multiplication is associative"};
    for (int i = 0; i < n && !c.failed; ++i)
      for (int j = 0; j < n && !c.failed; ++j) {
        const Vector ij = product_vector(h, i, j);
        for (int k = 0; k < n && !c.failed; ++k) {
          const Vector lhs = multiply(h, ij, e[k]);
          const Vector rhs = multiply(h, e[i], product_vector(h, j, k));
          if (lhs != rhs) c.fail(label_tuple(h, {i, j, k}));
        }
      }
  }
  {
    CheckBuilder c{report, "hopf.unital", "the unit is a two-sided identity"};
    for (int i = 0; i < n && !c.failed; ++i)
      if (multiply(h, h.unit, e[i]) != e[i] || multiply(h, e[i], h.unit) != e[i])
        c.fail(label_tuple(h, {i}));
  }
  {
    CheckBuilder c{report, "hopf.coassociative", "comultiplication is coassociative"};
    for (int i = 0; i < n && !c.failed; ++i) {
      const Vector d = comultiply(h, e[i]);
      if (comultiply_leg(h, d, 0) != comultiply_leg(h, d, 1)) c.fail(label_tuple(h, {i}));
    }
  }
  {
    CheckBuilder c{report, "hopf.counital", "the counit is a two-sided counit"};
    for (int i = 0; i < n && !c.failed; ++i) {
      Vector left = Vector::Zero(n), right = Vector::Zero(n);
      for (const auto& t : h.comul[static_cast<std::size_t>(i)]) {
        left(t.right) += t.coeff * h.counit(t.left);
        right(t.left) += t.coeff * h.counit(t.right);
      }
      if (left != e[i] || right != e[i]) c.fail(label_tuple(h, {i}));
    }
  }
  {
    CheckBuilder c{report, "hopf.comul_algebra_map", "Δ is an algebra map"};
    if (comultiply(h, h.unit) != tensor(h.unit, h.unit)) c.fail("unit");
    std::vector<Vector> d;
    for (int i = 0; i < n; ++i) d.push_back(comultiply(h, e[i]));
    for (int i = 0; i < n && !c.failed; ++i)
      for (int j = 0; j < n && !c.failed; ++j)
        if (comultiply(h, product_vector(h, i, j)) != tensor_multiply(h, 2, d[i], d[j]))
          c.fail(label_tuple(h, {i, j}));
  }
  {
    CheckBuilder c{report, "hopf.counit_algebra_map", "ε is an algebra map"};
    if (counit(h, h.unit) != Rational(1)) c.fail("unit");
    for (int i = 0; i < n && !c.failed; ++i)
      for (int j = 0; j < n && !c.failed; ++j)
        if (counit(h, product_vector(h, i, j)) != h.counit(i) * h.counit(j))
          c.fail(label_tuple(h, {i, j}));
  }
  {
    CheckBuilder c{report, "hopf.antipode", "m(S⊗id)Δ = uε = m(id⊗S)Δ"};
    for (int i = 0; i < n && !c.failed; ++i) {
      Vector left = Vector::Zero(n), right = Vector::Zero(n);
      for (const auto& t : h.comul[static_cast<std::size_t>(i)]) {
        left += t.coeff * multiply(h, h.antipode.col(t.left), e[t.right]);
        right += t.coeff * multiply(h, e[t.left], h.antipode.col(t.right));
      }
      const Vector expected = h.counit(i) * h.unit;
      if (left != expected || right != expected) c.fail(label_tuple(h, {i}));
    }
  }
  {
    CheckBuilder c{report, "hopf.antipode_invertible", "the antipode is bijective"};
    if (!try_inverse(h.antipode)) c.fail("rank " + std::to_string(rank(h.antipode)));
  }
  if (h.pivot) report.merge(verify_pivot(h));
  return report;
}

Report verify_pivot(const HopfAlgebraData& h) {
  if (!h.pivot) throw MissingDataError(h.name + ": pivot");
  const int n = h.dim;
  const Vector& g = *h.pivot;
  Report report;
  {
    CheckBuilder c{report, "pivot.grouplike", "Δ(g) = g⊗g and ε(g) = 1"};
    if (comultiply(h, g) != tensor(g, g)) c.fail("Δ(g)");
    else if (counit(h, g) != Rational(1)) c.fail("ε(g)");
  }
  const auto ginv = inverse_element(h, g);
  {
    CheckBuilder c{report, "pivot.invertible", "g is invertible"};
    if (!ginv) c.fail("g");
  }
  {
    CheckBuilder c{report, "pivot.implements_square_of_antipode", "S²(x) = g x g⁻¹"};
    const Matrix s2 = multiply(h.antipode, h.antipode);
    for (int i = 0; i < n && !c.failed; ++i) {
      const Vector e = basis_vector(n, i);
      if (multiply(h, s2.col(i), g) != multiply(h, g, e)) c.fail(label_tuple(h, {i}));
    }
  }
  return report;
}

Report verify_quasitriangular(const HopfAlgebraData& h) {
  if (!h.rmatrix) throw MissingDataError(h.name + ": rmatrix");
  const int n = h.dim;
  const Vector& r = *h.rmatrix;
  const Vector one2 = tensor(h.unit, h.unit);
  Report report;
  {
    // For a quasitriangular R the inverse is necessarily (S⊗id)(R).
    CheckBuilder c{report, "qt.invertible", "R is invertible in H⊗H"};
    const Vector rinv = apply_to_leg(h, h.antipode, r, 0);
    if (tensor_multiply(h, 2, r, rinv) != one2 || tensor_multiply(h, 2, rinv, r) != one2)
      c.fail("(S⊗id)(R) is not a two-sided inverse");
  }
  {
    CheckBuilder c{report, "qt.intertwines", "Δ^op(h) R = R Δ(h)"};
    for (int i = 0; i < n && !c.failed; ++i) {
      const Vector d = comultiply(h, basis_vector(n, i));
      if (tensor_multiply(h, 2, flip(h, d), r) != tensor_multiply(h, 2, r, d)) c.fail(label_tuple(h, {i}));
    }
  }
  const Vector r12 = embed_legs(h, r, 0, 1), r13 = embed_legs(h, r, 0, 2), r23 = embed_legs(h, r, 1, 2);
  {
    CheckBuilder c{report, "qt.hexagon_left", "(Δ⊗id)(R) = R₁₃R₂₃"};
    if (comultiply_leg(h, r, 0) != tensor_multiply(h, 3, r13, r23)) c.fail("R");
  }
  {
    CheckBuilder c{report, "qt.hexagon_right", "(id⊗Δ)(R) = R₁₃R₁₂"};
    if (comultiply_leg(h, r, 1) != tensor_multiply(h, 3, r13, r12)) c.fail("R");
  }
  {
    CheckBuilder c{report, "qt.yang_baxter", "R₁₂R₁₃R₂₃ = R₂₃R₁₃R₁₂"};
    const Vector lhs = tensor_multiply(h, 3, tensor_multiply(h, 3, r12, r13), r23);
    const Vector rhs = tensor_multiply(h, 3, tensor_multiply(h, 3, r23, r13), r12);
    if (lhs != rhs) c.fail("R");
  }
  return report;
}

Report verify_ribbon_element(const HopfAlgebraData& h) {
  if (!h.rmatrix) throw MissingDataError(h.name + ": rmatrix");
  if (!h.ribbon) throw MissingDataError(h.name + ": ribbon");
  const int n = h.dim;
  const Vector& t = *h.ribbon;
  const Vector& r = *h.rmatrix;
  Report report;
  {
    CheckBuilder c{report, "ribbon.central", "θ is central"};
    for (int i = 0; i < n && !c.failed; ++i) {
      const Vector e = basis_vector(n, i);
      if (multiply(h, t, e) != multiply(h, e, t)) c.fail(label_tuple(h, {i}));
    }
  }
  {
    CheckBuilder c{report, "ribbon.invertible", "θ is invertible"};
    if (!inverse_element(h, t)) c.fail("θ");
  }
  {
    CheckBuilder c{report, "ribbon.antipode_fixed", "S(θ) = θ"};
    if (antipode(h, t) != t) c.fail("S(θ)");
  }
  {
    CheckBuilder c{report, "ribbon.counit", "ε(θ) = 1"};
    if (counit(h, t) != Rational(1)) c.fail("ε(θ) = " + counit(h, t).str());
  }
  {
    CheckBuilder c{report, "ribbon.coproduct", "Δ(θ) = (R₂₁R)⁻¹(θ⊗θ)"};
    const Vector monodromy = tensor_multiply(h, 2, flip(h, r), r);
    if (tensor_multiply(h, 2, monodromy, comultiply(h, t)) != tensor(t, t)) c.fail("Δ(θ)");
  }
  return report;
}

Report verify_hopf_map(const HopfAlgebraData& source, const HopfAlgebraData& target,
                       const Matrix& phi) {
  if (phi.rows() != target.dim || phi.cols() != source.dim)
    throw ShapeError("hopf map: expected " + shape_str(target.dim, source.dim) + ", got " +
                     shape_str(phi.rows(), phi.cols()));
  const int n = source.dim;
  auto apply = [&](const Vector& x) { return Vector(multiply(phi, Matrix(x))); };
  const Matrix phi2 = kronecker(phi, phi);
  Report report;
  {
    CheckBuilder c{report, "map.multiplicative", "φ is a unital algebra map"};
    if (apply(source.unit) != target.unit) c.fail("unit");
    for (int i = 0; i < n && !c.failed; ++i)
      for (int j = 0; j < n && !c.failed; ++j)
        if (apply(product_vector(source, i, j)) != multiply(target, phi.col(i), phi.col(j)))
          c.fail(label_tuple(source, {i, j}));
  }
  {
    CheckBuilder c{report, "map.comultiplicative", "φ is a counital coalgebra map"};
    for (int i = 0; i < n && !c.failed; ++i) {
      const Vector e = basis_vector(n, i);
      if (comultiply(target, phi.col(i)) != Vector(multiply(phi2, Matrix(comultiply(source, e)))) ||
          counit(target, phi.col(i)) != source.counit(i))
        c.fail(label_tuple(source, {i}));
    }
  }
  {
    CheckBuilder c{report, "map.antipode", "φS = Sφ"};
    if (multiply(phi, source.antipode) != multiply(target.antipode, phi)) c.fail("S");
  }
  return report;
}

HopfAlgebraData dual_hopf(const HopfAlgebraData& h) {
  validate_shapes(h);
  const int n = h.dim;
  std::vector<Rational> m(static_cast<std::size_t>(n * n * n)), c(m.size());
  // e^a e^b = Σ_k Δ(e_k)[a,b] e^k;  Δ(e^k) = Σ_{a,b} (e_a e_b)[k] e^a ⊗ e^b.
  for (int k = 0; k < n; ++k)
    for (const auto& t : h.comul[static_cast<std::size_t>(k)])
      m[static_cast<std::size_t>((t.left * n + t.right) * n + k)] += t.coeff;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (const auto& t : h.product(a, b))
        c[static_cast<std::size_t>((t.index * n + a) * n + b)] += t.coeff;
  HopfAlgebraData d;
  d.name = h.name + "*";
  d.dim = n;
  for (const auto& b : h.basis) d.basis.push_back(b + "*");
  d.mul = compress_mul(m, n);
  d.unit = h.counit;
  d.comul = compress_comul(c, n);
  d.counit = h.unit;
  d.antipode = h.antipode.transpose();
  return d;
}

HopfAlgebraData drinfeld_double(const HopfAlgebraData& h) {
  validate_shapes(h);
  const int n = h.dim;
  const int nd = n * n;
  const auto sinv_opt = try_inverse(h.antipode);
  if (!sinv_opt) throw ConstructionError(h.name + ": antipode is not invertible");
  const Matrix& sinv = *sinv_opt;

  // delta[(k * n + a) * n + t] = coefficient of e_a ⊗ e_t in Δ(e_k).
  const std::vector<Rational> delta = dense_comul(h);
  // Δ²(e_b) = (Δ⊗id)Δ(e_b) as three-leg terms.
  std::vector<Terms> delta2(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    const Vector d = comultiply(h, basis_vector(n, b));
    delta2[static_cast<std::size_t>(b)] = nonzeros(comultiply_leg(h, d, 0));
  }
  // conj[(s, p)] column t = S⁻¹(e_s) e_t e_p.
  std::map<std::pair<int, int>, Matrix> conj;
  auto conjugator = [&](int s, int p) -> const Matrix& {
    auto it = conj.find({s, p});
    if (it != conj.end()) return it->second;
    Matrix m(n, n);
    for (int t = 0; t < n; ++t)
      m.col(t) = multiply(h, multiply(h, sinv.col(s), basis_vector(n, t)), basis_vector(n, p));
    return conj.emplace(std::make_pair(s, p), std::move(m)).first->second;
  };

  std::vector<Rational> mul(static_cast<std::size_t>(nd) * nd * nd);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        for (int d = 0; d < n; ++d) {
          const std::size_t row = static_cast<std::size_t>((a * n + b) * nd + (c * n + d)) * nd;
          for (const auto& [idx, lambda] : delta2[static_cast<std::size_t>(b)]) {
            const int p = static_cast<int>(idx / (n * n));
            const int q = static_cast<int>((idx / n) % n);
            const int s = static_cast<int>(idx % n);
            const Matrix& cj = conjugator(s, p);
            // g = e^c(S⁻¹(e_s) ? e_p) = Σ_t cj(c, t) e^t; then e^a g = Σ_k Σ_t cj(c,t) Δ(e_k)[a,t] e^k.
            for (int t = 0; t < n; ++t) {
              const Rational& g = cj(c, t);
              if (g.is_zero()) continue;
              for (int k = 0; k < n; ++k) {
                const Rational& dk = delta[static_cast<std::size_t>((k * n + a) * n + t)];
                if (dk.is_zero()) continue;
                const Rational coeff = lambda * g * dk;
                for (const auto& pt : h.product(q, d))
                  mul[row + static_cast<std::size_t>(k * n + pt.index)] += coeff * pt.coeff;
              }
            }
          }
        }

  // Δ_D(e^a⊗e_b) = Σ (e^j⊗e_p) ⊗ (e^i⊗e_q) over (e_i e_j)[a] and Δ(e_b)[p,q].
  std::vector<Rational> comul(static_cast<std::size_t>(nd) * nd * nd);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (const auto& pt : h.product(i, j)) {
        const int a = pt.index;
        for (int b = 0; b < n; ++b)
          for (const auto& ct : h.comul[static_cast<std::size_t>(b)]) {
            const std::size_t idx = (static_cast<std::size_t>(a * n + b) * nd +
                                     static_cast<std::size_t>(j * n + ct.left)) * nd +
                                    static_cast<std::size_t>(i * n + ct.right);
            comul[idx] += pt.coeff * ct.coeff;
          }
      }

  HopfAlgebraData dh;
  dh.name = "D(" + h.name + ")";
  dh.dim = nd;
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      dh.basis.push_back(h.basis[static_cast<std::size_t>(a)] + "*|" + h.basis[static_cast<std::size_t>(b)]);
  dh.mul = compress_mul(mul, nd);
  dh.comul = compress_comul(comul, nd);
  dh.unit = Vector::Zero(nd);
  dh.counit = Vector::Zero(nd);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      dh.unit(a * n + b) = h.counit(a) * h.unit(b);
      dh.counit(a * n + b) = h.unit(a) * h.counit(b);
    }
  // S_D(f⊗x) = (ε⊗S x)(S*⁻¹ f ⊗ 1), with S*⁻¹(e^a) = Σ_k S⁻¹(a,k) e^k.
  dh.antipode = Matrix::Zero(nd, nd);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      Vector left = Vector::Zero(nd), right = Vector::Zero(nd);
      for (int k = 0; k < n; ++k)
        for (int m = 0; m < n; ++m) {
          left(k * n + m) = h.counit(k) * h.antipode(m, b);
          right(k * n + m) = sinv(a, k) * h.unit(m);
        }
      dh.antipode.col(a * n + b) = multiply(dh, left, right);
    }
  Vector r = Vector::Zero(static_cast<Eigen::Index>(nd) * nd);
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m) {
        const Rational c = h.counit(k) * h.unit(m);
        if (!c.is_zero()) r(static_cast<Eigen::Index>(k * n + i) * nd + (i * n + m)) += c;
      }
  dh.rmatrix = std::move(r);
  if (h.pivot) {
    Vector g = Vector::Zero(nd);
    for (int k = 0; k < n; ++k)
      for (int m = 0; m < n; ++m) g(k * n + m) = h.counit(k) * (*h.pivot)(m);
    dh.pivot = std::move(g);
  }
  return dh;
}

Matrix double_inclusion(const HopfAlgebraData& h) {
  const int n = h.dim;
  Matrix phi = Matrix::Zero(n * n, n);
  for (int k = 0; k < n; ++k)
    for (int m = 0; m < n; ++m) phi(k * n + m, m) = h.counit(k);
  return phi;
}

bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b) {
  return a.dim == b.dim && dense_mul(a) == dense_mul(b) && a.unit == b.unit &&
         dense_comul(a) == dense_comul(b) && a.counit == b.counit && a.antipode == b.antipode;
}

HopfAlgebraData group_algebra(std::string name, std::vector<std::string> labels,
                              const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(labels.size());
  if (static_cast<int>(table.size()) != n) throw ShapeError("group table has wrong size");
  int identity_index = -1;
  for (int i = 0; i < n && identity_index < 0; ++i) {
    bool id = true;
    for (int j = 0; j < n; ++j) id = id && table[i][j] == j && table[j][i] == j;
    if (id) identity_index = i;
  }
  if (identity_index < 0) throw ShapeError("group table has no identity");
  HopfAlgebraData h;
  h.name = std::move(name);
  h.dim = n;
  h.basis = std::move(labels);
  h.mul.resize(static_cast<std::size_t>(n * n));
  h.comul.resize(static_cast<std::size_t>(n));
  h.antipode = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      h.mul[static_cast<std::size_t>(i * n + j)].push_back({table[i][j], 1});
      if (table[i][j] == identity_index) h.antipode(j, i) = 1;
    }
    h.comul[static_cast<std::size_t>(i)].push_back({i, i, 1});
  }
  h.unit = basis_vector(n, identity_index);
  h.counit = Vector::Constant(n, Rational(1));
  h.pivot = h.unit;
  validate_shapes(h);
  return h;
}

bool is_group_algebra(const HopfAlgebraData& h) {
  for (int i = 0; i < h.dim; ++i) {
    const auto& d = h.comul[static_cast<std::size_t>(i)];
    if (d.size() != 1 || d[0].left != i || d[0].right != i || !d[0].coeff.is_one()) return false;
    for (int j = 0; j < h.dim; ++j) {
      const auto& p = h.product(i, j);
      if (p.size() != 1 || !p[0].coeff.is_one()) return false;
    }
  }
  return true;
}

}  // namespace cohopf
