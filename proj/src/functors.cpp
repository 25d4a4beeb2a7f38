#include "cohopf/functors.hpp"

namespace cohopf {

namespace {

std::string pair_key(const Object& x, const Object& y) { return x.key() + '\x1f' + y.key(); }
const std::string kUnitKey = "\x1e";

Matrix column(const Vector& v) { return Matrix(v); }

Vector apply(const Matrix& m, const Vector& v) { return Vector(multiply<Rational>(m, column(v))); }

}  // namespace

Functor::Functor(FunctorKind kind, std::string name, CategoryPtr source, CategoryPtr target)
    : kind_(kind), name_(std::move(name)), source_(std::move(source)), target_(std::move(target)) {}

Object Functor::operator()(const Object& x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = objects_.find(x.key());
    if (it != objects_.end()) return it->second;
  }
  Object y = map_object(x);
  std::lock_guard<std::mutex> lock(mutex_);
  return objects_.emplace(x.key(), std::move(y)).first->second;
}

Morphism Functor::operator()(const Morphism& f) const { return {(*this)(f.source), (*this)(f.target), map_matrix(f)}; }

namespace {

template <typename Compute>
Morphism memo(std::mutex& mutex, std::map<std::string, Morphism>& table, const std::string& key, Compute compute) {
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = table.find(key);
    if (it != table.end()) return it->second;
  }
  Morphism value = compute();
  std::lock_guard<std::mutex> lock(mutex);
  return table.emplace(key, std::move(value)).first->second;
}

}  // namespace

Morphism Functor::mu(const Object& x, const Object& y) const {
  return memo(mutex_, mu_, pair_key(x, y), [&] { return compute_mu(x, y); });
}
Morphism Functor::mu0() const {
  return memo(mutex_, mu_, kUnitKey, [&] { return compute_mu0(); });
}
Morphism Functor::delta(const Object& x, const Object& y) const {
  return memo(mutex_, delta_, pair_key(x, y), [&] { return compute_delta(x, y); });
}
Morphism Functor::delta0() const {
  return memo(mutex_, delta_, kUnitKey, [&] { return compute_delta0(); });
}

void Functor::clear_cache() const {
  std::lock_guard<std::mutex> lock(mutex_);
  objects_.clear();
  mu_.clear();
  delta_.clear();
}

Morphism Functor::compute_mu(const Object&, const Object&) const {
  throw MissingStructureError(name_ + " has no monoidal structure");
}
Morphism Functor::compute_mu0() const { throw MissingStructureError(name_ + " has no monoidal structure"); }
Morphism Functor::compute_delta(const Object&, const Object&) const {
  throw MissingStructureError(name_ + " has no comonoidal structure");
}
Morphism Functor::compute_delta0() const { throw MissingStructureError(name_ + " has no comonoidal structure"); }

namespace {

class IdentityFunctor final : public Functor {
 public:
  explicit IdentityFunctor(CategoryPtr cat) : Functor(FunctorKind::identity, "Id", cat, cat) {}
  bool has_monoidal() const override { return true; }
  bool has_comonoidal() const override { return true; }

 protected:
  Object map_object(const Object& x) const override { return x; }
  Matrix map_matrix(const Morphism& f) const override { return f.matrix; }
  Morphism compute_mu(const Object& x, const Object& y) const override { return identity(tensor(x, y)); }
  Morphism compute_mu0() const override { return identity(Object()); }
  Morphism compute_delta(const Object& x, const Object& y) const override { return identity(tensor(x, y)); }
  Morphism compute_delta0() const override { return identity(Object()); }
};

class RestrictedModule final : public Module {
 public:
  RestrictedModule(HopfPtr a, ModulePtr base, std::shared_ptr<const Matrix> phi)
      : Module(std::move(a), base->dim()), base_(std::move(base)), phi_(std::move(phi)) {}

 protected:
  Matrix compute_action(int i) const override { return base_->act(Vector(phi_->col(i))); }

 private:
  ModulePtr base_;
  std::shared_ptr<const Matrix> phi_;
};

class RestrictionFunctor final : public Functor {
 public:
  RestrictionFunctor(CategoryPtr b, CategoryPtr a, const Matrix& phi, std::string name)
      : Functor(FunctorKind::restriction, std::move(name), std::move(b), std::move(a)),
        phi_(std::make_shared<const Matrix>(phi)) {
    const Report r = verify_hopf_map(target().algebra(), source().algebra(), phi);
    if (!r.ok()) {
      for (const auto& c : r.checks())
        if (c.status == Status::fail) throw ConstructionError("restriction: not a Hopf map (" + c.id + ")");
    }
  }
  bool has_monoidal() const override { return true; }
  bool has_comonoidal() const override { return true; }

 protected:
  Object map_object(const Object& x) const override {
    std::vector<Letter> letters;
    for (const Letter& l : x.letters()) letters.push_back({restricted(l.atom), l.duals});
    return Object(std::move(letters));
  }
  Matrix map_matrix(const Morphism& f) const override { return f.matrix; }
  Morphism compute_mu(const Object& x, const Object& y) const override {
    return identity(tensor((*this)(x), (*this)(y)));
  }
  Morphism compute_mu0() const override { return identity(Object()); }
  Morphism compute_delta(const Object& x, const Object& y) const override { return compute_mu(x, y); }
  Morphism compute_delta0() const override { return identity(Object()); }

 private:
  AtomPtr restricted(const AtomPtr& atom) const {
    std::lock_guard<std::mutex> lock(atoms_mutex_);
    auto it = atoms_.find(atom.get());
    if (it != atoms_.end()) return it->second.second;
    auto module = std::make_shared<RestrictedModule>(target().algebra_ptr(), atom->module, phi_);
    AtomPtr out = make_atom(name() + "(" + atom->name + ")", std::move(module));
    atoms_.emplace(atom.get(), std::make_pair(atom, out));
    return out;
  }

  std::shared_ptr<const Matrix> phi_;
  mutable std::mutex atoms_mutex_;
  mutable std::map<const Atom*, std::pair<AtomPtr, AtomPtr>> atoms_;
};

class CompositeFunctor final : public Functor {
 public:
  CompositeFunctor(FunctorPtr g, FunctorPtr f)
      : Functor(FunctorKind::composite, g->name() + f->name(), f->source_ptr(), g->target_ptr()),
        g_(std::move(g)),
        f_(std::move(f)) {
    if (&f_->target() != &g_->source())
      throw ShapeError("composite: " + g_->name() + " does not start where " + f_->name() + " ends");
  }
  bool has_monoidal() const override { return g_->has_monoidal() && f_->has_monoidal(); }
  bool has_comonoidal() const override { return g_->has_comonoidal() && f_->has_comonoidal(); }

 protected:
  Object map_object(const Object& x) const override { return (*g_)((*f_)(x)); }
  Matrix map_matrix(const Morphism& f) const override { return (*g_)((*f_)(f)).matrix; }
  Morphism compute_mu(const Object& x, const Object& y) const override {
    return compose((*g_)(f_->mu(x, y)), g_->mu((*f_)(x), (*f_)(y)));
  }
  Morphism compute_mu0() const override { return compose((*g_)(f_->mu0()), g_->mu0()); }
  Morphism compute_delta(const Object& x, const Object& y) const override {
    return compose(g_->delta((*f_)(x), (*f_)(y)), (*g_)(f_->delta(x, y)));
  }
  Morphism compute_delta0() const override { return compose(g_->delta0(), (*g_)(f_->delta0())); }

 private:
  FunctorPtr g_, f_;
};

class StructuredFunctor final : public Functor {
 public:
  StructuredFunctor(FunctorPtr base, StructureOverrides o)
      : Functor(FunctorKind::structured, base->name(), base->source_ptr(), base->target_ptr()),
        base_(std::move(base)),
        o_(std::move(o)) {}
  bool has_monoidal() const override { return base_->has_monoidal() || (o_.mu && o_.mu0); }
  bool has_comonoidal() const override { return base_->has_comonoidal() || (o_.delta && o_.delta0); }

 protected:
  Object map_object(const Object& x) const override { return (*base_)(x); }
  Matrix map_matrix(const Morphism& f) const override { return (*base_)(f).matrix; }
  Morphism compute_mu(const Object& x, const Object& y) const override {
    return o_.mu ? o_.mu(x, y) : base_->mu(x, y);
  }
  Morphism compute_mu0() const override { return o_.mu0 ? o_.mu0() : base_->mu0(); }
  Morphism compute_delta(const Object& x, const Object& y) const override {
    return o_.delta ? o_.delta(x, y) : base_->delta(x, y);
  }
  Morphism compute_delta0() const override { return o_.delta0 ? o_.delta0() : base_->delta0(); }

 private:
  FunctorPtr base_;
  StructureOverrides o_;
};

class TensorFunctor final : public Functor {
 public:
  TensorFunctor(CategoryPtr cat, FrobeniusAlgebraData a, HalfBraidingData sigma)
      : Functor(FunctorKind::tensor_by, a.carrier.key() + "⊗−", cat, cat), a_(std::move(a)), sigma_(std::move(sigma)) {
    if (sigma_.carrier != a_.carrier) throw ShapeError("tensor functor: half-braiding on a different carrier");
  }
  bool has_monoidal() const override { return true; }
  bool has_comonoidal() const override { return true; }

 protected:
  Object map_object(const Object& x) const override { return tensor(a_.carrier, x); }
  Matrix map_matrix(const Morphism& f) const override {
    return kronecker<Rational>(cohopf::identity<Rational>(a_.carrier.dim()), f.matrix);
  }
  // (m⊗id⊗id)(id⊗σ_X⊗id)
  Morphism compute_mu(const Object& x, const Object& y) const override {
    const Object& a = a_.carrier;
    return Chain(whisker(Object(), a_.m, tensor(x, y))).before(a, sigma_.at(x), y).result();
  }
  Morphism compute_mu0() const override { return a_.u; }
  // (id⊗σ_X⁻¹⊗id)(Δ⊗id⊗id)
  Morphism compute_delta(const Object& x, const Object& y) const override {
    const Object& a = a_.carrier;
    return Chain(whisker(Object(), a_.delta, tensor(x, y))).then(a, sigma_inverse(x), y).result();
  }
  Morphism compute_delta0() const override { return a_.nu; }

 private:
  Morphism sigma_inverse(const Object& x) const {
    const Morphism& s = sigma_.at(x);
    return memo(inv_mutex_, inverses_, x.key(), [&] { return Morphism{s.target, s.source, inverse(s.matrix)}; });
  }

  FrobeniusAlgebraData a_;
  HalfBraidingData sigma_;
  mutable std::mutex inv_mutex_;
  mutable std::map<std::string, Morphism> inverses_;
};

}  // namespace

FunctorPtr identity_functor(CategoryPtr cat) { return std::make_shared<IdentityFunctor>(std::move(cat)); }

FunctorPtr restriction_functor(CategoryPtr source_b, CategoryPtr target_a, const Matrix& phi, std::string name) {
  return std::make_shared<RestrictionFunctor>(std::move(source_b), std::move(target_a), phi, std::move(name));
}

FunctorPtr composite_functor(FunctorPtr g, FunctorPtr f) {
  return std::make_shared<CompositeFunctor>(std::move(g), std::move(f));
}

FunctorPtr with_structure(FunctorPtr base, StructureOverrides overrides) {
  return std::make_shared<StructuredFunctor>(std::move(base), std::move(overrides));
}

FunctorPtr tensor_functor(CategoryPtr cat, const FrobeniusAlgebraData& a, const HalfBraidingData& sigma) {
  return std::make_shared<TensorFunctor>(std::move(cat), a, sigma);
}

// ---------------------------------------------------------------------------
// Adjunctions

Morphism Adjunction::hl(const Object& x, const Object& y) const { return hl_composite(*this, x, y); }
Morphism Adjunction::hr(const Object& x, const Object& y) const { return hr_composite(*this, x, y); }

std::optional<Morphism> Adjunction::hl_inverse(const Object& x, const Object& y) const {
  const Morphism h = hl(x, y);
  auto inv = try_inverse(h.matrix);
  if (!inv) return std::nullopt;
  return Morphism{h.target, h.source, std::move(*inv)};
}

std::optional<Morphism> Adjunction::hr_inverse(const Object& x, const Object& y) const {
  const Morphism h = hr(x, y);
  auto inv = try_inverse(h.matrix);
  if (!inv) return std::nullopt;
  return Morphism{h.target, h.source, std::move(*inv)};
}

Morphism hl_composite(const Adjunction& adj, const Object& x, const Object& y) {
  const Functor& r = adj.right();
  const Object ux = adj.left()(y);
  return Chain(tensor(identity(r(x)), adj.unit(y))).then(r.mu(x, ux)).result();
}

Morphism hr_composite(const Adjunction& adj, const Object& x, const Object& y) {
  const Functor& r = adj.right();
  const Object ux = adj.left()(x);
  return Chain(tensor(adj.unit(x), identity(r(y)))).then(r.mu(ux, y)).result();
}

Morphism kelly_mu(const Adjunction& adj, const Object& y, const Object& y2) {
  const Functor& u = adj.left();
  const Functor& r = adj.right();
  const Object ry = r(y), ry2 = r(y2);
  const Morphism u2 = u.has_comonoidal() ? u.delta(ry, ry2)
                                         : [&] {
                                             const Morphism m = u.mu(ry, ry2);
                                             return Morphism{m.target, m.source, inverse(m.matrix)};
                                           }();
  return Chain(adj.unit(tensor(ry, ry2))).then(r(u2)).then(r(tensor(adj.counit(y), adj.counit(y2)))).result();
}

Morphism kelly_mu0(const Adjunction& adj) {
  const Functor& u = adj.left();
  const Morphism u0 = u.has_comonoidal() ? u.delta0() : [&] {
    const Morphism m = u.mu0();
    return Morphism{m.target, m.source, inverse(m.matrix)};
  }();
  return compose(adj.right()(u0), adj.unit(Object()));
}

namespace {

class IdentityAdjunction final : public Adjunction {
 public:
  explicit IdentityAdjunction(CategoryPtr cat) : Adjunction(identity_functor(cat), identity_functor(cat)) {}
  Morphism unit(const Object& x) const override { return identity(x); }
  Morphism counit(const Object& y) const override { return identity(y); }
};

// Free-basis data of B over φ(A): d = Σ_k φ(h_k(d)) b_k.
struct Coinduction {
  CategoryPtr rep_b, rep_a;
  int na = 0, nb = 0, m = 0;
  std::vector<int> generators;
  // components[p][l] = h_l(e_p)
  std::vector<std::vector<Vector>> components;
  // translate[i][k * m + l] = h_l(b_k e_i)
  std::vector<std::vector<Vector>> translate;
  std::vector<Vector> unit_components;
  Matrix s, s_inverse;  // antipode of B and its inverse

  mutable std::mutex mutex;
  mutable std::map<std::string, std::shared_ptr<const Matrix>> evaluations;

  const RepCategory& a() const { return *rep_a; }
  const RepCategory& b() const { return *rep_b; }

  std::vector<Vector> split(const Vector& coords) const {
    std::vector<Vector> out;
    for (int l = 0; l < m; ++l) out.emplace_back(coords.segment(l * na, na));
    return out;
  }

  Matrix evaluate(const Object& v, const std::vector<Vector>& comps) const {
    const int dv = v.dim();
    Matrix e(dv, m * dv);
    for (int l = 0; l < m; ++l) e.block(0, l * dv, dv, dv) = a().act(v, comps[static_cast<std::size_t>(l)]);
    return e;
  }

  // E_V(e_p) = [ρ_V(h_0(e_p)) | … | ρ_V(h_{m-1}(e_p))]
  // Shared so that a concurrent clear cannot invalidate a caller's matrix.
  std::shared_ptr<const Matrix> evaluation(const Object& v, int p) const {
    const std::string key = v.key() + '\x1f' + std::to_string(p);
    {
      std::lock_guard<std::mutex> lock(mutex);
      auto it = evaluations.find(key);
      if (it != evaluations.end()) return it->second;
    }
    auto e = std::make_shared<const Matrix>(evaluate(v, components[static_cast<std::size_t>(p)]));
    std::lock_guard<std::mutex> lock(mutex);
    return evaluations.emplace(key, std::move(e)).first->second;
  }
};

std::shared_ptr<const Coinduction> make_coinduction(CategoryPtr rep_b, CategoryPtr rep_a, const Matrix& phi) {
  auto owned = std::make_shared<Coinduction>();
  Coinduction& c = *owned;
  c.rep_b = std::move(rep_b);
  c.rep_a = std::move(rep_a);
  const HopfAlgebraData& b = c.b().algebra();
  c.na = c.a().algebra().dim;
  c.nb = b.dim;
  if (phi.rows() != c.nb || phi.cols() != c.na) throw ShapeError("coinduction: φ is " + shape_str(phi.rows(), phi.cols()));
  if (c.nb % c.na != 0)
    throw UnsupportedExtensionError("coinduction: dim B = " + std::to_string(c.nb) + " is not a multiple of dim A = " +
                                    std::to_string(c.na));
  Matrix span(c.nb, 0);
  Eigen::Index current = 0;
  for (int i = 0; i < c.nb && current < c.nb; ++i) {
    Matrix candidate(c.nb, span.cols() + c.na);
    candidate.leftCols(span.cols()) = span;
    const Vector ei = basis_vector(c.nb, i);
    for (int a = 0; a < c.na; ++a) candidate.col(span.cols() + a) = multiply(b, Vector(phi.col(a)), ei);
    const Eigen::Index r = rank(candidate);
    if (r == current + c.na) {
      span = std::move(candidate);
      current = r;
      c.generators.push_back(i);
    }
  }
  if (current != c.nb)
    throw UnsupportedExtensionError("coinduction: no free basis of B over φ(A) among the basis elements (rank " +
                                    std::to_string(current) + " of " + std::to_string(c.nb) + ")");
  c.m = static_cast<int>(c.generators.size());
  const Matrix coords = inverse(span);
  for (int p = 0; p < c.nb; ++p) c.components.push_back(c.split(Vector(coords.col(p))));
  c.unit_components = c.split(apply(coords, b.unit));
  for (int i = 0; i < c.nb; ++i) {
    std::vector<Vector> row;
    const Vector ei = basis_vector(c.nb, i);
    for (int k = 0; k < c.m; ++k) {
      const Vector bk = basis_vector(c.nb, c.generators[static_cast<std::size_t>(k)]);
      for (Vector& h : c.split(apply(coords, multiply(b, bk, ei)))) row.push_back(std::move(h));
    }
    c.translate.push_back(std::move(row));
  }
  c.s = b.antipode;
  c.s_inverse = inverse(b.antipode);
  return owned;
}

using CoinductionPtr = std::shared_ptr<const Coinduction>;

class CoinducedModule final : public Module {
 public:
  CoinducedModule(CoinductionPtr c, Object v)
      : Module(c->b().algebra_ptr(), c->m * v.dim()), c_(std::move(c)), v_(std::move(v)) {}

 protected:
  Matrix compute_action(int i) const override {
    const int dv = v_.dim(), m = c_->m;
    Matrix out = Matrix::Zero(m * dv, m * dv);
    const auto& t = c_->translate[static_cast<std::size_t>(i)];
    for (int k = 0; k < m; ++k)
      for (int l = 0; l < m; ++l) {
        const Vector& h = t[static_cast<std::size_t>(k * m + l)];
        if (is_zero(h)) continue;
        out.block(k * dv, l * dv, dv, dv) = c_->a().act(v_, h);
      }
    return out;
  }

 private:
  CoinductionPtr c_;
  Object v_;
};

class CoinductionFunctor final : public Functor {
 public:
  explicit CoinductionFunctor(CoinductionPtr c)
      : Functor(FunctorKind::coinduction, "R", c->rep_a, c->rep_b), c_(std::move(c)) {}
  bool has_monoidal() const override { return true; }

 protected:
  Object map_object(const Object& v) const override {
    return Object(make_atom("R(" + v.key() + ")", std::make_shared<CoinducedModule>(c_, v)));
  }
  Matrix map_matrix(const Morphism& f) const override {
    return kronecker<Rational>(cohopf::identity<Rational>(c_->m), f.matrix);
  }
  // block row k: Σ_{Δ(b_k)} c · E_X(e_p) ⊗ E_Y(e_q)
  Morphism compute_mu(const Object& x, const Object& y) const override {
    const HopfAlgebraData& b = c_->b().algebra();
    const int dx = x.dim(), dy = y.dim(), m = c_->m;
    const Object rx = (*this)(x), ry = (*this)(y);
    Matrix out = Matrix::Zero(m * dx * dy, m * dx * m * dy);
    for (int k = 0; k < m; ++k)
      for (const auto& t : b.comul[static_cast<std::size_t>(c_->generators[static_cast<std::size_t>(k)])]) {
        add_kronecker<Rational>(out.block(k * dx * dy, 0, dx * dy, out.cols()), t.coeff,
                                *c_->evaluation(x, t.left), *c_->evaluation(y, t.right));
      }
    return {tensor(rx, ry), (*this)(tensor(x, y)), std::move(out)};
  }
  Morphism compute_mu0() const override {
    const HopfAlgebraData& b = c_->b().algebra();
    Matrix out(c_->m, 1);
    for (int k = 0; k < c_->m; ++k) out(k, 0) = b.counit(c_->generators[static_cast<std::size_t>(k)]);
    return {Object(), (*this)(Object()), std::move(out)};
  }

 private:
  CoinductionPtr c_;
};

class CoinductionAdjunction final : public Adjunction {
 public:
  CoinductionAdjunction(CoinductionPtr c, FunctorPtr u)
      : Adjunction(std::move(u), std::make_shared<CoinductionFunctor>(c)), c_(std::move(c)) {}

  const Coinduction& data() const { return *c_; }

  void clear_cache() const override {
    Adjunction::clear_cache();
    std::lock_guard<std::mutex> lock(c_->mutex);
    c_->evaluations.clear();
  }

  // block k: ρ_X(b_k)
  Morphism unit(const Object& x) const override {
    const int dx = x.dim(), m = c_->m;
    Matrix out(m * dx, dx);
    for (int k = 0; k < m; ++k)
      out.block(k * dx, 0, dx, dx) = c_->b().action(x, c_->generators[static_cast<std::size_t>(k)]);
    return {x, right()(left()(x)), std::move(out)};
  }

  // ψ ↦ ψ(1)
  Morphism counit(const Object& v) const override {
    return {left()(right()(v)), v, c_->evaluate(v, c_->unit_components)};
  }

  // block row k: Σ c · E_X(e_p) ⊗ ρ_Y(e_q)
  Morphism hl(const Object& x, const Object& y) const override {
    const Object uy = left()(y);
    const int dx = x.dim(), dy = y.dim(), m = c_->m;
    Matrix out = Matrix::Zero(m * dx * dy, m * dx * dy);
    for (int k = 0; k < m; ++k)
      for (const auto& t : comul(k))
        add_kronecker<Rational>(out.block(k * dx * dy, 0, dx * dy, out.cols()), t.coeff,
                                *c_->evaluation(x, t.left), c_->b().action(y, t.right));
    return {tensor(right()(x), y), right()(tensor(x, uy)), std::move(out)};
  }

  // block row k: Σ c · ρ_X(e_p) ⊗ E_Y(e_q)
  Morphism hr(const Object& x, const Object& y) const override {
    const Object ux = left()(x);
    const int dx = x.dim(), dy = y.dim(), m = c_->m;
    Matrix out = Matrix::Zero(m * dx * dy, dx * m * dy);
    for (int k = 0; k < m; ++k)
      for (const auto& t : comul(k))
        add_kronecker<Rational>(out.block(k * dx * dy, 0, dx * dy, out.cols()), t.coeff,
                                c_->b().action(x, t.left), *c_->evaluation(y, t.right));
    return {tensor(x, right()(y)), right()(tensor(ux, y)), std::move(out)};
  }

  // block row k: Σ c · (id_X ⊗ ρ_Y(S⁻¹ e_q)) E_{X⊗UY}(e_p)
  std::optional<Morphism> hl_inverse(const Object& x, const Object& y) const override {
    const Object uy = left()(y), xuy = tensor(x, uy);
    const int dx = x.dim(), dy = y.dim(), m = c_->m;
    Matrix out = Matrix::Zero(m * dx * dy, m * dx * dy);
    for (int k = 0; k < m; ++k)
      for (const auto& t : comul(k)) {
        const Matrix twist = c_->b().act(y, Vector(c_->s_inverse.col(t.right)));
        out.block(k * dx * dy, 0, dx * dy, out.cols()) +=
            t.coeff * apply_middle<Rational>(dx, twist, 1, *c_->evaluation(xuy, t.left));
      }
    return Morphism{right()(xuy), tensor(right()(x), y), std::move(out)};
  }

  // G_k = Σ c · (ρ_X(S e_p) ⊗ id_Y) E_{UX⊗Y}(e_q), rows scattered into X ⊗ R(Y)
  std::optional<Morphism> hr_inverse(const Object& x, const Object& y) const override {
    const Object ux = left()(x), uxy = tensor(ux, y);
    const int dx = x.dim(), dy = y.dim(), m = c_->m;
    Matrix out = Matrix::Zero(dx * m * dy, m * dx * dy);
    for (int k = 0; k < m; ++k) {
      Matrix g = Matrix::Zero(dx * dy, m * dx * dy);
      for (const auto& t : comul(k)) {
        const Matrix twist = c_->b().act(x, Vector(c_->s.col(t.left)));
        g += t.coeff * apply_middle<Rational>(1, twist, dy, *c_->evaluation(uxy, t.right));
      }
      for (int i = 0; i < dx; ++i) out.block(i * m * dy + k * dy, 0, dy, out.cols()) = g.block(i * dy, 0, dy, g.cols());
    }
    return Morphism{right()(uxy), tensor(x, right()(y)), std::move(out)};
  }

 private:
  const std::vector<CoproductTerm>& comul(int k) const {
    return c_->b().algebra().comul[static_cast<std::size_t>(c_->generators[static_cast<std::size_t>(k)])];
  }

  CoinductionPtr c_;
};

}  // namespace

AdjunctionPtr identity_adjunction(CategoryPtr cat) { return std::make_shared<IdentityAdjunction>(std::move(cat)); }

AdjunctionPtr coinduction_adjunction(CategoryPtr rep_b, CategoryPtr rep_a, const Matrix& phi) {
  FunctorPtr u = restriction_functor(rep_b, rep_a, phi);
  auto c = make_coinduction(std::move(rep_b), std::move(rep_a), phi);
  return std::make_shared<CoinductionAdjunction>(std::move(c), std::move(u));
}

std::optional<FreeBasisInfo> free_basis_info(const Adjunction& adj) {
  const auto* c = dynamic_cast<const CoinductionAdjunction*>(&adj);
  if (!c) return std::nullopt;
  return FreeBasisInfo{c->data().generators, c->data().m};
}

Matrix coinduced_kernel_basis(const RepCategory& rep_a, const HopfAlgebraData& b, const Matrix& phi, const Object& v) {
  const int dv = v.dim(), nb = b.dim;
  const Matrix id_v = cohopf::identity<Rational>(dv), id_b = cohopf::identity<Rational>(nb);
  // ψ ∈ Hom(B, V) as a dv × nb matrix; constraint ψ ∘ L_{φ(a)} = ρ_V(a) ∘ ψ.
  Matrix constraints(0, static_cast<Eigen::Index>(dv) * nb);
  for (int a : rep_a.generators()) {
    const Matrix left = left_multiplication(b, Vector(phi.col(a)));
    const Matrix block = kronecker<Rational>(left.transpose(), id_v) - kronecker<Rational>(id_b, rep_a.action(v, a));
    Matrix grown(constraints.rows() + block.rows(), constraints.cols());
    grown.topRows(constraints.rows()) = constraints;
    grown.bottomRows(block.rows()) = block;
    constraints = std::move(grown);
  }
  return kernel_matrix(constraints);
}

}  // namespace cohopf
