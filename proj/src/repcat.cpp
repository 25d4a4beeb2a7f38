#include "cohopf/repcat.hpp"

#include <algorithm>
#include <functional>

namespace cohopf {

namespace {

constexpr int kModuleCacheDim = 64;

class ExplicitModule final : public Module {
 public:
  ExplicitModule(HopfPtr algebra, std::vector<Matrix> action)
      : Module(std::move(algebra), static_cast<int>(action.front().rows())), matrices_(std::move(action)) {}

 protected:
  Matrix compute_action(int i) const override { return matrices_[static_cast<std::size_t>(i)]; }

 private:
  std::vector<Matrix> matrices_;
};

class CounitModule final : public Module {
 public:
  explicit CounitModule(HopfPtr algebra) : Module(std::move(algebra), 1) {}

 protected:
  Matrix compute_action(int i) const override { return Matrix::Constant(1, 1, algebra().counit(i)); }
};

class DualModule final : public Module {
 public:
  explicit DualModule(ModulePtr base) : Module(base->algebra_ptr(), base->dim()), base_(std::move(base)) {}

 protected:
  Matrix compute_action(int i) const override {
    return base_->act(algebra().antipode.col(i)).transpose();
  }

 private:
  ModulePtr base_;
};

class TensorModule final : public Module {
 public:
  TensorModule(ModulePtr left, ModulePtr right)
      : Module(left->algebra_ptr(), left->dim() * right->dim()), left_(std::move(left)), right_(std::move(right)) {}

 protected:
  Matrix compute_action(int i) const override {
    Matrix out = Matrix::Zero(dim(), dim());
    for (const auto& t : algebra().comul[static_cast<std::size_t>(i)])
      add_kronecker<Rational>(out, t.coeff, left_->action(t.left), right_->action(t.right));
    return out;
  }

 private:
  ModulePtr left_, right_;
};

std::string letter_key(const Letter& l) {
  std::string s;
  for (int i = 0; i < l.duals; ++i) s += "∨";
  return s + l.atom->name;
}

// Index of the dual-basis vector e^i of X inside ∨X (letters reversed).
std::vector<Eigen::Index> reversal(const Object& x) {
  std::vector<Eigen::Index> dims;
  for (const auto& l : x.letters()) dims.push_back(l.atom->module->dim());
  const Eigen::Index total = x.dim();
  std::vector<Eigen::Index> out(static_cast<std::size_t>(total));
  for (Eigen::Index i = 0; i < total; ++i) {
    Eigen::Index rest = i, rev = 0, stride = 1;
    // digits of i, least significant = last letter; in ∨X the last letter comes first.
    std::vector<Eigen::Index> digit(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
      digit[k] = rest % dims[k];
      rest /= dims[k];
    }
    for (std::size_t k = 0; k < dims.size(); ++k) {
      rev += digit[k] * stride;
      stride *= dims[k];
    }
    out[static_cast<std::size_t>(i)] = rev;
  }
  return out;
}

}  // namespace

const Matrix& Module::action(int i) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = cache_.find(i);
    if (it != cache_.end()) return *it->second;
  }
  auto computed = std::make_shared<const Matrix>(compute_action(i));
  std::lock_guard<std::mutex> lock(mutex_);
  auto [it, inserted] = cache_.emplace(i, std::move(computed));
  return *it->second;
}

Matrix Module::act(const Vector& x) const {
  Matrix out = Matrix::Zero(dim_, dim_);
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (!x(i).is_zero()) out += x(i) * action(static_cast<int>(i));
  return out;
}

ModulePtr explicit_module(HopfPtr algebra, std::vector<Matrix> action) {
  if (static_cast<int>(action.size()) != algebra->dim)
    throw ShapeError("module needs one action matrix per basis element");
  for (const auto& a : action)
    if (a.rows() != a.cols() || a.rows() != action.front().rows())
      throw ShapeError("module action matrices must be square of equal size");
  return std::make_shared<ExplicitModule>(std::move(algebra), std::move(action));
}

ModulePtr dual_module(ModulePtr base) { return std::make_shared<DualModule>(std::move(base)); }

ModulePtr tensor_module(ModulePtr left, ModulePtr right) {
  if (left->algebra_ptr() != right->algebra_ptr()) throw ShapeError("tensor of modules over different algebras");
  return std::make_shared<TensorModule>(std::move(left), std::move(right));
}

std::optional<std::string> module_violation(const Module& m) {
  const HopfAlgebraData& h = m.algebra();
  if (!is_identity(m.act(h.unit))) return std::string("ρ(1) ≠ I");
  for (int i = 0; i < h.dim; ++i)
    for (int j = 0; j < h.dim; ++j) {
      Matrix expected = Matrix::Zero(m.dim(), m.dim());
      for (const auto& t : h.product(i, j)) expected += t.coeff * m.action(t.index);
      if (multiply(m.action(i), m.action(j)) != expected)
        return "ρ(" + h.basis[static_cast<std::size_t>(i)] + ")ρ(" + h.basis[static_cast<std::size_t>(j)] +
               ") ≠ ρ(product)";
    }
  return std::nullopt;
}

AtomPtr make_atom(std::string name, ModulePtr module) {
  return std::make_shared<const Atom>(Atom{std::move(name), std::move(module)});
}

Object::Object(AtomPtr atom) : Object(std::vector<Letter>{Letter{std::move(atom), 0}}) {}

Object::Object(std::vector<Letter> letters) : letters_(std::move(letters)) {
  if (letters_.empty()) return;
  key_.clear();
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i > 0) key_ += " ⊗ ";
    key_ += letter_key(letters_[i]);
  }
}

int Object::dim() const {
  int d = 1;
  for (const auto& l : letters_) d *= l.atom->module->dim();
  return d;
}

Object tensor(const Object& x, const Object& y) {
  std::vector<Letter> letters = x.letters();
  letters.insert(letters.end(), y.letters().begin(), y.letters().end());
  return Object(std::move(letters));
}

Object tensor(std::initializer_list<Object> xs) {
  Object out;
  for (const auto& x : xs) out = tensor(out, x);
  return out;
}

Object left_dual(const Object& x) {
  std::vector<Letter> letters(x.letters().rbegin(), x.letters().rend());
  for (auto& l : letters) ++l.duals;
  return Object(std::move(letters));
}

Morphism compose(const Morphism& g, const Morphism& f) {
  if (f.target != g.source)
    throw ShapeError("compose: target " + f.target.key() + " does not match source " + g.source.key());
  return {f.source, g.target, multiply(g.matrix, f.matrix)};
}

Morphism compose(std::initializer_list<Morphism> chain) {
  if (chain.size() == 0) throw ShapeError("compose: empty chain");
  auto it = std::rbegin(chain);
  Morphism acc = *it;
  for (++it; it != std::rend(chain); ++it) acc = compose(*it, acc);
  return acc;
}

Morphism tensor(const Morphism& f, const Morphism& g) {
  return {tensor(f.source, g.source), tensor(f.target, g.target), kronecker(f.matrix, g.matrix)};
}

Morphism identity(const Object& x) { return {x, x, cohopf::identity<Rational>(x.dim())}; }

Morphism whisker(const Object& left, const Morphism& f, const Object& right) {
  const Matrix inner = kronecker<Rational>(cohopf::identity<Rational>(left.dim()), f.matrix);
  return {tensor({left, f.source, right}), tensor({left, f.target, right}),
          kronecker<Rational>(inner, cohopf::identity<Rational>(right.dim()))};
}

Morphism scaled(const Rational& c, const Morphism& f) { return {f.source, f.target, Matrix(c * f.matrix)}; }

bool operator==(const Morphism& a, const Morphism& b) {
  return a.source == b.source && a.target == b.target && a.matrix == b.matrix;
}

Chain& Chain::then(const Morphism& f) {
  current_ = compose(f, current_);
  return *this;
}

Chain& Chain::then(const Object& left, const Morphism& f, const Object& right) {
  const Object expected = tensor({left, f.source, right});
  if (current_.target != expected)
    throw ShapeError("chain: target " + current_.target.key() + " does not match " + expected.key());
  current_ = {current_.source, tensor({left, f.target, right}),
              apply_middle<Rational>(left.dim(), f.matrix, right.dim(), current_.matrix)};
  return *this;
}

Chain& Chain::before(const Morphism& f) {
  current_ = compose(current_, f);
  return *this;
}

Chain& Chain::before(const Object& left, const Morphism& f, const Object& right) {
  const Object expected = tensor({left, f.target, right});
  if (current_.source != expected)
    throw ShapeError("chain: source " + current_.source.key() + " does not match " + expected.key());
  const Matrix flipped = f.matrix.transpose();
  const Matrix t = current_.matrix.transpose();
  current_ = {tensor({left, f.source, right}), current_.target,
              apply_middle<Rational>(left.dim(), flipped, right.dim(), t).transpose()};
  return *this;
}

RepCategory::RepCategory(HopfPtr algebra) : algebra_(std::move(algebra)) {
  validate_shapes(*algebra_);
  generators_ = algebra_generators(*algebra_);
}

ModulePtr RepCategory::module(const Object& x) const {
  {
    std::lock_guard<std::mutex> lock(mutex_);
    auto it = modules_.find(x.key());
    if (it != modules_.end()) return it->second;
  }
  ModulePtr m;
  const auto& letters = x.letters();
  if (letters.empty()) {
    m = std::make_shared<CounitModule>(algebra_);
  } else if (letters.size() == 1) {
    const Letter& l = letters.front();
    if (l.duals == 0) {
      if (l.atom->module->algebra_ptr() != algebra_ && !same_structure(l.atom->module->algebra(), *algebra_))
        throw ShapeError("object " + x.key() + " is not a module over " + algebra_->name);
      m = l.atom->module;
    } else {
      m = dual_module(module(Object(std::vector<Letter>{Letter{l.atom, l.duals - 1}})));
    }
  } else {
    m = tensor_module(module(Object(std::vector<Letter>{letters.front()})),
                      module(Object(std::vector<Letter>(letters.begin() + 1, letters.end()))));
  }
  // Large tensor modules are rebuilt on demand so their action caches can be freed.
  if (m->dim() > kModuleCacheDim) return m;
  std::lock_guard<std::mutex> lock(mutex_);
  return modules_.emplace(x.key(), std::move(m)).first->second;
}

std::optional<std::string> RepCategory::intertwining_failure(const Morphism& f) const {
  if (f.matrix.rows() != f.target.dim() || f.matrix.cols() != f.source.dim())
    return "shape " + shape_str(f.matrix.rows(), f.matrix.cols()) + " for " + f.source.key() + " → " +
           f.target.key();
  for (int g : generators_)
    if (multiply(f.matrix, action(f.source, g)) != multiply(action(f.target, g), f.matrix))
      return "generator " + algebra_->basis[static_cast<std::size_t>(g)];
  return std::nullopt;
}

std::vector<Morphism> RepCategory::intertwiner_basis(const Object& x, const Object& y) const {
  const Eigen::Index dx = x.dim(), dy = y.dim(), n = dx * dy;
  // Columns of k span the solutions found so far (vec is column-major: c * dy + r).
  Matrix k = cohopf::identity<Rational>(n);
  for (int g : generators_) {
    if (k.cols() == 0) break;
    const Matrix a = action(y, g);
    const Matrix b = action(x, g);
    Matrix c = Matrix::Zero(n, n);
    for (Eigen::Index col = 0; col < dx; ++col)
      for (Eigen::Index r = 0; r < dy; ++r) {
        for (Eigen::Index t = 0; t < dy; ++t)
          if (!a(r, t).is_zero()) c(col * dy + r, col * dy + t) += a(r, t);
        for (Eigen::Index t = 0; t < dx; ++t)
          if (!b(t, col).is_zero()) c(col * dy + r, t * dy + r) -= b(t, col);
      }
    k = multiply(k, kernel_matrix(Matrix(multiply(c, k))));
  }
  std::vector<Morphism> out;
  for (Eigen::Index j = 0; j < k.cols(); ++j) {
    Matrix f(dy, dx);
    for (Eigen::Index col = 0; col < dx; ++col)
      for (Eigen::Index r = 0; r < dy; ++r) f(r, col) = k(col * dy + r, j);
    out.push_back({x, y, std::move(f)});
  }
  return out;
}

Morphism RepCategory::ev(const Object& x) const {
  const Eigen::Index d = x.dim();
  const auto rev = reversal(x);
  Matrix m = Matrix::Zero(1, d * d);
  for (Eigen::Index i = 0; i < d; ++i) m(0, rev[static_cast<std::size_t>(i)] * d + i) = 1;
  return {tensor(left_dual(x), x), Object(), std::move(m)};
}

Morphism RepCategory::coev(const Object& x) const {
  const Eigen::Index d = x.dim();
  const auto rev = reversal(x);
  Matrix m = Matrix::Zero(d * d, 1);
  for (Eigen::Index i = 0; i < d; ++i) m(i * d + rev[static_cast<std::size_t>(i)], 0) = 1;
  return {Object(), tensor(x, left_dual(x)), std::move(m)};
}

Morphism RepCategory::dual(const Morphism& f) const {
  const auto rx = reversal(f.source), ry = reversal(f.target);
  Matrix m = Matrix::Zero(f.source.dim(), f.target.dim());
  for (Eigen::Index j = 0; j < f.matrix.rows(); ++j)
    for (Eigen::Index i = 0; i < f.matrix.cols(); ++i)
      m(rx[static_cast<std::size_t>(i)], ry[static_cast<std::size_t>(j)]) = f.matrix(j, i);
  return {left_dual(f.target), left_dual(f.source), std::move(m)};
}

Matrix RepCategory::require(const std::optional<Vector>& v, const char* what) const {
  if (!v) throw MissingDataError(algebra_->name + ": " + what);
  return Matrix(*v);
}

Morphism RepCategory::pivot(const Object& x) const {
  require(algebra_->pivot, "pivot");
  return {x, left_dual(left_dual(x)), act(x, *algebra_->pivot)};
}

Morphism RepCategory::pivot_inverse(const Object& x) const {
  require(algebra_->pivot, "pivot");
  const auto ginv = inverse_element(*algebra_, *algebra_->pivot);
  if (!ginv) throw MissingDataError(algebra_->name + ": invertible pivot");
  return {left_dual(left_dual(x)), x, act(x, *ginv)};
}

Morphism RepCategory::ev_tilde(const Object& x) const {
  const Object dx = left_dual(x);
  return compose(ev(dx), tensor(pivot(x), identity(dx)));
}

Morphism RepCategory::coev_tilde(const Object& x) const {
  const Object dx = left_dual(x);
  return compose(tensor(identity(dx), pivot_inverse(x)), coev(dx));
}

Morphism RepCategory::braiding(const Object& x, const Object& y) const {
  const Matrix r = require(algebra_->rmatrix, "rmatrix");
  const int n = algebra_->dim;
  const Eigen::Index dx = x.dim(), dy = y.dim();
  Matrix acted = Matrix::Zero(dx * dy, dx * dy);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Rational& c = r(a * n + b, 0);
      if (!c.is_zero()) acted += c * kronecker(action(x, a), action(y, b));
    }
  Matrix out(dy * dx, dx * dy);
  for (Eigen::Index i = 0; i < dx; ++i)
    for (Eigen::Index j = 0; j < dy; ++j) out.row(j * dx + i) = acted.row(i * dy + j);
  return {tensor(x, y), tensor(y, x), std::move(out)};
}

Morphism RepCategory::braiding_inverse(const Object& x, const Object& y) const {
  const Vector r = require(algebra_->rmatrix, "rmatrix").col(0);
  const Vector rinv = apply_to_leg(*algebra_, algebra_->antipode, r, 0);
  const int n = algebra_->dim;
  const Eigen::Index dx = x.dim(), dy = y.dim();
  Matrix acted = Matrix::Zero(dx * dy, dx * dy);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      const Rational& c = rinv(a * n + b);
      if (!c.is_zero()) acted += c * kronecker(action(x, a), action(y, b));
    }
  Matrix out(dx * dy, dy * dx);
  for (Eigen::Index i = 0; i < dx; ++i)
    for (Eigen::Index j = 0; j < dy; ++j) out.col(j * dx + i) = acted.col(i * dy + j);
  return {tensor(y, x), tensor(x, y), std::move(out)};
}

Morphism RepCategory::twist_left(const Object& x) const {
  const Object dx = left_dual(x);
  return Chain(tensor(coev_tilde(x), identity(x)))
      .then(dx, braiding(x, x), Object())
      .then(Object(), ev(x), x)
      .result();
}

Morphism RepCategory::twist_right(const Object& x) const {
  const Object dx = left_dual(x);
  return Chain(tensor(identity(x), coev(x)))
      .then(Object(), braiding(x, x), dx)
      .then(x, ev_tilde(x), Object())
      .result();
}

Morphism RepCategory::ribbon_twist(const Object& x) const {
  require(algebra_->ribbon, "ribbon");
  const auto inv = inverse_element(*algebra_, *algebra_->ribbon);
  if (!inv) throw MissingDataError(algebra_->name + ": invertible ribbon element");
  return {x, x, act(x, *inv)};
}

std::vector<Object> GeneratorSet::up_to(std::size_t max_length) const {
  std::vector<Object> out;
  for (const auto& o : objects)
    if (o.length() <= max_length) out.push_back(o);
  return out;
}

std::vector<std::pair<Object, Object>> GeneratorSet::pairs(std::size_t max_length) const {
  std::vector<std::pair<Object, Object>> out;
  for (const auto& x : objects)
    for (const auto& y : objects)
      if (x.length() + y.length() <= max_length) out.emplace_back(x, y);
  return out;
}

std::vector<std::vector<Object>> GeneratorSet::triples(std::size_t max_length) const {
  std::vector<std::vector<Object>> out;
  for (const auto& x : objects)
    for (const auto& y : objects)
      for (const auto& z : objects)
        if (x.length() + y.length() + z.length() <= max_length) out.push_back({x, y, z});
  return out;
}

GeneratorSet make_generator_set(std::vector<Object> seeds, int depth) {
  GeneratorSet gen;
  gen.depth = depth;
  std::vector<Object> letters;
  for (const auto& s : seeds) {
    if (s.length() != 1) throw ShapeError("generator seeds must be single letters, got " + s.key());
    letters.push_back(s);
    letters.push_back(left_dual(s));
  }
  gen.seeds = std::move(seeds);
  std::vector<Object> layer{Object()};
  gen.objects.push_back(Object());
  for (int len = 1; len <= depth; ++len) {
    std::vector<Object> next;
    for (const auto& w : layer)
      for (const auto& l : letters) next.push_back(tensor(w, l));
    for (const auto& o : next)
      if (std::find(gen.objects.begin(), gen.objects.end(), o) == gen.objects.end()) gen.objects.push_back(o);
    layer = std::move(next);
  }
  return gen;
}

const Morphism& HalfBraidingData::at(const Object& x) const {
  auto it = family.find(x.key());
  if (it == family.end()) throw CoverageError("half-braiding has no component at " + x.key());
  return it->second;
}

Report check_half_braiding(const RepCategory& cat, const HalfBraidingData& hb, const GeneratorSet& gen,
                           std::size_t max_hom_length) {
  for (const auto& x : gen.objects) (void)hb.at(x);
  const Object& a = hb.carrier;
  Report report;
  {
    Check c{"half_braiding.components", "each σ_X : X⊗A → A⊗X is an invertible intertwiner", Status::pass, {}, {}, {}};
    for (const auto& x : gen.objects) {
      const Morphism& s = hb.at(x);
      if (s.source != tensor(x, a) || s.target != tensor(a, x)) {
        c.status = Status::fail;
        c.witness = "X = " + x.key() + ": wrong source/target";
      } else if (auto w = cat.intertwining_failure(s)) {
        c.status = Status::fail;
        c.witness = "X = " + x.key() + ": " + *w;
      } else if (!try_inverse(s.matrix)) {
        c.status = Status::fail;
        c.witness = "X = " + x.key() + ": singular";
      }
      if (c.status == Status::fail) break;
    }
    c.scope = std::to_string(gen.objects.size()) + " objects";
    report.add(std::move(c));
  }
  {
    Check c{"half_braiding.unit", "σ_1 = id_A", Status::pass, {}, {}, {}};
    if (hb.at(Object()).matrix != identity(a).matrix) {
      c.status = Status::fail;
      c.witness = "X = 1";
    }
    report.add(std::move(c));
  }
  {
    Check c{"half_braiding.natural", "(id_A⊗f)σ_X = σ_Y(f⊗id_A) for intertwiners f : X → Y", Status::pass, {}, {}, {}};
    std::size_t count = 0;
    const auto objs = gen.up_to(max_hom_length);
    for (const auto& x : objs) {
      for (const auto& y : objs) {
        for (const auto& f : cat.intertwiner_basis(x, y)) {
          ++count;
          const Morphism lhs = Chain(hb.at(x)).then(a, f, Object()).result();
          const Morphism rhs = compose(hb.at(y), Chain(identity(tensor(x, a))).then(Object(), f, a).result());
          if (lhs != rhs) {
            c.status = Status::fail;
            c.witness = "f : " + x.key() + " → " + y.key();
            break;
          }
        }
        if (c.status == Status::fail) break;
      }
      if (c.status == Status::fail) break;
    }
    c.scope = std::to_string(count) + " intertwiners between objects of length ≤ " + std::to_string(max_hom_length);
    report.add(std::move(c));
  }
  {
    Check c{"half_braiding.multiplicative", "σ_{X⊗Y} = (σ_X⊗id_Y)(id_X⊗σ_Y)", Status::pass, {}, {}, {}};
    const auto pairs = gen.pairs(static_cast<std::size_t>(gen.depth));
    for (const auto& [x, y] : pairs) {
      const Morphism rhs = Chain(identity(tensor({x, y, a}))).then(x, hb.at(y), Object()).then(Object(), hb.at(x), y).result();
      if (hb.at(tensor(x, y)) != rhs) {
        c.status = Status::fail;
        c.witness = "(X, Y) = (" + x.key() + ", " + y.key() + ")";
        break;
      }
    }
    c.scope = std::to_string(pairs.size()) + " pairs";
    report.add(std::move(c));
  }
  return report;
}

}  // namespace cohopf
