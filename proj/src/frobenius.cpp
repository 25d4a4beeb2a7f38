#include "cohopf/frobenius.hpp"

#include <set>

namespace cohopf {

namespace {

void expect_shape(const Morphism& f, const Object& source, const Object& target, const char* what) {
  if (f.source != source || f.target != target)
    throw ShapeError(std::string(what) + ": expected " + source.key() + " → " + target.key() + ", got " +
                     f.source.key() + " → " + f.target.key());
  if (f.matrix.rows() != target.dim() || f.matrix.cols() != source.dim())
    throw ShapeError(std::string(what) + ": matrix " + shape_str(f.matrix.rows(), f.matrix.cols()));
}

void add_equality(Report& report, const std::string& id, const std::string& anchor, const Morphism& lhs,
                  const Morphism& rhs, const std::string& witness) {
  report.add(id, anchor, lhs == rhs ? Status::pass : Status::fail, lhs == rhs ? "" : witness);
}

}  // namespace

Report verify_algebra(const RepCategory& cat, const Object& a, const Morphism& m, const Morphism& u) {
  expect_shape(m, tensor(a, a), a, "m");
  expect_shape(u, Object(), a, "u");
  Report report;
  const Object one;
  const Morphism assoc_l = Chain(identity(tensor({a, a, a}))).then(one, m, a).then(m).result();
  const Morphism assoc_r = Chain(identity(tensor({a, a, a}))).then(a, m, one).then(m).result();
  add_equality(report, "algebra.associative", "m(m⊗id) = m(id⊗m)", assoc_l, assoc_r, "A = " + a.key());
  add_equality(report, "algebra.unital_left", "m(u⊗id) = id", compose(m, tensor(u, identity(a))), identity(a),
               "A = " + a.key());
  add_equality(report, "algebra.unital_right", "m(id⊗u) = id", compose(m, tensor(identity(a), u)), identity(a),
               "A = " + a.key());
  (void)cat;
  return report;
}

Report verify_frobenius(const RepCategory& cat, const FrobeniusAlgebraData& f) {
  const Object& a = f.carrier;
  const Object one;
  expect_shape(f.delta, a, tensor(a, a), "delta");
  expect_shape(f.nu, a, one, "nu");
  Report report;
  {
    std::string witness;
    for (const auto* g : {&f.m, &f.u, &f.delta, &f.nu})
      if (auto w = cat.intertwining_failure(*g)) {
        witness = g->source.key() + " → " + g->target.key() + ": " + *w;
        break;
      }
    report.add("frobenius.intertwiners", "m, u, Δ, ν are morphisms in the category",
               witness.empty() ? Status::pass : Status::fail, witness);
  }
  report.merge(verify_algebra(cat, a, f.m, f.u), "");
  const Morphism coassoc_l = Chain(f.delta).then(one, f.delta, a).result();
  const Morphism coassoc_r = Chain(f.delta).then(a, f.delta, one).result();
  add_equality(report, "coalgebra.coassociative", "(Δ⊗id)Δ = (id⊗Δ)Δ", coassoc_l, coassoc_r, "A = " + a.key());
  add_equality(report, "coalgebra.counital_left", "(ν⊗id)Δ = id", Chain(f.delta).then(one, f.nu, a).result(),
               identity(a), "A = " + a.key());
  add_equality(report, "coalgebra.counital_right", "(id⊗ν)Δ = id", Chain(f.delta).then(a, f.nu, one).result(),
               identity(a), "A = " + a.key());
  const Morphism middle = compose(f.delta, f.m);
  const Morphism left = Chain(identity(tensor(a, a))).then(a, f.delta, one).then(one, f.m, a).result();
  const Morphism right = Chain(identity(tensor(a, a))).then(one, f.delta, a).then(a, f.m, one).result();
  std::string witness;
  if (left != middle) witness = "(m⊗id)(id⊗Δ) ≠ Δm";
  else if (right != middle) witness = "(id⊗m)(Δ⊗id) ≠ Δm";
  report.add("frobenius.law", "(m⊗id)(id⊗Δ) = Δm = (id⊗m)(Δ⊗id)", witness.empty() ? Status::pass : Status::fail,
             witness);
  return report;
}

std::pair<Morphism, Morphism> symmetry_sides(const RepCategory& cat, const FrobeniusAlgebraData& f) {
  const Object& a = f.carrier;
  const Object da = left_dual(a), one;
  const Morphism form = compose(f.nu, f.m);
  const Morphism lhs = Chain(tensor(identity(a), cat.coev(a))).then(one, form, da).result();
  const Morphism rhs = Chain(tensor(cat.coev(da), identity(a)))
                           .then(da, cat.pivot_inverse(a), a)
                           .then(da, form, one)
                           .result();
  return {lhs, rhs};
}

std::pair<Morphism, Morphism> alternate_symmetry_sides(const RepCategory& cat, const FrobeniusAlgebraData& f) {
  const Object& a = f.carrier;
  const Object da = left_dual(a), one;
  const Morphism copairing = compose(f.delta, f.u);
  const Morphism lhs = Chain(tensor(identity(da), copairing)).then(one, cat.ev(a), a).result();
  const Morphism rhs = Chain(tensor(copairing, identity(da)))
                           .then(a, cat.pivot(a), da)
                           .then(a, cat.ev(da), one)
                           .result();
  return {lhs, rhs};
}

ClassificationFlags classify(const RepCategory& cat, const FrobeniusAlgebraData& f) {
  ClassificationFlags flags;
  if (auto beta = scalar_multiple_of_identity(compose(f.m, f.delta).matrix); beta && !beta->is_zero()) {
    flags.separable = *beta;
    const Rational beta0 = compose(f.nu, f.u).matrix(0, 0);
    if (!beta0.is_zero()) flags.special = beta0;
  }
  if (cat.has_pivot()) {
    auto [lhs, rhs] = symmetry_sides(cat, f);
    flags.symmetric = lhs == rhs;
  }
  if (cat.has_braiding()) {
    flags.commutative = compose(f.m, cat.braiding(f.carrier, f.carrier)) == f.m;
    if (cat.has_ribbon())
      flags.framed = *flags.commutative && is_identity(cat.ribbon_twist(f.carrier).matrix);
  }
  return flags;
}

Report symmetric_alternate_check(const RepCategory& cat, const FrobeniusAlgebraData& f) {
  Report report;
  const std::string anchor = "symmetric iff (ev⊗id)(id⊗Δu) = (id⊗ev)(id⊗𝔭⊗id)(Δu⊗id)";
  if (!cat.has_pivot()) {
    report.add("frobenius.symmetric_alternate", anchor, Status::unavailable, "pivot");
    return report;
  }
  auto [l1, r1] = symmetry_sides(cat, f);
  auto [l2, r2] = alternate_symmetry_sides(cat, f);
  const bool symmetric = l1 == r1, alternate = l2 == r2;
  Check c{"frobenius.symmetric_alternate", anchor, symmetric == alternate ? Status::pass : Status::fail, {}, {}, {}};
  if (c.status == Status::fail) c.witness = "A = " + f.carrier.key();
  c.scalars["symmetric"] = symmetric ? "true" : "false";
  c.scalars["alternate"] = alternate ? "true" : "false";
  report.add(std::move(c));
  return report;
}

Morphism comultiplication_from_form(const RepCategory& cat, const Object& a, const Morphism& m, const Morphism& nu) {
  (void)cat;
  const Eigen::Index d = a.dim();
  const Matrix form = multiply(nu.matrix, m.matrix);
  Matrix pairing(d, d);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) pairing(i, j) = form(0, i * d + j);
  const Matrix copairing = inverse(pairing);
  Matrix kappa(d * d, 1);
  for (Eigen::Index i = 0; i < d; ++i)
    for (Eigen::Index j = 0; j < d; ++j) kappa(i * d + j, 0) = copairing(i, j);
  const Object one;
  return Chain(tensor(Morphism{one, tensor(a, a), kappa}, identity(a))).then(a, m, one).result();
}

FormSearch solve_frobenius_form(const RepCategory& cat, const Object& a, const Morphism& m, const Morphism& u) {
  if (!verify_algebra(cat, a, m, u).ok()) throw PreconditionError("solve_frobenius_form: (m, u) is not an algebra");
  FormSearch out;
  const auto functionals = cat.intertwiner_basis(a, Object());
  const std::size_t n = functionals.size();
  out.invariant_functionals = n;
  out.exhaustive = n <= 1;
  std::vector<std::vector<Rational>> candidates;
  for (std::size_t k = 0; k < n; ++k) {
    std::vector<Rational> c(n, Rational(0));
    c[k] = 1;
    candidates.push_back(std::move(c));
  }
  for (std::size_t j = 1; j <= n; ++j) {
    std::vector<Rational> c(n);
    for (std::size_t k = 0; k < n; ++k) {
      Rational p(1);
      for (std::size_t e = 0; e < j; ++e) p *= Rational(static_cast<long>(k + 1));
      c[k] = p;
    }
    if (std::find(candidates.begin(), candidates.end(), c) == candidates.end()) candidates.push_back(std::move(c));
  }
  const Eigen::Index d = a.dim();
  for (const auto& c : candidates) {
    out.tried.push_back(c);
    Matrix nu = Matrix::Zero(1, d);
    for (std::size_t k = 0; k < n; ++k)
      if (!c[k].is_zero()) nu += c[k] * functionals[k].matrix;
    const Morphism form{a, Object(), nu};
    Morphism delta;
    try {
      delta = comultiplication_from_form(cat, a, m, form);
    } catch (const RankError&) {
      continue;
    }
    FrobeniusAlgebraData f{a, m, u, delta, form};
    if (!verify_frobenius(cat, f).ok())
      throw std::logic_error("solve_frobenius_form: nondegenerate form produced a non-Frobenius structure");
    out.algebra = std::move(f);
    return out;
  }
  if (n == 0)
    out.certificate = "Hom(A, 1) = 0: no Frobenius form exists";
  else if (n == 1)
    out.certificate = "Hom(A, 1) is one-dimensional and its generator is degenerate: no Frobenius form exists";
  else
    out.certificate = "no form found by sweep (" + std::to_string(candidates.size()) + " candidates in a " +
                      std::to_string(n) + "-dimensional space)";
  return out;
}

FrobeniusAlgebraData rescale_form(const FrobeniusAlgebraData& a, const Rational& lambda) {
  if (lambda.is_zero()) throw RankError("rescale_form: zero scale");
  FrobeniusAlgebraData out = a;
  out.nu = scaled(lambda, a.nu);
  out.delta = scaled(Rational(1) / lambda, a.delta);
  return out;
}

FrobeniusAlgebraData normalize_form(const RepCategory& cat, const FrobeniusAlgebraData& a) {
  (void)cat;
  auto beta = scalar_multiple_of_identity(compose(a.m, a.delta).matrix);
  if (!beta || beta->is_zero()) return a;
  return rescale_form(a, *beta);
}

bool operator==(const FrobeniusAlgebraData& a, const FrobeniusAlgebraData& b) {
  return a.carrier == b.carrier && a.m == b.m && a.u == b.u && a.delta == b.delta && a.nu == b.nu;
}

}  // namespace cohopf
