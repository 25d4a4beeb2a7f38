#include "cohopf/cohopf.hpp"

namespace cohopf {

namespace {

struct Tally {
  std::string witness;
  std::size_t instances = 0;

  void expect(bool ok, const std::string& where) {
    ++instances;
    if (!ok && witness.empty()) witness = where;
  }

  Check& record(Report& report, std::string id, std::string anchor, const std::string& scope) const {
    Check c{std::move(id), std::move(anchor), witness.empty() ? Status::pass : Status::fail, witness, {}, {}};
    c.scope = scope + " (" + std::to_string(instances) + " instances)";
    return report.add(std::move(c));
  }
};

std::string tuple(std::initializer_list<const Object*> xs) {
  std::string s = "(";
  for (const Object* x : xs) s += (s.size() > 1 ? ", " : "") + x->key();
  return s + ")";
}

std::string scope_of(const char* what, std::size_t length) {
  return std::string(what) + ", total length ≤ " + std::to_string(length);
}

const char* truth(bool b) { return b ? "true" : "false"; }

// A copy of one check under a new id and anchor.
Check relabel(const Report& from, const std::string& old_id, std::string id, std::string anchor) {
  const Check* c = from.find(old_id);
  if (!c) return Check{std::move(id), std::move(anchor), Status::unavailable, old_id, {}, {}};
  Check out = *c;
  out.id = std::move(id);
  out.anchor = std::move(anchor);
  return out;
}

// An unmet hypothesis is not a refutation: a failing precondition is reported
// as skipped, keeping its witness.
Check precondition(Check c) {
  c.scalars["holds"] = truth(c.status == Status::pass);
  if (c.status == Status::fail) c.status = Status::skipped;
  return c;
}

void add_preconditions(Report& report, const Report& from, const std::string& prefix) {
  for (const Check& c : from.checks()) {
    Check p = precondition(c);
    p.id = prefix + p.id;
    report.add(std::move(p));
  }
}

std::string first_failure(const Report& r) {
  for (const auto& c : r.checks())
    if (c.status == Status::fail) return c.id + (c.witness.empty() ? "" : " at " + c.witness);
  return {};
}

Morphism inverse_of(const Morphism& f) { return {f.target, f.source, inverse(f.matrix)}; }

Morphism u2_inverse(const Functor& u, const Object& x, const Object& y) {
  return u.has_comonoidal() ? u.delta(x, y) : inverse_of(u.mu(x, y));
}

}  // namespace

CohopfOperators cohopf_operators(const Adjunction& adj, const Object& x, const Object& y) {
  CohopfOperators out{adj.hl(x, y), adj.hr(y, x), std::nullopt, std::nullopt};
  auto certified = [](const Morphism& h, std::optional<Morphism> inv) -> std::optional<Morphism> {
    if (inv && is_identity(compose(*inv, h).matrix) && is_identity(compose(h, *inv).matrix)) return inv;
    return std::nullopt;
  };
  out.hl_inverse = certified(out.hl, adj.hl_inverse(x, y));
  out.hr_inverse = certified(out.hr, adj.hr_inverse(y, x));
  return out;
}

std::vector<std::pair<Object, Object>> mixed_pairs(const GeneratorSet& gen_r, const GeneratorSet& gen_u,
                                                   std::size_t max_length) {
  std::vector<std::pair<Object, Object>> out;
  for (const Object& x : gen_r.objects)
    for (const Object& y : gen_u.objects)
      if (x.length() + y.length() <= max_length) out.emplace_back(x, y);
  return out;
}

Report check_condition_main(const Adjunction& adj, const GeneratorSet& gen_r, const GeneratorSet& gen_u,
                            std::size_t max_length) {
  Report report;
  const Functor& r = adj.right();
  Tally ops;
  for (const auto& [x, y] : mixed_pairs(gen_r, gen_u, max_length)) {
    const CohopfOperators h = cohopf_operators(adj, x, y);
    ops.expect(h.hl_inverse.has_value(), "h^l at " + tuple({&x, &y}));
    ops.expect(h.hr_inverse.has_value(), "h^r at " + tuple({&y, &x}));
  }
  ops.record(report, "condition.cohopf", "h^l_{X,Y} and h^r_{Y,X} are invertible",
             scope_of("mixed generator pairs", max_length));

  // Exactness is automatic for additive functors of finite-dimensional modules;
  // the spot check compares dim ker R(f) with dim R(ker f) = dim R(1) · dim ker f.
  const int m = r(Object()).dim();
  Tally exact;
  const auto letters = gen_r.up_to(1);
  for (const Object& x : letters)
    for (const Object& y : letters)
      for (const Morphism& f : r.source().intertwiner_basis(x, y)) {
        const Eigen::Index k = f.matrix.cols() - rank(f.matrix);
        const Morphism rf = r(f);
        exact.expect(rf.matrix.cols() - rank(rf.matrix) == m * k && r(x).dim() == m * x.dim(), tuple({&x, &y}));
      }
  Check& e = exact.record(report, "condition.exact", "R is exact", "intertwiner bases between words of length ≤ 1");
  e.scalars["automatic"] = "additive functor of finite-dimensional modules";

  Tally faithful;
  for (const Object& x : gen_r.objects) faithful.expect(rank(adj.counit(x).matrix) == x.dim(), "ε^r at " + x.key());
  faithful.record(report, "condition.faithful", "ε^r_X is epic for every X (R faithful)",
                  "generator words of length ≤ " + std::to_string(gen_r.depth));
  return report;
}

std::pair<Morphism, Morphism> unit_algebra(const Adjunction& adj) {
  const Functor& r = adj.right();
  return {r.mu(Object(), Object()), r.mu0()};
}

// ---------------------------------------------------------------------------

struct FrobeniusConstruction::State {
  AdjunctionPtr adj;
  FrobeniusAlgebraData a;
  Morphism delta_u;
  mutable std::mutex mutex;
  mutable std::map<std::string, Morphism> etas, epsilons, deltas;

  template <typename Compute>
  Morphism cached(std::map<std::string, Morphism>& table, const std::string& key, Compute compute) const {
    {
      std::lock_guard<std::mutex> lock(mutex);
      auto it = table.find(key);
      if (it != table.end()) return it->second;
    }
    Morphism value = compute();
    std::lock_guard<std::mutex> lock(mutex);
    return table.emplace(key, std::move(value)).first->second;
  }

  Morphism equation_rhs(const Object& x) const {
    const Functor& r = adj->right();
    const Functor& u = adj->left();
    const Object one, rx = r(x), rurx = r(u(rx)), ururx = u(rurx);
    const Morphism g = Chain(whisker(one, delta_u, rx))
                           .then(a.carrier, adj->hl(one, rx), one)
                           .then(adj->hl(one, rurx))
                           .result();
    return Chain(u(g)).then(adj->counit(ururx)).then(u(r(adj->counit(x)))).result();
  }

  Morphism eta_l(const Object& x) const {
    return cached(etas, x.key(), [&] {
      const Morphism eps = adj->counit(x);
      if (rank(eps.matrix) != x.dim())
        throw PreconditionError("ε^r is not epic at " + x.key() + ": R is not faithful");
      const Morphism m = equation_rhs(x);
      try {
        return Morphism{x, eps.source, solve_against_epi(m.matrix, eps.matrix)};
      } catch (const InconsistencyError&) {
        throw TheoremViolation("η^l equation has no solution at " + x.key());
      }
    });
  }

  Morphism epsilon_l(const Object& y) const {
    return cached(epsilons, y.key(), [&] {
      auto inv = adj->hl_inverse(Object(), y);
      if (!inv) throw TheoremViolation("h^l_{1," + y.key() + "} is not invertible");
      return compose(whisker(Object(), a.nu, y), *inv);
    });
  }

  Morphism delta(const Object& x, const Object& y) const {
    return cached(deltas, x.key() + '\x1f' + y.key(), [&] {
      const Functor& r = adj->right();
      const Object ry = r(y);
      auto inv = adj->hl_inverse(x, ry);
      if (!inv) throw TheoremViolation("h^l_{" + x.key() + "," + ry.key() + "} is not invertible");
      return compose(*inv, r(tensor(identity(x), eta_l(y))));
    });
  }
};

namespace {

class ConstructedAdjunction final : public Adjunction {
 public:
  ConstructedAdjunction(FunctorPtr r, FunctorPtr u, ObjectFamily unit, ObjectFamily counit)
      : Adjunction(std::move(r), std::move(u)), unit_(std::move(unit)), counit_(std::move(counit)) {}
  Morphism unit(const Object& x) const override { return unit_(x); }
  Morphism counit(const Object& y) const override { return counit_(y); }

 private:
  ObjectFamily unit_, counit_;
};

}  // namespace

FrobeniusConstruction::FrobeniusConstruction(AdjunctionPtr adj, FrobeniusAlgebraData on_unit)
    : state_(std::make_shared<State>()) {
  const Functor& r = adj->right();
  const auto [m, u] = cohopf::unit_algebra(*adj);
  if (on_unit.carrier != r(Object()))
    throw PreconditionError("Frobenius structure is not on R(1) = " + r(Object()).key());
  if (on_unit.m != m || on_unit.u != u)
    throw PreconditionError("Frobenius structure does not extend Kelly's algebra on R(1)");
  if (const Report v = verify_frobenius(r.target(), on_unit); !v.ok())
    throw PreconditionError("not a Frobenius algebra: " + first_failure(v));
  state_->adj = adj;
  state_->delta_u = compose(on_unit.delta, on_unit.u);
  state_->a = std::move(on_unit);

  std::shared_ptr<const State> s = state_;
  StructureOverrides o;
  o.delta = [s](const Object& x, const Object& y) { return s->delta(x, y); };
  o.delta0 = [s] { return s->a.nu; };
  functor_ = with_structure(adj->right_ptr(), std::move(o));
  left_ = std::make_shared<ConstructedAdjunction>(
      functor_, adj->left_ptr(), [s](const Object& x) { return s->eta_l(x); },
      [s](const Object& y) { return s->epsilon_l(y); });
}

const Adjunction& FrobeniusConstruction::adjunction() const { return *state_->adj; }
const FrobeniusAlgebraData& FrobeniusConstruction::unit_algebra() const { return state_->a; }
Morphism FrobeniusConstruction::eta_l(const Object& x) const { return state_->eta_l(x); }
Morphism FrobeniusConstruction::epsilon_l(const Object& y) const { return state_->epsilon_l(y); }
Morphism FrobeniusConstruction::delta(const Object& x, const Object& y) const { return state_->delta(x, y); }
const FunctorPtr& FrobeniusConstruction::functor() const { return functor_; }
const AdjunctionPtr& FrobeniusConstruction::left_adjunction() const { return left_; }

void FrobeniusConstruction::clear_cache() const {
  {
    std::lock_guard<std::mutex> lock(state_->mutex);
    state_->etas.clear();
    state_->epsilons.clear();
    state_->deltas.clear();
  }
  functor_->clear_cache();
  state_->adj->clear_cache();
}

std::pair<Morphism, Morphism> FrobeniusConstruction::eta_l_equation(const Object& x) const {
  return {compose(eta_l(x), state_->adj->counit(x)), state_->equation_rhs(x)};
}

ConstructionPtr construct_frobenius_on_right_adjoint(AdjunctionPtr adj, const FrobeniusAlgebraData& on_unit) {
  return std::make_shared<const FrobeniusConstruction>(std::move(adj), on_unit);
}

Report check_construction(const FrobeniusConstruction& c, const GeneratorSet& gen_r, const GeneratorSet& gen_u,
                          std::size_t max_length) {
  Report report;
  Tally eq;
  for (const Object& x : gen_r.objects) {
    const auto [lhs, rhs] = c.eta_l_equation(x);
    eq.expect(lhs == rhs, x.key());
  }
  eq.record(report, "construction.eta_l_equation",
            "η^l_X ε^r_X = UR(ε^r_X) ε^r_{URUR(X)} U(h^l_{1,RUR(X)}) U(id⊗h^l_{1,R(X)}) U(Δu⊗id)",
            "generator words of length ≤ " + std::to_string(gen_r.depth));
  // η^l at U(Y) lives on URURU(Y); words of length 2 in gen_u make that too large.
  report.merge(check_snakes(*c.left_adjunction(), gen_r, make_generator_set(gen_u.seeds, 1)), "left_");
  report.merge(check_frobenius_functor_equations(*c.functor(), gen_r, max_length).report);

  const Object one;
  const FrobeniusAlgebraData unit{one, identity(one), identity(one), identity(one), identity(one)};
  const FrobeniusAlgebraData pushed = push_through_functor(*c.functor(), unit);
  const FrobeniusAlgebraData& a = c.unit_algebra();
  std::string witness;
  if (pushed.m != a.m) witness = "m";
  else if (pushed.u != a.u) witness = "u";
  else if (pushed.delta != a.delta) witness = "Δ";
  else if (pushed.nu != a.nu) witness = "ν";
  report.add("construction.push_through_unit", "R(1) with R₂, R₀, R², R⁰ is the given Frobenius algebra",
             witness.empty() ? Status::pass : Status::fail, witness);
  return report;
}

Report verify_operator_relations(const Adjunction& adj, const GeneratorSet& gen_r, std::size_t max_length) {
  Report report;
  const Functor& r = adj.right();
  const Functor& u = adj.left();
  const Object one;
  Tally a, b, c;
  for (const auto& t : gen_r.triples(max_length)) {
    const Object &x = t[0], &y = t[1], &z = t[2];
    const Object rx = r(x), rz = r(z), urz = u(rz);
    const Morphism lhs = Chain(r.mu(x, tensor(y, urz))).before(rx, adj.hl(y, rz), one).result();
    const Morphism rhs = Chain(adj.hl(tensor(x, y), rz)).before(one, r.mu(x, y), rz).result();
    a.expect(lhs == rhs, tuple({&x, &y, &z}));
  }
  for (const auto& [x, y] : gen_r.pairs(max_length)) {
    const Object rx = r(x), ry = r(y), ury = u(ry);
    const Morphism hl = adj.hl(x, ry);
    const Morphism lhs = compose(adj.counit(tensor(x, ury)), u(hl));
    const Morphism rhs = compose(whisker(one, adj.counit(x), ury), u2_inverse(u, rx, ry));
    b.expect(lhs == rhs, tuple({&x, &y}));
    c.expect(compose(r(tensor(identity(x), adj.counit(y))), hl) == r.mu(x, y), tuple({&x, &y}));
  }
  a.record(report, "operators.hl_r2", "R₂(X,Y⊗UR(Z))(id⊗h^l_{Y,R(Z)}) = h^l_{X⊗Y,R(Z)}(R₂(X,Y)⊗id)",
           scope_of("triples of generator words", max_length));
  b.record(report, "operators.counit_hl", "ε^r_{X⊗UR(Y)} U(h^l_{X,R(Y)}) = (ε^r_X⊗id) U₂⁻¹(R(X),R(Y))",
           scope_of("pairs of generator words", max_length));
  c.record(report, "operators.hl_counit", "R(id_X⊗ε^r_Y) h^l_{X,R(Y)} = R₂(X,Y)",
           scope_of("pairs of generator words", max_length));
  return report;
}

Report theorem_separable_equivalence(const FrobeniusConstruction& c, const GeneratorSet& gen_r,
                                     std::size_t max_length) {
  Report report;
  const RepCategory& cat = c.adjunction().right().target();
  const ClassificationFlags flags = classify(cat, c.unit_algebra());
  const FrobeniusFunctorResult fun = functor_separability(*c.functor(), gen_r, max_length);
  const bool alg_sep = flags.separable.has_value(), fun_sep = fun.beta2.has_value();
  const bool alg_spec = flags.special.has_value(), fun_spec = fun_sep && !fun.beta0->is_zero();
  const std::string scope = scope_of("pairs of generator words", max_length);

  Check sep{"theorem.separable", "R(1) separable ⟺ R separable", alg_sep == fun_sep ? Status::pass : Status::fail,
            {}, scope, {}};
  if (sep.status == Status::fail) sep.witness = std::string("algebra ") + truth(alg_sep) + ", functor " + truth(fun_sep);
  sep.scalars["algebra_side"] = truth(alg_sep);
  sep.scalars["functor_side"] = truth(fun_sep);
  if (alg_sep) sep.scalars["algebra_beta2"] = flags.separable->str();
  if (fun_sep) sep.scalars["functor_beta2"] = fun.beta2->str();
  report.add(std::move(sep));

  Check spec{"theorem.special", "R(1) special ⟺ R special", alg_spec == fun_spec ? Status::pass : Status::fail,
             {}, scope, {}};
  if (spec.status == Status::fail)
    spec.witness = std::string("algebra ") + truth(alg_spec) + ", functor " + truth(fun_spec);
  spec.scalars["algebra_side"] = truth(alg_spec);
  spec.scalars["functor_side"] = truth(fun_spec);
  if (alg_spec) spec.scalars["algebra_beta0"] = flags.special->str();
  if (fun_spec) spec.scalars["functor_beta0"] = fun.beta0->str();
  report.add(std::move(spec));

  if (alg_sep && fun_sep) {
    const bool same = *flags.separable == *fun.beta2 && (!alg_spec || *flags.special == *fun.beta0);
    report.add("theorem.separable_scalars", "β₂ and β₀ agree on both sides", same ? Status::pass : Status::fail,
               same ? "" : "β mismatch");
    Check norm{"theorem.separable_normalized", "R₂(X,Y) R²(X,Y) = id_{R(X⊗Y)}", Status::skipped, {}, scope, {}};
    if (*flags.separable == Rational(1))
      norm.status = *fun.beta2 == Rational(1) ? Status::pass : Status::fail;
    else
      norm.witness = "form not normalized (β₂ = " + flags.separable->str() + ")";
    if (norm.status == Status::fail) norm.witness = "β₂ = " + fun.beta2->str();
    report.add(std::move(norm));
  }
  return report;
}

HalfBraidingData half_braiding_on_R1(const Adjunction& adj, const GeneratorSet& gen_u) {
  HalfBraidingData hb;
  const Object one;
  hb.carrier = adj.right()(one);
  auto add = [&](const Object& y) {
    if (hb.family.count(y.key())) return;
    auto inv = adj.hl_inverse(one, y);
    if (!inv) throw TheoremViolation("h^l_{1," + y.key() + "} is not invertible");
    hb.family.emplace(y.key(), compose(*inv, adj.hr(y, one)));
  };
  for (const Object& y : gen_u.objects) {
    add(y);
    add(left_dual(y));
    add(left_dual(left_dual(y)));
  }
  return hb;
}

Morphism kappa(const RepCategory& cat, const FrobeniusAlgebraData& a) {
  const Object& x = a.carrier;
  const Object dx = left_dual(x), ddx = left_dual(dx), one;
  return Chain(tensor(identity(x), cat.coev(dx)))
      .then(tensor(x, dx), compose(a.delta, a.u), ddx)
      .then(x, cat.ev(x), tensor(x, ddx))
      .then(one, compose(a.nu, a.m), ddx)
      .result();
}

Report check_tensor_endofunctor(CategoryPtr cat, const FrobeniusAlgebraData& a, const HalfBraidingData& hb,
                                const GeneratorSet& gen, std::size_t max_length) {
  Report report;
  report.merge(check_half_braiding(*cat, hb, gen));
  const FunctorPtr f = tensor_functor(cat, a, hb);
  report.merge(check_frobenius_functor_equations(*f, gen, max_length).report, "tensor.");
  if (!cat->has_pivot()) {
    report.add("tensor.kappa_pivot", "κ_A = 𝔭_A ⟺ A symmetric", Status::unavailable, "pivot");
    return report;
  }
  const Morphism k = kappa(*cat, a);
  const bool symmetric = *classify(*cat, a).symmetric;
  const bool equal = k == cat->pivot(a.carrier);
  Check kp{"tensor.kappa_pivot", "κ_A = 𝔭_A ⟺ A symmetric", equal == symmetric ? Status::pass : Status::fail, {}, {}, {}};
  if (kp.status == Status::fail) kp.witness = std::string("κ = 𝔭 is ") + truth(equal) + ", symmetric " + truth(symmetric);
  kp.scalars["kappa_is_pivot"] = truth(equal);
  kp.scalars["symmetric"] = truth(symmetric);
  report.add(std::move(kp));
  // ξ on letters only: on longer words the dense composites dominate memory.
  const GeneratorSet letters = make_generator_set(gen.seeds, 1);
  Tally xi_t;
  for (const Object& x : letters.objects)
    xi_t.expect(xi(*f, x) == tensor(k, identity(left_dual(left_dual(x)))), x.key());
  xi_t.record(report, "tensor.xi_kappa", "ξ^{A⊗−}_X = κ_A ⊗ id", "generator words of length ≤ 1");
  const Report piv = is_pivotal_functor(*f, letters);
  Check pc = relabel(piv, "functor.pivotal", "tensor.pivotal_iff_symmetric", "A⊗− pivotal ⟺ A symmetric");
  const bool pivotal = pc.status == Status::pass;
  pc.status = pivotal == symmetric ? Status::pass : Status::fail;
  pc.scalars["pivotal"] = truth(pivotal);
  pc.scalars["symmetric"] = truth(symmetric);
  if (pc.status == Status::pass) pc.witness.clear();
  report.add(std::move(pc));
  return report;
}

Report theorem_pivotal_equivalence(const FrobeniusConstruction& c, const GeneratorSet& gen_r,
                                   const GeneratorSet& gen_u, std::size_t max_length) {
  Report report;
  const Adjunction& adj = c.adjunction();
  const Functor& u = adj.left();
  const std::string anchor = "R(1) symmetric ⟺ R pivotal Frobenius";
  for (const RepCategory* cat : {&u.source(), &u.target()})
    if (!cat->has_pivot()) {
      report.add("theorem.pivotal", anchor, Status::unavailable, "pivot");
      return report;
    }
  const Report up = is_pivotal_functor(u, gen_u);
  report.add(precondition(relabel(up, "functor.pivotal", "precondition.u_pivotal", "U is a pivotal functor")));

  // h^l_{1,−} as a monoidal natural isomorphism R(1)⊗− ⇒ RU.
  const HalfBraidingData hb = half_braiding_on_R1(adj, gen_u);
  const CategoryPtr cat_b = adj.left().source_ptr();
  const FunctorPtr tensor_f = tensor_functor(cat_b, c.unit_algebra(), hb);
  const FunctorPtr ru = composite_functor(adj.right_ptr(), adj.left_ptr());
  const Object one;
  const ObjectFamily alpha = [&](const Object& y) { return adj.hl(one, y); };
  report.merge(check_natural_transformation(*tensor_f, *ru, alpha, gen_u, 1, true, gen_u.depth), "hl_unit.");
  Tally inv;
  for (const Object& y : gen_u.objects) inv.expect(adj.hl_inverse(one, y).has_value(), y.key());
  inv.record(report, "hl_unit.invertible", "h^l_{1,X} is invertible", "generator words");

  const bool symmetric = *classify(adj.right().target(), c.unit_algebra()).symmetric;
  const Report rp = is_pivotal_functor(*c.functor(), gen_r);
  const bool pivotal = rp.all_passed();
  report.merge(rp, "R.");
  Check t{"theorem.pivotal", anchor, Status::pass, {}, "generator words of length ≤ " + std::to_string(gen_r.depth), {}};
  if (!up.all_passed()) {
    t.status = Status::skipped;
    t.witness = "U is not pivotal";
  } else if (symmetric != pivotal) {
    t.status = Status::fail;
    t.witness = std::string("symmetric ") + truth(symmetric) + ", pivotal " + truth(pivotal);
  }
  t.scalars["algebra_side"] = truth(symmetric);
  t.scalars["functor_side"] = truth(pivotal);
  report.add(std::move(t));
  (void)max_length;
  return report;
}

Report adjoint_braiding_check(const FrobeniusConstruction& c, const GeneratorSet& gen_r, const GeneratorSet& gen_u,
                              std::size_t max_length) {
  Report report;
  const Adjunction& adj = c.adjunction();
  const Functor& u = adj.left();
  if (!u.source().has_braiding() || !u.target().has_braiding()) {
    report.add("lemma.right_adjoint_braided", "R with R₂ is braided", Status::unavailable, "R-matrix");
    report.add("lemma.left_adjoint_cobraided", "R with R² is cobraided", Status::unavailable, "R-matrix");
    return report;
  }
  const Report ub = is_braided_functor(u, gen_u, max_length);
  report.add(precondition(relabel(ub, "functor.braided", "precondition.u_braided", "U is a braided functor")));
  if (!ub.all_passed()) {
    report.add("lemma.right_adjoint_braided", "R with R₂ is braided", Status::skipped, "U is not braided");
    report.add("lemma.left_adjoint_cobraided", "R with R² is cobraided", Status::skipped, "U is not braided");
    return report;
  }
  report.add(relabel(is_braided_functor(adj.right(), gen_r, max_length), "functor.braided",
                     "lemma.right_adjoint_braided", "R with R₂ is braided"));
  report.add(relabel(is_cobraided_functor(*c.functor(), gen_r, max_length), "functor.cobraided",
                     "lemma.left_adjoint_cobraided", "R with R² is cobraided"));
  return report;
}

Report theorem_ribbon_equivalence(const FrobeniusConstruction& c, const GeneratorSet& gen_r,
                                  const GeneratorSet& gen_u, std::size_t max_length) {
  Report report;
  const Adjunction& adj = c.adjunction();
  const Functor& u = adj.left();
  const std::string anchor = "R(1) symmetric ⟺ R ribbon Frobenius";
  for (const RepCategory* cat : {&u.source(), &u.target()}) {
    std::string missing;
    if (!cat->has_braiding()) missing = "R-matrix";
    else if (!cat->has_pivot()) missing = "pivot";
    else if (!cat->has_ribbon()) missing = "ribbon element";
    if (!missing.empty()) {
      report.add("theorem.ribbon", anchor, Status::unavailable, missing);
      return report;
    }
  }
  const Report ub = is_braided_functor(u, gen_u, max_length);
  report.add(precondition(relabel(ub, "functor.braided", "precondition.u_braided", "U is a braided functor")));
  const Report rs = check_ribbon_category(u.target(), gen_r);
  const Report rt = check_ribbon_category(u.source(), gen_u);
  add_preconditions(report, rs, "precondition.source_");
  add_preconditions(report, rt, "precondition.target_");
  const bool pre = ub.all_passed() && rs.all_passed() && rt.all_passed();

  const Functor& r = *c.functor();
  const bool symmetric = *classify(adj.right().target(), c.unit_algebra()).symmetric;
  const Report ribbon_r = is_ribbon_functor(r, gen_r);
  const bool ribbon = ribbon_r.all_passed();
  const bool pivotal = is_pivotal_functor(r, gen_r).all_passed();
  const bool cobraided = is_cobraided_functor(r, gen_r, max_length).all_passed();
  report.merge(ribbon_r, "R.");

  Check t{"theorem.ribbon", anchor, Status::pass, {}, "generator words of length ≤ " + std::to_string(gen_r.depth), {}};
  if (!pre) {
    t.status = Status::skipped;
    t.witness = "precondition failed";
  } else if (symmetric != ribbon) {
    t.status = Status::fail;
    t.witness = std::string("symmetric ") + truth(symmetric) + ", ribbon " + truth(ribbon);
  }
  t.scalars["algebra_side"] = truth(symmetric);
  t.scalars["functor_side"] = truth(ribbon);
  report.add(std::move(t));

  Check x{"theorem.ribbon_cross_check", "R ribbon ⟺ R pivotal and cobraided",
          ribbon == (pivotal && cobraided) ? Status::pass : Status::fail, {}, {}, {}};
  x.scalars["ribbon"] = truth(ribbon);
  x.scalars["pivotal"] = truth(pivotal);
  x.scalars["cobraided"] = truth(cobraided);
  if (x.status == Status::fail)
    x.witness = !pivotal ? "not pivotal" : !cobraided ? "not cobraided" : "pivotal and cobraided but twist not preserved";
  report.add(std::move(x));
  return report;
}

}  // namespace cohopf
