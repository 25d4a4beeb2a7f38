#include "cohopf/functors.hpp"

namespace cohopf {

namespace {

// First failure plus an instance count for one check id.
struct Tally {
  std::string witness;
  std::size_t instances = 0;

  void expect(bool ok, const std::string& where) {
    ++instances;
    if (!ok && witness.empty()) witness = where;
  }

  void record(Report& report, std::string id, std::string anchor, const std::string& scope) const {
    Check c{std::move(id), std::move(anchor), witness.empty() ? Status::pass : Status::fail, witness, {}, {}};
    c.scope = scope + " (" + std::to_string(instances) + " instances)";
    report.add(std::move(c));
  }
};

std::string words_scope(const char* what, std::size_t length) {
  return std::string(what) + " of generator words, total length ≤ " + std::to_string(length);
}

std::string tuple(std::initializer_list<const Object*> xs) {
  std::string s = "(";
  for (const Object* x : xs) s += (s.size() > 1 ? ", " : "") + x->key();
  return s + ")";
}

}  // namespace

Report check_functoriality(const Functor& f, const GeneratorSet& gen, std::size_t max_length) {
  Report report;
  const auto objects = gen.up_to(max_length);
  Tally ids, maps, comp;
  for (const Object& x : objects) ids.expect(f(identity(x)) == identity(f(x)), x.key());
  for (const Object& x : objects)
    for (const Object& y : objects)
      for (const Morphism& g : f.source().intertwiner_basis(x, y)) {
        const Morphism fg = f(g);
        maps.expect(f.target().is_intertwiner(fg), tuple({&x, &y}));
        for (const Object& z : objects)
          for (const Morphism& h : f.source().intertwiner_basis(y, z))
            comp.expect(f(compose(h, g)) == compose(f(h), fg), tuple({&x, &y, &z}));
      }
  const std::string scope = "objects of length ≤ " + std::to_string(max_length) + ", intertwiner bases";
  ids.record(report, "functor.identities", "F(id_X) = id_{F(X)}", scope);
  maps.record(report, "functor.intertwiners", "F(f) is a morphism", scope);
  comp.record(report, "functor.composition", "F(g∘f) = F(g)∘F(f)", scope);
  return report;
}

Report check_monoidal(const Functor& f, const GeneratorSet& gen, std::size_t max_length) {
  Report report;
  Tally maps, assoc, unit, natural;
  const Object one;
  for (const auto& [x, y] : gen.pairs(max_length))
    maps.expect(f.target().is_intertwiner(f.mu(x, y)), tuple({&x, &y}));
  maps.expect(f.target().is_intertwiner(f.mu0()), "F₀");
  for (const auto& t : gen.triples(max_length)) {
    const Object &x = t[0], &y = t[1], &z = t[2];
    const Morphism lhs = Chain(f.mu(x, tensor(y, z))).before(f(x), f.mu(y, z), one).result();
    const Morphism rhs = Chain(f.mu(tensor(x, y), z)).before(one, f.mu(x, y), f(z)).result();
    assoc.expect(lhs == rhs, tuple({&x, &y, &z}));
  }
  for (const Object& x : gen.up_to(max_length)) {
    const Object fx = f(x);
    unit.expect(Chain(f.mu(one, x)).before(one, f.mu0(), fx).result() == identity(fx), "left, " + x.key());
    unit.expect(Chain(f.mu(x, one)).before(fx, f.mu0(), one).result() == identity(fx), "right, " + x.key());
  }
  const auto letters = gen.up_to(1);
  for (const Object& x : letters)
    for (const Object& x2 : letters)
      for (const Morphism& g : f.source().intertwiner_basis(x, x2))
        for (const Object& y : letters) {
          const Morphism fg = f(g);
          const Morphism lhs = Chain(f.mu(x2, y)).before(one, fg, f(y)).result();
          natural.expect(lhs == compose(f(tensor(g, identity(y))), f.mu(x, y)), "left, " + tuple({&x, &x2, &y}));
          const Morphism rhs = Chain(f.mu(y, x2)).before(f(y), fg, one).result();
          natural.expect(rhs == compose(f(tensor(identity(y), g)), f.mu(y, x)), "right, " + tuple({&y, &x, &x2}));
        }
  maps.record(report, "monoidal.intertwiners", "F₂ and F₀ are morphisms", words_scope("pairs", max_length));
  assoc.record(report, "monoidal.associativity", "F₂(X,Y⊗Z)(id⊗F₂(Y,Z)) = F₂(X⊗Y,Z)(F₂(X,Y)⊗id)",
               words_scope("triples", max_length));
  unit.record(report, "monoidal.unitality", "F₂(1,X)(F₀⊗id) = id = F₂(X,1)(id⊗F₀)",
              "generator words of length ≤ " + std::to_string(max_length));
  natural.record(report, "monoidal.naturality", "F₂ is natural in each variable",
                 "words of length ≤ 1, intertwiner bases");
  return report;
}

Report check_comonoidal(const Functor& f, const GeneratorSet& gen, std::size_t max_length) {
  Report report;
  Tally maps, assoc, unit, natural;
  const Object one;
  for (const auto& [x, y] : gen.pairs(max_length))
    maps.expect(f.target().is_intertwiner(f.delta(x, y)), tuple({&x, &y}));
  maps.expect(f.target().is_intertwiner(f.delta0()), "F⁰");
  for (const auto& t : gen.triples(max_length)) {
    const Object &x = t[0], &y = t[1], &z = t[2];
    const Morphism lhs = Chain(f.delta(x, tensor(y, z))).then(f(x), f.delta(y, z), one).result();
    const Morphism rhs = Chain(f.delta(tensor(x, y), z)).then(one, f.delta(x, y), f(z)).result();
    assoc.expect(lhs == rhs, tuple({&x, &y, &z}));
  }
  for (const Object& x : gen.up_to(max_length)) {
    const Object fx = f(x);
    unit.expect(Chain(f.delta(one, x)).then(one, f.delta0(), fx).result() == identity(fx), "left, " + x.key());
    unit.expect(Chain(f.delta(x, one)).then(fx, f.delta0(), one).result() == identity(fx), "right, " + x.key());
  }
  const auto letters = gen.up_to(1);
  for (const Object& x : letters)
    for (const Object& x2 : letters)
      for (const Morphism& g : f.source().intertwiner_basis(x, x2))
        for (const Object& y : letters) {
          const Morphism fg = f(g);
          const Morphism lhs = Chain(f.delta(x, y)).then(one, fg, f(y)).result();
          natural.expect(lhs == compose(f.delta(x2, y), f(tensor(g, identity(y)))), "left, " + tuple({&x, &x2, &y}));
          const Morphism rhs = Chain(f.delta(y, x)).then(f(y), fg, one).result();
          natural.expect(rhs == compose(f.delta(y, x2), f(tensor(identity(y), g))), "right, " + tuple({&y, &x, &x2}));
        }
  maps.record(report, "comonoidal.intertwiners", "F² and F⁰ are morphisms", words_scope("pairs", max_length));
  assoc.record(report, "comonoidal.coassociativity", "(id⊗F²(Y,Z))F²(X,Y⊗Z) = (F²(X,Y)⊗id)F²(X⊗Y,Z)",
               words_scope("triples", max_length));
  unit.record(report, "comonoidal.counitality", "(F⁰⊗id)F²(1,X) = id = (id⊗F⁰)F²(X,1)",
              "generator words of length ≤ " + std::to_string(max_length));
  natural.record(report, "comonoidal.naturality", "F² is natural in each variable",
                 "words of length ≤ 1, intertwiner bases");
  return report;
}

FrobeniusFunctorResult functor_separability(const Functor& f, const GeneratorSet& gen, std::size_t max_length) {
  FrobeniusFunctorResult out;
  std::optional<Rational> beta;
  bool consistent = true;
  std::string witness;
  std::size_t instances = 0;
  for (const auto& [x, y] : gen.pairs(max_length)) {
    ++instances;
    const auto b = scalar_multiple_of_identity(compose(f.mu(x, y), f.delta(x, y)).matrix);
    if (!b || (beta && *b != *beta)) {
      consistent = false;
      witness = tuple({&x, &y});
      break;
    }
    beta = *b;
  }
  // Informational: not being separable is an outcome, not a failure.
  Check sep{"frobenius_functor.separable", "F₂F² = β₂ id", Status::pass, {}, {}, {}};
  sep.scope = words_scope("pairs", max_length) + " (" + std::to_string(instances) + " instances)";
  if (consistent && beta && !beta->is_zero()) {
    out.beta2 = beta;
    out.beta0 = compose(f.delta0(), f.mu0()).matrix(0, 0);
    sep.scalars["separable"] = "true";
    sep.scalars["beta2"] = beta->str();
    sep.scalars["beta0"] = out.beta0->str();
  } else {
    sep.scalars["separable"] = "false";
    sep.scalars["counterexample"] = witness.empty() ? "F₂F² = 0" : witness;
  }
  out.report.add(std::move(sep));
  return out;
}

FrobeniusFunctorResult check_frobenius_functor_equations(const Functor& f, const GeneratorSet& gen,
                                                         std::size_t max_length) {
  FrobeniusFunctorResult out;
  out.report.merge(check_monoidal(f, gen, max_length));
  out.report.merge(check_comonoidal(f, gen, max_length));
  Tally left, right;
  const Object one;
  for (const auto& t : gen.triples(max_length)) {
    const Object &x = t[0], &y = t[1], &z = t[2];
    const Object fx = f(x), fz = f(z), xy = tensor(x, y), yz = tensor(y, z);
    const Morphism l1 = Chain(whisker(one, f.delta(x, y), fz)).then(fx, f.mu(y, z), one).result();
    left.expect(l1 == compose(f.delta(x, yz), f.mu(xy, z)), tuple({&x, &y, &z}));
    const Morphism l2 = Chain(whisker(fx, f.delta(y, z), one)).then(one, f.mu(x, y), fz).result();
    right.expect(l2 == compose(f.delta(xy, z), f.mu(x, yz)), tuple({&x, &y, &z}));
  }
  left.record(out.report, "frobenius_functor.left", "(id⊗F₂(Y,Z))(F²(X,Y)⊗id) = F²(X,Y⊗Z)F₂(X⊗Y,Z)",
              words_scope("triples", max_length));
  right.record(out.report, "frobenius_functor.right", "(F₂(X,Y)⊗id)(id⊗F²(Y,Z)) = F²(X⊗Y,Z)F₂(X,Y⊗Z)",
               words_scope("triples", max_length));

  const FrobeniusFunctorResult sep = functor_separability(f, gen, max_length);
  out.report.merge(sep.report);
  out.beta2 = sep.beta2;
  out.beta0 = sep.beta0;
  return out;
}

Report check_snakes(const Adjunction& adj, const GeneratorSet& gen_left, const GeneratorSet& gen_right) {
  Report report;
  const Functor& u = adj.left();
  const Functor& r = adj.right();
  Tally left, right, maps;
  for (const Object& x : gen_left.objects) {
    const Morphism eta = adj.unit(x);
    maps.expect(r.target().is_intertwiner(eta), "η at " + x.key());
    left.expect(compose(adj.counit(u(x)), u(eta)) == identity(u(x)), x.key());
  }
  for (const Object& y : gen_right.objects) {
    const Morphism eps = adj.counit(y);
    maps.expect(u.target().is_intertwiner(eps), "ε at " + y.key());
    right.expect(compose(r(eps), adj.unit(r(y))) == identity(r(y)), y.key());
  }
  maps.record(report, "adjunction.intertwiners", "η and ε are morphisms", "generator words");
  left.record(report, "adjunction.snake_left", "ε_{U(X)} ∘ U(η_X) = id", "generator words");
  right.record(report, "adjunction.snake_right", "R(ε_Y) ∘ η_{R(Y)} = id", "generator words");
  return report;
}

Report check_adjunction_monoidal(const Adjunction& adj, const GeneratorSet& gen_left, const GeneratorSet& gen_right,
                                 std::size_t max_length) {
  Report report;
  const Functor& u = adj.left();
  const Functor& r = adj.right();
  Tally unit_t, counit_t;
  const Object one;
  for (const auto& [x, y] : gen_left.pairs(max_length)) {
    const Object ux = u(x), uy = u(y);
    const Morphism lhs = Chain(tensor(adj.unit(x), adj.unit(y))).then(r.mu(ux, uy)).then(r(u.mu(x, y))).result();
    unit_t.expect(lhs == adj.unit(tensor(x, y)), tuple({&x, &y}));
  }
  unit_t.expect(compose(r(u.mu0()), r.mu0()) == adj.unit(one), "unit object");
  for (const auto& [y, y2] : gen_right.pairs(max_length)) {
    const Object ry = r(y), ry2 = r(y2);
    const Morphism lhs = Chain(u.mu(ry, ry2)).then(u(r.mu(y, y2))).then(adj.counit(tensor(y, y2))).result();
    counit_t.expect(lhs == tensor(adj.counit(y), adj.counit(y2)), tuple({&y, &y2}));
  }
  counit_t.expect(compose({adj.counit(one), u(r.mu0()), u.mu0()}) == identity(one), "unit object");
  unit_t.record(report, "adjunction.unit_monoidal", "η is a monoidal transformation Id ⇒ RU",
                words_scope("pairs", max_length));
  counit_t.record(report, "adjunction.counit_monoidal", "ε is a monoidal transformation UR ⇒ Id",
                  words_scope("pairs", max_length));
  return report;
}

Morphism zeta(const Functor& f, const Object& x) {
  const Object dx = left_dual(x), fx = f(x), fdx = f(dx);
  const Morphism ev_bar = compose({f.delta0(), f(f.source().ev(x)), f.mu(dx, x)});
  return Chain(tensor(identity(fdx), f.target().coev(fx))).then(Object(), ev_bar, left_dual(fx)).result();
}

Morphism zeta_inverse(const Functor& f, const Object& x) {
  const Object dx = left_dual(x), fx = f(x), fdx = f(dx);
  const Morphism coev_bar = compose({f.delta(x, dx), f(f.source().coev(x)), f.mu0()});
  return Chain(tensor(identity(left_dual(fx)), coev_bar)).then(Object(), f.target().ev(fx), fdx).result();
}

Morphism xi(const Functor& f, const Object& x) {
  return compose(f.target().dual(zeta_inverse(f, x)), zeta(f, left_dual(x)));
}

Report check_duality_transforms(const Functor& g, const Functor& f, const GeneratorSet& gen) {
  Report report;
  const FunctorPtr gf = composite_functor(std::shared_ptr<const Functor>(&g, [](const Functor*) {}),
                                          std::shared_ptr<const Functor>(&f, [](const Functor*) {}));
  Tally inv, z, x;
  const std::string scope = "generator words of length ≤ " + std::to_string(gen.depth);
  for (const Object& a : gen.objects) {
    const Object fa = f(a);
    for (const Functor* h : {&f, static_cast<const Functor*>(gf.get())}) {
      const Morphism zh = zeta(*h, a), zi = zeta_inverse(*h, a);
      inv.expect(is_identity(compose(zh, zi).matrix) && is_identity(compose(zi, zh).matrix), h->name() + " at " + a.key());
    }
    z.expect(zeta(*gf, a) == compose(zeta(g, fa), g(zeta(f, a))), a.key());
    x.expect(xi(*gf, a) == compose(xi(g, fa), g(xi(f, a))), a.key());
  }
  inv.record(report, "duality.zeta_inverse", "ζ_X ζ⁻¹_X = id and ζ⁻¹_X ζ_X = id", scope);
  z.record(report, "duality.zeta_composite", "ζ^{GF}_X = ζ^G_{F(X)} G(ζ^F_X)", scope);
  x.record(report, "duality.xi_composite", "ξ^{GF}_X = ξ^G_{F(X)} G(ξ^F_X)", scope);
  return report;
}

Report is_pivotal_functor(const Functor& f, const GeneratorSet& gen, const ObjectFamily& xi_family) {
  Report report;
  const std::string anchor = "𝔭_{F(X)} = ξ_X ∘ F(𝔭_X)";
  if (!f.source().has_pivot() || !f.target().has_pivot()) {
    report.add("functor.pivotal", anchor, Status::unavailable, "pivot");
    return report;
  }
  Tally t;
  for (const Object& x : gen.objects) {
    const Morphism k = xi_family ? xi_family(x) : xi(f, x);
    t.expect(compose(k, f(f.source().pivot(x))) == f.target().pivot(f(x)), x.key());
  }
  t.record(report, "functor.pivotal", anchor, "generator words of length ≤ " + std::to_string(gen.depth));
  return report;
}

Report is_braided_functor(const Functor& f, const GeneratorSet& gen, std::size_t max_length) {
  Report report;
  const std::string anchor = "F₂(Y,X) c_{F(X),F(Y)} = F(c_{X,Y}) F₂(X,Y)";
  if (!f.source().has_braiding() || !f.target().has_braiding()) {
    report.add("functor.braided", anchor, Status::unavailable, "R-matrix");
    return report;
  }
  Tally t;
  for (const auto& [x, y] : gen.pairs(max_length)) {
    const Morphism lhs = compose(f.mu(y, x), f.target().braiding(f(x), f(y)));
    const Morphism rhs = compose(f(f.source().braiding(x, y)), f.mu(x, y));
    t.expect(lhs == rhs, tuple({&x, &y}));
  }
  t.record(report, "functor.braided", anchor, words_scope("pairs", max_length));
  return report;
}

Report is_cobraided_functor(const Functor& f, const GeneratorSet& gen, std::size_t max_length) {
  Report report;
  const std::string anchor = "c_{F(X),F(Y)} F²(X,Y) = F²(Y,X) F(c_{X,Y})";
  if (!f.source().has_braiding() || !f.target().has_braiding()) {
    report.add("functor.cobraided", anchor, Status::unavailable, "R-matrix");
    return report;
  }
  Tally t;
  for (const auto& [x, y] : gen.pairs(max_length)) {
    const Morphism lhs = compose(f.target().braiding(f(x), f(y)), f.delta(x, y));
    const Morphism rhs = compose(f.delta(y, x), f(f.source().braiding(x, y)));
    t.expect(lhs == rhs, tuple({&x, &y}));
  }
  t.record(report, "functor.cobraided", anchor, words_scope("pairs", max_length));
  return report;
}

Report is_ribbon_functor(const Functor& f, const GeneratorSet& gen) {
  Report report;
  const std::string anchor = "F(θ_X) = θ_{F(X)}";
  for (const RepCategory* c : {&f.source(), &f.target()})
    if (!c->has_braiding() || !c->has_pivot()) {
      report.add("functor.ribbon", anchor, Status::unavailable, c->has_pivot() ? "R-matrix" : "pivot");
      return report;
    }
  const bool elements = f.source().has_ribbon() && f.target().has_ribbon();
  auto twist = [&](const RepCategory& c, const Object& x) { return elements ? c.ribbon_twist(x) : c.twist_left(x); };
  Tally t;
  for (const Object& x : gen.objects) t.expect(f(twist(f.source(), x)) == twist(f.target(), f(x)), x.key());
  t.record(report, "functor.ribbon", anchor, "generator words of length ≤ " + std::to_string(gen.depth));
  report.checks().back().scalars["twist"] = elements ? "ribbon element" : "pivot and braiding";
  return report;
}

Report check_ribbon_category(const RepCategory& cat, const GeneratorSet& gen) {
  Report report;
  if (!cat.has_braiding() || !cat.has_pivot()) {
    report.add("ribbon.twists_agree", "θ^l = θ^r", Status::unavailable, cat.has_pivot() ? "R-matrix" : "pivot");
    return report;
  }
  Tally agree, element;
  for (const Object& x : gen.objects) {
    const Morphism l = cat.twist_left(x);
    agree.expect(l == cat.twist_right(x), x.key());
    if (cat.has_ribbon()) element.expect(l == cat.ribbon_twist(x), x.key());
  }
  const std::string scope = "generator words of length ≤ " + std::to_string(gen.depth);
  agree.record(report, "ribbon.twists_agree", "θ^l = θ^r", scope);
  if (cat.has_ribbon())
    element.record(report, "ribbon.element_matches", "θ^l = action of the inverse ribbon element", scope);
  else
    report.add("ribbon.element_matches", "θ^l = action of the inverse ribbon element", Status::unavailable,
               "ribbon element");
  return report;
}

Report check_natural_transformation(const Functor& f, const Functor& g, const ObjectFamily& alpha,
                                    const GeneratorSet& gen, std::size_t hom_length, bool monoidal,
                                    std::size_t max_length) {
  Report report;
  Tally components, natural, mon;
  const auto objects = gen.up_to(hom_length);
  for (const Object& x : gen.objects) {
    const Morphism a = alpha(x);
    components.expect(a.source == f(x) && a.target == g(x) && g.target().is_intertwiner(a), x.key());
  }
  for (const Object& x : objects)
    for (const Object& y : objects) {
      const auto basis = f.source().intertwiner_basis(x, y);
      if (basis.empty()) continue;
      const Morphism ax = alpha(x), ay = alpha(y);
      for (const Morphism& h : basis) natural.expect(compose(g(h), ax) == compose(ay, f(h)), tuple({&x, &y}));
    }
  components.record(report, "natural.components", "α_X : F(X) → G(X) is a morphism", "generator words");
  natural.record(report, "natural.naturality", "G(f) α_X = α_Y F(f)",
                 "objects of length ≤ " + std::to_string(hom_length) + ", intertwiner bases");
  if (monoidal) {
    for (const auto& [x, y] : gen.pairs(max_length)) {
      const Morphism lhs = compose(g.mu(x, y), tensor(alpha(x), alpha(y)));
      mon.expect(lhs == compose(alpha(tensor(x, y)), f.mu(x, y)), tuple({&x, &y}));
    }
    mon.expect(compose(alpha(Object()), f.mu0()) == g.mu0(), "unit object");
    mon.record(report, "natural.monoidal", "G₂(α⊗α) = α F₂ and α_1 F₀ = G₀", words_scope("pairs", max_length));
  }
  return report;
}

FrobeniusAlgebraData push_through_functor(const Functor& f, const FrobeniusAlgebraData& a) {
  const Object& x = a.carrier;
  return {f(x), compose(f(a.m), f.mu(x, x)), compose(f(a.u), f.mu0()), compose(f.delta(x, x), f(a.delta)),
          compose(f.delta0(), f(a.nu))};
}

}  // namespace cohopf
