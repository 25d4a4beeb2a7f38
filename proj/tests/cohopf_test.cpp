#include "cohopf/cohopf.hpp"

#include <gtest/gtest.h>

#include "extension.hpp"
#include "fixtures.hpp"

using namespace cohopf;
using namespace cohopf::testing;

namespace {

FrobeniusAlgebraData solved_form(const Adjunction& adj, bool normalize = true) {
  const auto [m, u] = unit_algebra(adj);
  const RepCategory& cat = adj.right().target();
  const FormSearch s = solve_frobenius_form(cat, adj.right()(Object()), m, u);
  if (!s.algebra) throw std::runtime_error("no Frobenius form: " + s.certificate);
  return normalize ? normalize_form(cat, *s.algebra) : *s.algebra;
}

ConstructionPtr construct(const Extension& e, bool normalize = true) {
  return construct_frobenius_on_right_adjoint(e.adj, solved_form(*e.adj, normalize));
}

Status status_of(const Report& r, const std::string& id) {
  const Check* c = r.find(id);
  if (!c) throw std::runtime_error("missing check " + id);
  return c->status;
}

std::string scalar(const Report& r, const std::string& id, const std::string& key) {
  const Check* c = r.find(id);
  if (!c) throw std::runtime_error("missing check " + id);
  auto it = c->scalars.find(key);
  return it == c->scalars.end() ? std::string() : it->second;
}

std::string failures(const Report& r) {
  std::string s;
  for (const auto& c : r.checks())
    if (c.status == Status::fail) s += c.id + " at " + c.witness + "; ";
  return s;
}

struct Identity {
  CategoryPtr cat;
  AdjunctionPtr adj;
  GeneratorSet gen;

  explicit Identity(const std::string& file, const std::vector<std::string>& names) {
    HopfPtr h = share(catalog(file));
    cat = std::make_shared<const RepCategory>(h);
    adj = identity_adjunction(cat);
    std::vector<Object> s;
    for (const auto& n : names) s.push_back(seed(h, n));
    gen = make_generator_set(s, 2);
  }
};

}  // namespace

TEST(IdentityAdjunction, EverySuiteIsTrivial) {
  const Identity id("c2.json", {"sign"});
  const Object one;
  const auto ops = cohopf_operators(*id.adj, id.gen.objects.back(), id.gen.objects.back());
  EXPECT_TRUE(is_identity(ops.hl.matrix));
  EXPECT_TRUE(is_identity(ops.hr.matrix));
  EXPECT_TRUE(check_condition_main(*id.adj, id.gen, id.gen, 2).all_passed());

  const FrobeniusAlgebraData a{one, identity(one), identity(one), identity(one), identity(one)};
  const auto c = construct_frobenius_on_right_adjoint(id.adj, a);
  for (const Object& x : id.gen.objects) {
    EXPECT_TRUE(is_identity(c->eta_l(x).matrix));
    EXPECT_TRUE(is_identity(c->epsilon_l(x).matrix));
    EXPECT_TRUE(is_identity(c->delta(x, x).matrix));
  }
  EXPECT_TRUE(check_construction(*c, id.gen, id.gen, 3).all_passed());
  EXPECT_TRUE(verify_operator_relations(*id.adj, id.gen, 3).all_passed());
  const Report sep = theorem_separable_equivalence(*c, id.gen, 2);
  EXPECT_TRUE(sep.all_passed()) << failures(sep);
  EXPECT_EQ(scalar(sep, "theorem.separable", "functor_beta2"), "1");
  EXPECT_EQ(status_of(sep, "theorem.separable_normalized"), Status::pass);
  const HalfBraidingData hb = half_braiding_on_R1(*id.adj, id.gen);
  for (const auto& [key, s] : hb.family) EXPECT_TRUE(is_identity(s.matrix)) << key;
  const Report piv = theorem_pivotal_equivalence(*c, id.gen, id.gen, 2);
  EXPECT_TRUE(piv.all_passed()) << failures(piv);
  EXPECT_EQ(scalar(piv, "theorem.pivotal", "functor_side"), "true");
}

TEST(IdentityAdjunction, BraidedAndRibbonOnTheSuperCategory) {
  const Identity id("c2_super.json", {"sign"});
  const Object one;
  const FrobeniusAlgebraData a{one, identity(one), identity(one), identity(one), identity(one)};
  const auto c = construct_frobenius_on_right_adjoint(id.adj, a);
  const Report br = adjoint_braiding_check(*c, id.gen, id.gen, 2);
  EXPECT_TRUE(br.all_passed()) << failures(br);
  const Report rb = theorem_ribbon_equivalence(*c, id.gen, id.gen, 2);
  EXPECT_TRUE(rb.all_passed()) << failures(rb);
  EXPECT_EQ(status_of(rb, "theorem.ribbon"), Status::pass);
}

TEST(ConditionMain, DoublesAreCoHopfExactAndFaithful) {
  for (const Extension& e : {Extension::double_of("c2.json", {"sign"}), Extension::double_of("s3.json", {"sign", "std"})}) {
    const Report r = check_condition_main(*e.adj, e.gen_a(2), e.gen_b(1), 3);
    EXPECT_TRUE(r.all_passed()) << failures(r);
    for (const Object& x : e.gen_a(2).objects) EXPECT_EQ(rank(e.adj->counit(x).matrix), x.dim());
  }
  // h^l_{1,R(1)} on D(C2) is 4×4 and invertible.
  const Extension e = Extension::double_of("c2.json", {"sign"});
  const Object r1 = e.r()(Object());
  const Morphism h = e.adj->hl(Object(), r1);
  ASSERT_EQ(h.matrix.rows(), 4);
  EXPECT_EQ(rank(h.matrix), 4);
}

TEST(ConditionMain, UnfaithfulCoinductionIsRejected) {
  // Coinduction along k → C2 (the unit) loses nothing; along C2 → C2 it is the identity.
  // A non-faithful R is simulated by a counit that kills a summand.
  const Extension e = Extension::double_of("c2.json", {"sign"});
  class Killed final : public Adjunction {
   public:
    explicit Killed(AdjunctionPtr b) : Adjunction(b->left_ptr(), b->right_ptr()), b_(std::move(b)) {}
    Morphism unit(const Object& x) const override { return b_->unit(x); }
    Morphism counit(const Object& y) const override {
      Morphism f = b_->counit(y);
      f.matrix.setZero();
      return f;
    }

   private:
    AdjunctionPtr b_;
  };
  auto killed = std::make_shared<const Killed>(e.adj);
  const Report r = check_condition_main(*killed, e.gen_a(1), e.gen_b(1), 2);
  EXPECT_EQ(status_of(r, "condition.faithful"), Status::fail);
  const auto c = construct_frobenius_on_right_adjoint(killed, solved_form(*e.adj));
  EXPECT_THROW(c->eta_l(e.seeds_a.front()), PreconditionError);
}

TEST(Construction, DoubleOfC2PassesEveryEquation) {
  const Extension e = Extension::double_of("c2.json", {"triv", "sign"});
  const auto c = construct(e);
  const Report r = check_construction(*c, e.gen_a(2), e.gen_b(1), 3);
  EXPECT_TRUE(r.all_passed()) << failures(r);
  EXPECT_EQ(status_of(r, "frobenius_functor.left"), Status::pass);
  EXPECT_EQ(status_of(r, "frobenius_functor.right"), Status::pass);
  EXPECT_EQ(status_of(r, "construction.push_through_unit"), Status::pass);
  // Oracle: R⁰ R₀ = ν u and R₂ R² = β₂ id with β₂ from the algebra.
  const FrobeniusAlgebraData& a = c->unit_algebra();
  EXPECT_EQ(compose(c->functor()->delta0(), c->functor()->mu0()), compose(a.nu, a.u));
  const auto beta2 = classify(e.r().target(), a).separable;
  ASSERT_TRUE(beta2);
  for (const Object& x : e.gen_a(1).objects)
    for (const Object& y : e.gen_a(1).objects) {
      const Matrix prod = compose(e.r().mu(x, y), c->delta(x, y)).matrix;
      EXPECT_EQ(prod, Matrix(*beta2 * cohopf::identity<Rational>(prod.rows()))) << x.key() << ", " << y.key();
    }
}

TEST(Construction, DoubleOfS3PassesEveryEquation) {
  const Extension e = Extension::double_of("s3.json", {"sign", "std"});
  const auto c = construct(e);
  const Report r = check_construction(*c, e.gen_a(1), e.gen_b(1), 2);
  EXPECT_TRUE(r.all_passed()) << failures(r);
}

TEST(Construction, RejectsFormsNotExtendingKellysAlgebra) {
  const Extension e = Extension::double_of("c2.json", {"sign"});
  FrobeniusAlgebraData a = solved_form(*e.adj);
  FrobeniusAlgebraData wrong_unit = a;
  wrong_unit.u.matrix *= Rational(2);
  EXPECT_THROW(construct_frobenius_on_right_adjoint(e.adj, wrong_unit), PreconditionError);
  FrobeniusAlgebraData broken = a;
  broken.delta.matrix *= Rational(3);
  EXPECT_THROW(construct_frobenius_on_right_adjoint(e.adj, broken), PreconditionError);
}

TEST(OperatorRelations, HoldOnEveryCatalogExtension) {
  for (const Extension& e : {Extension::double_of("c2.json", {"triv", "sign"}),
                             Extension::double_of("s3.json", {"sign", "std"}), Extension::diagonal()}) {
    const Report r = verify_operator_relations(*e.adj, e.gen_a(1), 3);
    EXPECT_TRUE(r.all_passed()) << failures(r);
  }
}

TEST(OperatorRelations, ScaledOperatorIsCaught) {
  const Extension e = Extension::double_of("c2.json", {"sign"});
  const ScaledOperators scaled(e.adj);
  const Report r = verify_operator_relations(scaled, e.gen_a(1), 3);
  EXPECT_EQ(status_of(r, "operators.hl_r2"), Status::pass);  // h^l on both sides
  EXPECT_EQ(status_of(r, "operators.counit_hl"), Status::fail);
  EXPECT_EQ(status_of(r, "operators.hl_counit"), Status::fail);
  EXPECT_FALSE(r.find("operators.hl_counit")->witness.empty());
}

TEST(SeparableTheorem, NormalizedFormGivesSeparableFunctor) {
  const Extension e = Extension::double_of("s3.json", {"sign", "std"});
  const auto c = construct(e);
  const Report r = theorem_separable_equivalence(*c, e.gen_a(1), 2);
  EXPECT_TRUE(r.all_passed()) << failures(r);
  EXPECT_EQ(scalar(r, "theorem.separable", "algebra_side"), "true");
  EXPECT_EQ(scalar(r, "theorem.separable", "functor_side"), "true");
  EXPECT_EQ(status_of(r, "theorem.separable_normalized"), Status::pass);
}

TEST(SeparableTheorem, ScalingTheFormMovesBothSidesTogether) {
  const Extension e = Extension::double_of("c2.json", {"sign"});
  const FrobeniusAlgebraData a = solved_form(*e.adj);
  const Report base = theorem_separable_equivalence(*construct_frobenius_on_right_adjoint(e.adj, a), e.gen_a(1), 2);
  const Rational beta2 = Rational::parse(scalar(base, "theorem.separable", "algebra_beta2"));
  const Rational beta0 = Rational::parse(scalar(base, "theorem.special", "algebra_beta0"));
  const Rational lambda(3);
  const auto c = construct_frobenius_on_right_adjoint(e.adj, rescale_form(a, lambda));
  const Report r = theorem_separable_equivalence(*c, e.gen_a(1), 2);
  EXPECT_TRUE(r.ok()) << failures(r);
  // ν ↦ λν forces Δ ↦ Δ/λ: β₂ ↦ β₂/λ and β₀ ↦ λβ₀ on both sides.
  EXPECT_EQ(scalar(r, "theorem.separable", "functor_beta2"), (beta2 / lambda).str());
  EXPECT_EQ(scalar(r, "theorem.special", "functor_beta0"), (beta0 * lambda).str());
  EXPECT_NE(status_of(r, "theorem.separable_normalized"), Status::fail);
  if (beta2 == Rational(1)) EXPECT_EQ(status_of(r, "theorem.separable_normalized"), Status::skipped);
}

TEST(PivotalTheorem, GroupDoublesAreSymmetricAndPivotal) {
  for (const Extension& e : {Extension::double_of("c2.json", {"sign"}), Extension::double_of("s3.json", {"sign", "std"})}) {
    const auto c = construct(e);
    const Report r = theorem_pivotal_equivalence(*c, e.gen_a(2), e.gen_b(1), 2);
    EXPECT_TRUE(r.all_passed()) << failures(r);
    EXPECT_EQ(scalar(r, "theorem.pivotal", "algebra_side"), "true");
    EXPECT_EQ(scalar(r, "theorem.pivotal", "functor_side"), "true");
    EXPECT_EQ(status_of(r, "hl_unit.natural.monoidal"), Status::pass);
  }
}

TEST(PivotalTheorem, TensorEndofunctorAndKappa) {
  const Extension e = Extension::double_of("c2.json", {"sign"});
  const auto c = construct(e);
  const auto gen = e.gen_b(2);
  const HalfBraidingData hb = half_braiding_on_R1(*e.adj, gen);
  for (const auto& [key, s] : hb.family) EXPECT_EQ(rank(s.matrix), s.matrix.rows()) << key;
  const Report r = check_tensor_endofunctor(e.adj->left().source_ptr(), c->unit_algebra(), hb, gen, 2);
  EXPECT_TRUE(r.all_passed()) << failures(r);
  EXPECT_EQ(scalar(r, "tensor.kappa_pivot", "kappa_is_pivot"), "true");
  // κ on the unit object is the identity.
  const Object one;
  const FrobeniusAlgebraData trivial{one, identity(one), identity(one), identity(one), identity(one)};
  EXPECT_TRUE(is_identity(kappa(*e.rep_b, trivial).matrix));
}

TEST(PivotalTheorem, BrokenPivotIsDetectedOnTheFunctorSide) {
  const Extension e = Extension::double_of("c2.json", {"sign"});
  const auto c = construct(e);
  const Report base = is_pivotal_functor(*c->functor(), e.gen_a(1));
  EXPECT_TRUE(base.all_passed());
  const ObjectFamily doubled = [&](const Object& x) {
    Morphism k = xi(*c->functor(), x);
    k.matrix *= Rational(2);
    return k;
  };
  EXPECT_EQ(status_of(is_pivotal_functor(*c->functor(), e.gen_a(1), doubled), "functor.pivotal"), Status::fail);
}

TEST(BraidedAdjunction, DiagonalIsBraidedCobraidedAndRibbon) {
  const Extension e = Extension::diagonal();
  const auto c = construct(e);
  const auto ga = e.gen_a(2);
  const auto gb = e.gen_b(1);
  const Report br = adjoint_braiding_check(*c, ga, gb, 2);
  EXPECT_TRUE(br.all_passed()) << failures(br);
  EXPECT_EQ(status_of(br, "lemma.right_adjoint_braided"), Status::pass);
  EXPECT_EQ(status_of(br, "lemma.left_adjoint_cobraided"), Status::pass);
  const Report rb = theorem_ribbon_equivalence(*c, ga, gb, 2);
  EXPECT_TRUE(rb.all_passed()) << failures(rb);
  EXPECT_EQ(scalar(rb, "theorem.ribbon", "algebra_side"), scalar(rb, "theorem.ribbon", "functor_side"));
  EXPECT_EQ(scalar(rb, "theorem.ribbon_cross_check", "cobraided"), "true");
}

namespace {

Extension diagonal_into(const std::string& fault_map) {
  const MapFile map = load_map(catalog_path("faults/" + fault_map));
  HopfAlgebraData a = catalog("c2_super.json");
  HopfAlgebraData b = load_algebra(map.target);
  return Extension(std::move(a), std::move(b), map.map, {"sign"});
}

}  // namespace

TEST(BraidedAdjunction, MismatchedRMatrixIsAPreconditionFailure) {
  const Extension e = diagonal_into("c2_diagonal_trivial_r.json");
  const auto c = construct(e);
  const Report br = adjoint_braiding_check(*c, e.gen_a(1), e.gen_b(1), 2);
  EXPECT_EQ(status_of(br, "precondition.u_braided"), Status::skipped);
  EXPECT_EQ(scalar(br, "precondition.u_braided", "holds"), "false");
  EXPECT_FALSE(br.find("precondition.u_braided")->witness.empty());
  EXPECT_EQ(status_of(br, "lemma.right_adjoint_braided"), Status::skipped);
  const Report rb = theorem_ribbon_equivalence(*c, e.gen_a(1), e.gen_b(1), 2);
  EXPECT_EQ(status_of(rb, "precondition.u_braided"), Status::skipped);
  EXPECT_EQ(status_of(rb, "theorem.ribbon"), Status::skipped);
}

TEST(BraidedAdjunction, BrokenTwistIsPinpointed) {
  const Extension e = diagonal_into("c2_diagonal_twist_broken.json");
  const auto c = construct(e);
  const Report rb = theorem_ribbon_equivalence(*c, e.gen_a(1), e.gen_b(1), 2);
  EXPECT_EQ(status_of(rb, "precondition.u_braided"), Status::pass);
  EXPECT_EQ(scalar(rb, "precondition.target_ribbon.element_matches", "holds"), "false");
  EXPECT_EQ(status_of(rb, "precondition.target_ribbon.element_matches"), Status::skipped);
  EXPECT_EQ(status_of(rb, "R.functor.ribbon"), Status::fail);
  EXPECT_EQ(status_of(rb, "theorem.ribbon"), Status::skipped);
  EXPECT_EQ(scalar(rb, "theorem.ribbon_cross_check", "pivotal"), "true");
  EXPECT_EQ(scalar(rb, "theorem.ribbon_cross_check", "cobraided"), "true");
  EXPECT_EQ(scalar(rb, "theorem.ribbon_cross_check", "ribbon"), "false");
  EXPECT_EQ(rb.find("theorem.ribbon_cross_check")->witness, "pivotal and cobraided but twist not preserved");
}

TEST(DualityTransforms, CompositionLawsForCatalogPairs) {
  const Extension e = Extension::double_of("c2.json", {"triv", "sign"});
  const auto c = construct(e);
  const Report ur = check_duality_transforms(e.u(), *c->functor(), e.gen_a(1));
  EXPECT_TRUE(ur.all_passed()) << failures(ur);
  const Report ru = check_duality_transforms(*c->functor(), e.u(), e.gen_b(1));
  EXPECT_TRUE(ru.all_passed()) << failures(ru);
  // Identity functor: ζ = id.
  const FunctorPtr id = identity_functor(e.rep_a);
  for (const Object& x : e.gen_a(1).objects) EXPECT_TRUE(is_identity(zeta(*id, x).matrix)) << x.key();
}

TEST(TensorEndofunctor, KappaDetectsNonSymmetricForms) {
  for (const Rational t : {Rational(1), Rational(2)}) {
    const MatrixAlgebra ma(t);
    ASSERT_TRUE(verify_frobenius(*ma.cat, ma.a).all_passed());
    const bool symmetric = t == Rational(1);
    EXPECT_EQ(*classify(*ma.cat, ma.a).symmetric, symmetric);
    const Report r = check_tensor_endofunctor(ma.cat, ma.a, ma.hb, ma.gen, 2);
    EXPECT_TRUE(r.all_passed()) << failures(r);
    EXPECT_EQ(scalar(r, "tensor.kappa_pivot", "kappa_is_pivot"), symmetric ? "true" : "false");
    EXPECT_EQ(scalar(r, "tensor.pivotal_iff_symmetric", "pivotal"), symmetric ? "true" : "false");
    EXPECT_EQ(kappa(*ma.cat, ma.a) == ma.cat->pivot(ma.a.carrier), symmetric);
  }
}
