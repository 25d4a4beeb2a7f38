#include "cohopf/functors.hpp"

#include <gtest/gtest.h>

#include "extension.hpp"

using namespace cohopf;
using namespace cohopf::testing;

namespace {

// Embedding R(V) → Hom(B, V) (column-major vec), ψ ↦ (e_j ↦ ψ(e_j)).
Matrix embedding(const Extension& e, const Object& v) {
  const HopfAlgebraData& b = e.rep_b->algebra();
  const int dv = v.dim(), m = static_cast<int>(free_basis_info(*e.adj)->rank);
  // ψ(e_j) = ε_V(e_j · ψ), computed through the counit and the B-action.
  const Object rv = e.r()(v);
  const Morphism eps = e.adj->counit(v);
  Matrix out(static_cast<Eigen::Index>(dv) * b.dim, m * dv);
  for (int j = 0; j < b.dim; ++j)
    out.block(j * dv, 0, dv, m * dv) = multiply(eps.matrix, e.rep_b->action(rv, j));
  return out;
}

}  // namespace

TEST(Coinduction, FreeBasisAndRankOnDoubleOfC2) {
  const Extension e = Extension::double_of("c2.json", {"triv", "sign"});
  const auto info = free_basis_info(*e.adj);
  ASSERT_TRUE(info);
  EXPECT_EQ(info->rank, 2);
  EXPECT_EQ(e.r()(Object()).dim(), 2);
  EXPECT_FALSE(free_basis_info(*identity_adjunction(e.rep_a)));
}

TEST(Coinduction, MatchesKernelBasisOracle) {
  for (const Extension& e : {Extension::double_of("c2.json", {"sign"}), Extension::double_of("s3.json", {"sign", "std"}),
                             Extension::diagonal()}) {
    const HopfAlgebraData& b = e.rep_b->algebra();
    std::vector<Object> objects{Object()};
    for (const auto& s : e.seeds_a) objects.push_back(s);
    objects.push_back(tensor(e.seeds_a.back(), left_dual(e.seeds_a.front())));
    for (const Object& v : objects) {
      const Matrix kernel = coinduced_kernel_basis(*e.rep_a, b, e.phi, v);
      const Object rv = e.r()(v);
      ASSERT_EQ(kernel.cols(), rv.dim()) << v.key();
      EXPECT_FALSE(module_violation(*e.rep_b->module(rv))) << v.key();
      // The image of R(V) in Hom(B, V) is the kernel, and right translation matches the action.
      const Matrix j = embedding(e, v);
      EXPECT_EQ(rank(j), rv.dim());
      Matrix both(j.rows(), j.cols() + kernel.cols());
      both << j, kernel;
      EXPECT_EQ(rank(both), kernel.cols()) << v.key();
      const Matrix id_v = cohopf::identity<Rational>(v.dim());
      for (int d = 0; d < b.dim; ++d) {
        Matrix right(b.dim, b.dim);
        for (int x = 0; x < b.dim; ++x) right.col(x) = multiply(b, basis_vector(b.dim, x), basis_vector(b.dim, d));
        EXPECT_EQ(multiply(kronecker<Rational>(right.transpose(), id_v), j), multiply(j, e.rep_b->action(rv, d)))
            << v.key() << " e_" << d;
      }
    }
  }
}

TEST(Coinduction, ClosedFormsMatchLiteralComposites) {
  for (const Extension& e : {Extension::double_of("c2.json", {"sign"}), Extension::double_of("s3.json", {"sign", "std"}),
                             Extension::diagonal()}) {
    const auto gen_a = e.gen_a(1);
    const auto gen_b = e.gen_b(1);
    EXPECT_EQ(e.r().mu0(), kelly_mu0(*e.adj));
    for (const Object& x : gen_a.objects)
      for (const Object& y : gen_a.objects) EXPECT_EQ(e.r().mu(x, y), kelly_mu(*e.adj, x, y)) << x.key() << ", " << y.key();
    for (const Object& x : gen_a.objects)
      for (const Object& y : gen_b.objects) {
        const Morphism hl = e.adj->hl(x, y);
        EXPECT_EQ(hl, hl_composite(*e.adj, x, y)) << x.key() << ", " << y.key();
        const auto inv = e.adj->hl_inverse(x, y);
        ASSERT_TRUE(inv);
        EXPECT_TRUE(is_identity(compose(*inv, hl).matrix));
        EXPECT_TRUE(is_identity(compose(hl, *inv).matrix));
      }
    for (const Object& x : gen_b.objects)
      for (const Object& y : gen_a.objects) {
        const Morphism hr = e.adj->hr(x, y);
        EXPECT_EQ(hr, hr_composite(*e.adj, x, y)) << x.key() << ", " << y.key();
        const auto inv = e.adj->hr_inverse(x, y);
        ASSERT_TRUE(inv);
        EXPECT_TRUE(is_identity(compose(*inv, hr).matrix));
        EXPECT_TRUE(is_identity(compose(hr, *inv).matrix));
      }
  }
}

TEST(Coinduction, AdjunctionAxioms) {
  const Extension e = Extension::double_of("c2.json", {"triv", "sign"});
  EXPECT_TRUE(check_snakes(*e.adj, e.gen_b(2), e.gen_a(2)).all_passed());
  const Report m = check_adjunction_monoidal(*e.adj, e.gen_b(2), e.gen_a(2), 2);
  EXPECT_TRUE(m.all_passed()) << m.checks().front().witness;
  EXPECT_TRUE(check_functoriality(e.r(), e.gen_a(1), 1).all_passed());
  const Report rm = check_monoidal(e.r(), e.gen_a(2), 3);
  EXPECT_TRUE(rm.all_passed());
  EXPECT_NE(rm.find("monoidal.associativity")->scope.find("instances"), std::string::npos);
  EXPECT_THROW(e.r().delta(Object(), Object()), MissingStructureError);
}

TEST(Restriction, StrictMonoidalAndStrictOnDuals) {
  const Extension e = Extension::double_of("s3.json", {"sign", "std"});
  const auto gen = e.gen_b(1);
  EXPECT_TRUE(check_functoriality(e.u(), gen, 1).all_passed());
  EXPECT_TRUE(check_monoidal(e.u(), gen, 2).all_passed());
  EXPECT_TRUE(check_comonoidal(e.u(), gen, 2).all_passed());
  for (const Object& x : gen.objects) {
    const Object dx = left_dual(x);
    EXPECT_EQ(e.u()(dx), left_dual(e.u()(x)));
    for (int i : e.rep_a->generators()) EXPECT_EQ(e.rep_a->action(e.u()(dx), i), e.rep_a->action(left_dual(e.u()(x)), i));
    EXPECT_TRUE(is_identity(zeta(e.u(), x).matrix)) << x.key();
    EXPECT_TRUE(is_identity(xi(e.u(), x).matrix)) << x.key();
  }
  const auto f = check_frobenius_functor_equations(e.u(), gen, 2);
  EXPECT_TRUE(f.report.all_passed());
  EXPECT_EQ(f.beta2, Rational(1));
  EXPECT_EQ(f.beta0, Rational(1));
  EXPECT_TRUE(is_pivotal_functor(e.u(), gen).all_passed());
}

TEST(Restriction, RejectsNonHopfMapsAndNonFreeExtensions) {
  auto c2 = std::make_shared<const RepCategory>(share(catalog("c2.json")));
  auto s3 = std::make_shared<const RepCategory>(share(catalog("s3.json")));
  auto k = std::make_shared<const RepCategory>(share(catalog("trivial.json")));
  Matrix bad = Matrix::Zero(6, 2);
  bad(0, 0) = 1;
  bad(4, 1) = 1;  // x ↦ r has order 3
  EXPECT_THROW(restriction_functor(s3, c2, bad), ConstructionError);
  Matrix counit(1, 2);
  counit << 1, 1;
  EXPECT_NO_THROW(restriction_functor(k, c2, counit));
  EXPECT_THROW(coinduction_adjunction(k, c2, counit), UnsupportedExtensionError);
}

TEST(Functors, BraidedRestrictionIsCobraided) {
  const Extension e = Extension::diagonal();
  const auto gen = e.gen_b(2);
  const Report braided = is_braided_functor(e.u(), gen, 2);
  const Report cobraided = is_cobraided_functor(e.u(), gen, 2);
  EXPECT_TRUE(braided.all_passed());
  EXPECT_EQ(braided.all_passed(), cobraided.all_passed());
  EXPECT_TRUE(is_ribbon_functor(e.u(), gen).all_passed());

  auto trivial_r = std::make_shared<const RepCategory>(share(catalog("faults/c2xc2_trivial_r.json")));
  const Extension plain = Extension::diagonal();
  const auto u2 = restriction_functor(trivial_r, plain.rep_a, plain.phi);
  std::vector<Object> seeds;
  for (const auto& m : trivial_r->algebra().modules) seeds.push_back(seed(trivial_r->algebra_ptr(), m.name));
  const auto gen2 = make_generator_set(seeds, 2);
  const Report b2 = is_braided_functor(*u2, gen2, 2);
  EXPECT_EQ(b2.status_of("functor.braided"), Status::fail);
  EXPECT_EQ(is_cobraided_functor(*u2, gen2, 2).status_of("functor.cobraided"), Status::fail);
}

TEST(Functors, FaultInjectionIsDetected) {
  const Extension e = Extension::double_of("c2.json", {"sign"});
  const auto gen = e.gen_b(2);
  StructureOverrides doubled;
  doubled.mu = [&](const Object& x, const Object& y) { return scaled(2, e.u().mu(x, y)); };
  const auto bad = with_structure(e.adj->left_ptr(), doubled);
  const Report r = check_monoidal(*bad, gen, 3);
  EXPECT_EQ(r.status_of("monoidal.unitality"), Status::fail);
  EXPECT_FALSE(r.find("monoidal.unitality")->witness.empty());
  const auto f = check_frobenius_functor_equations(*bad, gen, 3);
  EXPECT_EQ(f.beta2, Rational(2));
  EXPECT_EQ(f.report.status_of("monoidal.unitality"), Status::fail);

  const ObjectFamily twice = [&](const Object& x) { return scaled(2, xi(e.u(), x)); };
  const Report p = is_pivotal_functor(e.u(), gen, twice);
  EXPECT_EQ(p.status_of("functor.pivotal"), Status::fail);

  StructureOverrides broken_unit;
  broken_unit.mu0 = [&] { return scaled(3, e.r().mu0()); };
  const auto r3 = with_structure(e.adj->right_ptr(), broken_unit);
  EXPECT_NE(r3->mu0(), kelly_mu0(*e.adj));
  EXPECT_EQ(check_monoidal(*r3, e.gen_a(1), 2).status_of("monoidal.unitality"), Status::fail);
}

TEST(Functors, MemoisationIsTransparent) {
  const Extension e = Extension::double_of("s3.json", {"std"});
  const Object v = tensor(e.seeds_a[0], left_dual(e.seeds_a[0]));
  const Object cold = e.r()(v);
  const Morphism mu_cold = e.r().mu(v, e.seeds_a[0]);
  const Object warm = e.r()(v);
  EXPECT_EQ(cold, warm);
  EXPECT_EQ(e.rep_b->module(cold), e.rep_b->module(warm));
  e.r().clear_cache();
  EXPECT_EQ(e.r().mu(v, e.seeds_a[0]).matrix, mu_cold.matrix);
}

TEST(Functors, CompositeAndIdentity) {
  const Extension e = Extension::double_of("c2.json", {"sign"});
  const auto ur = composite_functor(e.adj->left_ptr(), e.adj->right_ptr());
  EXPECT_EQ(ur->name(), "UR");
  const auto gen = e.gen_a(2);
  EXPECT_TRUE(check_monoidal(*ur, gen, 3).all_passed());
  // ε is a monoidal natural transformation UR ⇒ Id.
  const auto id = identity_functor(e.rep_a);
  const Report n = check_natural_transformation(*ur, *id, [&](const Object& x) { return e.adj->counit(x); }, gen, 1,
                                                true, 2);
  EXPECT_TRUE(n.all_passed());
  const Report bad = check_natural_transformation(
      *ur, *id, [&](const Object& x) { return scaled(x.is_unit() ? 1 : 2, e.adj->counit(x)); }, gen, 1, true, 2);
  EXPECT_EQ(bad.status_of("natural.monoidal"), Status::fail);
  EXPECT_EQ(bad.status_of("natural.naturality"), Status::pass);
}

TEST(Functors, ZetaInvertsOnIdentity) {
  auto cat = std::make_shared<const RepCategory>(share(catalog("sweedler.json")));
  const auto id = identity_functor(cat);
  std::vector<Object> seeds;
  for (const auto& m : cat->algebra().modules) seeds.push_back(seed(cat->algebra_ptr(), m.name));
  for (const Object& x : make_generator_set(seeds, 2).objects) {
    EXPECT_TRUE(is_identity(compose(zeta_inverse(*id, x), zeta(*id, x)).matrix));
    EXPECT_TRUE(is_identity(xi(*id, x).matrix));
  }
}
