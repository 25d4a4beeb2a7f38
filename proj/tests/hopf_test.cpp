#include "cohopf/hopf.hpp"

#include <gtest/gtest.h>

#include "cohopf/io.hpp"
#include "test_support.hpp"

using namespace cohopf;
using cohopf::testing::catalog;

namespace {

Vector vec(std::initializer_list<Rational> xs) {
  Vector v(static_cast<Eigen::Index>(xs.size()));
  Eigen::Index i = 0;
  for (const auto& x : xs) v(i++) = x;
  return v;
}

// Left regular representation read straight off the structure constants.
Matrix regular(const HopfAlgebraData& h, int i) {
  Matrix m = Matrix::Zero(h.dim, h.dim);
  for (int j = 0; j < h.dim; ++j)
    for (const auto& t : h.product(i, j)) m(t.index, j) += t.coeff;
  return m;
}

// Image of a two-leg element in End(H⊗H) under the regular representation.
Matrix regular2(const HopfAlgebraData& h, const Vector& x) {
  const int n = h.dim;
  Matrix out = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (!x(a * n + b).is_zero()) out += x(a * n + b) * kronecker(regular(h, a), regular(h, b));
  return out;
}

}  // namespace

TEST(HopfAxioms, TrivialAlgebraPasses) {
  const auto k = catalog("trivial.json");
  EXPECT_EQ(k.dim, 1);
  EXPECT_TRUE(verify_hopf_axioms(k).all_passed());
}

TEST(HopfAxioms, GroupAlgebraC2ByHand) {
  const auto h = catalog("c2.json");
  ASSERT_EQ(h.dim, 2);
  const Vector one = vec({1, 0}), x = vec({0, 1});
  EXPECT_EQ(multiply(h, x, x), one);
  EXPECT_EQ(multiply(h, one, x), x);
  EXPECT_EQ(comultiply(h, x), vec({0, 0, 0, 1}));
  EXPECT_EQ(comultiply(h, one), vec({1, 0, 0, 0}));
  EXPECT_EQ(counit(h, x), Rational(1));
  EXPECT_EQ(antipode(h, x), x);
  EXPECT_EQ(multiply(h, antipode(h, x), x), counit(h, x) * one);
  EXPECT_EQ(comultiply(h, multiply(h, x, x)), tensor_multiply(h, 2, comultiply(h, x), comultiply(h, x)));
  const Report r = verify_hopf_axioms(h);
  EXPECT_TRUE(r.all_passed());
  EXPECT_NE(r.find("pivot.implements_square_of_antipode"), nullptr);
}

TEST(HopfAxioms, CorruptedComultiplicationFailsCounitality) {
  // x ↦ x⊗1 is still multiplicative (x² = 1 ↦ 1⊗1), so the violated axiom is counitality.
  const auto h = catalog("faults/c2_bad_comul.json");
  const Report r = verify_hopf_axioms(h);
  EXPECT_EQ(r.status_of("hopf.counital"), Status::fail);
  EXPECT_EQ(r.find("hopf.counital")->witness, "(x)");
  EXPECT_EQ(r.status_of("hopf.comul_algebra_map"), Status::pass);
  EXPECT_EQ(r.status_of("hopf.associative"), Status::pass);
}

TEST(HopfAxioms, NonMultiplicativeComultiplicationIsNotAnAlgebraMap) {
  // Δ(x) = x⊗x + 1⊗1 - 1⊗x is counital but Δ(x)Δ(x) ≠ Δ(1).
  auto h = catalog("c2.json");
  h.comul[1] = {{1, 1, 1}, {0, 0, 1}, {0, 1, -1}};
  const Report r = verify_hopf_axioms(h);
  EXPECT_EQ(r.status_of("hopf.comul_algebra_map"), Status::fail);
  EXPECT_EQ(r.find("hopf.comul_algebra_map")->witness, "(x, x)");
}

TEST(HopfAxioms, CorruptedAntipodeFails) {
  const Report r = verify_hopf_axioms(catalog("faults/c2_bad_antipode.json"));
  EXPECT_EQ(r.status_of("hopf.antipode"), Status::fail);
  EXPECT_EQ(r.find("hopf.antipode")->witness, "(x)");
}

TEST(HopfAxioms, CatalogAlgebrasPass) {
  for (const char* f : {"c2.json", "c2_super.json", "c2xc2.json", "s3.json", "sweedler.json"}) {
    SCOPED_TRACE(f);
    EXPECT_TRUE(verify_hopf_axioms(catalog(f)).all_passed());
  }
}

TEST(HopfAxioms, MalformedTablesThrow) {
  auto h = catalog("c2.json");
  h.counit = vec({1});
  EXPECT_THROW(verify_hopf_axioms(h), ShapeError);
}

TEST(Dual, GroupAlgebraDualIsFunctionAlgebra) {
  const auto d = dual_hopf(catalog("c2.json"));
  ASSERT_TRUE(verify_hopf_axioms(d).all_passed());
  const Vector d1 = vec({1, 0}), dx = vec({0, 1});
  // δ_g δ_h = [g = h] δ_g, unit = Σ δ_g.
  EXPECT_EQ(multiply(d, d1, d1), d1);
  EXPECT_EQ(multiply(d, dx, dx), dx);
  EXPECT_EQ(multiply(d, d1, dx), vec({0, 0}));
  EXPECT_EQ(d.unit, vec({1, 1}));
  // Δ(δ_1) = δ_1⊗δ_1 + δ_x⊗δ_x.
  EXPECT_EQ(comultiply(d, d1), vec({1, 0, 0, 1}));
}

TEST(Dual, IsAnInvolution) {
  for (const char* f : {"c2.json", "s3.json", "sweedler.json"}) {
    const auto h = catalog(f);
    const auto d = dual_hopf(h);
    EXPECT_EQ(d.dim, h.dim);
    EXPECT_TRUE(verify_hopf_axioms(d).all_passed()) << f;
    EXPECT_TRUE(same_structure(dual_hopf(d), h)) << f;
  }
}

TEST(Double, OfTrivialIsTrivial) {
  const auto k = catalog("trivial.json");
  const auto d = drinfeld_double(k);
  EXPECT_TRUE(same_structure(d, k));
}

TEST(Double, OfC2) {
  const auto h = catalog("c2.json");
  const auto d = drinfeld_double(h);
  EXPECT_EQ(d.dim, 4);
  EXPECT_TRUE(verify_hopf_axioms(d).all_passed());
  EXPECT_TRUE(verify_quasitriangular(d).all_passed());
  EXPECT_TRUE(verify_hopf_map(h, d, double_inclusion(h)).all_passed());
}

TEST(Double, QuantumYangBaxterInRegularRepresentation) {
  const auto d = drinfeld_double(catalog("c2.json"));
  const int n = d.dim;
  const Matrix r = regular2(d, *d.rmatrix);
  const Matrix id = identity<Rational>(n);
  const Matrix r12 = kronecker(r, id), r23 = kronecker(id, r);
  // R₁₃ = (id⊗P)R₁₂(id⊗P) with P the flip of the last two factors.
  Matrix p = Matrix::Zero(n * n, n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) p(b * n + a, a * n + b) = 1;
  const Matrix p23 = kronecker(id, p);
  const Matrix r13 = multiply({p23, r12, p23});
  EXPECT_EQ(multiply({r12, r13, r23}), multiply({r23, r13, r12}));
  EXPECT_FALSE(is_identity(r));
}

TEST(Double, OfS3AndSweedler) {
  for (const char* f : {"s3.json", "sweedler.json"}) {
    SCOPED_TRACE(f);
    const auto h = catalog(f);
    const auto d = drinfeld_double(h);
    EXPECT_EQ(d.dim, h.dim * h.dim);
    EXPECT_TRUE(verify_hopf_axioms(d).all_passed());
    EXPECT_TRUE(verify_quasitriangular(d).all_passed());
    EXPECT_TRUE(verify_hopf_map(h, d, double_inclusion(h)).all_passed());
    ASSERT_TRUE(d.pivot.has_value());
  }
}

TEST(Quasitriangular, TrivialRMatrixOnCocommutative) {
  auto h = catalog("s3.json");
  h.rmatrix = tensor(h.unit, h.unit);
  EXPECT_TRUE(verify_quasitriangular(h).all_passed());
  h.rmatrix.reset();
  EXPECT_THROW(verify_quasitriangular(h), MissingDataError);
}

TEST(Quasitriangular, SuperRMatrixOnC2) {
  const auto h = catalog("c2_super.json");
  EXPECT_EQ(*h.rmatrix, vec({Rational(1, 2), Rational(1, 2), Rational(1, 2), Rational(-1, 2)}));
  EXPECT_TRUE(verify_quasitriangular(h).all_passed());
  EXPECT_TRUE(verify_ribbon_element(h).all_passed());
}

TEST(Quasitriangular, NonSolutionFails) {
  auto h = catalog("c2.json");
  h.rmatrix = vec({1, 1, 0, 0});  // 1⊗1 + 1⊗x is not invertible
  const Report r = verify_quasitriangular(h);
  EXPECT_EQ(r.status_of("qt.invertible"), Status::fail);
}

TEST(Ribbon, TrivialAndAlternate) {
  auto h = catalog("c2.json");
  h.rmatrix = tensor(h.unit, h.unit);
  h.ribbon = h.unit;
  EXPECT_TRUE(verify_ribbon_element(h).all_passed());
  h.ribbon = vec({0, 1});
  EXPECT_TRUE(verify_ribbon_element(h).all_passed());
  h.ribbon = vec({2, 0});
  EXPECT_EQ(verify_ribbon_element(h).status_of("ribbon.counit"), Status::fail);
}

TEST(HopfMap, DiagonalEmbedding) {
  const auto b = catalog("c2_super.json");
  const auto a = catalog("c2xc2.json");
  const MapFile m = load_map(cohopf::testing::catalog_path("c2_diagonal.json"));
  EXPECT_TRUE(verify_hopf_map(b, a, m.map).all_passed());
  Matrix bad = m.map;
  bad(3, 1) = 0;
  bad(1, 1) = 1;
  bad(3, 1) = 1;
  EXPECT_EQ(verify_hopf_map(b, a, bad).status_of("map.multiplicative"), Status::fail);
}

TEST(Generators, SpanTheAlgebra) {
  for (const char* f : {"c2.json", "s3.json", "sweedler.json"}) {
    const auto h = catalog(f);
    for (const auto& alg : {h, drinfeld_double(h)}) {
      const auto gens = algebra_generators(alg);
      // Oracle: breadth-first closure of {1} under right multiplication by generators.
      std::vector<Vector> frontier{alg.unit};
      Matrix span = Matrix(alg.unit.transpose());
      while (!frontier.empty()) {
        std::vector<Vector> next;
        for (const auto& w : frontier)
          for (int g : gens) {
            const Vector v = multiply(alg, w, basis_vector(alg.dim, g));
            Matrix s2(span.rows() + 1, alg.dim);
            s2 << span, v.transpose();
            if (rank(s2) > rank(span)) {
              span = s2;
              next.push_back(v);
            }
          }
        frontier = next;
      }
      EXPECT_EQ(rank(span), alg.dim) << alg.name;
    }
  }
}

TEST(GroupAlgebra, Detection) {
  EXPECT_TRUE(is_group_algebra(catalog("s3.json")));
  EXPECT_FALSE(is_group_algebra(catalog("sweedler.json")));
  EXPECT_FALSE(is_group_algebra(drinfeld_double(catalog("c2.json"))));
}

TEST(Io, RoundTrip) {
  for (const char* f : {"c2_super.json", "s3.json", "sweedler.json"}) {
    const auto h = catalog(f);
    const auto back = parse_algebra(write_algebra(h));
    EXPECT_TRUE(same_structure(h, back));
    EXPECT_EQ(h.rmatrix.has_value(), back.rmatrix.has_value());
    if (h.rmatrix) EXPECT_EQ(*h.rmatrix, *back.rmatrix);
    ASSERT_EQ(h.modules.size(), back.modules.size());
    for (std::size_t i = 0; i < h.modules.size(); ++i) EXPECT_EQ(h.modules[i].action, back.modules[i].action);
    EXPECT_EQ(write_algebra(back), write_algebra(h));
  }
}

TEST(Io, MalformedInput) {
  EXPECT_THROW(parse_algebra("{\"name\": \"x\", \"dim\": 1"), ParseError);
  EXPECT_THROW(parse_algebra("{\"name\": \"x\", \"dim\": 1, \"basis\": [\"1\"], \"mul\": [[0,0,3,\"1\"]]}"),
               ParseError);
  EXPECT_THROW(parse_algebra("{\"name\": \"x\", \"dim\": 1, \"basis\": [\"1\"], \"mul\": [[0,0,0,\"1/0\"]]}"),
               ParseError);
}
