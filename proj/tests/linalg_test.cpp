#include "cohopf/linalg.hpp"

#include <gtest/gtest.h>

#include <random>

using cohopf::Matrix;
using cohopf::Rational;
using cohopf::Vector;

namespace {

Matrix mat(std::initializer_list<std::initializer_list<Rational>> rows) {
  Matrix m(static_cast<Eigen::Index>(rows.size()),
           static_cast<Eigen::Index>(rows.begin()->size()));
  Eigen::Index i = 0;
  for (const auto& row : rows) {
    Eigen::Index j = 0;
    for (const auto& x : row) m(i, j++) = x;
    ++i;
  }
  return m;
}

Matrix random_matrix(std::mt19937& rng, Eigen::Index r, Eigen::Index c, int range = 3) {
  std::uniform_int_distribution<int> num(-range, range);
  std::uniform_int_distribution<int> den(1, 3);
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = Rational(num(rng), den(rng));
  return m;
}

// Textbook triple loop, independent of the zero-skipping product.
Matrix naive_product(const Matrix& a, const Matrix& b) {
  Matrix c = Matrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k) c(i, j) += a(i, k) * b(k, j);
  return c;
}

// Entry formula for the Kronecker product.
Matrix naive_kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < out.rows(); ++i)
    for (Eigen::Index j = 0; j < out.cols(); ++j)
      out(i, j) = a(i / b.rows(), j / b.cols()) * b(i % b.rows(), j % b.cols());
  return out;
}

}  // namespace

TEST(Rational, CanonicalForm) {
  EXPECT_EQ(Rational(2, 4).str(), "1/2");
  EXPECT_EQ(Rational(3, -6).str(), "-1/2");
  EXPECT_EQ(Rational::parse("-10/4"), Rational(-5, 2));
  EXPECT_EQ(Rational::parse("7"), Rational(7));
  EXPECT_THROW(Rational::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rational::parse("1.5"), std::invalid_argument);
  EXPECT_THROW(Rational::parse(""), std::invalid_argument);
}

TEST(Rational, PromotesAndDemotes) {
  Rational big(1);
  for (int i = 0; i < 5; ++i) big *= Rational(1LL << 40);
  EXPECT_FALSE(big.is_small());
  Rational back = big;
  for (int i = 0; i < 5; ++i) back /= Rational(1LL << 40);
  EXPECT_TRUE(back.is_small());
  EXPECT_EQ(back, Rational(1));
  EXPECT_EQ((big - big), Rational(0));
  EXPECT_TRUE(Rational(1, 3) < Rational(1, 2));
  EXPECT_EQ(Rational(1, 3) + Rational(1, 6), Rational(1, 2));
}

TEST(Multiply, SpecExamples) {
  const Matrix m = mat({{1, 2}, {3, 4}});
  EXPECT_EQ(cohopf::multiply(cohopf::identity<Rational>(2), m), m);
  EXPECT_EQ(cohopf::multiply(m, mat({{0, 1}, {1, 0}})), mat({{2, 1}, {4, 3}}));
  EXPECT_EQ(cohopf::multiply(mat({{Rational(2, 3)}}), mat({{Rational(3, 4)}})),
            mat({{Rational(1, 2)}}));
  EXPECT_THROW(cohopf::multiply(m, Matrix(3, 1)), cohopf::ShapeError);
}

TEST(Multiply, AgreesWithNaiveAndIsAssociative) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 3, 4), b = random_matrix(rng, 4, 2), c = random_matrix(rng, 2, 5);
    a(0, 1) = 0;
    b(2, 0) = 0;
    EXPECT_EQ(cohopf::multiply(a, b), naive_product(a, b));
    EXPECT_EQ(cohopf::multiply(cohopf::multiply(a, b), c),
              cohopf::multiply(a, cohopf::multiply(b, c)));
  }
}

TEST(Kronecker, SpecExamples) {
  using cohopf::identity;
  EXPECT_EQ(cohopf::kronecker(identity<Rational>(2), identity<Rational>(3)), identity<Rational>(6));
  const Matrix swap = mat({{0, 1}, {1, 0}});
  const Matrix expected = mat({{0, 0, 1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, 1, 0, 0}});
  EXPECT_EQ(cohopf::kronecker(swap, identity<Rational>(2)), expected);
}

TEST(Kronecker, InterchangeLawAgainstEntryFormula) {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    Matrix a = random_matrix(rng, 2, 2), b = random_matrix(rng, 2, 2);
    Matrix c = random_matrix(rng, 2, 2), d = random_matrix(rng, 2, 2);
    EXPECT_EQ(cohopf::kronecker(a, b), naive_kron(a, b));
    EXPECT_EQ(naive_product(naive_kron(a, b), naive_kron(c, d)),
              naive_kron(naive_product(a, c), naive_product(b, d)));
    EXPECT_EQ(cohopf::multiply(cohopf::kronecker(a, b), cohopf::kronecker(c, d)),
              cohopf::kronecker(cohopf::multiply(a, c), cohopf::multiply(b, d)));
  }
}

TEST(KernelBasis, SpecExamples) {
  EXPECT_TRUE(cohopf::kernel_basis(cohopf::identity<Rational>(3)).empty());
  EXPECT_EQ(cohopf::kernel_basis(Matrix(Matrix::Zero(2, 2))).size(), 2u);
  const auto k = cohopf::kernel_basis(mat({{1, 1}}));
  ASSERT_EQ(k.size(), 1u);
  EXPECT_EQ(k[0](0), Rational(-1));
  EXPECT_EQ(k[0](1), Rational(1));
}

TEST(KernelBasis, AnnihilatedAndIndependent) {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 30; ++trial) {
    // rank-deficient by construction: 4x6 = (4x2)(2x6)
    Matrix a = cohopf::multiply(random_matrix(rng, 4, 2), random_matrix(rng, 2, 6));
    const Matrix k = cohopf::kernel_matrix(a);
    EXPECT_TRUE(cohopf::is_zero(cohopf::multiply(a, k)));
    EXPECT_EQ(cohopf::rank(k), k.cols());
    EXPECT_EQ(k.cols() + cohopf::rank(a), a.cols());
  }
}

TEST(RightInverse, SpecExamples) {
  using cohopf::identity;
  EXPECT_EQ(cohopf::right_inverse(identity<Rational>(2)), identity<Rational>(2));
  EXPECT_EQ(cohopf::right_inverse(mat({{1, 0, 0}, {0, 1, 0}})), mat({{1, 0}, {0, 1}, {0, 0}}));
  EXPECT_THROW(cohopf::right_inverse(mat({{1, 2}, {2, 4}})), cohopf::RankError);
}

TEST(RightInverse, RandomFullRowRank) {
  std::mt19937 rng(5);
  int tested = 0;
  while (tested < 25) {
    Matrix a = random_matrix(rng, 2, 4);
    if (cohopf::rank(a) != 2) continue;
    EXPECT_TRUE(cohopf::is_identity(cohopf::multiply(a, cohopf::right_inverse(a))));
    ++tested;
  }
}

TEST(SolveAgainstEpi, SpecExamples) {
  const Matrix e = mat({{1, 2, 0}, {0, 1, 1}});
  EXPECT_TRUE(cohopf::is_identity(cohopf::solve_against_epi(e, e)));
  const Matrix m = mat({{1, 2}, {3, 4}, {5, 6}});
  EXPECT_EQ(cohopf::solve_against_epi(m, cohopf::identity<Rational>(2)), m);
  EXPECT_THROW(cohopf::solve_against_epi(mat({{1, 0, 0}}), e), cohopf::InconsistencyError);
  EXPECT_THROW(cohopf::solve_against_epi(mat({{1, 0}}), mat({{1, 0}, {2, 0}})), cohopf::RankError);
}

TEST(SolveAgainstEpi, RoundTripRecoversFactor) {
  std::mt19937 rng(9);
  int tested = 0;
  while (tested < 25) {
    Matrix e = random_matrix(rng, 3, 5);
    if (cohopf::rank(e) != 3) continue;
    Matrix x0 = random_matrix(rng, 2, 3);
    EXPECT_EQ(cohopf::solve_against_epi(cohopf::multiply(x0, e), e), x0);
    ++tested;
  }
}

TEST(Inverse, RoundTrip) {
  const Matrix a = mat({{2, 1}, {1, 1}});
  EXPECT_TRUE(cohopf::is_identity(cohopf::multiply(a, cohopf::inverse(a))));
  EXPECT_FALSE(cohopf::try_inverse(Matrix(mat({{1, 2}, {2, 4}}))).has_value());
  EXPECT_EQ(cohopf::scalar_multiple_of_identity(Matrix(Rational(3) * cohopf::identity<Rational>(2))),
            Rational(3));
}

TEST(ApplyMiddle, AgreesWithKronecker) {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix b = random_matrix(rng, 3, 2);
    const Matrix m = random_matrix(rng, 2 * 2 * 4, 3);
    const Matrix full = naive_kron(naive_kron(cohopf::identity<Rational>(2), b), cohopf::identity<Rational>(4));
    EXPECT_EQ(cohopf::apply_middle<Rational>(2, b, 4, m), naive_product(full, m));
  }
}
