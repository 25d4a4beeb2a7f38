#pragma once

// Exact dense linear algebra over a field scalar (Rational in practice).
//
// Everything here is deterministic: elimination always takes the leftmost
// pivot column and, within it, the topmost nonzero row, so kernel bases and
// right inverses are canonical functions of their input.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Core>

#include "cohopf/rational.hpp"

namespace cohopf {

template <typename Scalar>
using Mat = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vec = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using Matrix = Mat<Rational>;
using Vector = Vec<Rational>;

struct ShapeError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};
struct RankError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct InconsistencyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

inline std::string shape_str(Eigen::Index rows, Eigen::Index cols) {
  return std::to_string(rows) + "x" + std::to_string(cols);
}

template <typename Derived>
bool is_zero(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != Scalar(0)) return false;
  return true;
}

template <typename Derived>
bool is_identity(const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) return false;
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != (i == j ? Scalar(1) : Scalar(0))) return false;
  return true;
}

/// Returns c when m == c * I, nothing otherwise (including non-square m).
template <typename Derived>
std::optional<typename Derived::Scalar> scalar_multiple_of_identity(
    const Eigen::MatrixBase<Derived>& m) {
  using Scalar = typename Derived::Scalar;
  if (m.rows() != m.cols()) return std::nullopt;
  if (m.rows() == 0) return Scalar(1);
  const Scalar c = m(0, 0);
  for (Eigen::Index j = 0; j < m.cols(); ++j)
    for (Eigen::Index i = 0; i < m.rows(); ++i)
      if (m(i, j) != (i == j ? c : Scalar(0))) return std::nullopt;
  return c;
}

/// Exact product a * b. Skips structural zeros of both operands, which
/// dominate the Kronecker-heavy matrices built by the category layer.
template <typename Scalar>
Mat<Scalar> multiply(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (a.cols() != b.rows()) {
    throw ShapeError("multiply: " + shape_str(a.rows(), a.cols()) + " * " +
                     shape_str(b.rows(), b.cols()));
  }
  const Eigen::Index inner = a.cols();
  // Column-compressed view of a.
  std::vector<std::vector<Eigen::Index>> nz(static_cast<std::size_t>(inner));
  for (Eigen::Index k = 0; k < inner; ++k)
    for (Eigen::Index i = 0; i < a.rows(); ++i)
      if (a(i, k) != Scalar(0)) nz[static_cast<std::size_t>(k)].push_back(i);

  Mat<Scalar> c = Mat<Scalar>::Zero(a.rows(), b.cols());
  for (Eigen::Index j = 0; j < b.cols(); ++j) {
    for (Eigen::Index k = 0; k < inner; ++k) {
      const Scalar& bkj = b(k, j);
      if (bkj == Scalar(0)) continue;
      for (Eigen::Index i : nz[static_cast<std::size_t>(k)]) c(i, j) += a(i, k) * bkj;
    }
  }
  return c;
}

/// Product of a chain, evaluated right to left: chain({f, g, h}) = f * g * h.
template <typename Scalar>
Mat<Scalar> multiply(std::initializer_list<Mat<Scalar>> factors) {
  if (factors.size() == 0) throw ShapeError("multiply: empty chain");
  auto it = std::rbegin(factors);
  Mat<Scalar> acc = *it;
  for (++it; it != std::rend(factors); ++it) acc = multiply<Scalar>(*it, acc);
  return acc;
}

/// Kronecker product; block (i, j) of the result is a(i, j) * b.
template <typename Scalar>
Mat<Scalar> kronecker(const Mat<Scalar>& a, const Mat<Scalar>& b) {
  Mat<Scalar> out = Mat<Scalar>::Zero(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      const Scalar& s = a(i, j);
      if (s == Scalar(0)) continue;
      for (Eigen::Index q = 0; q < b.cols(); ++q)
        for (Eigen::Index p = 0; p < b.rows(); ++p)
          if (b(p, q) != Scalar(0)) out(i * b.rows() + p, j * b.cols() + q) = s * b(p, q);
    }
  }
  return out;
}

/// out += c · (a ⊗ b), touching only nonzero entries. `out` may be a block.
template <typename Scalar, typename Derived>
void add_kronecker(Eigen::MatrixBase<Derived>& out, const Scalar& c, const Mat<Scalar>& a, const Mat<Scalar>& b) {
  if (out.rows() != a.rows() * b.rows() || out.cols() != a.cols() * b.cols())
    throw ShapeError("add_kronecker: " + shape_str(out.rows(), out.cols()) + " += " + shape_str(a.rows(), a.cols()) +
                     " ⊗ " + shape_str(b.rows(), b.cols()));
  std::vector<std::pair<Eigen::Index, Eigen::Index>> nz;
  for (Eigen::Index q = 0; q < b.cols(); ++q)
    for (Eigen::Index p = 0; p < b.rows(); ++p)
      if (b(p, q) != Scalar(0)) nz.emplace_back(p, q);
  for (Eigen::Index j = 0; j < a.cols(); ++j)
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (a(i, j) == Scalar(0)) continue;
      const Scalar s = c * a(i, j);
      for (const auto& [p, q] : nz) out(i * b.rows() + p, j * b.cols() + q) += s * b(p, q);
    }
}

template <typename Scalar, typename Derived>
void add_kronecker(Eigen::MatrixBase<Derived>&& out, const Scalar& c, const Mat<Scalar>& a, const Mat<Scalar>& b) {
  add_kronecker(out, c, a, b);
}

/// (I_left ⊗ b ⊗ I_right) * m without forming the Kronecker product.
template <typename Scalar>
Mat<Scalar> apply_middle(Eigen::Index left, const Mat<Scalar>& b, Eigen::Index right,
                         const Mat<Scalar>& m) {
  if (m.rows() != left * b.cols() * right) {
    throw ShapeError("apply_middle: " + std::to_string(left) + " x " + shape_str(b.rows(), b.cols()) +
                     " x " + std::to_string(right) + " applied to " + shape_str(m.rows(), m.cols()));
  }
  std::vector<std::vector<Eigen::Index>> nz(static_cast<std::size_t>(b.cols()));
  for (Eigen::Index k = 0; k < b.cols(); ++k)
    for (Eigen::Index i = 0; i < b.rows(); ++i)
      if (b(i, k) != Scalar(0)) nz[static_cast<std::size_t>(k)].push_back(i);
  Mat<Scalar> out = Mat<Scalar>::Zero(left * b.rows() * right, m.cols());
  for (Eigen::Index c = 0; c < m.cols(); ++c)
    for (Eigen::Index l = 0; l < left; ++l)
      for (Eigen::Index k = 0; k < b.cols(); ++k)
        for (Eigen::Index r = 0; r < right; ++r) {
          const Scalar& x = m((l * b.cols() + k) * right + r, c);
          if (x == Scalar(0)) continue;
          for (Eigen::Index i : nz[static_cast<std::size_t>(k)])
            out((l * b.rows() + i) * right + r, c) += b(i, k) * x;
        }
  return out;
}

template <typename Scalar>
Mat<Scalar> identity(Eigen::Index n) {
  return Mat<Scalar>::Identity(n, n);
}

/// Reduced row echelon form together with its pivot columns.
template <typename Scalar>
struct Echelon {
  Mat<Scalar> reduced;
  std::vector<Eigen::Index> pivots;
};

template <typename Scalar>
Echelon<Scalar> row_reduce(const Mat<Scalar>& a) {
  using RowMajor = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
  RowMajor m = a;
  std::vector<Eigen::Index> pivots;
  Eigen::Index row = 0;
  for (Eigen::Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Eigen::Index sel = -1;
    for (Eigen::Index i = row; i < m.rows(); ++i) {
      if (m(i, col) != Scalar(0)) {
        sel = i;
        break;
      }
    }
    if (sel < 0) continue;
    if (sel != row) m.row(sel).swap(m.row(row));
    const Scalar inv = Scalar(1) / m(row, col);
    std::vector<Eigen::Index> support;
    for (Eigen::Index j = col; j < m.cols(); ++j) {
      if (m(row, j) != Scalar(0)) {
        m(row, j) *= inv;
        support.push_back(j);
      }
    }
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
      if (i == row) continue;
      const Scalar f = m(i, col);
      if (f == Scalar(0)) continue;
      for (Eigen::Index j : support) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return {Mat<Scalar>(m), std::move(pivots)};
}

template <typename Scalar>
Eigen::Index rank(const Mat<Scalar>& a) {
  return static_cast<Eigen::Index>(row_reduce(a).pivots.size());
}

/// Basis of the null space, one vector per free column in increasing order;
/// each basis vector has a 1 in its free column. Empty when a is injective.
template <typename Scalar>
std::vector<Vec<Scalar>> kernel_basis(const Mat<Scalar>& a) {
  const auto ech = row_reduce(a);
  std::vector<bool> is_pivot(static_cast<std::size_t>(a.cols()), false);
  for (auto p : ech.pivots) is_pivot[static_cast<std::size_t>(p)] = true;
  std::vector<Vec<Scalar>> basis;
  for (Eigen::Index f = 0; f < a.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<Scalar> v = Vec<Scalar>::Zero(a.cols());
    v(f) = Scalar(1);
    for (std::size_t r = 0; r < ech.pivots.size(); ++r)
      v(ech.pivots[r]) = -ech.reduced(static_cast<Eigen::Index>(r), f);
    basis.push_back(std::move(v));
  }
  return basis;
}

/// Columns of the result are the kernel basis vectors.
template <typename Scalar>
Mat<Scalar> kernel_matrix(const Mat<Scalar>& a) {
  const auto basis = kernel_basis(a);
  Mat<Scalar> k(a.cols(), static_cast<Eigen::Index>(basis.size()));
  for (std::size_t i = 0; i < basis.size(); ++i) k.col(static_cast<Eigen::Index>(i)) = basis[i];
  return k;
}

template <typename Scalar>
std::optional<Mat<Scalar>> try_inverse(const Mat<Scalar>& a) {
  if (a.rows() != a.cols()) return std::nullopt;
  const Eigen::Index n = a.rows();
  Mat<Scalar> aug(n, 2 * n);
  aug << a, Mat<Scalar>::Identity(n, n);
  auto ech = row_reduce(aug);
  if (static_cast<Eigen::Index>(ech.pivots.size()) < n ||
      (n > 0 && ech.pivots[static_cast<std::size_t>(n - 1)] >= n)) {
    return std::nullopt;
  }
  return Mat<Scalar>(ech.reduced.rightCols(n));
}

template <typename Scalar>
Mat<Scalar> inverse(const Mat<Scalar>& a) {
  auto inv = try_inverse(a);
  if (!inv) throw RankError("inverse: matrix " + shape_str(a.rows(), a.cols()) + " is singular");
  return *inv;
}

/// s with a * s = I_rows, built from the pivot columns of a: rows of s outside
/// the pivot columns are zero. Requires rank(a) == a.rows().
template <typename Scalar>
Mat<Scalar> right_inverse(const Mat<Scalar>& a) {
  const auto ech = row_reduce(a);
  if (static_cast<Eigen::Index>(ech.pivots.size()) != a.rows()) {
    throw RankError("right_inverse: rank " + std::to_string(ech.pivots.size()) + " < rows " +
                    std::to_string(a.rows()));
  }
  Mat<Scalar> square(a.rows(), a.rows());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i)
    square.col(static_cast<Eigen::Index>(i)) = a.col(ech.pivots[i]);
  const Mat<Scalar> inv = inverse(square);
  Mat<Scalar> s = Mat<Scalar>::Zero(a.cols(), a.rows());
  for (std::size_t i = 0; i < ech.pivots.size(); ++i)
    s.row(ech.pivots[i]) = inv.row(static_cast<Eigen::Index>(i));
  return s;
}

/// The unique x with x * e == m for an epimorphism e, verified exactly.
template <typename Scalar>
Mat<Scalar> solve_against_epi(const Mat<Scalar>& m, const Mat<Scalar>& e) {
  if (m.cols() != e.cols()) {
    throw ShapeError("solve_against_epi: m is " + shape_str(m.rows(), m.cols()) + ", e is " +
                     shape_str(e.rows(), e.cols()));
  }
  Mat<Scalar> x = multiply<Scalar>(m, right_inverse(e));
  if (multiply<Scalar>(x, e) != m) {
    throw InconsistencyError("solve_against_epi: m does not factor through e");
  }
  return x;
}

}  // namespace cohopf
