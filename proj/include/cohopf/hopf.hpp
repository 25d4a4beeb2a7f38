#pragma once

// Finite-dimensional Hopf algebras given by structure constants.
//
// Elements of H are dense coordinate vectors in the basis e_0..e_{n-1};
// elements of H^{⊗k} are dense vectors of length n^k with the first tensor
// leg most significant (index i_1 n^{k-1} + ... + i_k).

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cohopf/linalg.hpp"
#include "cohopf/report.hpp"

namespace cohopf {

/// Optional structure (pivot, R-matrix, ribbon element) needed but absent.
struct MissingDataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConstructionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ProductTerm {
  int index;
  Rational coeff;
};

struct CoproductTerm {
  int left;
  int right;
  Rational coeff;
};

/// A module shipped alongside an algebra (catalog seed): one action matrix per basis element.
struct ModuleSpec {
  std::string name;
  std::vector<Matrix> action;
};

struct HopfAlgebraData {
  std::string name;
  int dim = 0;
  std::vector<std::string> basis;
  std::vector<std::vector<ProductTerm>> mul;  // [i * dim + j]: e_i e_j = Σ coeff e_index
  Vector unit;
  std::vector<std::vector<CoproductTerm>> comul;  // [i]: Δ(e_i) = Σ coeff e_left ⊗ e_right
  Vector counit;
  Matrix antipode;  // column i holds S(e_i)
  std::optional<Vector> pivot;
  std::optional<Vector> rmatrix;  // element of H ⊗ H
  std::optional<Vector> ribbon;
  std::vector<ModuleSpec> modules;

  const std::vector<ProductTerm>& product(int i, int j) const {
    return mul[static_cast<std::size_t>(i * dim + j)];
  }
};

using HopfPtr = std::shared_ptr<const HopfAlgebraData>;

/// Builds the sparse structure tables from dense arrays; mul_dense[i][j][k] and
/// comul_dense[i][j][k] follow the file-format conventions.
HopfAlgebraData make_hopf(std::string name, std::vector<std::string> basis,
                          const std::vector<std::vector<std::vector<Rational>>>& mul_dense,
                          Vector unit,
                          const std::vector<std::vector<std::vector<Rational>>>& comul_dense,
                          Vector counit, Matrix antipode);

/// Throws ShapeError when tables disagree with dim.
void validate_shapes(const HopfAlgebraData& h);

// Element arithmetic.
Vector basis_vector(int n, int i);
Vector multiply(const HopfAlgebraData& h, const Vector& x, const Vector& y);
Vector comultiply(const HopfAlgebraData& h, const Vector& x);
Rational counit(const HopfAlgebraData& h, const Vector& x);
Vector antipode(const HopfAlgebraData& h, const Vector& x);
std::optional<Vector> inverse_element(const HopfAlgebraData& h, const Vector& x);
/// Left-multiplication operator x ↦ a x.
Matrix left_multiplication(const HopfAlgebraData& h, const Vector& a);

// H^{⊗k} arithmetic.
Vector tensor(const Vector& x, const Vector& y);
Vector tensor_multiply(const HopfAlgebraData& h, int legs, const Vector& x, const Vector& y);
/// Places the legs of a two-leg element into positions (first, second) of a
/// three-leg element with the unit elsewhere, e.g. R_13 = embed(R, 0, 2).
Vector embed_legs(const HopfAlgebraData& h, const Vector& x, int first, int second);
/// Applies Δ to one leg of a two-leg element, producing a three-leg element.
Vector comultiply_leg(const HopfAlgebraData& h, const Vector& x, int leg);
Vector flip(const HopfAlgebraData& h, const Vector& x);
Vector apply_to_leg(const HopfAlgebraData& h, const Matrix& op, const Vector& x, int leg);

/// Deterministic algebra generating set (greedy over basis order).
std::vector<int> algebra_generators(const HopfAlgebraData& h);

Report verify_hopf_axioms(const HopfAlgebraData& h);
Report verify_pivot(const HopfAlgebraData& h);
Report verify_quasitriangular(const HopfAlgebraData& h);
Report verify_ribbon_element(const HopfAlgebraData& h);

/// Verifies that phi (dim target x dim source) is a Hopf algebra map source → target.
Report verify_hopf_map(const HopfAlgebraData& source, const HopfAlgebraData& target,
                       const Matrix& phi);

HopfAlgebraData dual_hopf(const HopfAlgebraData& h);

/// D(H) = H*^cop ⋈ H on the basis e^a ⊗ e_b (index a * n + b) with
/// (f⊗a)(g⊗b) = f · g(S⁻¹(a₃) − a₁) ⊗ a₂ b and canonical R = Σ (ε⊗e_i) ⊗ (e^i⊗1).
/// A pivot g of H becomes the pivot ε⊗g of the double.
HopfAlgebraData drinfeld_double(const HopfAlgebraData& h);

/// The Hopf embedding H → D(H), h ↦ ε ⊗ h.
Matrix double_inclusion(const HopfAlgebraData& h);

/// Structure-constant equality (names and labels ignored).
bool same_structure(const HopfAlgebraData& a, const HopfAlgebraData& b);

/// Group algebra from a multiplication table: table[i][j] is the index of g_i g_j.
HopfAlgebraData group_algebra(std::string name, std::vector<std::string> labels,
                              const std::vector<std::vector<int>>& table);

/// True when every basis element is grouplike and products of basis elements are basis elements.
bool is_group_algebra(const HopfAlgebraData& h);

}  // namespace cohopf
