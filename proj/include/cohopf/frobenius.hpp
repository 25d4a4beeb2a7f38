#pragma once

// Frobenius algebras in Rep(H).

#include <optional>
#include <string>
#include <vector>

#include "cohopf/repcat.hpp"

namespace cohopf {

struct PreconditionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct FrobeniusAlgebraData {
  Object carrier;
  Morphism m;      // A⊗A → A
  Morphism u;      // 1 → A
  Morphism delta;  // A → A⊗A
  Morphism nu;     // A → 1
};

/// Associativity, unitality (left/right), coassociativity, counitality
/// (left/right) and the Frobenius law, plus a check that all maps intertwine.
Report verify_frobenius(const RepCategory& cat, const FrobeniusAlgebraData& a);

/// Associativity and unitality of (m, u) only.
Report verify_algebra(const RepCategory& cat, const Object& carrier, const Morphism& m, const Morphism& u);

struct ClassificationFlags {
  std::optional<Rational> separable;  // β₂ with mΔ = β₂ id
  std::optional<Rational> special;    // β₀ with νu = β₀, only when separable
  std::optional<bool> symmetric;      // absent without a pivot
  std::optional<bool> commutative;    // absent without an R-matrix
  std::optional<bool> framed;         // absent without a ribbon element
};

ClassificationFlags classify(const RepCategory& cat, const FrobeniusAlgebraData& a);

/// Both sides of the defining symmetry identity, as maps A → ∨A.
std::pair<Morphism, Morphism> symmetry_sides(const RepCategory& cat, const FrobeniusAlgebraData& a);
/// Both sides of the alternate criterion, as maps ∨A → A.
std::pair<Morphism, Morphism> alternate_symmetry_sides(const RepCategory& cat, const FrobeniusAlgebraData& a);

/// Evaluates the alternate criterion and records whether it agrees with the
/// verdict of the defining identity.
Report symmetric_alternate_check(const RepCategory& cat, const FrobeniusAlgebraData& a);

/// Δ := (id⊗m)(κ⊗id) where κ is the copairing inverse to ν∘m.
/// Throws RankError when ν∘m is degenerate.
Morphism comultiplication_from_form(const RepCategory& cat, const Object& carrier, const Morphism& m,
                                    const Morphism& nu);

struct FormSearch {
  std::optional<FrobeniusAlgebraData> algebra;
  std::size_t invariant_functionals = 0;  // dim Hom_H(A, 1)
  std::vector<std::vector<Rational>> tried;  // coefficient vectors, in order
  bool exhaustive = false;  // a failure is a proof of nonexistence
  std::string certificate;
};

/// Sweeps Hom_H(A, 1): each basis functional, then combinations with
/// coefficients (k+1)^j for j = 1..dim, stopping at the first nondegenerate
/// pairing. Throws PreconditionError when (m, u) is not an algebra.
FormSearch solve_frobenius_form(const RepCategory& cat, const Object& carrier, const Morphism& m, const Morphism& u);

/// ν ↦ λν, Δ ↦ λ⁻¹Δ.
FrobeniusAlgebraData rescale_form(const FrobeniusAlgebraData& a, const Rational& lambda);
/// Rescales so that mΔ = id when mΔ is a nonzero scalar; otherwise returns a unchanged.
FrobeniusAlgebraData normalize_form(const RepCategory& cat, const FrobeniusAlgebraData& a);

bool operator==(const FrobeniusAlgebraData& a, const FrobeniusAlgebraData& b);

}  // namespace cohopf
