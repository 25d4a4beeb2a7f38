#pragma once

// CoHopf operators of a monoidal adjunction U ⊣ R, the Frobenius monoidal
// structure on R induced by a Frobenius form on R(1), and the equivalence
// suites relating properties of R(1) to properties of R.
//
// Throughout, gen_r generates the source of R (the small side, Rep(A)) and
// gen_u the source of U (Rep(B)).

#include <memory>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cohopf/frobenius.hpp"
#include "cohopf/functors.hpp"

namespace cohopf {

/// An identity the mathematics guarantees came out false: a bug, not a finding.
struct TheoremViolation : std::logic_error {
  using std::logic_error::logic_error;
};

struct CohopfOperators {
  Morphism hl;  // h^l_{X,Y}: R(X)⊗Y → R(X⊗U(Y))
  Morphism hr;  // h^r_{Y,X}: Y⊗R(X) → R(U(Y)⊗X)
  std::optional<Morphism> hl_inverse, hr_inverse;
};

/// Both operators at X (source of R) and Y (source of U). An inverse is kept
/// only after both products with the operator are checked to be identities.
CohopfOperators cohopf_operators(const Adjunction& adj, const Object& x, const Object& y);

/// (X, Y) with X from gen_r, Y from gen_u and total length ≤ max_length.
std::vector<std::pair<Object, Object>> mixed_pairs(const GeneratorSet& gen_r, const GeneratorSet& gen_u,
                                                   std::size_t max_length);

/// (a) operator invertibility on mixed pairs, (b) exactness (automatic, with a
/// kernel-dimension spot check), (c) faithfulness via surjectivity of ε^r_X.
Report check_condition_main(const Adjunction& adj, const GeneratorSet& gen_r, const GeneratorSet& gen_u,
                            std::size_t max_length);

/// Kelly's algebra structure (R₂(1,1), R₀) on R(1).
std::pair<Morphism, Morphism> unit_algebra(const Adjunction& adj);

/// The Frobenius monoidal structure on R built from a Frobenius form on R(1):
/// ε^l_Y = (ν⊗id)(h^l_{1,Y})⁻¹, η^l_X solved from its defining equation,
/// R²(X,Y) = (h^l_{X,R(Y)})⁻¹ R(id_X⊗η^l_Y) and R⁰ = ν. Memoized per object.
class FrobeniusConstruction {
 public:
  /// Throws PreconditionError unless `on_unit` is Frobenius with Kelly's (m, u).
  FrobeniusConstruction(AdjunctionPtr adj, FrobeniusAlgebraData on_unit);

  const Adjunction& adjunction() const;
  const FrobeniusAlgebraData& unit_algebra() const;

  /// η^l_X: X → UR(X). Throws PreconditionError when ε^r_X is not epic and
  /// TheoremViolation when the defining equation has no solution.
  Morphism eta_l(const Object& x) const;
  /// ε^l_Y: RU(Y) → Y.
  Morphism epsilon_l(const Object& y) const;
  /// R²(X,Y): R(X⊗Y) → R(X)⊗R(Y).
  Morphism delta(const Object& x, const Object& y) const;

  /// Both sides of η^l_X ∘ ε^r_X = UR(ε^r_X) ε^r_{URUR(X)} U(h^l_{1,RUR(X)}) U(id⊗h^l_{1,R(X)}) U(Δu⊗id).
  std::pair<Morphism, Morphism> eta_l_equation(const Object& x) const;

  /// R with Kelly's (R₂, R₀) and the constructed (R², R⁰).
  const FunctorPtr& functor() const;
  /// R ⊣ U with unit η^l and counit ε^l.
  const AdjunctionPtr& left_adjunction() const;

  /// Drops memoized η^l, ε^l, R² and the caches of every functor involved.
  void clear_cache() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
  FunctorPtr functor_;
  AdjunctionPtr left_;
};

using ConstructionPtr = std::shared_ptr<const FrobeniusConstruction>;

ConstructionPtr construct_frobenius_on_right_adjoint(AdjunctionPtr adj, const FrobeniusAlgebraData& on_unit);

/// η^l equation, snakes of R ⊣ U (letters of gen_u on the U side), both
/// Frobenius functor equations and the push-through of 1 reproducing the
/// Frobenius structure on R(1).
Report check_construction(const FrobeniusConstruction& c, const GeneratorSet& gen_r, const GeneratorSet& gen_u,
                          std::size_t max_length);

/// The three operator identities relating h^l, R₂, ε^r and U₂ on triples of gen_r.
Report verify_operator_relations(const Adjunction& adj, const GeneratorSet& gen_r, std::size_t max_length);

/// Separability and speciality of R(1) against those of R, both ways, with β scalars.
Report theorem_separable_equivalence(const FrobeniusConstruction& c, const GeneratorSet& gen_r,
                                     std::size_t max_length);

/// σ_X = (h^l_{1,X})⁻¹ h^r_{X,1} on every object X of gen_u and on ∨X, ∨∨X.
HalfBraidingData half_braiding_on_R1(const Adjunction& adj, const GeneratorSet& gen_u);

/// κ_A = (νm⊗id)(id⊗ev_A⊗id⊗id)(id⊗id⊗Δu⊗id)(id⊗coev_{∨A}): A → ∨∨A.
Morphism kappa(const RepCategory& cat, const FrobeniusAlgebraData& a);

/// A⊗− as a Frobenius monoidal functor: functor equations on gen, ξ = κ_A⊗id
/// on the letters of gen, and κ_A = 𝔭_A exactly when A is symmetric.
Report check_tensor_endofunctor(CategoryPtr cat, const FrobeniusAlgebraData& a, const HalfBraidingData& hb,
                                const GeneratorSet& gen, std::size_t max_length);

/// R(1) symmetric ⟺ R pivotal, plus h^l_{1,−} as a monoidal natural
/// isomorphism R(1)⊗− ⇒ RU.
Report theorem_pivotal_equivalence(const FrobeniusConstruction& c, const GeneratorSet& gen_r,
                                   const GeneratorSet& gen_u, std::size_t max_length);

/// R braided (Kelly structure) and cobraided (constructed structure), given U braided.
Report adjoint_braiding_check(const FrobeniusConstruction& c, const GeneratorSet& gen_r, const GeneratorSet& gen_u,
                              std::size_t max_length);

/// R(1) symmetric ⟺ R ribbon, cross-checked against "R pivotal and cobraided".
Report theorem_ribbon_equivalence(const FrobeniusConstruction& c, const GeneratorSet& gen_r,
                                  const GeneratorSet& gen_u, std::size_t max_length);

}  // namespace cohopf
