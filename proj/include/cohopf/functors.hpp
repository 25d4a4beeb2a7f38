#pragma once

// Functors between representation categories, adjunctions, and the checkers
// for monoidal, Frobenius, pivotal, braided and ribbon functors.

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohopf/frobenius.hpp"
#include "cohopf/repcat.hpp"

namespace cohopf {

using CategoryPtr = std::shared_ptr<const RepCategory>;

struct MissingStructureError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct UnsupportedExtensionError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FunctorKind { identity, restriction, coinduction, tensor_by, composite, structured };

class Functor {
 public:
  Functor(FunctorKind kind, std::string name, CategoryPtr source, CategoryPtr target);
  virtual ~Functor() = default;
  Functor(const Functor&) = delete;
  Functor& operator=(const Functor&) = delete;

  FunctorKind kind() const { return kind_; }
  const std::string& name() const { return name_; }
  const RepCategory& source() const { return *source_; }
  const RepCategory& target() const { return *target_; }
  const CategoryPtr& source_ptr() const { return source_; }
  const CategoryPtr& target_ptr() const { return target_; }

  Object operator()(const Object& x) const;
  Morphism operator()(const Morphism& f) const;

  virtual bool has_monoidal() const { return false; }
  virtual bool has_comonoidal() const { return false; }
  Morphism mu(const Object& x, const Object& y) const;     // F₂(X,Y): F(X)⊗F(Y) → F(X⊗Y)
  Morphism mu0() const;                                    // F₀: 1 → F(1)
  Morphism delta(const Object& x, const Object& y) const;  // F²(X,Y): F(X⊗Y) → F(X)⊗F(Y)
  Morphism delta0() const;                                 // F⁰: F(1) → 1

  /// Drops memoized objects and structure maps.
  void clear_cache() const;

 protected:
  virtual Object map_object(const Object& x) const = 0;
  virtual Matrix map_matrix(const Morphism& f) const = 0;
  virtual Morphism compute_mu(const Object& x, const Object& y) const;
  virtual Morphism compute_mu0() const;
  virtual Morphism compute_delta(const Object& x, const Object& y) const;
  virtual Morphism compute_delta0() const;

 private:
  FunctorKind kind_;
  std::string name_;
  CategoryPtr source_, target_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, Object> objects_;
  mutable std::map<std::string, Morphism> mu_, delta_;
};

using FunctorPtr = std::shared_ptr<const Functor>;

FunctorPtr identity_functor(CategoryPtr cat);

/// Restriction along a Hopf map φ: A → B (phi is dim B × dim A), from Rep(B)
/// to Rep(A). Acts letterwise on words, so it is strict monoidal and strict on
/// duals. Throws ConstructionError when φ fails the Hopf-map checks.
FunctorPtr restriction_functor(CategoryPtr source_b, CategoryPtr target_a, const Matrix& phi, std::string name = "U");

/// G ∘ F with the composite (co)monoidal structure.
FunctorPtr composite_functor(FunctorPtr g, FunctorPtr f);

struct StructureOverrides {
  std::function<Morphism(const Object&, const Object&)> mu;
  std::function<Morphism()> mu0;
  std::function<Morphism(const Object&, const Object&)> delta;
  std::function<Morphism()> delta0;
};

/// The same functor with some structure maps replaced (used to attach a
/// constructed comonoidal structure, and for fault injection).
FunctorPtr with_structure(FunctorPtr base, StructureOverrides overrides);

/// A⊗− with F₂ = (m⊗id⊗id)(id⊗σ_X⊗id), F² = (id⊗σ_X⁻¹⊗id)(Δ⊗id⊗id), F₀ = u, F⁰ = ν.
FunctorPtr tensor_functor(CategoryPtr cat, const FrobeniusAlgebraData& a, const HalfBraidingData& sigma);

/// U ⊣ R with unit η_X: X → RU(X) (X in the source of U) and counit
/// ε_Y: UR(Y) → Y (Y in the source of R).
class Adjunction {
 public:
  Adjunction(FunctorPtr left, FunctorPtr right) : left_(std::move(left)), right_(std::move(right)) {}
  virtual ~Adjunction() = default;

  const Functor& left() const { return *left_; }
  const Functor& right() const { return *right_; }
  const FunctorPtr& left_ptr() const { return left_; }
  const FunctorPtr& right_ptr() const { return right_; }

  virtual Morphism unit(const Object& x) const = 0;
  virtual Morphism counit(const Object& y) const = 0;

  /// h^l_{X,Y}: R(X)⊗Y → R(X⊗U(Y)) (X in the source of R, Y in the source of U).
  virtual Morphism hl(const Object& x, const Object& y) const;
  /// h^r_{X,Y}: X⊗R(Y) → R(U(X)⊗Y).
  virtual Morphism hr(const Object& x, const Object& y) const;
  virtual std::optional<Morphism> hl_inverse(const Object& x, const Object& y) const;
  virtual std::optional<Morphism> hr_inverse(const Object& x, const Object& y) const;

  /// Drops memoized data of both functors (and of the adjunction itself).
  virtual void clear_cache() const {
    left_->clear_cache();
    right_->clear_cache();
  }

 private:
  FunctorPtr left_, right_;
};

using AdjunctionPtr = std::shared_ptr<const Adjunction>;

/// Id ⊣ Id.
AdjunctionPtr identity_adjunction(CategoryPtr cat);

/// Restriction ⊣ coinduction along φ: A → B. R(V) = Hom_A(B, V) with B acting
/// by right translation, realised on a greedily chosen free A-basis b_0..b_{m-1}
/// of B (ψ ↦ (ψ(b_k))_k). R carries Kelly's monoidal structure.
/// Throws UnsupportedExtensionError when B is not free over φ(A).
AdjunctionPtr coinduction_adjunction(CategoryPtr rep_b, CategoryPtr rep_a, const Matrix& phi);

/// Summary of the free basis used by a coinduction adjunction.
struct FreeBasisInfo {
  std::vector<int> generators;  // basis indices of B
  int rank = 0;                 // m = dim B / dim A
};
std::optional<FreeBasisInfo> free_basis_info(const Adjunction& adj);

/// R(V) computed independently as the kernel of the intertwining constraints
/// on Hom(B, V) (column-major vec of dim V × dim B matrices), as a basis matrix.
Matrix coinduced_kernel_basis(const RepCategory& rep_a, const HopfAlgebraData& b, const Matrix& phi, const Object& v);

/// Kelly's R₂ and R₀ evaluated literally from U², U⁰, η and ε.
Morphism kelly_mu(const Adjunction& adj, const Object& y, const Object& y2);
Morphism kelly_mu0(const Adjunction& adj);

/// The literal composites R₂(X,U(Y))∘(id⊗η_Y) and R₂(U(X),Y)∘(η_X⊗id).
Morphism hl_composite(const Adjunction& adj, const Object& x, const Object& y);
Morphism hr_composite(const Adjunction& adj, const Object& x, const Object& y);

// Checkers. Objects are taken from a generator set of the functor's source;
// `max_length` bounds the total word length of the quantified tuples.

Report check_functoriality(const Functor& f, const GeneratorSet& gen, std::size_t max_length);
Report check_monoidal(const Functor& f, const GeneratorSet& gen, std::size_t max_length);
Report check_comonoidal(const Functor& f, const GeneratorSet& gen, std::size_t max_length);

struct FrobeniusFunctorResult {
  Report report;
  std::optional<Rational> beta2;  // F₂F² = β₂ id on every checked pair
  std::optional<Rational> beta0;  // F⁰F₀ = β₀, recorded when β₂ exists
};

/// Only the separability scalars: F₂F² = β₂ id on every pair, β₀ = F⁰F₀.
FrobeniusFunctorResult functor_separability(const Functor& f, const GeneratorSet& gen, std::size_t max_length);

/// Monoidal and comonoidal coherence plus both Frobenius compatibility
/// equations on generator triples; separability scalars extracted.
FrobeniusFunctorResult check_frobenius_functor_equations(const Functor& f, const GeneratorSet& gen,
                                                         std::size_t max_length);

Report check_snakes(const Adjunction& adj, const GeneratorSet& gen_left, const GeneratorSet& gen_right);

/// η and ε as monoidal natural transformations (Id ⇒ RU and UR ⇒ Id).
Report check_adjunction_monoidal(const Adjunction& adj, const GeneratorSet& gen_left, const GeneratorSet& gen_right,
                                 std::size_t max_length);

// Duality transformations of a Frobenius monoidal functor.
Morphism zeta(const Functor& f, const Object& x);          // F(∨X) → ∨F(X)
Morphism zeta_inverse(const Functor& f, const Object& x);  // ∨F(X) → F(∨X)
Morphism xi(const Functor& f, const Object& x);            // F(∨∨X) → ∨∨F(X)

/// ζ invertibility for F and GF, and the composition laws of ζ and ξ for G∘F,
/// on the generator objects of F's source.
Report check_duality_transforms(const Functor& g, const Functor& f, const GeneratorSet& gen);

using ObjectFamily = std::function<Morphism(const Object&)>;

/// 𝔭_{F(X)} = ξ_X ∘ F(𝔭_X) on generator objects; `xi_family` replaces ξ when given.
Report is_pivotal_functor(const Functor& f, const GeneratorSet& gen, const ObjectFamily& xi_family = {});
Report is_braided_functor(const Functor& f, const GeneratorSet& gen, std::size_t max_length);
Report is_cobraided_functor(const Functor& f, const GeneratorSet& gen, std::size_t max_length);
/// F(θ_X) = θ_{F(X)}; θ is the action of the inverse ribbon element when both
/// categories carry one, otherwise the left twist built from pivot and braiding.
Report is_ribbon_functor(const Functor& f, const GeneratorSet& gen);

/// θ^l = θ^r on generator objects (and = ρ(θ⁻¹) when a ribbon element is present).
Report check_ribbon_category(const RepCategory& cat, const GeneratorSet& gen);

/// Naturality against intertwiner spans between generator objects of length
/// ≤ hom_length, and, when `monoidal`, G₂(α⊗α) = α F₂ on generator pairs.
Report check_natural_transformation(const Functor& f, const Functor& g, const ObjectFamily& alpha,
                                    const GeneratorSet& gen, std::size_t hom_length, bool monoidal,
                                    std::size_t max_length);

/// (F(A), F(m)F₂, F(u)F₀, F²F(Δ), F⁰F(ν)).
FrobeniusAlgebraData push_through_functor(const Functor& f, const FrobeniusAlgebraData& a);

}  // namespace cohopf
