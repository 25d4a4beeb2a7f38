#pragma once

// The category Rep(H) of finite-dimensional modules, taken strict.
//
// Objects are words in letters; a letter is an atom (a concrete module) with a
// number of left duals applied. Tensor product is concatenation, the unit is
// the empty word and ∨(X₁⊗…⊗X_k) = ∨X_k⊗…⊗∨X₁, so associators, unitors and the
// identification ∨(X⊗Y) = ∨Y⊗∨X are literal identities. A word's basis is the
// lexicographic product basis of its letters (first letter most significant);
// ∨X carries the dual basis of X.

#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "cohopf/hopf.hpp"

namespace cohopf {

class Module {
 public:
  Module(HopfPtr algebra, int dim) : algebra_(std::move(algebra)), dim_(dim) {}
  virtual ~Module() = default;
  Module(const Module&) = delete;
  Module& operator=(const Module&) = delete;

  const HopfAlgebraData& algebra() const { return *algebra_; }
  const HopfPtr& algebra_ptr() const { return algebra_; }
  int dim() const { return dim_; }

  /// ρ(e_i), computed on first use.
  const Matrix& action(int i) const;
  /// ρ(x) for an arbitrary element x.
  Matrix act(const Vector& x) const;

 protected:
  virtual Matrix compute_action(int i) const = 0;

 private:
  HopfPtr algebra_;
  int dim_;
  mutable std::mutex mutex_;
  mutable std::map<int, std::shared_ptr<const Matrix>> cache_;
};

using ModulePtr = std::shared_ptr<const Module>;

/// Module given by explicit action matrices (one per basis element).
ModulePtr explicit_module(HopfPtr algebra, std::vector<Matrix> action);
/// ∨V: ρ(h) = ρ_V(S h)ᵀ on the dual basis.
ModulePtr dual_module(ModulePtr base);
/// V⊗W via Δ.
ModulePtr tensor_module(ModulePtr left, ModulePtr right);

/// Checks ρ(1) = I and ρ(e_i)ρ(e_j) = Σ mul ρ(e_k); returns the first violation.
std::optional<std::string> module_violation(const Module& m);

struct Atom {
  std::string name;
  ModulePtr module;
};
using AtomPtr = std::shared_ptr<const Atom>;

AtomPtr make_atom(std::string name, ModulePtr module);

struct Letter {
  AtomPtr atom;
  int duals = 0;
};

class Object {
 public:
  Object() = default;
  explicit Object(AtomPtr atom);
  explicit Object(std::vector<Letter> letters);

  const std::vector<Letter>& letters() const { return letters_; }
  bool is_unit() const { return letters_.empty(); }
  std::size_t length() const { return letters_.size(); }
  int dim() const;
  /// Structural identity and display name, e.g. "std ⊗ ∨sign"; the unit is "1".
  const std::string& key() const { return key_; }

  friend bool operator==(const Object& a, const Object& b) { return a.key_ == b.key_; }
  friend bool operator!=(const Object& a, const Object& b) { return a.key_ != b.key_; }
  friend bool operator<(const Object& a, const Object& b) { return a.key_ < b.key_; }

 private:
  std::vector<Letter> letters_;
  std::string key_ = "1";
};

Object tensor(const Object& x, const Object& y);
Object tensor(std::initializer_list<Object> xs);
Object left_dual(const Object& x);

struct Morphism {
  Object source;
  Object target;
  Matrix matrix;  // dim(target) x dim(source)
};

/// g ∘ f; throws ShapeError unless f.target == g.source literally.
Morphism compose(const Morphism& g, const Morphism& f);
Morphism compose(std::initializer_list<Morphism> chain);
/// f ⊗ g as a full Kronecker product.
Morphism tensor(const Morphism& f, const Morphism& g);
Morphism identity(const Object& x);
/// id_L ⊗ f ⊗ id_R.
Morphism whisker(const Object& left, const Morphism& f, const Object& right);
Morphism scaled(const Rational& c, const Morphism& f);
bool operator==(const Morphism& a, const Morphism& b);
inline bool operator!=(const Morphism& a, const Morphism& b) { return !(a == b); }

/// Composite g_k ∘ … ∘ g_1 ∘ start evaluated on thin matrices: whiskered
/// factors id_L ⊗ f ⊗ id_R are applied without forming Kronecker products.
class Chain {
 public:
  explicit Chain(Morphism start) : current_(std::move(start)) {}
  Chain& then(const Morphism& f);
  Chain& then(const Object& left, const Morphism& f, const Object& right);
  /// Precomposes with id_L ⊗ f ⊗ id_R; cheap when the composite's target is small.
  Chain& before(const Object& left, const Morphism& f, const Object& right);
  Chain& before(const Morphism& f);
  const Morphism& result() const { return current_; }

 private:
  Morphism current_;
};

class RepCategory {
 public:
  explicit RepCategory(HopfPtr algebra);

  const HopfAlgebraData& algebra() const { return *algebra_; }
  const HopfPtr& algebra_ptr() const { return algebra_; }
  /// Algebra generators used for intertwining checks.
  const std::vector<int>& generators() const { return generators_; }

  ModulePtr module(const Object& x) const;
  Matrix action(const Object& x, int i) const { return module(x)->action(i); }
  Matrix act(const Object& x, const Vector& element) const { return module(x)->act(element); }

  /// The first generator at which f fails to intertwine, if any.
  std::optional<std::string> intertwining_failure(const Morphism& f) const;
  bool is_intertwiner(const Morphism& f) const { return !intertwining_failure(f); }
  /// Basis of Hom_H(X, Y).
  std::vector<Morphism> intertwiner_basis(const Object& x, const Object& y) const;

  Morphism ev(const Object& x) const;    // ∨X ⊗ X → 1
  Morphism coev(const Object& x) const;  // 1 → X ⊗ ∨X
  /// ∨f : ∨Y → ∨X.
  Morphism dual(const Morphism& f) const;

  bool has_pivot() const { return algebra_->pivot.has_value(); }
  Morphism pivot(const Object& x) const;          // 𝔭_X : X → ∨∨X
  Morphism pivot_inverse(const Object& x) const;  // ∨∨X → X
  Morphism ev_tilde(const Object& x) const;       // X ⊗ ∨X → 1
  Morphism coev_tilde(const Object& x) const;     // 1 → ∨X ⊗ X

  bool has_braiding() const { return algebra_->rmatrix.has_value(); }
  Morphism braiding(const Object& x, const Object& y) const;          // c_{X,Y}
  Morphism braiding_inverse(const Object& x, const Object& y) const;  // c_{X,Y}⁻¹ : Y⊗X → X⊗Y
  Morphism twist_left(const Object& x) const;
  Morphism twist_right(const Object& x) const;
  bool has_ribbon() const { return algebra_->ribbon.has_value(); }
  /// Balancing twist of the ribbon element: ρ_X(θ⁻¹) (so that θ_{X⊗Y} = c_{Y,X}c_{X,Y}(θ_X⊗θ_Y)).
  Morphism ribbon_twist(const Object& x) const;

 private:
  Matrix require(const std::optional<Vector>& v, const char* what) const;

  HopfPtr algebra_;
  std::vector<int> generators_;
  mutable std::mutex mutex_;
  mutable std::map<std::string, ModulePtr> modules_;
};

/// Words over seeds ∪ left duals of seeds up to `depth` letters, plus 1, in
/// deterministic order (by length, then lexicographically by letter index).
struct GeneratorSet {
  std::vector<Object> seeds;
  int depth = 0;
  std::vector<Object> objects;

  /// Objects with at most `max_length` letters.
  std::vector<Object> up_to(std::size_t max_length) const;
  /// Ordered pairs with total length at most `max_length`.
  std::vector<std::pair<Object, Object>> pairs(std::size_t max_length) const;
  /// Ordered triples with total length at most `max_length`.
  std::vector<std::vector<Object>> triples(std::size_t max_length) const;
};

GeneratorSet make_generator_set(std::vector<Object> seeds, int depth);

struct HalfBraidingData {
  Object carrier;
  std::map<std::string, Morphism> family;  // keyed by X.key(): σ_X : X⊗A → A⊗X

  const Morphism& at(const Object& x) const;
};

struct CoverageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Naturality against intertwiner spans (pairs of objects with at most
/// `max_hom_length` letters each) and multiplicativity on generator pairs.
Report check_half_braiding(const RepCategory& cat, const HalfBraidingData& hb, const GeneratorSet& gen,
                           std::size_t max_hom_length = 1);

}  // namespace cohopf
