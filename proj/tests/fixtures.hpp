#pragma once

#include "cohopf/cohopf.hpp"
#include "test_support.hpp"

namespace cohopf::testing {

// h^l and h^r scaled by 2, everything else delegated.
class ScaledOperators final : public Adjunction {
 public:
  explicit ScaledOperators(AdjunctionPtr base) : Adjunction(base->left_ptr(), base->right_ptr()), base_(std::move(base)) {}
  Morphism unit(const Object& x) const override { return base_->unit(x); }
  Morphism counit(const Object& y) const override { return base_->counit(y); }
  Morphism hl(const Object& x, const Object& y) const override { return scaled(base_->hl(x, y)); }
  Morphism hr(const Object& x, const Object& y) const override { return scaled(base_->hr(x, y)); }

 private:
  static Morphism scaled(Morphism f) {
    f.matrix *= Rational(2);
    return f;
  }
  AdjunctionPtr base_;
};

// M₂(ℚ) with trivial C₂-action and form a ↦ tr(diag(1, t) a); symmetric exactly when t = 1.
struct MatrixAlgebra {
  CategoryPtr cat;
  FrobeniusAlgebraData a;
  GeneratorSet gen;
  HalfBraidingData hb;

  explicit MatrixAlgebra(const Rational& t) {
    HopfPtr h = share(catalog("c2.json"));
    cat = std::make_shared<const RepCategory>(h);
    const Matrix id4 = cohopf::identity<Rational>(4);
    const Object x(make_atom("M2", explicit_module(h, {id4, id4})));
    const Object one;
    Matrix m = Matrix::Zero(4, 16);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        for (int l = 0; l < 2; ++l) m(2 * i + l, 4 * (2 * i + j) + 2 * j + l) = 1;
    Matrix u = Matrix::Zero(4, 1);
    u(0, 0) = u(3, 0) = 1;
    Matrix nu = Matrix::Zero(1, 4);
    nu(0, 0) = 1;
    nu(0, 3) = t;
    const Morphism mm{tensor(x, x), x, m}, nn{x, one, nu};
    a = FrobeniusAlgebraData{x, mm, Morphism{one, x, u}, comultiplication_from_form(*cat, x, mm, nn), nn};
    gen = make_generator_set({seed(h, "sign")}, 2);
    hb.carrier = x;
    for (const Object& y : gen.objects)
      for (const Object& z : {y, left_dual(y), left_dual(left_dual(y))}) {
        const int d = z.dim();
        Matrix flip = Matrix::Zero(4 * d, 4 * d);
        for (int p = 0; p < d; ++p)
          for (int q = 0; q < 4; ++q) flip(q * d + p, p * 4 + q) = 1;
        hb.family.emplace(z.key(), Morphism{tensor(z, x), tensor(x, z), flip});
      }
  }
};

}  // namespace cohopf::testing
