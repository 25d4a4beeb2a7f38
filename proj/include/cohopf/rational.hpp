#pragma once

// Exact rational scalar used as the coefficient field everywhere in cohopf.
//
// Values whose reduced numerator and denominator fit in 64 bits are stored
// inline; anything larger is promoted to a GMP rational. Every value is kept
// in canonical form (gcd(|num|, den) = 1, den > 0) and is demoted back to the
// inline representation whenever it fits again, so equality is structural.

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace cohopf {

class Rational {
 public:
  Rational() = default;
  Rational(int value) : num_(value) {}        // NOLINT(google-explicit-constructor)
  Rational(long value) : Rational(static_cast<long long>(value), 1) {}  // NOLINT
  Rational(long long value) : Rational(value, 1) {}                     // NOLINT
  Rational(long long numerator, long long denominator);

  /// Parses "p", "-p", "p/q" (whitespace not allowed). Throws std::invalid_argument.
  static Rational parse(std::string_view text);

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string str() const;

  bool is_zero() const { return !big_ && num_ == 0; }
  bool is_one() const { return !big_ && num_ == 1 && den_ == 1; }
  bool is_integer() const;
  int sign() const;
  bool is_small() const { return !big_; }

  Rational operator-() const;
  Rational& operator+=(const Rational& other);
  Rational& operator-=(const Rational& other);
  Rational& operator*=(const Rational& other);
  Rational& operator/=(const Rational& other);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  friend bool operator==(const Rational& a, const Rational& b);
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b);
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  Rational inverse() const;

  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

  struct Big;  // opaque GMP storage

 private:
  static Rational from_big(const Big& value);
  Big to_big() const;

  std::int64_t num_ = 0;
  std::int64_t den_ = 1;
  std::shared_ptr<const Big> big_;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

}  // namespace cohopf

namespace Eigen {

template <>
struct NumTraits<cohopf::Rational> : GenericNumTraits<cohopf::Rational> {
  using Real = cohopf::Rational;
  using NonInteger = cohopf::Rational;
  using Nested = cohopf::Rational;
  using Literal = cohopf::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 10,
    MulCost = 20
  };

  static Real epsilon() { return Real(0); }
  static Real dummy_precision() { return Real(0); }
  static int digits10() { return 0; }
};

}  // namespace Eigen
