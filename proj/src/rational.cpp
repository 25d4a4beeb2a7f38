#include "cohopf/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>
#include <stdexcept>

#include <gmpxx.h>

namespace cohopf {

struct Rational::Big {
  mpq_class value;
};

namespace {

using i128 = __int128;
using u128 = unsigned __int128;

constexpr std::int64_t kMin = std::numeric_limits<std::int64_t>::min();
constexpr std::int64_t kMax = std::numeric_limits<std::int64_t>::max();

u128 gcd128(u128 a, u128 b) {
  while (b != 0) {
    u128 t = a % b;
    a = b;
    b = t;
  }
  return a;
}

u128 uabs(i128 v) { return v < 0 ? static_cast<u128>(-(v + 1)) + 1 : static_cast<u128>(v); }

// Both bounds exclude INT64_MIN so that negation never overflows.
bool fits(i128 v) { return v > kMin && v <= kMax; }

mpz_class to_mpz(i128 v) {
  const bool negative = v < 0;
  u128 m = uabs(v);
  mpz_class hi(static_cast<unsigned long>(static_cast<std::uint64_t>(m >> 64)));
  mpz_class lo(static_cast<unsigned long>(static_cast<std::uint64_t>(m)));
  mpz_class out = (hi << 64) + lo;
  return negative ? mpz_class(-out) : out;
}

}  // namespace

Rational::Rational(long long numerator, long long denominator) {
  if (denominator == 0) throw std::domain_error("rational with zero denominator");
  i128 n = numerator;
  i128 d = denominator;
  if (d < 0) {
    n = -n;
    d = -d;
  }
  u128 g = gcd128(uabs(n), static_cast<u128>(d));
  if (g > 1) {
    n /= static_cast<i128>(g);
    d /= static_cast<i128>(g);
  }
  if (fits(n) && fits(d)) {
    num_ = static_cast<std::int64_t>(n);
    den_ = static_cast<std::int64_t>(d);
  } else {
    mpq_class q(to_mpz(n), to_mpz(d));
    q.canonicalize();
    *this = from_big(Big{q});
  }
}

Rational Rational::from_big(const Big& value) {
  const mpz_class& n = value.value.get_num();
  const mpz_class& d = value.value.get_den();
  Rational out;
  if (n.fits_slong_p() && d.fits_slong_p() && n.get_si() != kMin) {
    out.num_ = n.get_si();
    out.den_ = d.get_si();
    return out;
  }
  out.big_ = std::make_shared<const Big>(value);
  return out;
}

Rational::Big Rational::to_big() const {
  if (big_) return *big_;
  return Big{mpq_class(mpz_class(static_cast<long>(num_)), mpz_class(static_cast<long>(den_)))};
}

Rational Rational::parse(std::string_view text) {
  if (text.empty()) throw std::invalid_argument("empty rational");
  std::string s(text);
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/'))
      throw std::invalid_argument("malformed rational '" + s + "'");
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) throw std::invalid_argument("malformed rational '" + s + "'");
  if (q.get_den() == 0) throw std::invalid_argument("zero denominator in '" + s + "'");
  q.canonicalize();
  return from_big(Big{q});
}

std::string Rational::str() const {
  if (big_) return big_->value.get_str();
  if (den_ == 1) return std::to_string(num_);
  return std::to_string(num_) + "/" + std::to_string(den_);
}

bool Rational::is_integer() const {
  return big_ ? big_->value.get_den() == 1 : den_ == 1;
}

int Rational::sign() const {
  if (big_) return sgn(big_->value);
  return num_ > 0 ? 1 : (num_ < 0 ? -1 : 0);
}

Rational Rational::operator-() const {
  if (big_) return from_big(Big{mpq_class(-big_->value)});
  Rational out;
  out.num_ = -num_;
  out.den_ = den_;
  return out;
}

Rational& Rational::operator+=(const Rational& other) {
  if (other.is_zero()) return *this;
  if (is_zero()) return *this = other;
  if (!big_ && !other.big_) {
    if (den_ == other.den_) {
      i128 n = static_cast<i128>(num_) + other.num_;
      if (den_ == 1 && fits(n)) {
        num_ = static_cast<std::int64_t>(n);
        return *this;
      }
    }
    i128 n = static_cast<i128>(num_) * other.den_ + static_cast<i128>(other.num_) * den_;
    i128 d = static_cast<i128>(den_) * other.den_;
    u128 g = gcd128(uabs(n), static_cast<u128>(d));
    if (g > 1) {
      n /= static_cast<i128>(g);
      d /= static_cast<i128>(g);
    }
    if (n == 0) {
      num_ = 0;
      den_ = 1;
      return *this;
    }
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  return *this = from_big(Big{mpq_class(to_big().value + other.to_big().value)});
}

Rational& Rational::operator-=(const Rational& other) { return *this += -other; }

Rational& Rational::operator*=(const Rational& other) {
  if (is_zero()) return *this;
  if (other.is_zero()) return *this = Rational();
  if (!big_ && !other.big_) {
    // cross-cancel before multiplying
    u128 g1 = gcd128(uabs(num_), static_cast<u128>(other.den_));
    u128 g2 = gcd128(uabs(other.num_), static_cast<u128>(den_));
    i128 n = (static_cast<i128>(num_) / static_cast<i128>(g1)) *
             (static_cast<i128>(other.num_) / static_cast<i128>(g2));
    i128 d = (static_cast<i128>(den_) / static_cast<i128>(g2)) *
             (static_cast<i128>(other.den_) / static_cast<i128>(g1));
    if (fits(n) && fits(d)) {
      num_ = static_cast<std::int64_t>(n);
      den_ = static_cast<std::int64_t>(d);
      return *this;
    }
  }
  return *this = from_big(Big{mpq_class(to_big().value * other.to_big().value)});
}

Rational& Rational::operator/=(const Rational& other) { return *this *= other.inverse(); }

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero rational");
  if (big_) return from_big(Big{mpq_class(1 / big_->value)});
  Rational out;
  out.num_ = num_ < 0 ? -den_ : den_;
  out.den_ = num_ < 0 ? -num_ : num_;
  return out;
}

bool operator==(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) return a.num_ == b.num_ && a.den_ == b.den_;
  if (a.big_ && b.big_) return a.big_->value == b.big_->value;
  return false;  // canonical forms never straddle representations
}

bool operator<(const Rational& a, const Rational& b) {
  if (!a.big_ && !b.big_) {
    return static_cast<i128>(a.num_) * b.den_ < static_cast<i128>(b.num_) * a.den_;
  }
  return a.to_big().value < b.to_big().value;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

}  // namespace cohopf
