#pragma once

// Exact integers and rationals. Integer is GMP's mpz_class; Rational keeps
// the GMP value canonical at all times (gcd(|num|, den) = 1, den >= 1).

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

namespace lhcert {

using Integer = mpz_class;

class Rational {
 public:
  Rational() = default;
  Rational(long v) : q_(v) {}  // NOLINT: implicit from small integers
  Rational(const Integer& v) : q_(v) {}  // NOLINT
  Rational(const Integer& num, const Integer& den);
  explicit Rational(const mpq_class& q) : q_(q) { q_.canonicalize(); }

  // Accepts "a/b" or "a" (decimal, optional leading minus, b > 0).
  static Rational parse(std::string_view text);

  const Integer& num() const { return q_.get_num(); }
  const Integer& den() const { return q_.get_den(); }
  const mpq_class& gmp() const { return q_; }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return den() == 1; }
  bool is_negative_integer() const { return is_integer() && sign() < 0; }

  Rational abs() const { return Rational(mpq_class(::abs(q_))); }
  Rational pow(unsigned e) const;
  double to_double() const { return q_.get_d(); }

  // log2 |x|, approximate; -inf for zero.
  double log2_abs() const;

  std::string to_string() const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) { return Rational(mpq_class(-a.q_)); }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const Rational& x);

// Canonical rational from an integer pair; throws ZeroDenominator on den = 0.
Rational rat_normalize(const Integer& num, const Integer& den);

Integer parse_integer(std::string_view text);

// Smallest e >= 0 with den | base^e; throws NotClearable if no such e exists.
unsigned clearing_exponent(const Integer& den, const Integer& base);

Integer pow(const Integer& base, unsigned e);

// Floor of x rounded down to `bits` significant bits, as a dyadic rational.
// Requires x > 0.
Rational round_down_dyadic(const Rational& x, unsigned bits);

}  // namespace lhcert
