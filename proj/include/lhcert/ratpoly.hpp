#pragma once

#include <lhcert/rational.hpp>

#include <initializer_list>
#include <string>
#include <vector>

namespace lhcert {

// Dense polynomial in t with rational coefficients; coeffs()[k] multiplies
// t^k. Trailing zeros are always trimmed, so the zero polynomial is empty.
class RatPoly {
 public:
  RatPoly() = default;
  RatPoly(std::initializer_list<Rational> coeffs);
  explicit RatPoly(std::vector<Rational> coeffs);

  static RatPoly constant(const Rational& c) { return RatPoly({c}); }
  static RatPoly monomial(const Rational& c, unsigned k);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  Rational coeff(std::size_t k) const {
    return k < coeffs_.size() ? coeffs_[k] : Rational();
  }

  Rational eval(const Rational& x) const;
  bool is_integral() const;

  // "15 - 6*t + t^2" style.
  std::string to_string(const char* var = "t") const;

  friend bool operator==(const RatPoly&, const RatPoly&) = default;
  friend RatPoly operator-(const RatPoly& p);

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

inline Rational poly_eval(const RatPoly& p, const Rational& x) { return p.eval(x); }

// alpha*P + beta*t^shift*Q
RatPoly poly_combine(const Rational& alpha, const RatPoly& p, const Rational& beta,
                     const RatPoly& q, unsigned shift);

// Smallest e >= 0 such that base^e * P has integer coefficients.
// Throws NotClearable when a denominator has a prime factor not in base.
unsigned denominator_exponent(const RatPoly& p, const Integer& base);

}  // namespace lhcert
