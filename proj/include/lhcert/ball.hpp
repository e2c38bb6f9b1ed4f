#pragma once

// Midpoint-radius real balls on top of MPFR. The midpoint carries the working
// precision; the radius is a 64-bit MPFR value that is only ever rounded up.

#include <lhcert/rational.hpp>

#include <mpfr.h>

#include <string>

namespace lhcert {

namespace detail {

// Owning mpfr_t.
class Mpfr {
 public:
  explicit Mpfr(mpfr_prec_t prec) { mpfr_init2(v_, prec); mpfr_set_zero(v_, 1); }
  Mpfr(const Mpfr& o) { mpfr_init2(v_, mpfr_get_prec(o.v_)); mpfr_set(v_, o.v_, MPFR_RNDN); }
  Mpfr(Mpfr&& o) noexcept { mpfr_init2(v_, MPFR_PREC_MIN); mpfr_swap(v_, o.v_); }
  Mpfr& operator=(const Mpfr& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Mpfr& operator=(Mpfr&& o) noexcept { mpfr_swap(v_, o.v_); return *this; }
  ~Mpfr() { mpfr_clear(v_); }

  mpfr_ptr get() { return v_; }
  mpfr_srcptr get() const { return v_; }
  mpfr_prec_t prec() const { return mpfr_get_prec(v_); }

 private:
  mpfr_t v_;
};

// Exact conversion of a finite MPFR value.
Rational to_rational(mpfr_srcptr x);

}  // namespace detail

inline constexpr mpfr_prec_t kRadiusPrec = 64;

class Ball {
 public:
  // 0 +/- 0
  explicit Ball(mpfr_prec_t prec = 64);

  static Ball from_rational(const Rational& x, mpfr_prec_t prec);
  static Ball from_integer(const Integer& x, mpfr_prec_t prec);
  // mid +/- rad, rad rounded up; rad must be >= 0.
  static Ball from_mid_rad(const Rational& mid, const Rational& rad, mpfr_prec_t prec);

  mpfr_prec_t prec() const { return mid_.prec(); }
  mpfr_srcptr mid() const { return mid_.get(); }
  mpfr_srcptr rad() const { return rad_.get(); }

  bool contains_zero() const;
  // +1 / -1 when the ball excludes zero, 0 otherwise.
  int sign() const;
  bool is_exact() const { return mpfr_zero_p(rad_.get()) != 0; }
  bool contains(const Rational& x) const;
  bool contains(const Ball& inner) const;
  bool overlaps(const Ball& other) const;

  // Exact dyadic bounds.
  Rational lower() const;
  Rational upper() const;
  Rational upper_abs() const;
  // 0 when the ball contains zero.
  Rational lower_abs() const;
  // |x| < 2^e for every x in the ball.
  bool abs_below_pow2(long e) const;

  Rational mid_rational() const { return detail::to_rational(mid_.get()); }
  double mid_double() const { return mpfr_get_d(mid_.get(), MPFR_RNDN); }
  long double mid_long_double() const { return mpfr_get_ld(mid_.get(), MPFR_RNDN); }
  double rad_double() const { return mpfr_get_d(rad_.get(), MPFR_RNDU); }
  // log2 of the radius, -inf for an exact ball.
  double rad_log2() const;

  // "mid +/- rad" with `digits` significant digits on the midpoint.
  std::string to_string(int digits = 20) const;
  // Decimal string that is >= every |x| in the ball.
  std::string upper_abs_string(int digits = 20) const;

  // Widen by err >= 0.
  Ball& add_error(const Ball& err_abs_source);
  Ball& add_error_pow2(long e);

  Ball& operator+=(const Ball& o);
  Ball& operator-=(const Ball& o);
  Ball& operator*=(const Ball& o);
  Ball& operator/=(const Ball& o);
  Ball& operator*=(const Rational& q);
  Ball& operator/=(const Rational& q);
  Ball& operator*=(const Integer& z);

  friend Ball operator+(Ball a, const Ball& b) { return a += b; }
  friend Ball operator-(Ball a, const Ball& b) { return a -= b; }
  friend Ball operator*(Ball a, const Ball& b) { return a *= b; }
  friend Ball operator/(Ball a, const Ball& b) { return a /= b; }
  friend Ball operator*(Ball a, const Rational& q) { return a *= q; }
  friend Ball operator*(const Rational& q, Ball a) { return a *= q; }
  friend Ball operator/(Ball a, const Rational& q) { return a /= q; }
  friend Ball operator*(Ball a, const Integer& z) { return a *= z; }
  Ball operator-() const;

  Ball abs() const;

 private:
  void add_rounding_error(int ternary);

  detail::Mpfr mid_;
  detail::Mpfr rad_;
};

enum class BallOp { Add, Sub, Mul, Div };

Ball ball_arith(const Ball& a, const Ball& b, BallOp op);

// Nearest double at or above x.
double upper_double(const Rational& x);

// Enclosure of pi from Machin's formula with alternating-series tail bounds.
Ball pi_ball(mpfr_prec_t prec);

}  // namespace lhcert
