#include <lhcert/ball.hpp>
#include <lhcert/error.hpp>

#include <algorithm>
#include <cmath>
#include <limits>

namespace lhcert {

namespace detail {

Rational to_rational(mpfr_srcptr x) {
  mpq_class q;
  mpfr_get_q(q.get_mpq_t(), x);
  return Rational(q);
}

}  // namespace detail

using detail::Mpfr;

namespace {

// |x| + r, rounded up, at radius precision.
Mpfr abs_upper64(mpfr_srcptr x, mpfr_srcptr r) {
  Mpfr out(kRadiusPrec);
  mpfr_abs(out.get(), x, MPFR_RNDU);  // rounding an abs up is an upper bound
  mpfr_add(out.get(), out.get(), r, MPFR_RNDU);
  return out;
}

// |x * y| rounded up.
void mul_abs_up(mpfr_ptr out, mpfr_srcptr x, mpfr_srcptr y) {
  mpfr_mul(out, x, y, MPFR_RNDA);
  mpfr_abs(out, out, MPFR_RNDU);
}

void raise_prec(Mpfr& m, mpfr_prec_t p) {
  if (m.prec() < p) mpfr_prec_round(m.get(), p, MPFR_RNDN);  // exact when growing
}

}  // namespace

Ball::Ball(mpfr_prec_t prec) : mid_(prec), rad_(kRadiusPrec) {}

Ball Ball::from_rational(const Rational& x, mpfr_prec_t prec) {
  Ball b(prec);
  b.add_rounding_error(mpfr_set_q(b.mid_.get(), x.gmp().get_mpq_t(), MPFR_RNDN));
  return b;
}

Ball Ball::from_integer(const Integer& x, mpfr_prec_t prec) {
  Ball b(prec);
  b.add_rounding_error(mpfr_set_z(b.mid_.get(), x.get_mpz_t(), MPFR_RNDN));
  return b;
}

Ball Ball::from_mid_rad(const Rational& mid, const Rational& rad, mpfr_prec_t prec) {
  if (rad.sign() < 0) throw Error(ErrorKind::InvalidArgument, "negative ball radius");
  Ball b = from_rational(mid, prec);
  Mpfr r(kRadiusPrec);
  mpfr_set_q(r.get(), rad.gmp().get_mpq_t(), MPFR_RNDU);
  mpfr_add(b.rad_.get(), b.rad_.get(), r.get(), MPFR_RNDU);
  return b;
}

void Ball::add_rounding_error(int ternary) {
  if (ternary == 0) return;
  Mpfr ulp(kRadiusPrec);
  if (mpfr_zero_p(mid_.get()))
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_emin(), MPFR_RNDU);
  else
    mpfr_set_ui_2exp(ulp.get(), 1, mpfr_get_exp(mid_.get()) - mid_.prec(), MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), ulp.get(), MPFR_RNDU);
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_.get(), rad_.get()) <= 0; }

int Ball::sign() const {
  if (contains_zero()) return 0;
  return mpfr_sgn(mid_.get()) > 0 ? 1 : -1;
}

bool Ball::contains(const Rational& x) const {
  Rational d = (x - mid_rational()).abs();
  return d <= detail::to_rational(rad_.get());
}

bool Ball::contains(const Ball& inner) const {
  return lower() <= inner.lower() && inner.upper() <= upper();
}

bool Ball::overlaps(const Ball& other) const {
  Rational d = (mid_rational() - other.mid_rational()).abs();
  return d <= detail::to_rational(rad_.get()) + detail::to_rational(other.rad_.get());
}

Rational Ball::lower() const { return mid_rational() - detail::to_rational(rad_.get()); }
Rational Ball::upper() const { return mid_rational() + detail::to_rational(rad_.get()); }

Rational Ball::upper_abs() const {
  return mid_rational().abs() + detail::to_rational(rad_.get());
}

Rational Ball::lower_abs() const {
  if (contains_zero()) return Rational();
  return mid_rational().abs() - detail::to_rational(rad_.get());
}

bool Ball::abs_below_pow2(long e) const {
  Mpfr ub = abs_upper64(mid_.get(), rad_.get());
  return mpfr_cmp_ui_2exp(ub.get(), 1, e) < 0;
}

double Ball::rad_log2() const {
  if (mpfr_zero_p(rad_.get())) return -std::numeric_limits<double>::infinity();
  long e = 0;
  const double m = mpfr_get_d_2exp(&e, rad_.get(), MPFR_RNDU);
  return std::log2(m) + static_cast<double>(e);
}

std::string Ball::to_string(int digits) const {
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*Rg +/- %.3RUe", digits, mid_.get(), rad_.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

std::string Ball::upper_abs_string(int digits) const {
  Mpfr ub = abs_upper64(mid_.get(), rad_.get());
  char* buf = nullptr;
  mpfr_asprintf(&buf, "%.*RUe", digits - 1, ub.get());
  std::string s(buf);
  mpfr_free_str(buf);
  return s;
}

Ball& Ball::add_error(const Ball& err) {
  Mpfr e = abs_upper64(err.mid_.get(), err.rad_.get());
  mpfr_add(rad_.get(), rad_.get(), e.get(), MPFR_RNDU);
  return *this;
}

Ball& Ball::add_error_pow2(long e) {
  Mpfr x(kRadiusPrec);
  mpfr_set_ui_2exp(x.get(), 1, e, MPFR_RNDU);
  mpfr_add(rad_.get(), rad_.get(), x.get(), MPFR_RNDU);
  return *this;
}

Ball& Ball::operator+=(const Ball& o) {
  raise_prec(mid_, o.prec());
  mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
  add_rounding_error(mpfr_add(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN));
  return *this;
}

Ball& Ball::operator-=(const Ball& o) {
  raise_prec(mid_, o.prec());
  mpfr_add(rad_.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
  add_rounding_error(mpfr_sub(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN));
  return *this;
}

Ball& Ball::operator*=(const Ball& o) {
  Mpfr r(kRadiusPrec), tmp(kRadiusPrec);
  mul_abs_up(r.get(), mid_.get(), o.rad_.get());
  mul_abs_up(tmp.get(), o.mid_.get(), rad_.get());
  mpfr_add(r.get(), r.get(), tmp.get(), MPFR_RNDU);
  mpfr_mul(tmp.get(), rad_.get(), o.rad_.get(), MPFR_RNDU);
  mpfr_add(r.get(), r.get(), tmp.get(), MPFR_RNDU);
  raise_prec(mid_, o.prec());
  const int tern = mpfr_mul(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  rad_ = std::move(r);
  add_rounding_error(tern);
  return *this;
}

Ball& Ball::operator/=(const Ball& o) {
  Mpfr bl(kRadiusPrec), den(kRadiusPrec);
  mpfr_abs(bl.get(), o.mid_.get(), MPFR_RNDD);
  mpfr_sub(den.get(), bl.get(), o.rad_.get(), MPFR_RNDD);
  if (mpfr_sgn(den.get()) <= 0)
    throw Error(ErrorKind::DivByZeroBall, "divisor ball " + o.to_string(10) + " contains zero");
  mpfr_mul(den.get(), den.get(), bl.get(), MPFR_RNDD);

  Mpfr num(kRadiusPrec), tmp(kRadiusPrec);
  mul_abs_up(num.get(), mid_.get(), o.rad_.get());
  mul_abs_up(tmp.get(), o.mid_.get(), rad_.get());
  mpfr_add(num.get(), num.get(), tmp.get(), MPFR_RNDU);
  mpfr_div(num.get(), num.get(), den.get(), MPFR_RNDU);

  raise_prec(mid_, o.prec());
  const int tern = mpfr_div(mid_.get(), mid_.get(), o.mid_.get(), MPFR_RNDN);
  rad_ = std::move(num);
  add_rounding_error(tern);
  return *this;
}

Ball& Ball::operator*=(const Rational& q) {
  mpq_class aq = ::abs(q.gmp());
  mpfr_mul_q(rad_.get(), rad_.get(), aq.get_mpq_t(), MPFR_RNDU);
  add_rounding_error(mpfr_mul_q(mid_.get(), mid_.get(), q.gmp().get_mpq_t(), MPFR_RNDN));
  return *this;
}

Ball& Ball::operator/=(const Rational& q) {
  if (q.is_zero()) throw Error(ErrorKind::DivByZeroBall, "division by exact zero");
  mpq_class aq = ::abs(q.gmp());
  mpfr_div_q(rad_.get(), rad_.get(), aq.get_mpq_t(), MPFR_RNDU);
  add_rounding_error(mpfr_div_q(mid_.get(), mid_.get(), q.gmp().get_mpq_t(), MPFR_RNDN));
  return *this;
}

Ball& Ball::operator*=(const Integer& z) {
  Integer az = ::abs(z);
  mpfr_mul_z(rad_.get(), rad_.get(), az.get_mpz_t(), MPFR_RNDU);
  add_rounding_error(mpfr_mul_z(mid_.get(), mid_.get(), z.get_mpz_t(), MPFR_RNDN));
  return *this;
}

Ball Ball::operator-() const {
  Ball b(*this);
  mpfr_neg(b.mid_.get(), b.mid_.get(), MPFR_RNDN);
  return b;
}

Ball Ball::abs() const {
  const int s = sign();
  if (s > 0) return *this;
  if (s < 0) return -*this;
  // [0, ub] as a ball centred at ub/2
  Mpfr ub = abs_upper64(mid_.get(), rad_.get());
  Ball b(prec());
  mpfr_div_2ui(ub.get(), ub.get(), 1, MPFR_RNDU);
  mpfr_set(b.mid_.get(), ub.get(), MPFR_RNDN);
  b.rad_ = ub;
  return b;
}

double upper_double(const Rational& x) {
  Mpfr m(53);
  mpfr_set_q(m.get(), x.gmp().get_mpq_t(), MPFR_RNDU);
  return mpfr_get_d(m.get(), MPFR_RNDU);
}

Ball ball_arith(const Ball& a, const Ball& b, BallOp op) {
  switch (op) {
    case BallOp::Add: return a + b;
    case BallOp::Sub: return a - b;
    case BallOp::Mul: return a * b;
    case BallOp::Div: return a / b;
  }
  throw Error(ErrorKind::InvalidArgument, "unknown ball op");
}

namespace {

// arctan(1/x) for integer x >= 2.
Ball atan_inverse(long x, mpfr_prec_t prec) {
  const Rational inv_x2(Integer(1), Integer(x) * x);
  Ball power = Ball::from_rational(Rational(Integer(1), Integer(x)), prec);
  Ball sum = power;
  for (long k = 1;; ++k) {
    power *= inv_x2;
    Ball term = power / Rational(2 * k + 1);
    if (k % 2) sum -= term; else sum += term;
    if (term.abs_below_pow2(-static_cast<long>(prec) - 4)) {
      // alternating, decreasing: the rest is bounded by the next term
      sum.add_error(term * inv_x2);
      return sum;
    }
  }
}

}  // namespace

Ball pi_ball(mpfr_prec_t prec) {
  const mpfr_prec_t wp = prec + 32;
  Ball pi = atan_inverse(5, wp) * Rational(16);
  pi -= atan_inverse(239, wp) * Rational(4);
  return pi;
}

}  // namespace lhcert
