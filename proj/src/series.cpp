#include <lhcert/error.hpp>
#include <lhcert/series.hpp>

#include <algorithm>
#include <bit>
#include <cmath>

namespace lhcert {

SeriesSpec::SeriesSpec(Rational nu) : nu_(std::move(nu)) {
  if (nu_.is_negative_integer())
    throw Error(ErrorKind::InvalidOrder, "order " + nu_.to_string() + " is a negative integer");
}

Rational SeriesSpec::term_ratio(unsigned k) const {
  const Rational k1(static_cast<long>(k) + 1);
  return Rational(-1) / (Rational(4) * k1 * (nu_ + k1));
}

Rational SeriesSpec::coeff(unsigned k) const {
  Rational c(1);
  for (unsigned j = 0; j < k; ++j) c *= term_ratio(j);
  return c;
}

Rational pochhammer(const Rational& x, unsigned k) {
  Rational p(1);
  for (unsigned j = 0; j < k; ++j) p *= x + Rational(static_cast<long>(j));
  return p;
}

Integer double_factorial_odd(unsigned n) {
  Integer f = 1;
  for (unsigned j = 1; j <= n; ++j) f *= 2 * j + 1;
  return f;
}

namespace {

// Can the tail from term index k on be dominated geometrically, i.e. are all
// ratios |t| / (4 (j+1) (nu+j+1)) for j >= k below 1/2?
bool tail_dominated(const Rational& nu, const Rational& t_abs_ub, unsigned k) {
  const Rational k1(static_cast<long>(k) + 1);
  const Rational shifted = nu + k1;
  if (shifted.sign() <= 0) return false;
  return Rational(2) * t_abs_ub < Rational(4) * k1 * shifted;
}

// Number of terms and peak log2 term size, estimated in doubles.
struct SumPlan {
  unsigned terms = 0;
  double peak_log2 = 0.0;
};

SumPlan plan_sum(const Rational& nu, const Rational& t_abs_ub, unsigned prec) {
  SumPlan plan;
  const double lt = t_abs_ub.log2_abs();
  const double nu_d = nu.to_double();
  double cur = 0.0;
  for (unsigned k = 0; k < 50'000'000; ++k) {
    const double k1 = static_cast<double>(k) + 1.0;
    const double shifted = std::max(std::fabs(nu_d + k1), 1e-300);
    cur += lt - std::log2(4.0 * k1 * shifted);
    plan.peak_log2 = std::max(plan.peak_log2, cur);
    plan.terms = k + 1;
    if (cur < -static_cast<double>(prec) - 8.0 && tail_dominated(nu, t_abs_ub, k + 1)) break;
  }
  return plan;
}

Ball sum_normalized(const SeriesSpec& spec, const Rational* exact_t, const Ball* ball_t,
                    unsigned prec) {
  if (prec < 32) throw Error(ErrorKind::InvalidArgument, "precision must be >= 32 bits");
  const Rational t_abs_ub = exact_t ? exact_t->abs() : ball_t->upper_abs();
  if (t_abs_ub.is_zero()) return Ball::from_integer(1, prec);

  const SumPlan plan = plan_sum(spec.order(), t_abs_ub, prec);
  const unsigned wp = prec + 24 + static_cast<unsigned>(std::bit_width(plan.terms)) +
                      static_cast<unsigned>(std::ceil(plan.peak_log2));

  Ball sum = Ball::from_integer(1, wp);
  Ball term = sum;
  for (unsigned k = 0;; ++k) {
    if (exact_t) {
      term *= *exact_t * spec.term_ratio(k);
    } else {
      term *= *ball_t;
      term *= spec.term_ratio(k);
    }
    sum += term;
    if (term.abs_below_pow2(-static_cast<long>(prec) - 8) &&
        tail_dominated(spec.order(), t_abs_ub, k + 1)) {
      sum.add_error(term * Rational(2));
      return sum;
    }
  }
}

}  // namespace

Ball eval_N(const Rational& nu, const Rational& t, unsigned prec) {
  return sum_normalized(SeriesSpec(nu), &t, nullptr, prec);
}

Ball eval_N(const Rational& nu, const Ball& t, unsigned prec) {
  return sum_normalized(SeriesSpec(nu), nullptr, &t, prec);
}

Ball eval_S(const Rational& t, unsigned prec) { return eval_N(Rational(1, 2), t, prec); }
Ball eval_C(const Rational& t, unsigned prec) { return eval_N(Rational(-1, 2), t, prec); }
Ball eval_S(const Ball& t, unsigned prec) { return eval_N(Rational(1, 2), t, prec); }
Ball eval_C(const Ball& t, unsigned prec) { return eval_N(Rational(-1, 2), t, prec); }

}  // namespace lhcert
