#pragma once

// Rigorous evaluation of the even power series behind everything else, all
// written in t = r^2:
//
//   N_nu(t) = Gamma(nu+1) (r/2)^-nu J_nu(r) = sum_k (-t/4)^k / (k! (nu+1)_k)
//   S(t)    = sin(r)/r = N_{1/2}(t)
//   C(t)    = cos(r)   = N_{-1/2}(t)
//
// Negative t gives the sinh/cosh/I_nu branch with no extra code.

#include <lhcert/ball.hpp>
#include <lhcert/rational.hpp>

namespace lhcert {

// Order nu of N_nu together with its term-ratio rule.
class SeriesSpec {
 public:
  // Throws InvalidOrder when nu is a negative integer.
  explicit SeriesSpec(Rational nu);

  const Rational& order() const { return nu_; }
  // c_{k+1} / c_k = -1 / (4 (k+1) (nu+k+1))
  Rational term_ratio(unsigned k) const;
  // Exact c_k.
  Rational coeff(unsigned k) const;

 private:
  Rational nu_;
};

// Tail contract: summation stops once a term is below 2^(-prec-8) and the
// following term ratios are below 1/2; the tail is then charged as twice the
// last term.
Ball eval_N(const Rational& nu, const Rational& t, unsigned prec);
Ball eval_N(const Rational& nu, const Ball& t, unsigned prec);

Ball eval_S(const Rational& t, unsigned prec);
Ball eval_C(const Rational& t, unsigned prec);
Ball eval_S(const Ball& t, unsigned prec);
Ball eval_C(const Ball& t, unsigned prec);

// Rising factorial (x)_k.
Rational pochhammer(const Rational& x, unsigned k);

// 1*3*5*...*(2n+1)
Integer double_factorial_odd(unsigned n);

}  // namespace lhcert
