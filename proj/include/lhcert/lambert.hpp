#pragma once

// The tan side: Lambert's remainders R_n, their certificate polynomials,
// the continued-fraction convergents of r tan r, and cross-checks.
//
// Everything is stored as a function of t = r^2. The remainder value we keep
// is G_n(t) = r R_n(r) = u_n(t) t S(t) + w_n(t) C(t), with w_n = r v_n.

#include <lhcert/ball.hpp>
#include <lhcert/ratpoly.hpp>

#include <optional>
#include <vector>

namespace lhcert {

// R_n = u_n sin r + v_n cos r, stored as (u_n, w_n = r v_n).
struct TanCertPair {
  unsigned n = 0;
  RatPoly u;
  RatPoly w;
};

// n-th convergent P_n(t) / Q_n(t) of the continued fraction of r tan r.
struct Convergent {
  unsigned n = 1;
  RatPoly p;
  RatPoly q;
};

// Power series in r truncated modulo r^order.
class ExactSeries {
 public:
  explicit ExactSeries(unsigned order) : c_(order) {}

  static ExactSeries sin_series(unsigned order);
  static ExactSeries cos_series(unsigned order);
  // P(r^2)
  static ExactSeries from_even(const RatPoly& p, unsigned order);
  // P(r^2) / r; needs P(0) = 0.
  static ExactSeries from_even_over_r(const RatPoly& p, unsigned order);

  unsigned order() const { return static_cast<unsigned>(c_.size()); }
  const Rational& operator[](unsigned k) const { return c_[k]; }
  Rational& operator[](unsigned k) { return c_[k]; }

  ExactSeries derivative() const;
  // times r^k
  ExactSeries shifted(unsigned k) const;

  friend ExactSeries operator+(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator-(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator*(const ExactSeries& a, const ExactSeries& b);
  friend ExactSeries operator*(const Rational& s, const ExactSeries& a);

 private:
  std::vector<Rational> c_;
};

TanCertPair tan_cert(unsigned n);
Convergent tan_convergent(unsigned n);

// Ball for G_n(t) with radius about 2^-prec relative to the larger of 1 and
// the expected size of G_n.
Ball remainder_value(unsigned n, const Rational& t, unsigned prec);
Ball remainder_value(unsigned n, const Ball& t, unsigned prec);

struct SeriesRelationReport {
  unsigned n_max = 0;
  unsigned order = 0;
  // R_0 .. R_{n_max} as truncated series in r
  std::vector<ExactSeries> remainders;
  std::size_t coefficients_checked = 0;
};

// Verifies dR_n/dr = r R_{n-1}, r R_n'' - 2n R_n' + r R_n = 0,
// R_n = (2n-1) R_{n-1} - r^2 R_{n-2} and the leading term r^{2n+1}/(2n+1)!!,
// all as exact truncated-series identities. Throws IdentityViolation.
SeriesRelationReport check_series_relations(unsigned n_max, unsigned order);

struct DecayRow {
  unsigned n = 0;
  // rigorous upper bound of b^ceil(n/2) |G_n(t)|
  Rational scaled_upper;
};

struct DecayTable {
  Rational t;
  std::vector<DecayRow> rows;
  // rows are strictly decreasing from this index on
  unsigned crossover = 0;
};

DecayTable decay_table(const Rational& t, unsigned n_max, unsigned prec);

// Niven's H_n = int_0^pi x^n (pi-x)^n / n! sin x dx = 2^{n+1} R_n(pi/2).
Ball niven_H(unsigned n, unsigned prec);

// ceil(n/2)
inline unsigned half_up(unsigned n) { return (n + 1) / 2; }

}  // namespace lhcert
