#include <lhcert/error.hpp>
#include <lhcert/lambert.hpp>
#include <lhcert/series.hpp>

#include <algorithm>
#include <cmath>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace lhcert {

namespace {

// coef * cur - t * prev
RatPoly recurrence_step(const Rational& coef, const RatPoly& cur, const RatPoly& prev) {
  return poly_combine(coef, cur, Rational(-1), prev, 1);
}

struct TanTable {
  std::shared_mutex mutex;
  std::vector<TanCertPair> rows;
};

TanTable& tan_table() {
  static TanTable table;
  return table;
}

double log2_double_factorial_odd(unsigned n) {
  double s = 0.0;
  for (unsigned j = 1; j <= n; ++j) s += std::log2(2.0 * j + 1.0);
  return s;
}

// Extra working bits for G_n: cancellation in u t S + w C, plus how far
// below 1 the result is expected to sit.
unsigned remainder_extra_bits(unsigned n, double log2_t_abs, double log2_terms) {
  const double expected = (n + 1) * log2_t_abs - log2_double_factorial_odd(n);
  const double extra = 16.0 + std::max(0.0, std::ceil(log2_terms)) +
                       std::max(0.0, std::ceil(-expected));
  return static_cast<unsigned>(extra);
}

Ball horner(const RatPoly& p, const Ball& x) {
  Ball acc(x.prec());
  for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it) {
    acc *= x;
    acc += Ball::from_rational(*it, x.prec());
  }
  return acc;
}

}  // namespace

TanCertPair tan_cert(unsigned n) {
  TanTable& table = tan_table();
  {
    std::shared_lock lock(table.mutex);
    if (n < table.rows.size()) return table.rows[n];
  }
  std::unique_lock lock(table.mutex);
  auto& rows = table.rows;
  if (rows.empty()) {
    rows.push_back({0, RatPoly{1}, RatPoly{}});
    rows.push_back({1, RatPoly{1}, RatPoly{0, -1}});
  }
  while (rows.size() <= n) {
    const unsigned k = static_cast<unsigned>(rows.size());
    const Rational coef(2L * k - 1);
    const TanCertPair& a = rows[k - 1];
    const TanCertPair& b = rows[k - 2];
    TanCertPair next{k, recurrence_step(coef, a.u, b.u), recurrence_step(coef, a.w, b.w)};
    rows.push_back(std::move(next));
  }
  return rows[n];
}

Convergent tan_convergent(unsigned n) {
  if (n == 0) throw Error(ErrorKind::InvalidArgument, "convergent index starts at 1");
  RatPoly p_prev{}, p{0, 1};
  RatPoly q_prev{1}, q{1};
  for (unsigned k = 1; k < n; ++k) {
    const Rational coef(2L * k + 1);
    RatPoly p_next = recurrence_step(coef, p, p_prev);
    RatPoly q_next = recurrence_step(coef, q, q_prev);
    p_prev = std::move(p);
    q_prev = std::move(q);
    p = std::move(p_next);
    q = std::move(q_next);
  }
  return {n, p, q};
}

Ball remainder_value(unsigned n, const Rational& t, unsigned prec) {
  if (t.is_zero()) return Ball(prec);  // G_n(0) = 0 exactly
  const TanCertPair cert = tan_cert(n);
  const Rational ut = cert.u.eval(t) * t;
  const Rational wt = cert.w.eval(t);
  const double log2_terms = (ut.abs() + wt.abs()).log2_abs();
  const unsigned wp = prec + remainder_extra_bits(n, t.log2_abs(), log2_terms);
  Ball g = eval_S(t, wp) * ut;
  g += eval_C(t, wp) * wt;
  return g;
}

Ball remainder_value(unsigned n, const Ball& t, unsigned prec) {
  const TanCertPair cert = tan_cert(n);
  const Rational t_ub = t.upper_abs();
  if (t_ub.is_zero()) return Ball(prec);
  const Ball ut = horner(cert.u, t) * t;
  const Ball wt = horner(cert.w, t);
  const double log2_terms = (ut.upper_abs() + wt.upper_abs()).log2_abs();
  const unsigned wp = prec + remainder_extra_bits(n, t_ub.log2_abs(), log2_terms);
  Ball g = eval_S(t, wp) * ut;
  g += eval_C(t, wp) * wt;
  return g;
}

// ---------------------------------------------------------------------------
// Truncated series in r

ExactSeries ExactSeries::sin_series(unsigned order) {
  ExactSeries s(order);
  Integer fact = 1;
  for (unsigned k = 1; k < order; ++k) {
    fact *= k;
    if (k % 2 == 1) s.c_[k] = Rational((k / 2) % 2 ? Integer(-1) : Integer(1), fact);
  }
  return s;
}

ExactSeries ExactSeries::cos_series(unsigned order) {
  ExactSeries s(order);
  Integer fact = 1;
  for (unsigned k = 0; k < order; ++k) {
    if (k > 0) fact *= k;
    if (k % 2 == 0) s.c_[k] = Rational((k / 2) % 2 ? Integer(-1) : Integer(1), fact);
  }
  return s;
}

ExactSeries ExactSeries::from_even(const RatPoly& p, unsigned order) {
  ExactSeries s(order);
  for (std::size_t k = 0; k < p.coeffs().size() && 2 * k < order; ++k) s.c_[2 * k] = p.coeffs()[k];
  return s;
}

ExactSeries ExactSeries::from_even_over_r(const RatPoly& p, unsigned order) {
  if (!p.coeff(0).is_zero())
    throw Error(ErrorKind::IdentityViolation, "w_n(0) != 0, so w_n / r is not a polynomial");
  ExactSeries s(order);
  for (std::size_t k = 1; k < p.coeffs().size() && 2 * k - 1 < order; ++k)
    s.c_[2 * k - 1] = p.coeffs()[k];
  return s;
}

ExactSeries ExactSeries::derivative() const {
  ExactSeries d(order());
  for (unsigned k = 1; k < order(); ++k) d.c_[k - 1] = c_[k] * Rational(static_cast<long>(k));
  return d;
}

ExactSeries ExactSeries::shifted(unsigned k) const {
  ExactSeries s(order());
  for (unsigned j = 0; j + k < order(); ++j) s.c_[j + k] = c_[j];
  return s;
}

ExactSeries operator+(const ExactSeries& a, const ExactSeries& b) {
  ExactSeries s = a;
  for (unsigned k = 0; k < s.order(); ++k) s.c_[k] += b.c_[k];
  return s;
}

ExactSeries operator-(const ExactSeries& a, const ExactSeries& b) {
  ExactSeries s = a;
  for (unsigned k = 0; k < s.order(); ++k) s.c_[k] -= b.c_[k];
  return s;
}

ExactSeries operator*(const ExactSeries& a, const ExactSeries& b) {
  ExactSeries s(a.order());
  for (unsigned i = 0; i < a.order(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (unsigned j = 0; i + j < a.order(); ++j)
      if (!b.c_[j].is_zero()) s.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return s;
}

ExactSeries operator*(const Rational& x, const ExactSeries& a) {
  ExactSeries s = a;
  for (auto& c : s.c_) c *= x;
  return s;
}

namespace {

void expect_zero(const ExactSeries& s, unsigned upto, unsigned n, const char* what,
                 std::size_t& checked) {
  for (unsigned k = 0; k <= upto && k < s.order(); ++k) {
    ++checked;
    if (!s[k].is_zero())
      throw Error(ErrorKind::IdentityViolation,
                  std::string(what) + " fails at n=" + std::to_string(n) + ", coefficient of r^" +
                      std::to_string(k) + " is " + s[k].to_string());
  }
}

}  // namespace

SeriesRelationReport check_series_relations(unsigned n_max, unsigned order) {
  if (order < 2 * n_max + 4)
    throw Error(ErrorKind::InvalidArgument, "order must be >= 2*n_max + 4");
  SeriesRelationReport report;
  report.n_max = n_max;
  report.order = order;
  const ExactSeries sin_r = ExactSeries::sin_series(order);
  const ExactSeries cos_r = ExactSeries::cos_series(order);
  ExactSeries r(order);
  r[1] = 1;

  for (unsigned n = 0; n <= n_max; ++n) {
    const TanCertPair cert = tan_cert(n);
    report.remainders.push_back(ExactSeries::from_even(cert.u, order) * sin_r +
                                ExactSeries::from_even_over_r(cert.w, order) * cos_r);
  }

  const auto& R = report.remainders;
  std::size_t& checked = report.coefficients_checked;
  for (unsigned n = 0; n <= n_max; ++n) {
    const ExactSeries d1 = R[n].derivative();
    if (n >= 1) expect_zero(d1 - R[n - 1].shifted(1), order - 2, n, "dR_n/dr = r R_{n-1}", checked);

    const ExactSeries ode =
        d1.derivative().shifted(1) - Rational(2L * n) * d1 + R[n].shifted(1);
    expect_zero(ode, order - 2, n, "r R'' - 2n R' + r R = 0", checked);

    if (n >= 2)
      expect_zero(R[n] - (Rational(2L * n - 1) * R[n - 1] - R[n - 2].shifted(2)), order - 1, n,
                  "R_n = (2n-1) R_{n-1} - r^2 R_{n-2}", checked);

    ExactSeries lead = R[n];
    lead[2 * n + 1] -= Rational(Integer(1), double_factorial_odd(n));
    expect_zero(lead, 2 * n + 1, n, "leading term r^{2n+1}/(2n+1)!!", checked);
  }
  return report;
}

DecayTable decay_table(const Rational& t, unsigned n_max, unsigned prec) {
  if (t.is_zero()) throw Error(ErrorKind::InvalidArgument, "decay table needs t != 0");
  DecayTable table;
  table.t = t;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational scale(pow(t.den(), half_up(n)));
    table.rows.push_back({n, remainder_value(n, t, prec).upper_abs() * scale});
  }
  unsigned c = n_max;
  while (c > 0 && table.rows[c - 1].scaled_upper > table.rows[c].scaled_upper) --c;
  table.crossover = c;
  return table;
}

Ball niven_H(unsigned n, unsigned prec) {
  const unsigned pi_prec =
      prec + 64 + static_cast<unsigned>(2.0 * log2_double_factorial_odd(n)) + 4 * n;
  const Ball pi = pi_ball(pi_prec);
  const Ball t = pi * pi / Rational(4);
  const Ball g = remainder_value(n, t, prec);
  // 2^{n+1} R_n(pi/2) = 2^{n+1} G_n / r with r = pi/2
  return g * Rational(pow(Integer(2), n + 2)) / pi;
}

}  // namespace lhcert
