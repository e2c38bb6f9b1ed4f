#include <lhcert/bessel.hpp>
#include <lhcert/error.hpp>
#include <lhcert/series.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <shared_mutex>
#include <string>

namespace lhcert {

namespace {

struct BesselTable {
  std::shared_mutex mutex;
  std::map<Rational, std::vector<BesselCertPair>> rows;
};

BesselTable& bessel_table() {
  static BesselTable table;
  return table;
}

void require_order(const Rational& s) {
  if (s.is_negative_integer())
    throw Error(ErrorKind::InvalidOrder, "order " + s.to_string() + " is a negative integer");
}

// Sign of N_nu(t) by precision doubling; sign 0 if still inconclusive at cap.
SignCertificate try_sign(const Rational& nu, const Rational& t, unsigned start_prec,
                         unsigned prec_cap) {
  for (unsigned p = start_prec; p <= prec_cap; p *= 2) {
    const int s = eval_N(nu, t, p).sign();
    if (s != 0) return {s, p};
  }
  return {0, prec_cap};
}

}  // namespace

BesselCertPair bessel_cert(unsigned n, const Rational& s) {
  BesselTable& table = bessel_table();
  {
    std::shared_lock lock(table.mutex);
    auto it = table.rows.find(s);
    if (it != table.rows.end() && n < it->second.size()) return it->second[n];
  }
  std::unique_lock lock(table.mutex);
  auto& rows = table.rows[s];
  if (rows.empty()) {
    rows.push_back({0, s, RatPoly{1}, RatPoly{}});
    rows.push_back({1, s, RatPoly{Rational(2) * (s + Rational(1))}, RatPoly{0, -1}});
  }
  while (rows.size() <= n) {
    const unsigned k = static_cast<unsigned>(rows.size()) - 1;  // building k+1
    const Rational coef = Rational(2) * (Rational(static_cast<long>(k) + 1) + s);
    const BesselCertPair& a = rows[k];
    const BesselCertPair& b = rows[k - 1];
    BesselCertPair next{k + 1, s, poly_combine(coef, a.u, Rational(-1), b.u, 1),
                        poly_combine(coef, a.w, Rational(-1), b.w, 1)};
    rows.push_back(std::move(next));
  }
  return rows[n];
}

Ball bessel_numerator_value(const Rational& s, const Rational& t, unsigned prec) {
  return eval_N(s + Rational(1), t, prec) * (t / (Rational(2) * (s + Rational(1))));
}

Ball bessel_scaled_value(unsigned n, const Rational& s, const Rational& t, unsigned prec) {
  require_order(s);
  const Rational scale = (t / Rational(2)).pow(n + 1) / pochhammer(s + Rational(1), n + 1);
  return eval_N(s + Rational(static_cast<long>(n) + 1), t, prec) * scale;
}

RatioValue bessel_ratio(const Rational& s, const Rational& t, unsigned prec, unsigned prec_cap) {
  require_order(s);
  if (t.is_zero()) return {s, t, Ball(prec), prec};
  for (unsigned p = prec; p <= prec_cap; p *= 2) {
    const Ball ns = eval_N(s, t, p);
    if (ns.sign() == 0) continue;
    return {s, t, bessel_numerator_value(s, t, p) / ns, p};
  }
  throw Error(ErrorKind::Inconclusive, "N_s(t) not separated from 0 at " +
                                           std::to_string(prec_cap) + " bits (s=" +
                                           s.to_string() + ", t=" + t.to_string() + ")");
}

Rational ratio_cf_convergent(const Rational& s, unsigned k, const Rational& t) {
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "truncation depth starts at 1");
  auto degenerate = [k](unsigned level) {
    return Error(ErrorKind::DegenerateTruncation, "zero denominator at level " +
                                                      std::to_string(level) + " of depth " +
                                                      std::to_string(k));
  };
  Rational x = Rational(2) * (s + Rational(static_cast<long>(k)));
  for (unsigned j = k - 1; j >= 1; --j) {
    if (x.is_zero()) throw degenerate(j + 1);
    x = Rational(2) * (s + Rational(static_cast<long>(j))) - t / x;
  }
  if (x.is_zero()) throw degenerate(1);
  return t / x;
}

CoeffIdentityReport check_bessel_coeff_identities(const Rational& nu, unsigned K) {
  if (K < 2) throw Error(ErrorKind::InvalidArgument, "need K >= 2");
  const SeriesSpec spec(nu);
  const Rational nu1 = nu + Rational(1);

  auto direct = [](const Rational& order, unsigned k) {
    Integer fact = 1;
    for (unsigned j = 2; j <= k; ++j) fact *= j;
    return Rational(-1, 4).pow(k) / (Rational(fact) * pochhammer(order + Rational(1), k));
  };

  CoeffIdentityReport report;
  report.nu = nu;
  report.K = K;
  for (unsigned k = 0; k <= K; ++k) report.coeffs.push_back(direct(nu, k));

  auto fail = [&nu](const char* what, unsigned k) {
    return Error(ErrorKind::IdentityViolation,
                 std::string(what) + " fails at nu=" + nu.to_string() + ", k=" + std::to_string(k));
  };
  const auto& c = report.coeffs;
  for (unsigned k = 0; k < K; ++k) {
    ++report.identities_checked;
    if (c[k + 1] != c[k] * spec.term_ratio(k)) throw fail("term ratio", k);
  }
  for (unsigned k = 1; k <= K; ++k) {
    const Rational kk(static_cast<long>(k));
    ++report.identities_checked;
    if (Rational(2) * kk * c[k] != -direct(nu1, k - 1) / (Rational(2) * nu1))
      throw fail("derivative relation", k);
    ++report.identities_checked;
    const Rational lift = nu + Rational(2) * kk;
    if ((lift * lift - nu * nu) * c[k] + c[k - 1] != Rational(0)) throw fail("Bessel ODE", k);
  }
  return report;
}

std::vector<PairVerdict> lemma1_check(const Rational& nu, const Rational& t, int n_lo, int n_hi,
                                      unsigned prec_cap) {
  if (t.is_zero()) throw Error(ErrorKind::InvalidArgument, "lemma1_check needs t != 0");
  if (n_hi <= n_lo) throw Error(ErrorKind::InvalidArgument, "empty index range");

  auto sign_at = [&](int n) {
    Rational order = nu + Rational(static_cast<long>(n));
    if (order.is_negative_integer()) order = -order;  // J_{-m} = (-1)^m J_m
    return try_sign(order, t, 64, prec_cap);
  };

  std::vector<PairVerdict> out;
  SignCertificate lo = sign_at(n_lo);
  for (int n = n_lo; n < n_hi; ++n) {
    const SignCertificate hi = sign_at(n + 1);
    PairVerdict v;
    v.n = n;
    v.sign_lo = lo.sign;
    v.sign_hi = hi.sign;
    v.prec_used = std::max(lo.prec_used, hi.prec_used);
    v.verdict = (lo.sign != 0 || hi.sign != 0) ? Verdict::Certified : Verdict::Inconclusive;
    out.push_back(v);
    lo = hi;
  }
  return out;
}

SignCertificate nonzero_J(const Rational& s, const Rational& t, unsigned prec_cap,
                          unsigned start_prec) {
  require_order(s);
  if (t.is_zero()) throw Error(ErrorKind::InvalidArgument, "nonzero_J needs t != 0");
  const SignCertificate c = try_sign(s, t, start_prec, prec_cap);
  if (c.sign == 0)
    throw Error(ErrorKind::Inconclusive, "sign of N_" + s.to_string() + "(" + t.to_string() +
                                             ") unresolved at " + std::to_string(prec_cap) +
                                             " bits");
  return c;
}

std::vector<BesselDecayRow> bessel_decay_table(const Rational& s, const Rational& t,
                                               unsigned n_max, unsigned prec) {
  require_order(s);
  if (t.is_zero()) throw Error(ErrorKind::InvalidArgument, "decay table needs t != 0");
  const double r = std::sqrt(std::fabs(t.to_double()));
  std::vector<BesselDecayRow> rows;
  for (unsigned n = 0; n <= n_max; ++n) {
    const Rational order = s + Rational(static_cast<long>(n) + 1);
    const Ball here = eval_N(order, t, prec);
    const Ball next = eval_N(order + Rational(1), t, prec);
    BesselDecayRow row;
    row.n = n;
    row.v_upper = bessel_scaled_value(n, s, t, prec).upper_abs();
    row.observed_ratio = std::fabs(0.5 * r * next.mid_double() /
                                   ((order + Rational(1)).to_double() * here.mid_double()));
    row.poisson_ratio = r / (2.0 * (static_cast<double>(n) + s.to_double() + 1.5));
    rows.push_back(row);
  }
  return rows;
}

}  // namespace lhcert
