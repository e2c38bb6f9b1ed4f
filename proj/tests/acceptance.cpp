// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "oracle.hpp"

#include <lhcert/bessel.hpp>
#include <lhcert/certify.hpp>
#include <lhcert/error.hpp>
#include <lhcert/lambert.hpp>
#include <lhcert/quadrature.hpp>
#include <lhcert/series.hpp>

#include <boost/math/special_functions/gamma.hpp>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>

using namespace lhcert;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

class Check {
 public:
  void expect(bool ok, const std::string& what) {
    ++checks_;
    if (!ok) {
      ++failures_;
      if (first_.empty()) first_ = what;
    }
  }
  void note(const std::string& s) { note_ = s; }
  Outcome outcome() const {
    std::ostringstream os;
    os << checks_ << " checks";
    if (failures_) os << ", " << failures_ << " failed; first: " << first_;
    if (!note_.empty()) os << "; " << note_;
    return {failures_ == 0, os.str()};
  }

 private:
  std::size_t checks_ = 0;
  std::size_t failures_ = 0;
  std::string first_;
  std::string note_;
};

std::string str(const Rational& x) { return x.to_string(); }

Rational pow2(long e) {
  return e >= 0 ? Rational(pow(Integer(2), static_cast<unsigned>(e)))
                : Rational(1) / Rational(pow(Integer(2), static_cast<unsigned>(-e)));
}

double qd(QuadFloat x) { return static_cast<double>(x); }

QuadFloat mid_quad(const Ball& b) { return to_quad(b.mid_rational()); }

Outcome c1_remainder_displays() {
  Check c;
  c.expect(tan_cert(1).u == RatPoly{1} && tan_cert(1).w == (RatPoly{0, -1}), "R_1");
  c.expect(tan_cert(2).u == (RatPoly{3, -1}) && tan_cert(2).w == (RatPoly{0, -3}), "R_2");
  c.expect(tan_cert(3).u == (RatPoly{15, -6}) && tan_cert(3).w == (RatPoly{0, -15, 1}), "R_3");
  const auto rep = check_series_relations(3, 16);
  const auto& r1 = rep.remainders[1];
  const auto& r2 = rep.remainders[2];
  c.expect(r1[0].is_zero() && r1[1].is_zero() && r1[2].is_zero(), "R_1 low terms");
  c.expect(r1[3] == Rational(1, 3) && r1[4].is_zero() && r1[5] == Rational(-1, 30), "R_1 head");
  bool low = true;
  for (unsigned k = 0; k < 5; ++k) low &= r2[k].is_zero();
  c.expect(low, "R_2 low terms");
  c.expect(r2[5] == Rational(1, 15) && r2[6].is_zero() && r2[7] == Rational(-1, 210), "R_2 head");
  return c.outcome();
}

Outcome c2_series_identities() {
  Check c;
  try {
    const auto rep = check_series_relations(8, 40);
    c.expect(rep.remainders.size() == 9, "report size");
    c.note(std::to_string(rep.coefficients_checked) + " coefficients");
  } catch (const Error& e) {
    c.expect(false, e.what());
  }
  return c.outcome();
}

Outcome c3_hermite_vs_series() {
  Check c;
  const auto start = std::chrono::steady_clock::now();
  double worst = 0;
  for (const Rational& t : {Rational(1, 4), Rational(1), Rational(4)}) {
    const QuadFloat r = sqrt(to_quad(t));
    for (unsigned n = 0; n <= 10; ++n) {
      const double err = qd(abs(hermite_integral(n, t).value - mid_quad(remainder_value(n, t, 256)) / r));
      worst = std::max(worst, err);
      c.expect(err < 1e-12, "n=" + std::to_string(n) + " t=" + str(t));
    }
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  c.expect(secs < 10, "runtime");
  std::ostringstream os;
  os << "max err " << worst << ", " << secs << " s";
  c.note(os.str());
  return c.outcome();
}

Outcome c4_poisson_vs_series() {
  Check c;
  double worst = 0;
  for (const Rational& nu : {Rational(0), Rational(1, 2), Rational(5, 2), Rational(1, 3)}) {
    for (const Rational& t : {Rational(1), Rational(4)}) {
      // J_nu(r) = (r/2)^nu N_nu(t) / Gamma(nu+1)
      const QuadFloat r = sqrt(to_quad(t));
      const QuadFloat v = to_quad(nu);
      const QuadFloat series = pow(r / 2, v) * mid_quad(eval_N(nu, t, 256)) / boost::math::tgamma(v + 1);
      const double err = qd(abs(poisson_integral(nu, t).value - series));
      worst = std::max(worst, err);
      c.expect(err < 1e-10, "nu=" + str(nu) + " t=" + str(t));
    }
  }
  std::ostringstream os;
  os << "max err " << worst;
  c.note(os.str());
  return c.outcome();
}

Outcome c5_iterated() {
  Check c;
  double worst = 0;
  for (const Rational& t : {Rational(1, 4), Rational(1)}) {
    for (unsigned n = 1; n <= 3; ++n) {
      const double err = qd(abs(iterated_remainder(n, t).value - hermite_integral(n, t).value));
      worst = std::max(worst, err);
      c.expect(err < 1e-8, "n=" + std::to_string(n) + " t=" + str(t));
    }
  }
  std::ostringstream os;
  os << "max err " << worst;
  c.note(os.str());
  return c.outcome();
}

Outcome c6_bridge() {
  Check c;
  double worst = -1e9;
  for (const Rational& t : {Rational(1), Rational(-1), Rational(1, 2), Rational(-1, 2), Rational(4)}) {
    for (unsigned n = 0; n <= 20; ++n) {
      const Ball g = remainder_value(n, t, 256);
      const Ball b = eval_N(Rational(2 * static_cast<long>(n) + 1, 2), t, 256) *
                     (t.pow(n + 1) / Rational(double_factorial_odd(n)));
      const std::string id = "n=" + std::to_string(n) + " t=" + str(t);
      c.expect(g.overlaps(b), "overlap " + id);
      const Rational rad = detail::to_rational(g.rad()) + detail::to_rational(b.rad());
      c.expect(rad < pow2(-200), "radius " + id);
      if (!rad.is_zero()) worst = std::max(worst, rad.log2_abs());
    }
  }
  std::ostringstream os;
  os << "largest combined radius 2^" << std::lround(worst);
  c.note(os.str());
  return c.outcome();
}

Outcome c7_duality() {
  Check c;
  for (unsigned n = 1; n <= 100; ++n) {
    const auto cert = tan_cert(n);
    const auto conv = tan_convergent(n);
    c.expect(cert.u == conv.q && cert.w == -conv.p, "n=" + std::to_string(n));
  }
  return c.outcome();
}

Outcome c8_half_order() {
  Check c;
  for (unsigned n = 0; n <= 100; ++n) {
    const auto b = bessel_cert(n, Rational(-1, 2));
    const auto t = tan_cert(n);
    c.expect(b.u == t.u && b.w == t.w, "n=" + std::to_string(n));
  }
  return c.outcome();
}

Outcome c9_decay() {
  Check c;
  const Rational tiny = Rational(1) / Rational(pow(Integer(10), 50));
  std::ostringstream os;
  for (const Rational& t : {Rational(1), Rational(1, 2), Rational(2, 3)}) {
    const DecayTable tab = decay_table(t, 120, 512);
    int first_tiny = -1;
    for (const auto& row : tab.rows)
      if (first_tiny < 0 && row.scaled_upper < tiny) first_tiny = static_cast<int>(row.n);
    c.expect(first_tiny >= 0, "below 1e-50 at t=" + str(t));
    bool decreasing = true;
    for (std::size_t i = tab.crossover + 1; i < tab.rows.size(); ++i)
      decreasing &= tab.rows[i].scaled_upper < tab.rows[i - 1].scaled_upper;
    c.expect(decreasing, "strictly decreasing at t=" + str(t));
    c.expect(tab.crossover < 120, "crossover inside table at t=" + str(t));
    os << "t=" << t << ": crossover " << tab.crossover << ", <1e-50 at n=" << first_tiny << "  ";
  }
  c.note(os.str());
  return c.outcome();
}

struct CertStats {
  std::size_t emitted = 0;
  std::size_t witnesses_checked = 0;
  std::size_t witness_failures = 0;
};

CertStats g_cert_stats;

// Large b and d push the first flagged row past the default n_max of 64.
constexpr unsigned kSoundnessBudget = 160;

Rational nearby(const Rational& x, const Integer& q, long offset) {
  Integer p;
  const Integer scaled = x.num() * q;
  mpz_fdiv_q(p.get_mpz_t(), scaled.get_mpz_t(), x.den().get_mpz_t());
  return Rational(Integer(p + offset), q);
}

void record_witnesses(const CertProblem& p, const GapCertificate& cert) {
  for (unsigned n = 0; n <= cert.n; ++n) {
    const Rational w = scaled_witness(p, n);
    ++g_cert_stats.witnesses_checked;
    if (w.den() != 1) ++g_cert_stats.witness_failures;
    if (n == cert.n && w != Rational(cert.witness)) ++g_cert_stats.witness_failures;
  }
}

Outcome c10_soundness() {
  Check c;
  std::mt19937_64 rng(20240611);
  std::uniform_int_distribution<long> tnum(-20, 20), tden(1, 10), qden(1, 1000000), off(-2, 2);
  Rational tightest = 1;
  auto run_one = [&](CertProblem p, const Rational& truth, const std::string& id) {
    try {
      const GapCertificate cert = gap_certificate(p);
      ++g_cert_stats.emitted;
      record_witnesses(p, cert);
      const Rational gap = (truth - p.candidate).abs();
      c.expect(cert.gap_lower_bound > 0, "positive " + id);
      c.expect(cert.gap_lower_bound <= gap, "sound " + id);
      if (cert.gap_lower_bound <= gap && gap > 0) {
        const Rational slack = (gap - cert.gap_lower_bound) / gap;
        if (slack < tightest) tightest = slack;
      }
    } catch (const Error& e) {
      c.expect(false, id + ": " + e.what());
    }
  };
  const unsigned oracle_bits = 4 * 256;
  int tan_done = 0;
  while (tan_done < 200) {
    const Rational t(Integer(tnum(rng)), Integer(tden(rng)));
    if (t.is_zero()) continue;
    const Rational truth = oracle::tan_target(t, oracle_bits);
    CertProblem p;
    p.kind = CertKind::Tan;
    p.t = t;
    p.n_max = kSoundnessBudget;
    p.candidate = nearby(truth, Integer(qden(rng)), off(rng));
    run_one(p, truth, "tan t=" + str(t) + " pq=" + str(p.candidate));
    ++tan_done;
  }
  const std::vector<Rational> orders{Rational(0), Rational(1, 2), Rational(1, 3), Rational(-2, 5)};
  int bessel_done = 0;
  while (bessel_done < 100) {
    const Rational s = orders[bessel_done % orders.size()];
    const Rational t(Integer(tnum(rng)), Integer(tden(rng)));
    if (t.is_zero()) continue;
    const Rational truth = oracle::bessel_target(s, t, oracle_bits);
    CertProblem p;
    p.kind = CertKind::Bessel;
    p.s = s;
    p.t = t;
    p.n_max = kSoundnessBudget;
    p.candidate = nearby(truth, Integer(qden(rng)), off(rng));
    run_one(p, truth, "bessel s=" + str(s) + " t=" + str(t) + " pq=" + str(p.candidate));
    ++bessel_done;
  }
  std::ostringstream os;
  os << g_cert_stats.emitted << " certificates, smallest relative slack " << tightest.to_double();
  c.note(os.str());
  return c.outcome();
}

Outcome c11_niven() {
  Check c;
  const QuadFloat half_pi = boost::math::constants::half_pi<QuadFloat>();
  double worst = 0;
  for (unsigned n = 0; n <= 6; ++n) {
    const QuadFloat h = pow(QuadFloat(2), n + 1) * hermite_integral_at(n, half_pi).value;
    const double err = qd(abs(h - mid_quad(niven_H(n, 256))));
    worst = std::max(worst, err);
    c.expect(err < 1e-10, "n=" + std::to_string(n));
  }
  const Ball h0 = niven_H(0, 256);
  const Ball h1 = niven_H(1, 256);
  c.expect(h0.contains(Rational(2)) && h0.rad_log2() < -200, "H_0 = 2");
  c.expect(h1.contains(Rational(4)) && h1.rad_log2() < -200, "H_1 = 4");
  std::ostringstream os;
  os << "max err " << worst << ", H_0 = " << h0.to_string(25) << ", H_1 = " << h1.to_string(25);
  c.note(os.str());
  return c.outcome();
}

Outcome c12_lemma1() {
  Check c;
  struct Case {
    Rational nu, t;
    int lo, hi;
  };
  const std::vector<Case> curated{
      {Rational(0), Rational(1871, 323), 0, 1},
      {Rational(0), Rational(Integer("5783185962946785"), Integer("1000000000000000")), 0, 1},
      {Rational(1, 2), Rational(1), 0, 10},
  };
  unsigned max_prec = 0;
  for (const auto& k : curated) {
    for (const auto& row : lemma1_check(k.nu, k.t, k.lo, k.hi, kDefaultPrecCap)) {
      c.expect(row.verdict == Verdict::Certified, "nu=" + str(k.nu) + " t=" + str(k.t) + " n=" + std::to_string(row.n));
      max_prec = std::max(max_prec, row.prec_used);
    }
  }
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long> snum(-30, 30), sden(1, 7), tnum(-60, 60), tden(1, 13);
  int done = 0;
  while (done < 50) {
    const Rational s(Integer(snum(rng)), Integer(sden(rng)));
    const Rational t(Integer(tnum(rng)), Integer(tden(rng)));
    if (t.is_zero() || s.is_negative_integer()) continue;
    try {
      const SignCertificate sc = nonzero_J(s, t, kDefaultPrecCap);
      c.expect(sc.sign == 1 || sc.sign == -1, "sign s=" + str(s) + " t=" + str(t));
      max_prec = std::max(max_prec, sc.prec_used);
    } catch (const Error& e) {
      c.expect(false, "s=" + str(s) + " t=" + str(t) + ": " + e.what());
    }
    ++done;
  }
  c.note("max precision used " + std::to_string(max_prec) + " bits");
  return c.outcome();
}

Outcome c13_integer_witnesses() {
  Check c;
  c.expect(g_cert_stats.emitted >= 300, "criterion 10 runs present");
  c.expect(g_cert_stats.witness_failures == 0, "witness denominators");
  c.note(std::to_string(g_cert_stats.witnesses_checked) + " witnesses across " +
         std::to_string(g_cert_stats.emitted) + " certificates");
  return c.outcome();
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"1  remainder displays and series heads", c1_remainder_displays},
      {"2  exact series identities (n<=8, order 40)", c2_series_identities},
      {"3  Hermite integral vs ball remainders", c3_hermite_vs_series},
      {"4  Poisson integral vs series", c4_poisson_vs_series},
      {"5  iterated integral vs Hermite integral", c5_iterated},
      {"6  half-integer Bessel bridge", c6_bridge},
      {"7  certificate/convergent duality", c7_duality},
      {"8  s=-1/2 reduction to tan", c8_half_order},
      {"9  scaled remainder decay", c9_decay},
      {"10 gap certificate soundness", c10_soundness},
      {"11 Niven integrals", c11_niven},
      {"12 consecutive zeros and nonzero signs", c12_lemma1},
      {"13 witness integrality", c13_integer_witnesses},
  };
  int failed = 0;
  for (const auto& [name, fn] : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%s criterion %s (%.2fs): %s\n", o.pass ? "PASS" : "FAIL", name.c_str(), secs, o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failed;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
