#pragma once

// Bessel-ratio machinery for rho_s(r) = r J_{s+1}(r) / J_s(r).
//
// Normalized coordinates: dividing by (r/2)^s / Gamma(s+1),
//   J_s          -> N_s(t)
//   r J_{s+1}    -> t N_{s+1}(t) / (2 (s+1))
//   r^{n+1} J_{n+s+1} -> V_n = (t/2)^{n+1} N_{n+s+1}(t) / (s+1)_{n+1}
// and the certificate identity reads V_n = u_n * (r J_{s+1}) + w_n * J_s.

#include <lhcert/ball.hpp>
#include <lhcert/ratpoly.hpp>

#include <vector>

namespace lhcert {

// r^n J_{n+s+1} = u_n J_{s+1} + v_n J_s, stored with w_n = r v_n.
struct BesselCertPair {
  unsigned n = 0;
  Rational s;
  RatPoly u;
  RatPoly w;
};

struct RatioValue {
  Rational s;
  Rational t;
  Ball value;
  unsigned prec_used = 0;
};

struct SignCertificate {
  int sign = 0;
  unsigned prec_used = 0;
};

inline constexpr unsigned kDefaultPrecCap = 16384;

BesselCertPair bessel_cert(unsigned n, const Rational& s);

// Escalates precision (doubling, starting at prec) until N_s(t) excludes 0.
// Throws Inconclusive at the cap.
RatioValue bessel_ratio(const Rational& s, const Rational& t, unsigned prec,
                        unsigned prec_cap = kDefaultPrecCap);

// k-level truncation t / (2(s+1) - t / (2(s+2) - ... - t / (2(s+k)))).
// Throws DegenerateTruncation on a zero intermediate denominator.
Rational ratio_cf_convergent(const Rational& s, unsigned k, const Rational& t);

struct CoeffIdentityReport {
  Rational nu;
  unsigned K = 0;
  std::vector<Rational> coeffs;  // c_0 .. c_K
  std::size_t identities_checked = 0;
};

// Exact checks on c_k = (-1/4)^k / (k! (nu+1)_k), k <= K: the term ratio,
// the derivative relation d/(r dr)(r^-nu J_nu) = -r^-(nu+1) J_{nu+1}, and
// the Bessel ODE recursion [(nu+2k)^2 - nu^2] c_k + c_{k-1} = 0.
CoeffIdentityReport check_bessel_coeff_identities(const Rational& nu, unsigned K);

enum class Verdict { Certified, Inconclusive };

struct PairVerdict {
  int n = 0;            // pair (nu+n, nu+n+1)
  Verdict verdict = Verdict::Inconclusive;
  int sign_lo = 0;      // 0 when not certified
  int sign_hi = 0;
  unsigned prec_used = 0;
};

// For n = n_lo .. n_hi-1 certify that N_{nu+n}(t), N_{nu+n+1}(t) are not
// both zero. Negative integer orders -m use N_m (same zero set).
std::vector<PairVerdict> lemma1_check(const Rational& nu, const Rational& t, int n_lo, int n_hi,
                                      unsigned prec_cap = kDefaultPrecCap);

// Sign of N_s(t), which has the zero set of J_s(r) for r != 0.
SignCertificate nonzero_J(const Rational& s, const Rational& t,
                          unsigned prec_cap = kDefaultPrecCap, unsigned start_prec = 64);

// V_n in normalized coordinates.
Ball bessel_scaled_value(unsigned n, const Rational& s, const Rational& t, unsigned prec);

// t N_{s+1}(t) / (2 (s+1)), the normalized r J_{s+1}.
Ball bessel_numerator_value(const Rational& s, const Rational& t, unsigned prec);

struct BesselDecayRow {
  unsigned n = 0;
  Rational v_upper;         // ub |V_n|
  double observed_ratio;    // |J_{n+s+2} / J_{n+s+1}| (midpoint)
  double poisson_ratio;     // |r| / (2 (n+s+3/2)), ratio form of the Poisson bound
};

std::vector<BesselDecayRow> bessel_decay_table(const Rational& s, const Rational& t,
                                               unsigned n_max, unsigned prec);

}  // namespace lhcert
