#pragma once

// Irrationality gap certificates.
//
// Target rho is r tan r (kind Tan) or r J_{s+1}(r) / J_s(r) (kind Bessel),
// t = r^2 = a/b, s = c/d, candidate p/q. With B_n = b^ceil(n/2) d^n
// (d = 1 for Tan):
//
//   W_n = B_n (u_n(t) p + w_n(t) q)          exact integer
//   A_n = B_n q (u_n(t) rho + w_n(t))        enclosed by a ball
//   A_n - W_n = B_n q u_n(t) (rho - p/q)
//
// so |rho - p/q| >= (|W_n| - ub|A_n|) / (B_n q |u_n(t)|) whenever that is
// positive. A row is flagged when W_n != 0 and ub|A_n| < 1, which is the
// "nonzero integer in (-1, 1)" contradiction; certificates are only taken
// from flagged rows.

#include <lhcert/ball.hpp>
#include <lhcert/rational.hpp>

#include <optional>
#include <string>
#include <vector>

namespace lhcert {

enum class CertKind { Tan, Bessel };

std::string to_string(CertKind kind);

struct CertProblem {
  CertKind kind = CertKind::Tan;
  Rational t;
  Rational s;  // Bessel only; -1/2 for Tan
  Rational candidate;
  unsigned n_max = 64;
  unsigned prec = 256;
  unsigned prec_cap = 16384;
};

struct GapCertificate {
  CertKind kind = CertKind::Tan;
  Rational t;
  std::optional<Rational> s;
  Rational candidate;
  unsigned n = 0;
  Integer witness;
  Ball a_bound;
  std::string a_upper;        // decimal upper bound of |A_n|
  Rational gap_lower_bound;   // certified, > 0
  unsigned prec_used = 0;
};

struct TraceRow {
  unsigned n = 0;
  Integer witness;
  double a_abs_ub = 0.0;      // rounded up
  Rational a_upper;           // exact dyadic upper bound of |A_n|
  Rational u_at_t;
  bool flagged = false;
};

// B_n (u_n(t) p + w_n(t) q) before any integer conversion; the
// certificate code asserts its denominator is 1.
Rational scaled_witness(const CertProblem& problem, unsigned n);

GapCertificate tan_gap_certificate(const Rational& t, const Rational& pq, unsigned n_max = 64,
                                   unsigned prec = 256);
GapCertificate bessel_gap_certificate(const Rational& s, const Rational& t, const Rational& pq,
                                      unsigned n_max = 64, unsigned prec = 256);
GapCertificate gap_certificate(const CertProblem& problem);

std::vector<TraceRow> contradiction_trace(const CertProblem& problem);

struct VerifyOutcome {
  bool ok = false;
  std::string reason;
};

// Recomputes W_n, the A_n ball and the bound from the certificate's own
// fields and checks that the claim still follows.
VerifyOutcome verify_certificate(const GapCertificate& cert);

}  // namespace lhcert
