#include <lhcert/bessel.hpp>
#include <lhcert/certify.hpp>
#include <lhcert/error.hpp>
#include <lhcert/lambert.hpp>
#include <lhcert/series.hpp>

#include <algorithm>
#include <stdexcept>

namespace lhcert {

std::string to_string(CertKind kind) { return kind == CertKind::Tan ? "tan" : "bessel"; }

namespace {

constexpr unsigned kBestOfWindow = 8;
constexpr unsigned kBoundBits = 64;

void validate(const CertProblem& p) {
  if (p.t.is_zero()) throw Error(ErrorKind::InvalidArgument, "t must be a nonzero rational");
  if (p.prec < 32) throw Error(ErrorKind::InvalidArgument, "precision must be >= 32 bits");
  if (p.kind == CertKind::Bessel && p.s.is_negative_integer())
    throw Error(ErrorKind::InvalidOrder, "s = " + p.s.to_string() + " is a negative integer");
}

struct Denominator {
  Ball value;
  unsigned prec;
};

// C(t) for Tan, N_s(t) for Bessel, escalated until it excludes zero.
Denominator certified_denominator(const CertProblem& p, bool escalate) {
  const unsigned cap = escalate ? std::max(p.prec, p.prec_cap) : p.prec;
  for (unsigned prec = p.prec; prec <= cap; prec *= 2) {
    Ball d = p.kind == CertKind::Tan ? eval_C(p.t, prec) : eval_N(p.s, p.t, prec);
    if (d.sign() != 0) return {std::move(d), prec};
  }
  if (p.kind == CertKind::Tan)
    throw Error(ErrorKind::ZeroDenominatorCos, "C(t) = cos r not separated from 0 at t=" +
                                                   p.t.to_string());
  throw Error(ErrorKind::InconclusiveDenominator,
              "N_s(t) not separated from 0 at s=" + p.s.to_string() + ", t=" + p.t.to_string());
}

struct Polys {
  RatPoly u, w;
};

Polys cert_polys(const CertProblem& p, unsigned n) {
  if (p.kind == CertKind::Tan) {
    TanCertPair c = tan_cert(n);
    return {std::move(c.u), std::move(c.w)};
  }
  BesselCertPair c = bessel_cert(n, p.s);
  return {std::move(c.u), std::move(c.w)};
}

Integer scale_factor(const CertProblem& p, unsigned n) {
  Integer b = pow(p.t.den(), half_up(n));
  if (p.kind == CertKind::Bessel) b *= pow(p.s.den(), n);
  return b;
}

struct Row {
  TraceRow trace;
  Ball a;
  Integer scale;
};

Row compute_row(const CertProblem& p, const Denominator& den, unsigned n) {
  const Polys polys = cert_polys(p, n);
  Row row;
  row.scale = scale_factor(p, n);
  row.trace.n = n;
  row.trace.u_at_t = polys.u.eval(p.t);

  const Rational w = scaled_witness(p, n);
  if (!w.is_integer())
    throw std::logic_error("witness W_" + std::to_string(n) + " = " + w.to_string() +
                           " is not an integer");
  row.trace.witness = w.num();

  const Ball analytic = p.kind == CertKind::Tan ? remainder_value(n, p.t, den.prec)
                                                : bessel_scaled_value(n, p.s, p.t, den.prec);
  row.a = analytic / den.value * Rational(Integer(row.scale * p.candidate.den()));
  row.trace.a_upper = row.a.upper_abs();
  row.trace.a_abs_ub = upper_double(row.trace.a_upper);
  row.trace.flagged = row.trace.witness != 0 && row.trace.a_upper < Rational(1);
  return row;
}

// Positive certified gap for a flagged row with u_n(t) != 0.
std::optional<Rational> row_bound(const CertProblem& p, const Row& row) {
  if (!row.trace.flagged || row.trace.u_at_t.is_zero()) return std::nullopt;
  const Rational slack = Rational(Integer(abs(row.trace.witness))) - row.trace.a_upper;
  if (slack.sign() <= 0) return std::nullopt;
  const Rational divisor =
      Rational(Integer(row.scale * p.candidate.den())) * row.trace.u_at_t.abs();
  return round_down_dyadic(slack / divisor, kBoundBits);
}

GapCertificate make_certificate(const CertProblem& p, const Row& row, const Rational& bound,
                                unsigned prec_used) {
  GapCertificate c;
  c.kind = p.kind;
  c.t = p.t;
  if (p.kind == CertKind::Bessel) c.s = p.s;
  c.candidate = p.candidate;
  c.n = row.trace.n;
  c.witness = row.trace.witness;
  c.a_bound = row.a;
  c.a_upper = row.a.upper_abs_string(20);
  c.gap_lower_bound = bound;
  c.prec_used = prec_used;
  return c;
}

CertProblem normalized(CertProblem p) {
  if (p.kind == CertKind::Tan) p.s = Rational(-1, 2);
  return p;
}

}  // namespace

Rational scaled_witness(const CertProblem& problem, unsigned n) {
  const CertProblem p = normalized(problem);
  const Polys polys = cert_polys(p, n);
  const Rational inner =
      polys.u.eval(p.t) * Rational(p.candidate.num()) + polys.w.eval(p.t) * Rational(p.candidate.den());
  return inner * Rational(scale_factor(p, n));
}

GapCertificate gap_certificate(const CertProblem& problem) {
  const CertProblem p = normalized(problem);
  validate(p);
  const Denominator den = certified_denominator(p, true);

  std::optional<unsigned> first;
  std::optional<std::pair<Rational, Row>> best;
  for (unsigned n = 0; n <= p.n_max; ++n) {
    if (first && n > *first + kBestOfWindow) break;
    Row row = compute_row(p, den, n);
    const auto bound = row_bound(p, row);
    if (!bound) continue;
    if (!first) first = n;
    if (!best || *bound > best->first) best.emplace(*bound, std::move(row));
  }
  if (!best)
    throw Error(ErrorKind::NoWitnessFound,
                "no flagged row for n <= " + std::to_string(p.n_max) + " at " +
                    std::to_string(den.prec) + " bits; raise n_max or precision");
  return make_certificate(p, best->second, best->first, den.prec);
}

GapCertificate tan_gap_certificate(const Rational& t, const Rational& pq, unsigned n_max,
                                   unsigned prec) {
  CertProblem p;
  p.kind = CertKind::Tan;
  p.t = t;
  p.candidate = pq;
  p.n_max = n_max;
  p.prec = prec;
  return gap_certificate(p);
}

GapCertificate bessel_gap_certificate(const Rational& s, const Rational& t, const Rational& pq,
                                      unsigned n_max, unsigned prec) {
  CertProblem p;
  p.kind = CertKind::Bessel;
  p.s = s;
  p.t = t;
  p.candidate = pq;
  p.n_max = n_max;
  p.prec = prec;
  return gap_certificate(p);
}

std::vector<TraceRow> contradiction_trace(const CertProblem& problem) {
  const CertProblem p = normalized(problem);
  validate(p);
  const Denominator den = certified_denominator(p, true);
  std::vector<TraceRow> rows;
  for (unsigned n = 0; n <= p.n_max; ++n) rows.push_back(compute_row(p, den, n).trace);
  return rows;
}

VerifyOutcome verify_certificate(const GapCertificate& cert) {
  CertProblem p;
  p.kind = cert.kind;
  p.t = cert.t;
  p.s = cert.s.value_or(Rational(-1, 2));
  p.candidate = cert.candidate;
  p.prec = cert.prec_used;
  p.n_max = cert.n;
  try {
    p = normalized(p);
    validate(p);
    if (cert.gap_lower_bound.sign() <= 0) return {false, "gap_lower_bound is not positive"};
    const Rational w = scaled_witness(p, cert.n);
    if (!w.is_integer() || w.num() != cert.witness)
      return {false, "W does not match recomputation (" + w.to_string() + ")"};
    const Denominator den = certified_denominator(p, false);
    const Row row = compute_row(p, den, cert.n);
    if (!row.trace.flagged) return {false, "row is not a contradiction row (W = 0 or |A| >= 1)"};
    const auto bound = row_bound(p, row);
    if (!bound) return {false, "ball separation |A| < |W| does not hold"};
    if (*bound < cert.gap_lower_bound)
      return {false, "recomputed bound " + bound->to_string() + " is below the claim"};
  } catch (const Error& e) {
    return {false, e.what()};
  }
  return {true, "ok"};
}

}  // namespace lhcert
