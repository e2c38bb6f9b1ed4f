#include <lhcert/bessel.hpp>
#include <lhcert/certify.hpp>
#include <lhcert/cli.hpp>
#include <lhcert/error.hpp>
#include <lhcert/lambert.hpp>
#include <lhcert/quadrature.hpp>
#include <lhcert/serialize.hpp>
#include <lhcert/series.hpp>

#include <CLI11.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <fstream>
#include <future>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <variant>

namespace lhcert {

namespace {

using ordered_json = nlohmann::ordered_json;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> bigint_columns;
};

std::string csv_cell(const std::string& s, bool quote) {
  if (!quote && s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) {
    if (c == '"') q += '"';
    q += c;
  }
  return q + "\"";
}

void emit(const Table& t, OutputFormat format, std::ostream& out) {
  switch (format) {
    case OutputFormat::Json: {
      ordered_json arr = ordered_json::array();
      for (const auto& row : t.rows) {
        ordered_json obj;
        for (std::size_t c = 0; c < t.header.size(); ++c) obj[t.header[c]] = row[c];
        arr.push_back(std::move(obj));
      }
      out << arr.dump(2) << '\n';
      return;
    }
    case OutputFormat::Csv: {
      auto line = [&](const std::vector<std::string>& cells, bool header) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          const bool big = !header && std::find(t.bigint_columns.begin(), t.bigint_columns.end(),
                                                c) != t.bigint_columns.end();
          out << (c ? "," : "") << csv_cell(cells[c], big);
        }
        out << '\n';
      };
      line(t.header, true);
      for (const auto& row : t.rows) line(row, false);
      return;
    }
    case OutputFormat::Table: {
      std::vector<std::size_t> width(t.header.size());
      for (std::size_t c = 0; c < t.header.size(); ++c) width[c] = t.header[c].size();
      for (const auto& row : t.rows)
        for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
      auto line = [&](const std::vector<std::string>& cells) {
        for (std::size_t c = 0; c < cells.size(); ++c) {
          out << (c ? "  " : "");
          if (c + 1 < cells.size())
            out << std::left << std::setw(static_cast<int>(width[c])) << cells[c];
          else
            out << cells[c];
        }
        out << '\n';
      };
      line(t.header);
      for (const auto& row : t.rows) line(row);
      return;
    }
  }
}

bool is_soft_failure(ErrorKind k) {
  return k == ErrorKind::Inconclusive || k == ErrorKind::NoWitnessFound ||
         k == ErrorKind::ZeroDenominatorCos || k == ErrorKind::InconclusiveDenominator;
}

std::string fmt_double(double x) {
  std::ostringstream os;
  os << std::setprecision(6) << std::scientific << x;
  return os.str();
}

std::string fmt_quad(const QuadFloat& x, int digits = 20) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

// Raw option values shared by all subcommands.
struct Options {
  RunConfig cfg;
  std::string format = "table";
  std::string t, s, pq, nu, kind = "tan", verify_path, batch_path;
  unsigned n = 0;
  unsigned order = 0;
  unsigned k = 0;
  unsigned cap = kDefaultPrecCap;
  int lo = 0, hi = 10;
};

Rational need_rational(const std::string& text, const char* flag) {
  if (text.empty()) throw Error(ErrorKind::InvalidArgument, std::string("missing --") + flag);
  return Rational::parse(text);
}

// ---------------------------------------------------------------------------
// certificates

Table certificate_table(const GapCertificate& c) {
  Table t{{"field", "value"}, {}, {}};
  const ordered_json j = certificate_to_json(c);
  for (const auto& [key, value] : j.items())
    t.rows.push_back({key, value.is_string() ? value.get<std::string>() : value.dump()});
  return t;
}

void print_certificate(const GapCertificate& c, const Options& o, std::ostream& out) {
  if (o.cfg.format == OutputFormat::Json)
    out << certificate_to_json(c).dump(2) << '\n';
  else
    emit(certificate_table(c), o.cfg.format, out);
}

int run_verify(const Options& o, std::ostream& out, std::ostream& err) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (o.verify_path != "-") {
    file.open(o.verify_path);
    if (!file) throw Error(ErrorKind::InvalidArgument, "cannot open " + o.verify_path);
    in = &file;
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(*in);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::Parse, e.what());
  }
  std::vector<nlohmann::json> items;
  if (doc.is_array())
    items.assign(doc.begin(), doc.end());
  else
    items.push_back(doc);
  bool all_ok = true;
  for (const auto& item : items) {
    if (item.contains("error")) continue;  // failed batch line, nothing to check
    const GapCertificate cert = certificate_from_json(item);
    const VerifyOutcome v = verify_certificate(cert);
    all_ok = all_ok && v.ok;
    (v.ok ? out : err) << (v.ok ? "VERIFIED" : "FAIL") << " kind=" << to_string(cert.kind)
                       << " t=" << cert.t << " p/q=" << cert.candidate << " n=" << cert.n
                       << (v.ok ? "" : ": " + v.reason) << '\n';
  }
  return all_ok ? 0 : 1;
}

struct BatchLine {
  std::size_t line_no = 0;
  std::string text;
  CertProblem problem;
};

std::vector<BatchLine> read_batch(const std::string& path, const RunConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::InvalidArgument, "cannot open batch file " + path);
  std::vector<BatchLine> lines;
  std::string raw;
  for (std::size_t no = 1; std::getline(in, raw); ++no) {
    const std::string body = raw.substr(0, raw.find('#'));
    std::istringstream ss(body);
    std::vector<std::string> tok;
    for (std::string w; ss >> w;) tok.push_back(w);
    if (tok.empty()) continue;
    if (tok.size() < 2 || tok.size() > 3)
      throw Error(ErrorKind::Parse, "batch line " + std::to_string(no) + ": expected 't p/q [s]'");
    BatchLine b;
    b.line_no = no;
    b.text = body;
    b.problem.t = Rational::parse(tok[0]);
    b.problem.candidate = Rational::parse(tok[1]);
    if (tok.size() == 3) {
      b.problem.kind = CertKind::Bessel;
      b.problem.s = Rational::parse(tok[2]);
    }
    b.problem.n_max = cfg.n_max;
    b.problem.prec = cfg.prec;
    lines.push_back(std::move(b));
  }
  return lines;
}

struct BatchFailure {
  ErrorKind kind;
  std::string message;
};
using BatchResult = std::variant<GapCertificate, BatchFailure>;

int run_batch(const Options& o, std::ostream& out) {
  const std::vector<BatchLine> lines = read_batch(o.batch_path, o.cfg);
  std::vector<BatchResult> results(lines.size());
  auto work = [&](std::size_t begin, std::size_t step) {
    for (std::size_t i = begin; i < lines.size(); i += step) {
      try {
        results[i] = gap_certificate(lines[i].problem);
      } catch (const Error& e) {
        results[i] = BatchFailure{e.kind(), e.what()};
      }
    }
  };
  const unsigned jobs = std::max(1u, o.cfg.jobs);
  std::vector<std::future<void>> pool;
  for (unsigned j = 1; j < jobs; ++j) pool.push_back(std::async(std::launch::async, work, j, jobs));
  work(0, jobs);
  for (auto& f : pool) f.get();

  int code = 0;
  if (o.cfg.format == OutputFormat::Json) {
    ordered_json arr = ordered_json::array();
    for (std::size_t i = 0; i < lines.size(); ++i) {
      if (const auto* c = std::get_if<GapCertificate>(&results[i])) {
        arr.push_back(certificate_to_json(*c));
      } else {
        const auto& f = std::get<BatchFailure>(results[i]);
        arr.push_back({{"line", lines[i].line_no}, {"input", lines[i].text}, {"error", f.message}});
      }
    }
    out << arr.dump(2) << '\n';
  } else {
    Table t{{"line", "kind", "t", "s", "p/q", "n", "W", "gap_lower_bound", "status"}, {}, {6}};
    for (std::size_t i = 0; i < lines.size(); ++i) {
      const CertProblem& p = lines[i].problem;
      std::vector<std::string> row{std::to_string(lines[i].line_no), to_string(p.kind),
                                   p.t.to_string(),
                                   p.kind == CertKind::Bessel ? p.s.to_string() : "",
                                   p.candidate.to_string()};
      if (const auto* c = std::get_if<GapCertificate>(&results[i])) {
        row.insert(row.end(), {std::to_string(c->n), c->witness.get_str(),
                               c->gap_lower_bound.to_string(), "ok"});
      } else {
        row.insert(row.end(), {"", "", "", std::string(to_string(std::get<BatchFailure>(results[i]).kind))});
      }
      t.rows.push_back(std::move(row));
    }
    emit(t, o.cfg.format, out);
  }
  for (const auto& r : results) {
    if (const auto* f = std::get_if<BatchFailure>(&r))
      code = std::max(code, is_soft_failure(f->kind) ? 2 : 1);
  }
  return code;
}

int run_cert(CertKind kind, const Options& o, std::ostream& out, std::ostream& err) {
  if (!o.verify_path.empty()) return run_verify(o, out, err);
  if (!o.batch_path.empty()) return run_batch(o, out);
  CertProblem p;
  p.kind = kind;
  p.t = need_rational(o.t, "t");
  p.candidate = need_rational(o.pq, "pq");
  if (kind == CertKind::Bessel) p.s = need_rational(o.s, "s");
  p.n_max = o.cfg.n_max;
  p.prec = o.cfg.prec;
  print_certificate(gap_certificate(p), o, out);
  return 0;
}

int run_trace(const Options& o, std::ostream& out) {
  CertProblem p;
  if (o.kind == "tan") {
    p.kind = CertKind::Tan;
  } else if (o.kind == "bessel") {
    p.kind = CertKind::Bessel;
    p.s = need_rational(o.s, "s");
  } else {
    throw Error(ErrorKind::InvalidArgument, "--kind must be tan or bessel");
  }
  p.t = need_rational(o.t, "t");
  p.candidate = need_rational(o.pq, "pq");
  p.n_max = o.cfg.n_max;
  p.prec = o.cfg.prec;
  Table t{{"n", "W_n", "A_abs_ub", "flagged"}, {}, {1}};
  for (const TraceRow& r : contradiction_trace(p))
    t.rows.push_back({std::to_string(r.n), r.witness.get_str(), fmt_double(r.a_abs_ub),
                      r.flagged ? "yes" : "no"});
  emit(t, o.cfg.format, out);
  return 0;
}

// ---------------------------------------------------------------------------
// engines

int run_remainder(const Options& o, std::ostream& out) {
  const Rational t = need_rational(o.t, "t");
  const Ball g = remainder_value(o.n, t, o.cfg.prec);
  Table tab{{"n", "t", "G_n(t) = r*R_n(r)", "radius"}, {}, {}};
  tab.rows.push_back({std::to_string(o.n), t.to_string(), g.to_string(25),
                      fmt_double(g.rad_double())});
  emit(tab, o.cfg.format, out);
  return 0;
}

int run_convergent(const Options& o, std::ostream& out) {
  const Convergent c = tan_convergent(o.n);
  Table tab{{"n", "P_n(t)", "Q_n(t)"}, {}, {}};
  std::vector<std::string> row{std::to_string(c.n), c.p.to_string(), c.q.to_string()};
  if (!o.t.empty()) {
    const Rational t = Rational::parse(o.t);
    tab.header.push_back("P_n/Q_n at t");
    const Rational q = c.q.eval(t);
    row.push_back(q.is_zero() ? "undefined" : (c.p.eval(t) / q).to_string());
  }
  tab.rows.push_back(std::move(row));
  emit(tab, o.cfg.format, out);
  return 0;
}

int run_ratio(const Options& o, std::ostream& out) {
  const Rational s = need_rational(o.s, "s");
  const Rational t = need_rational(o.t, "t");
  const RatioValue v = bessel_ratio(s, t, o.cfg.prec);
  Table tab{{"s", "t", "r*J_{s+1}(r)/J_s(r)", "prec_used"}, {}, {}};
  std::vector<std::string> row{s.to_string(), t.to_string(), v.value.to_string(25),
                               std::to_string(v.prec_used)};
  if (o.k > 0) {
    tab.header.push_back("cf_convergent_k" + std::to_string(o.k));
    const Rational cf = ratio_cf_convergent(s, o.k, t);
    std::ostringstream os;
    os << std::setprecision(17) << cf.to_double();
    row.push_back(cf.to_string() + " (" + os.str() + ")");
  }
  tab.rows.push_back(std::move(row));
  emit(tab, o.cfg.format, out);
  return 0;
}

int run_decay(const Options& o, std::ostream& out) {
  const Rational t = need_rational(o.t, "t");
  if (!o.s.empty()) {
    const Rational s = Rational::parse(o.s);
    Table tab{{"n", "ub|V_n|", "observed_ratio", "poisson_ratio"}, {}, {}};
    for (const auto& r : bessel_decay_table(s, t, o.cfg.n_max, o.cfg.prec))
      tab.rows.push_back({std::to_string(r.n), fmt_double(upper_double(r.v_upper)),
                          fmt_double(r.observed_ratio), fmt_double(r.poisson_ratio)});
    emit(tab, o.cfg.format, out);
    return 0;
  }
  const DecayTable d = decay_table(t, o.cfg.n_max, o.cfg.prec);
  Table tab{{"n", "ub b^ceil(n/2)|G_n|", "decreasing_from_here"}, {}, {}};
  for (const auto& r : d.rows)
    tab.rows.push_back({std::to_string(r.n), fmt_double(upper_double(r.scaled_upper)),
                        r.n >= d.crossover ? "yes" : "no"});
  emit(tab, o.cfg.format, out);
  return 0;
}

int run_niven(const Options& o, std::ostream& out) {
  const Ball h = niven_H(o.n, o.cfg.prec);
  Table tab{{"n", "H_n", "radius"}, {}, {}};
  tab.rows.push_back({std::to_string(o.n), h.to_string(25), fmt_double(h.rad_double())});
  emit(tab, o.cfg.format, out);
  return 0;
}

int run_identities(const Options& o, unsigned n_max, std::ostream& out) {
  const unsigned order = o.order ? o.order : 2 * n_max + 4;
  const SeriesRelationReport rep = check_series_relations(n_max, order);
  std::size_t bessel_checked = 0;
  if (!o.nu.empty())
    bessel_checked = check_bessel_coeff_identities(Rational::parse(o.nu), order).identities_checked;
  if (o.cfg.format == OutputFormat::Table) {
    out << "PASS\n";
    return 0;
  }
  Table tab{{"result", "n_max", "order", "series_coefficients_checked", "bessel_identities_checked"},
            {},
            {}};
  tab.rows.push_back({"PASS", std::to_string(n_max), std::to_string(order),
                      std::to_string(rep.coefficients_checked), std::to_string(bessel_checked)});
  emit(tab, o.cfg.format, out);
  return 0;
}

int run_lemma1(const Options& o, std::ostream& out) {
  const Rational nu = need_rational(o.nu, "nu");
  const Rational t = need_rational(o.t, "t");
  Table tab{{"pair", "sign_lo", "sign_hi", "verdict", "prec_used"}, {}, {}};
  bool all = true;
  for (const PairVerdict& v : lemma1_check(nu, t, o.lo, o.hi, o.cap)) {
    const bool ok = v.verdict == Verdict::Certified;
    all = all && ok;
    const Rational lo = nu + Rational(v.n);
    tab.rows.push_back({"(" + lo.to_string() + ", " + (lo + Rational(1)).to_string() + ")",
                        std::to_string(v.sign_lo), std::to_string(v.sign_hi),
                        ok ? "Certified" : "Inconclusive", std::to_string(v.prec_used)});
  }
  emit(tab, o.cfg.format, out);
  return all ? 0 : 2;
}

int run_nonzero(const Options& o, std::ostream& out) {
  const Rational s = need_rational(o.s, "s");
  const Rational t = need_rational(o.t, "t");
  const SignCertificate c = nonzero_J(s, t, o.cap);
  Table tab{{"s", "t", "sign", "prec_used"}, {}, {}};
  tab.rows.push_back({s.to_string(), t.to_string(), c.sign > 0 ? "+1" : "-1",
                      std::to_string(c.prec_used)});
  emit(tab, o.cfg.format, out);
  return 0;
}

int run_quad_check(const Options& o, std::ostream& out) {
  const Rational t = need_rational(o.t, "t");
  QuadOptions q;
  q.tol = QuadFloat(o.cfg.tol);
  q.node_cap = o.cfg.quad_node_cap;
  Table tab{{"check", "quadrature", "series", "abs_diff", "threshold", "status"}, {}, {}};
  bool all = true;
  auto add = [&](const std::string& name, const QuadFloat& a, const QuadFloat& b, double thr) {
    const QuadFloat d = abs(a - b);
    const bool ok = d < QuadFloat(thr);
    all = all && ok;
    tab.rows.push_back({name, fmt_quad(a), fmt_quad(b), fmt_quad(d, 3), fmt_double(thr),
                        ok ? "ok" : "MISMATCH"});
  };
  const QuadResult h = hermite_integral(o.n, t, q);
  const Ball g = remainder_value(o.n, t, std::max(o.cfg.prec, 128u));
  const QuadFloat series_r = QuadFloat(g.mid_long_double()) / sqrt(to_quad(t));
  add("hermite_vs_remainder", h.value, series_r, 1e-12);
  if (o.n >= 1 && o.n <= 3) add("iterated_vs_hermite", iterated_remainder(o.n, t, q).value, h.value, 1e-8);
  if (!o.nu.empty()) {
    const Rational nu = Rational::parse(o.nu);
    const QuadResult p = poisson_integral(nu, t, q);
    // J_nu = (r/2)^nu N_nu / Gamma(nu+1)
    const QuadFloat r = sqrt(to_quad(t));
    const QuadFloat v = to_quad(nu);
    const QuadFloat j = pow(r / 2, v) * QuadFloat(eval_N(nu, t, 128).mid_long_double()) /
                        boost::math::tgamma(v + 1);
    add("poisson_vs_series", p.value, j, 1e-10);
  }
  emit(tab, o.cfg.format, out);
  return all ? 0 : 1;
}

}  // namespace

int cmd_dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Lambert-Hermite remainders and irrationality gap certificates", "lhcert"};
  app.require_subcommand(1);
  Options o;
  unsigned identities_nmax = 8;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--prec", o.cfg.prec, "working precision in bits")
        ->check(CLI::Range(32u, 1u << 20));
    sub->add_option("--format", o.format, "table, json or csv")
        ->check(CLI::IsMember({"table", "json", "csv"}));
  };
  auto cert_opts = [&](CLI::App* sub, bool bessel) {
    common(sub);
    sub->add_option("--t", o.t, "t = r^2 as a/b");
    sub->add_option("--pq", o.pq, "candidate p/q");
    if (bessel) sub->add_option("--s", o.s, "order s as c/d");
    sub->add_option("--nmax", o.cfg.n_max, "largest index scanned")->check(CLI::PositiveNumber);
    sub->add_option("--verify", o.verify_path, "re-verify certificate JSON from file ('-' = stdin)");
    sub->add_option("--batch", o.batch_path, "batch file, one 't p/q [s]' per line");
    sub->add_option("--jobs", o.cfg.jobs, "parallel workers for --batch");
  };

  std::function<int()> action;
  auto on = [&](CLI::App* sub, std::function<int()> f) {
    sub->callback([&action, f = std::move(f)] { action = f; });
  };

  auto* cert_tan = app.add_subcommand("cert-tan", "gap certificate for r tan r");
  cert_opts(cert_tan, false);
  on(cert_tan, [&] { return run_cert(CertKind::Tan, o, out, err); });

  auto* cert_bessel = app.add_subcommand("cert-bessel", "gap certificate for r J_{s+1}/J_s");
  cert_opts(cert_bessel, true);
  on(cert_bessel, [&] { return run_cert(CertKind::Bessel, o, out, err); });

  auto* trace = app.add_subcommand("trace", "contradiction trace (n, W_n, |A_n|)");
  common(trace);
  trace->add_option("--kind", o.kind)->check(CLI::IsMember({"tan", "bessel"}));
  trace->add_option("--t", o.t);
  trace->add_option("--s", o.s);
  trace->add_option("--pq", o.pq);
  trace->add_option("--nmax", o.cfg.n_max);
  on(trace, [&] { return run_trace(o, out); });

  auto* rem = app.add_subcommand("remainder", "ball for G_n(t) = r R_n(r)");
  common(rem);
  rem->add_option("--n", o.n)->required();
  rem->add_option("--t", o.t)->required();
  on(rem, [&] { return run_remainder(o, out); });

  auto* conv = app.add_subcommand("convergent", "continued-fraction convergent P_n/Q_n of r tan r");
  common(conv);
  conv->add_option("--n", o.n)->required()->check(CLI::PositiveNumber);
  conv->add_option("--t", o.t, "also evaluate at t");
  on(conv, [&] { return run_convergent(o, out); });

  auto* ratio = app.add_subcommand("ratio", "ball for r J_{s+1}(r)/J_s(r)");
  common(ratio);
  ratio->add_option("--s", o.s)->required();
  ratio->add_option("--t", o.t)->required();
  ratio->add_option("--k", o.k, "also print the k-level continued-fraction truncation");
  on(ratio, [&] { return run_ratio(o, out); });

  auto* decay = app.add_subcommand("decay", "decay table of b^ceil(n/2)|G_n| (or |V_n| with --s)");
  common(decay);
  decay->add_option("--t", o.t)->required();
  decay->add_option("--s", o.s);
  decay->add_option("--nmax", o.cfg.n_max);
  on(decay, [&] { return run_decay(o, out); });

  auto* niven = app.add_subcommand("niven", "Niven's integral H_n");
  common(niven);
  niven->add_option("--n", o.n)->required();
  on(niven, [&] { return run_niven(o, out); });

  auto* ident = app.add_subcommand("verify-identities", "exact series identity checks");
  common(ident);
  ident->add_option("--nmax", identities_nmax);
  ident->add_option("--order", o.order, "series order M (default 2*nmax+4)");
  ident->add_option("--nu", o.nu, "also check Bessel coefficient identities for this order");
  on(ident, [&] { return run_identities(o, identities_nmax, out); });

  auto* lemma1 = app.add_subcommand("lemma1", "no two consecutive zeros in J_{nu+n}(r)");
  common(lemma1);
  lemma1->add_option("--nu", o.nu)->required();
  lemma1->add_option("--t", o.t)->required();
  lemma1->add_option("--lo", o.lo);
  lemma1->add_option("--hi", o.hi);
  lemma1->add_option("--cap", o.cap, "precision cap in bits");
  on(lemma1, [&] { return run_lemma1(o, out); });

  auto* nonzero = app.add_subcommand("nonzero", "certify the sign of J_s(r)");
  common(nonzero);
  nonzero->add_option("--s", o.s)->required();
  nonzero->add_option("--t", o.t)->required();
  nonzero->add_option("--cap", o.cap, "precision cap in bits");
  on(nonzero, [&] { return run_nonzero(o, out); });

  auto* quad = app.add_subcommand("quad-check", "quadrature cross-checks against the series layer");
  common(quad);
  quad->add_option("--n", o.n)->required();
  quad->add_option("--t", o.t)->required();
  quad->add_option("--nu", o.nu, "also check the Poisson integral for J_nu");
  quad->add_option("--tol", o.cfg.tol)->check(CLI::Range(1e-30, 1.0));
  quad->add_option("--quad-node-cap", o.cfg.quad_node_cap);
  on(quad, [&] { return run_quad_check(o, out); });

  std::vector<std::string> argv_store{"lhcert"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_store) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 1;
  }
  o.cfg.format = o.format == "json"  ? OutputFormat::Json
                 : o.format == "csv" ? OutputFormat::Csv
                                     : OutputFormat::Table;
  try {
    return action ? action() : 1;
  } catch (const Error& e) {
    err << e.what() << '\n';
    return is_soft_failure(e.kind()) ? 2 : 1;
  }
}

}  // namespace lhcert
