#include <lhcert/error.hpp>
#include <lhcert/rational.hpp>

#include <cmath>
#include <limits>
#include <ostream>

namespace lhcert {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (c < '0' || c > '9') return false;
  return true;
}

}  // namespace

Rational::Rational(const Integer& num, const Integer& den) {
  if (den == 0) throw Error(ErrorKind::ZeroDenominator, "denominator is zero");
  q_ = mpq_class(num, den);
  q_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw Error(ErrorKind::ZeroDenominator, "division by zero rational");
  q_ /= o.q_;
  return *this;
}

Rational Rational::pow(unsigned e) const {
  Integer n, d;
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), e);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), e);
  return Rational(n, d);
}

double Rational::log2_abs() const {
  if (is_zero()) return -std::numeric_limits<double>::infinity();
  long en = 0, ed = 0;
  const double mn = mpz_get_d_2exp(&en, num().get_mpz_t());
  const double md = mpz_get_d_2exp(&ed, den().get_mpz_t());
  return std::log2(std::fabs(mn)) - std::log2(md) + static_cast<double>(en - ed);
}

std::string Rational::to_string() const {
  if (is_integer()) return num().get_str();
  return num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& x) { return os << x.to_string(); }

Integer parse_integer(std::string_view text) {
  std::string_view digits = text;
  bool neg = false;
  if (!digits.empty() && digits.front() == '-') {
    neg = true;
    digits.remove_prefix(1);
  }
  if (!all_digits(digits))
    throw Error(ErrorKind::Parse, "not an integer: '" + std::string(text) + "'");
  Integer v(std::string(digits), 10);
  return neg ? Integer(-v) : v;
}

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text));
  const std::string_view den = text.substr(slash + 1);
  if (!all_digits(den))
    throw Error(ErrorKind::Parse, "bad denominator in '" + std::string(text) + "'");
  return rat_normalize(parse_integer(text.substr(0, slash)), Integer(std::string(den), 10));
}

Rational rat_normalize(const Integer& num, const Integer& den) { return Rational(num, den); }

unsigned clearing_exponent(const Integer& den, const Integer& base) {
  Integer rest = abs(den);
  unsigned e = 0;
  while (rest != 1) {
    Integer g = gcd(rest, base);
    if (g == 1)
      throw Error(ErrorKind::NotClearable,
                  "denominator " + den.get_str() + " not cleared by powers of " + base.get_str());
    rest /= g;
    ++e;
  }
  return e;
}

Integer pow(const Integer& base, unsigned e) {
  Integer r;
  mpz_pow_ui(r.get_mpz_t(), base.get_mpz_t(), e);
  return r;
}

Rational round_down_dyadic(const Rational& x, unsigned bits) {
  if (x.sign() <= 0) throw Error(ErrorKind::InvalidArgument, "round_down_dyadic needs x > 0");
  const long shift = static_cast<long>(bits) -
                     (static_cast<long>(mpz_sizeinbase(x.num().get_mpz_t(), 2)) -
                      static_cast<long>(mpz_sizeinbase(x.den().get_mpz_t(), 2)));
  Integer n = x.num(), d = x.den();
  if (shift >= 0)
    n <<= static_cast<mp_bitcnt_t>(shift);
  else
    d <<= static_cast<mp_bitcnt_t>(-shift);
  Integer m;
  mpz_fdiv_q(m.get_mpz_t(), n.get_mpz_t(), d.get_mpz_t());
  if (shift >= 0) return Rational(m, Integer(1) << static_cast<mp_bitcnt_t>(shift));
  return Rational(Integer(m << static_cast<mp_bitcnt_t>(-shift)));
}

}  // namespace lhcert
