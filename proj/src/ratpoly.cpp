#include <lhcert/error.hpp>
#include <lhcert/ratpoly.hpp>

#include <algorithm>
#include <sstream>

namespace lhcert {

RatPoly::RatPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RatPoly::RatPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RatPoly RatPoly::monomial(const Rational& c, unsigned k) {
  std::vector<Rational> v(k + 1);
  v[k] = c;
  return RatPoly(std::move(v));
}

void RatPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Rational RatPoly::eval(const Rational& x) const {
  Rational acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= x;
    acc += *it;
  }
  return acc;
}

bool RatPoly::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational& c) { return c.is_integer(); });
}

std::string RatPoly::to_string(const char* var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    const Rational& c = coeffs_[k];
    if (c.is_zero()) continue;
    Rational mag = c.abs();
    if (first)
      os << (c.sign() < 0 ? "-" : "");
    else
      os << (c.sign() < 0 ? " - " : " + ");
    first = false;
    const bool unit = mag == Rational(1);
    if (k == 0 || !unit) {
      os << mag;
      if (k > 0) os << '*';
    }
    if (k >= 1) os << var;
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

RatPoly operator-(const RatPoly& p) {
  std::vector<Rational> v = p.coeffs_;
  for (auto& c : v) c = -c;
  return RatPoly(std::move(v));
}

RatPoly poly_combine(const Rational& alpha, const RatPoly& p, const Rational& beta,
                     const RatPoly& q, unsigned shift) {
  const std::size_t n = std::max(p.coeffs().size(), q.coeffs().size() + shift);
  std::vector<Rational> v(n);
  if (!alpha.is_zero())
    for (std::size_t k = 0; k < p.coeffs().size(); ++k) v[k] = alpha * p.coeffs()[k];
  if (!beta.is_zero())
    for (std::size_t k = 0; k < q.coeffs().size(); ++k) v[k + shift] += beta * q.coeffs()[k];
  return RatPoly(std::move(v));
}

unsigned denominator_exponent(const RatPoly& p, const Integer& base) {
  if (base < 2) throw Error(ErrorKind::InvalidArgument, "base must be >= 2");
  unsigned e = 0;
  for (const auto& c : p.coeffs()) e = std::max(e, clearing_exponent(c.den(), base));
  return e;
}

}  // namespace lhcert
