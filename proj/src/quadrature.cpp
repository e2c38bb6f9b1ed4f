#include <lhcert/error.hpp>
#include <lhcert/quadrature.hpp>

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/gamma.hpp>

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <string>

namespace lhcert {

namespace {

// Legendre P_n and P_{n-1} at x by the three-term recurrence.
template <class T>
void legendre_pair(std::size_t n, T x, T& pn, T& pn1) {
  T p0 = 1, p1 = x;
  if (n == 0) { pn = p0; pn1 = 0; return; }
  for (std::size_t k = 2; k <= n; ++k) {
    T p2 = ((2 * k - 1) * x * p1 - (k - 1) * p0) / k;
    p0 = p1;
    p1 = p2;
  }
  pn = p1;
  pn1 = p0;
}

std::shared_ptr<const GaussRule> build_rule(std::size_t n) {
  auto rule = std::make_shared<GaussRule>();
  rule->nodes.resize(n);
  rule->weights.resize(n);
  const std::size_t half = (n + 1) / 2;
  for (std::size_t i = 0; i < half; ++i) {
    // long double Newton from the Tricomi-style guess, then polish in float128
    long double xl = std::cos(std::numbers::pi_v<long double> * (i + 0.75L) / (n + 0.5L));
    for (int it = 0; it < 100; ++it) {
      long double pn, pn1;
      legendre_pair(n, xl, pn, pn1);
      const long double dp = n * (xl * pn - pn1) / (xl * xl - 1);
      const long double dx = pn / dp;
      xl -= dx;
      if (std::fabs(dx) < 1e-19L) break;
    }
    QuadFloat x = xl, pn, pn1, dp;
    for (int it = 0; it < 3; ++it) {
      legendre_pair(n, x, pn, pn1);
      dp = n * (x * pn - pn1) / (x * x - 1);
      x -= pn / dp;
    }
    legendre_pair(n, x, pn, pn1);
    dp = n * (x * pn - pn1) / (x * x - 1);
    const QuadFloat w = 2 / ((1 - x * x) * dp * dp);
    rule->nodes[i] = x;
    rule->nodes[n - 1 - i] = -x;
    rule->weights[i] = w;
    rule->weights[n - 1 - i] = w;
  }
  return rule;
}

// int_0^1 f(z) dz
template <class F>
QuadFloat unit_interval(const GaussRule& rule, F&& f) {
  QuadFloat acc = 0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i)
    acc += rule.weights[i] * f((rule.nodes[i] + 1) / 2);
  return acc / 2;
}

// Node-count doubling until two successive estimates agree within tol.
template <class F>
QuadResult refine(F&& estimate, const QuadOptions& opts, const char* what) {
  if (opts.tol < QuadFloat(1e-30))
    throw Error(ErrorKind::InvalidArgument, "quadrature tolerance below 1e-30");
  std::size_t n = 8;
  QuadFloat prev = estimate(*gauss_legendre(n));
  for (n = 16; n <= opts.node_cap; n *= 2) {
    const QuadFloat cur = estimate(*gauss_legendre(n));
    const QuadFloat diff = abs(cur - prev);
    if (diff < opts.tol) return {cur, diff, n};
    prev = cur;
  }
  throw Error(ErrorKind::QuadFailure,
              std::string(what) + ": no convergence within " + std::to_string(opts.node_cap) +
                  " nodes");
}

QuadFloat positive_root(const Rational& t, const char* what) {
  if (t.sign() <= 0) throw Error(ErrorKind::InvalidArgument, std::string(what) + " needs t > 0");
  return sqrt(to_quad(t));
}

}  // namespace

QuadFloat to_quad(const Rational& x) {
  return QuadFloat(x.num().get_str()) / QuadFloat(x.den().get_str());
}

std::shared_ptr<const GaussRule> gauss_legendre(std::size_t n) {
  static std::mutex mutex;
  static std::map<std::size_t, std::shared_ptr<const GaussRule>> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  auto rule = build_rule(n);
  std::lock_guard lock(mutex);
  return cache.emplace(n, std::move(rule)).first->second;
}

QuadResult hermite_integral_at(unsigned n, QuadFloat r, const QuadOptions& opts) {
  QuadFloat pref = pow(r, 2 * n + 1);
  for (unsigned k = 1; k <= n; ++k) pref /= 2 * k;  // 2^n n!
  return refine(
      [&](const GaussRule& rule) {
        return pref * unit_interval(rule, [&](QuadFloat z) {
                 return pow(1 - z * z, n) * cos(r * z);
               });
      },
      opts, "hermite_integral");
}

QuadResult hermite_integral(unsigned n, const Rational& t, const QuadOptions& opts) {
  return hermite_integral_at(n, positive_root(t, "hermite_integral"), opts);
}

QuadResult poisson_integral(const Rational& nu, const Rational& t, const QuadOptions& opts) {
  if (nu <= Rational(-1, 2))
    throw Error(ErrorKind::OutOfValidity, "Poisson integral needs nu > -1/2, got " + nu.to_string());
  const QuadFloat r = positive_root(t, "poisson_integral");
  const QuadFloat v = to_quad(nu);
  const QuadFloat pi = boost::math::constants::pi<QuadFloat>();
  // theta = (pi/2) u^d smooths the sin^{2 nu} endpoint behaviour when nu = c/d
  const unsigned d = static_cast<unsigned>(nu.den().get_ui());
  const QuadFloat pref = pow(r / 2, v) / (sqrt(pi) * boost::math::tgamma(v + QuadFloat(0.5)));
  QuadResult res = refine(
      [&](const GaussRule& rule) {
        return unit_interval(rule, [&](QuadFloat u) {
          const QuadFloat theta = pi / 2 * pow(u, d);
          const QuadFloat jac = pi / 2 * d * pow(u, d - 1);
          return cos(r * cos(theta)) * pow(sin(theta), 2 * v) * jac;
        });
      },
      opts, "poisson_integral");
  res.value *= 2 * pref;
  res.est_err *= 2 * abs(pref);
  return res;
}

QuadResult iterated_remainder(unsigned n, const Rational& t, const QuadOptions& opts) {
  if (n < 1 || n > 3) throw Error(ErrorKind::InvalidArgument, "iterated_remainder needs n in 1..3");
  const QuadFloat r = positive_root(t, "iterated_remainder");
  return refine(
      [&](const GaussRule& rule) {
        // level 0: int_0^x cos; level k: int_0^x y F_{k-1}(y) dy
        auto level = [&](auto&& self, unsigned k, QuadFloat x) -> QuadFloat {
          if (k == 0) return x * unit_interval(rule, [&](QuadFloat z) { return cos(x * z); });
          return x * unit_interval(rule, [&](QuadFloat z) {
                   const QuadFloat y = x * z;
                   return y * self(self, k - 1, y);
                 });
        };
        return level(level, n, r);
      },
      opts, "iterated_remainder");
}

}  // namespace lhcert
