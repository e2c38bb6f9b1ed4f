#pragma once

// Non-rigorous quadrature oracles for the integral representations. Used
// only to cross-check the ball layer; est_err is a successive-refinement
// estimate, not a bound.

#include <lhcert/rational.hpp>

#include <boost/multiprecision/float128.hpp>

#include <cstddef>
#include <memory>
#include <vector>

namespace lhcert {

using QuadFloat = boost::multiprecision::float128;

struct QuadResult {
  QuadFloat value = 0;
  QuadFloat est_err = 0;
  std::size_t nodes_used = 0;
};

struct QuadOptions {
  QuadFloat tol = QuadFloat(1e-14);
  std::size_t node_cap = 4096;
};

struct GaussRule {
  std::vector<QuadFloat> nodes;    // on [-1, 1]
  std::vector<QuadFloat> weights;
};

// Gauss-Legendre rule with n nodes, cached per n.
std::shared_ptr<const GaussRule> gauss_legendre(std::size_t n);

// R_n(r) = r^{2n+1} / (2^n n!) * int_0^1 (1 - z^2)^n cos(r z) dz, r = sqrt(t).
QuadResult hermite_integral(unsigned n, const Rational& t, const QuadOptions& opts = {});
QuadResult hermite_integral_at(unsigned n, QuadFloat r, const QuadOptions& opts = {});

// J_nu(r) from the Poisson integral, nu > -1/2, r = sqrt(t).
QuadResult poisson_integral(const Rational& nu, const Rational& t, const QuadOptions& opts = {});

// R_n(r) as the n-fold nested integral int_0^r x R_{n-1}(x) dx with
// R_0(x) = int_0^x cos; n in 1..3.
QuadResult iterated_remainder(unsigned n, const Rational& t, const QuadOptions& opts = {});

QuadFloat to_quad(const Rational& x);

}  // namespace lhcert
