#include "oracle.hpp"

#include <lhcert/error.hpp>
#include <lhcert/lambert.hpp>
#include <lhcert/quadrature.hpp>
#include <lhcert/series.hpp>

#include <gtest/gtest.h>

using namespace lhcert;

namespace {

double d(QuadFloat x) { return static_cast<double>(x); }

ErrorKind kind_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "no lhcert::Error thrown";
  return ErrorKind::InvalidArgument;
}

}  // namespace

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
  for (std::size_t n : {8u, 16u, 64u}) {
    const auto rule = gauss_legendre(n);
    ASSERT_EQ(rule->nodes.size(), n);
    for (std::size_t p = 0; p < 2 * n; p += 2) {
      QuadFloat sum = 0;
      for (std::size_t i = 0; i < n; ++i) sum += rule->weights[i] * pow(rule->nodes[i], p);
      EXPECT_NEAR(d(sum), 2.0 / static_cast<double>(p + 1), 1e-28) << n << " " << p;
    }
  }
  EXPECT_EQ(gauss_legendre(16).get(), gauss_legendre(16).get());
}

TEST(Hermite, Examples) {
  EXPECT_NEAR(d(hermite_integral(0, Rational(1)).value), 0.8414709848078965, 1e-15);
  EXPECT_NEAR(d(hermite_integral(1, Rational(1)).value), 0.3011686789397568, 1e-15);
  EXPECT_NEAR(d(hermite_integral(2, Rational(4)).value), 1.5875835924571726, 1e-14);
}

TEST(Hermite, MatchesBallRemainders) {
  for (const Rational& t : {Rational(1, 4), Rational(1), Rational(4)}) {
    const double r = std::sqrt(t.to_double());
    for (unsigned n = 0; n <= 10; ++n) {
      const QuadResult q = hermite_integral(n, t);
      const Ball g = remainder_value(n, t, 256);
      EXPECT_LT(std::abs(d(q.value) - g.mid_double() / r), 1e-12) << n << " " << t;
      EXPECT_GT(q.nodes_used, 0u);
    }
  }
}

TEST(Hermite, Rejections) {
  EXPECT_EQ(kind_of([] { hermite_integral(1, Rational(0)); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { hermite_integral(1, Rational(-1)); }), ErrorKind::InvalidArgument);
  QuadOptions tight;
  tight.tol = QuadFloat(1e-40);
  EXPECT_EQ(kind_of([&] { hermite_integral(1, Rational(1), tight); }), ErrorKind::InvalidArgument);
  QuadOptions capped;
  capped.node_cap = 8;
  EXPECT_EQ(kind_of([&] { hermite_integral(6, Rational(400), capped); }), ErrorKind::QuadFailure);
}

TEST(Poisson, Examples) {
  EXPECT_NEAR(d(poisson_integral(Rational(0), Rational(4)).value), 0.2238907791412357, 1e-14);
  EXPECT_NEAR(d(poisson_integral(Rational(1, 2), Rational(1)).value), 0.6713967071418031, 1e-14);
  EXPECT_NEAR(d(poisson_integral(Rational(5, 2), Rational(1)).value), 0.04949681022847794, 1e-15);
}

TEST(Poisson, MatchesSeries) {
  for (const Rational& nu : {Rational(0), Rational(1, 2), Rational(5, 2), Rational(1, 3)}) {
    for (const Rational& t : {Rational(1), Rational(4)}) {
      const double j = oracle::bessel_j(nu, t);
      EXPECT_LT(std::abs(d(poisson_integral(nu, t).value) - j), 1e-10) << nu << " " << t;
    }
  }
}

TEST(Poisson, OutOfValidity) {
  EXPECT_EQ(kind_of([] { poisson_integral(Rational(-1, 2), Rational(1)); }), ErrorKind::OutOfValidity);
  EXPECT_EQ(kind_of([] { poisson_integral(Rational(-3, 4), Rational(1)); }), ErrorKind::OutOfValidity);
  EXPECT_NO_THROW(poisson_integral(Rational(-2, 5), Rational(1)));
}

TEST(Iterated, Examples) {
  EXPECT_NEAR(d(iterated_remainder(1, Rational(1)).value), 0.3011686789397568, 1e-13);
  EXPECT_NEAR(d(iterated_remainder(2, Rational(1)).value), 0.06203505201137386, 1e-13);
  EXPECT_NEAR(d(iterated_remainder(3, Rational(1)).value), 0.009006581117112516, 1e-13);
}

TEST(Iterated, MatchesHermite) {
  for (const Rational& t : {Rational(1, 4), Rational(1)})
    for (unsigned n = 1; n <= 3; ++n)
      EXPECT_LT(std::abs(d(iterated_remainder(n, t).value - hermite_integral(n, t).value)), 1e-8);
  EXPECT_EQ(kind_of([] { iterated_remainder(4, Rational(1)); }), ErrorKind::InvalidArgument);
  EXPECT_EQ(kind_of([] { iterated_remainder(0, Rational(1)); }), ErrorKind::InvalidArgument);
}

TEST(Hermite, NivenLink) {
  const QuadFloat half_pi = boost::math::constants::half_pi<QuadFloat>();
  for (unsigned n = 0; n <= 6; ++n) {
    const QuadFloat h = pow(QuadFloat(2), n + 1) * hermite_integral_at(n, half_pi).value;
    EXPECT_LT(std::abs(d(h) - niven_H(n, 256).mid_double()), 1e-10) << n;
  }
}
