#include <doctest.h>

#include <cmath>
#include <memory>

#include "ccoef/quadrature.hpp"
#include "ccoef/recurrence.hpp"
#include "ccoef/special.hpp"

using namespace ccoef;

TEST_CASE("legendre coefficients") {
  auto [a0, b0] = legendre_coeffs(0);
  CHECK(a0 == 0.0);
  CHECK(b0 == doctest::Approx(1.0 / std::sqrt(3.0)).epsilon(1e-15));
  CHECK(legendre_coeffs(1).second == doctest::Approx(2.0 / std::sqrt(15.0)).epsilon(1e-15));
}

// (n+1)^2 / ((2n+1)(2n+3)) exceeds 1/4 by 1/(4(2n+1)(2n+3)), so the limit
// is approached from above.
TEST_CASE("legendre b_n decreases toward one half") {
  double prev = 1.0;
  for (long n = 0; n <= 1000000; n += (n < 100 ? 1 : 997)) {
    const double b = legendre_coeffs(n).second;
    CHECK(b < prev);
    CHECK(b >= 0.5);
    prev = b;
  }
  CHECK(prev - 0.5 < 1e-12);
}

TEST_CASE("laguerre coefficients") {
  CHECK(laguerre_coeffs(0, 0.0) == std::pair<double, double>{1.0, 1.0});
  auto [a, b] = laguerre_coeffs(2, 1.0);
  CHECK(a == 6.0);
  CHECK(b == doctest::Approx(std::sqrt(12.0)).epsilon(1e-15));
  auto [ah, bh] = laguerre_coeffs(0, -0.5);
  CHECK(ah == 0.5);
  CHECK(bh == doctest::Approx(std::sqrt(0.5)).epsilon(1e-15));
  CHECK_THROWS_AS(laguerre_coeffs(0, -1.0), std::invalid_argument);
}

TEST_CASE("stieltjes reproduces closed coefficients") {
  const auto leg = family_coefficients(FamilySpec::legendre());
  // count coefficients need count + 1 support points: b_{count-1} is the
  // norm of p_count.
  const auto rule = gauss_from_coeffs(leg, 6);
  const auto s = stieltjes_coeffs(rule, 5);
  for (long n = 0; n < 5; ++n) {
    CHECK(std::abs(s.a(n) - legendre_coeffs(n).first) <= 1e-12);
    CHECK(std::abs(s.b(n) - legendre_coeffs(n).second) <= 1e-12);
  }
  const auto lag = family_coefficients(FamilySpec::laguerre(1.0));
  const auto s1 = stieltjes_coeffs(gauss_from_coeffs(lag, 6), 5);
  for (long n = 0; n < 5; ++n) {
    CHECK(std::abs(s1.a(n) - laguerre_coeffs(n, 1.0).first) <= 1e-10);
    CHECK(std::abs(s1.b(n) - laguerre_coeffs(n, 1.0).second) <= 1e-10);
  }
  CHECK(s1.mass() == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("stieltjes breaks down on a one-point measure") {
  const QuadratureRule one({0.25}, {1.0}, "point", "delta");
  try {
    const auto s = stieltjes_coeffs(one, 3);
    (void)s.b(1);
    FAIL("expected breakdown");
  } catch (const BreakdownError& e) {
    CHECK(e.index() == 1);
  }
}

TEST_CASE("stieltjes rejects signed rules") {
  CHECK_THROWS_AS(stieltjes_coeffs(signed_laguerre_rule(1.0, 4), 2), std::invalid_argument);
}

TEST_CASE("b(-1) is zero and limits are enforced") {
  const auto u = family_coefficients(FamilySpec::ultraspherical(1.0));
  CHECK(u.b(-1) == 0.0);
  REQUIRE(u.limit().has_value());
  CHECK_THROWS_AS(u.a(static_cast<long>(*u.limit())), std::out_of_range);
}

TEST_CASE("orthonormality under the family's own gauss rule") {
  for (const auto& fam : {FamilySpec::legendre(), FamilySpec::laguerre(0.5),
                          FamilySpec::ultraspherical(2.0)}) {
    const auto c = family_coefficients(fam);
    const auto rule = gauss_from_coeffs(c, 30);
    for (long m = 0; m <= 20; m += 3)
      for (long n = 0; n <= 20; n += 4) {
        const double v = rule.integrate([&](double x) { return c.evaluate(m, x) * c.evaluate(n, x); });
        CHECK(std::abs(v - (m == n ? 1.0 : 0.0)) <= 1e-11);
      }
  }
}

TEST_CASE("copies share the memo and agree") {
  const auto a = family_coefficients(FamilySpec::laguerre(2.0));
  const auto b = a;
  a.ensure(50);
  CHECK(b.a(49) == 2.0 * 49 + 1 + 2.0);
}

TEST_CASE("norm constants") {
  CHECK(norm_constants(FamilySpec::legendre(Normalization::Classical), 1)[0] ==
        doctest::Approx(2.0).epsilon(1e-14));
  const auto h = norm_constants(FamilySpec::laguerre(0.0, Normalization::Classical), 8);
  for (double v : h) CHECK(v == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(norm_constants(FamilySpec::ultraspherical(1.0, Normalization::Classical), 1)[0] ==
        doctest::Approx(4.0 / 3.0).epsilon(1e-13));
  const auto hl = norm_constants(FamilySpec::legendre(Normalization::Classical), 6);
  for (std::size_t n = 0; n < hl.size(); ++n)
    CHECK(hl[n] == doctest::Approx(2.0 / (2.0 * n + 1)).epsilon(1e-13));
}

TEST_CASE("classical polynomials") {
  CHECK(classical_poly(FamilySpec::legendre(), 2, 0.5) == doctest::Approx(-0.125));
  CHECK(classical_poly(FamilySpec::laguerre(0.0), 1, 0.3) == doctest::Approx(0.7));
  // P_1^(1,1)(x) = 2x
  CHECK(classical_poly(FamilySpec::ultraspherical(1.0), 1, 0.3) == doctest::Approx(0.6));
}

TEST_CASE("pochhammer and log factorials") {
  CHECK(pochhammer(0.0, 3).value() == 0.0);
  CHECK(pochhammer(-2.0, 5).value() == 0.0);
  CHECK(pochhammer(-2.0, 2).value() == doctest::Approx(2.0));
  CHECK(pochhammer(0.5, 3).value() == doctest::Approx(0.5 * 1.5 * 2.5));
  CHECK(pochhammer(3.0, 0).value() == 1.0);
  CHECK(std::exp(log_factorial(5)) == doctest::Approx(120.0));
  CHECK(std::exp(log_binomial(5, 2)) == doctest::Approx(10.0));
}
