#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "ccoef/cases.hpp"
#include "ccoef/legendre_assoc.hpp"

using namespace ccoef;
using std::numbers::pi;

TEST_CASE("associated legendre values") {
  CHECK(eval_assoc_legendre(1, 1, 0.6) == doctest::Approx(-0.8).epsilon(1e-15));
  CHECK(eval_assoc_legendre(2, 0, 0.5) == doctest::Approx(-0.125).epsilon(1e-15));
  CHECK(eval_assoc_legendre(3, 3, 0.0) == doctest::Approx(-15.0).epsilon(1e-15));
  CHECK_THROWS_AS(eval_assoc_legendre(1, 2, 0.0), std::invalid_argument);
}

TEST_CASE("associated legendre parity") {
  std::mt19937_64 rng(7);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  for (int i = 0; i < 100; ++i) {
    const double x = u(rng);
    for (long n = 0; n <= 15; ++n)
      for (long m = 0; m <= n; ++m) {
        const double s = (n + m) % 2 ? -1.0 : 1.0;
        const double v = eval_assoc_legendre(n, m, x);
        CHECK(std::abs(eval_assoc_legendre(n, m, -x) - s * v) <= 1e-12 * std::abs(v));
      }
  }
}

TEST_CASE("seeded boundary rows") {
  const auto e0 = g_boundary_even(0, 1);
  CHECK(e0[0] == doctest::Approx(pi).epsilon(1e-15));
  CHECK(e0[1] == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(g_boundary_even(1, 0)[0] == doctest::Approx(pi / 2).epsilon(1e-15));
  const auto o0 = g_boundary_odd(0, 1);
  CHECK(o0[0] == doctest::Approx(pi / 2).epsilon(1e-15));
  CHECK(o0[1] == doctest::Approx(3 * pi / 16).epsilon(1e-15));
  // P_2^1 = -3x sqrt(1-x^2), so g^1_{2,2} = 9 * integral of x^2 sqrt(1-x^2) = 9 pi / 8.
  CHECK(g_boundary_odd(1, 0)[0] == doctest::Approx(9 * pi / 8).epsilon(1e-15));
  CHECK(g_oracle_table(1, 2)(2, 2) == doctest::Approx(9 * pi / 8).epsilon(1e-13));
}

TEST_CASE("g-table anchors") {
  const auto g = g_fill(0, 8);
  CHECK(g(0, 0) == doctest::Approx(pi).epsilon(1e-14));
  CHECK(g(1, 1) == doctest::Approx(pi / 2).epsilon(1e-14));
  CHECK(g(0, 2) == doctest::Approx(pi / 4).epsilon(1e-14));
  CHECK(g(2, 2) == doctest::Approx(11 * pi / 32).epsilon(1e-14));
  CHECK(g(1, 3) == doctest::Approx(3 * pi / 16).epsilon(1e-14));
  CHECK(g(3, 1) == doctest::Approx(3 * pi / 16).epsilon(1e-14));
  CHECK(g_fill(1, 6)(3, 1) == doctest::Approx(3 * pi / 16).epsilon(1e-13));
  CHECK(g_fill(2, 8)(4, 2) == doctest::Approx(45 * pi / 32).epsilon(1e-13));
  CHECK_THROWS_AS(g(-1, 0), std::out_of_range);
  CHECK_THROWS_AS(g(0, 9), std::out_of_range);
}

TEST_CASE("spot checks") {
  const auto s0 = g_spot_checks(0);
  CHECK(s0.g_m2_m == doctest::Approx(pi / 4).epsilon(1e-15));
  CHECK(s0.g_m2_m2 == doctest::Approx(11 * pi / 32).epsilon(1e-15));
  CHECK(g_spot_checks(2).g_m2_m == doctest::Approx(45 * pi / 32).epsilon(1e-15));
}

TEST_CASE("g-table structure") {
  for (long m = 0; m <= 10; m += 5) {
    const auto g = g_fill(m, 20);
    for (long l = m; l <= 20; ++l)
      for (long n = m; n <= 20; ++n) {
        CHECK(g(l, n) == g(n, l));
        if ((l + n) % 2) CHECK(g(l, n) == 0.0);
      }
    CHECK(g_residual(g) <= 1e-12 * g.max_abs());
  }
}

TEST_CASE("g-table matches gauss-chebyshev") {
  for (long m : {0L, 3L, 10L}) {
    const auto r = verify_gtable(g_fill(m, 20), 1e-8);
    CHECK(r.passed);
    CHECK(r.oracle_dev <= 1e-8);
  }
}

TEST_CASE("G and H sequences") {
  const auto G = G_sequence(0, 4);
  CHECK(G[0] == doctest::Approx(pi).epsilon(1e-15));
  CHECK(G[1] == 0.0);
  CHECK(G[2] == doctest::Approx(pi / 4).epsilon(1e-15));
  const auto H = H_sequence(0, 4);
  CHECK(H[0] == 0.0);
  CHECK(H[2] == 0.0);
  CHECK(H[1] == doctest::Approx(0.5 * G[0]).epsilon(1e-15));
  // G_n^m is the integral of (1 - x^2)^{(m-1)/2} P_n^m.
  for (long m = 0; m <= 3; ++m) {
    const auto Gm = G_sequence(m, m + 8);
    const auto rule = gauss_chebyshev(64);
    for (long n = m; n <= m + 8; ++n) {
      const double q = rule.integrate([&](double x) { return std::pow(1 - x * x, 0.5 * m) * eval_assoc_legendre(n, m, x);
      });
      CHECK(std::abs(Gm[static_cast<std::size_t>(n - m)] - q) <= 1e-11 * std::max(1.0, std::abs(q)));
    }
  }
}
