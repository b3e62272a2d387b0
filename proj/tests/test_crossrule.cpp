#include <doctest.h>

#include <cmath>

#include "ccoef/cases.hpp"
#include "ccoef/crossrule.hpp"

using namespace ccoef;

namespace {

CrossRuleProblem legendre_problem(std::vector<double> row0) {
  const auto leg = family_coefficients(FamilySpec::legendre());
  return CrossRuleProblem{leg, leg, std::move(row0), std::nullopt, Orientation::FillRows};
}

}  // namespace

TEST_CASE("identity fill") {
  std::vector<double> row0(41, 0.0);
  row0[0] = 1.0;
  const auto t = fill(legendre_problem(row0), 20);
  for (long m = 0; m <= 20; ++m)
    for (long n = 0; n <= 20; ++n) CHECK(std::abs(t.at(m, n) - (m == n)) <= 1e-13);
}

TEST_CASE("legendre x^2 hand values") {
  std::vector<double> row0(9, 0.0);
  row0[0] = 1.0 / 3.0;
  row0[2] = 2.0 * std::sqrt(5.0) / 15.0;
  const auto t = fill(legendre_problem(row0), 4);
  CHECK(t.at(1, 1) == doctest::Approx(0.6).epsilon(1e-14));
  CHECK(t.at(2, 0) == doctest::Approx(2.0 * std::sqrt(5.0) / 15.0).epsilon(1e-14));
}

TEST_CASE("trapezoidal domain") {
  std::vector<double> row0(5, 0.0);
  row0[0] = 1.0;
  const auto t = fill(legendre_problem(row0), 4);
  CHECK(t.rows() == 5);
  for (std::size_t m = 0; m < 5; ++m) CHECK(t.row_extent(m) == 5 - m);
  CHECK(t.contains(2, 2));
  CHECK_FALSE(t.contains(2, 3));
  CHECK_THROWS_AS(t.at(2, 3), DomainError);
  CHECK_THROWS_AS(t.at(-1, 0), DomainError);
  CHECK(t.at_or_zero_below(-1, 2) == 0.0);
  CHECK_THROWS_AS(fill(legendre_problem(row0), 5), std::invalid_argument);
}

TEST_CASE("problem validation") {
  CHECK_THROWS_AS(fill(legendre_problem({1.0}), 0), std::invalid_argument);
  auto p = legendre_problem({1.0, 0.0, 0.0});
  p.boundary_col0 = std::vector<double>{0.5, 0.0, 0.0};
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
  p.boundary_col0.reset();
  p.orientation = Orientation::FillColumns;
  CHECK_THROWS_AS(p.validate(), std::invalid_argument);
}

TEST_CASE("residual of filled and perturbed tables") {
  const CrossRuleCase c(CaseKind::LegendreX2, 0.0, 0.0);
  auto t = c.fill_trapezoid(10, Orientation::FillRows);
  CHECK(residual(t, c.row_coeffs(), c.col_coeffs()) <= 1e-13 * t.max_abs());
  auto rows = t.data();
  rows[3][4] += 1e-3;
  const CoefficientTable bad(rows, "perturbed");
  CHECK(residual(bad, c.row_coeffs(), c.col_coeffs()) >= 1e-4);
}

TEST_CASE("closed laguerre connection satisfies the cross rule") {
  const CrossRuleCase c(CaseKind::LaguerreConnect, 2.5, 0.5);
  const auto t = c.closed_table(30);
  CHECK(residual(t, c.row_coeffs(), c.col_coeffs()) <= 1e-10 * t.max_abs());
}

TEST_CASE("filled and transposed fills agree for the identity") {
  const CrossRuleCase c(CaseKind::Identity, 0.0, 0.0);
  const auto r = c.fill_table(12, Orientation::FillRows);
  const auto k = c.fill_table(12, Orientation::FillColumns);
  for (long m = 0; m <= 12; ++m)
    for (long n = 0; n <= 12; ++n) CHECK(r.at(m, n) == k.at(n, m));
}

TEST_CASE("consistency check against the D_{m,0} formula") {
  const CrossRuleCase c(CaseKind::LaguerreConnect, 1.0, 0.0);
  const auto t = c.fill_trapezoid(20, Orientation::FillRows);
  std::vector<double> col0;
  for (long m = 0; m <= 20; ++m) col0.push_back(laguerre_connection_boundary(m, 1.0, 0.0));
  const auto ok = consistency_check(t, col0, 1e-10);
  CHECK(ok.passed);
  CHECK(ok.max_discrepancy <= 1e-10);

  std::vector<double> wrong;
  for (long m = 0; m <= 20; ++m) wrong.push_back(laguerre_connection_boundary(m, 1.0, 0.5));
  CHECK_FALSE(consistency_check(t, wrong, 1e-10).passed);

  std::vector<double> id(21, 0.0);
  id[0] = 1.0;
  const CrossRuleCase ic(CaseKind::Identity, 0.0, 0.0);
  CHECK(consistency_check(ic.fill_trapezoid(20, Orientation::FillRows), id, 0.0).max_discrepancy == 0.0);
}

TEST_CASE("column marching is stable when beta exceeds alpha") {
  const CrossRuleCase c(CaseKind::LaguerreConnect, 0.5, 2.5);
  const auto r = c.verify(20, 1e-10, Orientation::FillColumns);
  CHECK(r.closed_dev <= 1e-10);
}

TEST_CASE("filled legendre x^2 is symmetric with parity zeros") {
  const CrossRuleCase c(CaseKind::LegendreX2, 0.0, 0.0);
  const auto t = c.fill_table(16);
  for (long m = 0; m <= 16; ++m)
    for (long n = 0; n <= 16; ++n) {
      CHECK(std::abs(t.at(m, n) - t.at(n, m)) <= 1e-13);
      if ((m + n) % 2) CHECK(std::abs(t.at(m, n)) <= 1e-13);
    }
}

TEST_CASE("table helpers") {
  const auto t = CoefficientTable::rectangular({{1.0, 2.0}, {3.0, 4.0}}, "m");
  CHECK(t.is_rectangular());
  CHECK(t.transposed().at(0, 1) == 3.0);
  CHECK(t.max_abs() == 4.0);
  CHECK(t.square_extent() == 2);
  CHECK_THROWS_AS(t.block(3, 1), DomainError);
  CHECK_THROWS_AS(CoefficientTable({{1.0}, {1.0, 2.0}}, "grow"), std::invalid_argument);
}
