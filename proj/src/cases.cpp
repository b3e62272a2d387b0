#include "ccoef/cases.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace ccoef {

std::optional<CaseKind> parse_case(const std::string& name) {
  if (name == "identity") return CaseKind::Identity;
  if (name == "legendre-x2") return CaseKind::LegendreX2;
  if (name == "laguerre-connect") return CaseKind::LaguerreConnect;
  if (name == "laguerre-signed") return CaseKind::LaguerreSigned;
  if (name == "ultraspherical-f") return CaseKind::UltrasphericalF;
  return std::nullopt;
}

std::string case_name(CaseKind kind) {
  switch (kind) {
    case CaseKind::Identity: return "identity";
    case CaseKind::LegendreX2: return "legendre-x2";
    case CaseKind::LaguerreConnect: return "laguerre-connect";
    case CaseKind::LaguerreSigned: return "laguerre-signed";
    case CaseKind::UltrasphericalF: return "ultraspherical-f";
  }
  return "unknown";
}

namespace {

CoefficientSequence row_family(CaseKind kind, double alpha) {
  switch (kind) {
    case CaseKind::Identity:
    case CaseKind::LegendreX2: return family_coefficients(FamilySpec::legendre());
    case CaseKind::LaguerreConnect:
    case CaseKind::LaguerreSigned: return family_coefficients(FamilySpec::laguerre(alpha));
    case CaseKind::UltrasphericalF: return family_coefficients(FamilySpec::ultraspherical(alpha));
  }
  throw std::logic_error("unhandled case");
}

CoefficientSequence col_family(CaseKind kind, double alpha, double beta) {
  if (kind == CaseKind::LaguerreConnect) return family_coefficients(FamilySpec::laguerre(beta));
  return row_family(kind, alpha);
}

ClosedFormTable closed_form(CaseKind kind, double alpha, double beta) {
  switch (kind) {
    case CaseKind::Identity:
      return {"identity", Symmetry::Symmetric, [](long, long) { return 1.0; },
              [](long m, long n) { return m == n; }};
    case CaseKind::LegendreX2: return legendre_x2_table();
    case CaseKind::LaguerreConnect: return laguerre_connection_table(alpha, beta);
    case CaseKind::LaguerreSigned: return laguerre_signed_table(alpha);
    case CaseKind::UltrasphericalF: return ultraspherical_F_table(alpha);
  }
  throw std::logic_error("unhandled case");
}

double tiny_guard(double v) { return v > 0.0 ? v : std::numeric_limits<double>::min(); }

}  // namespace

CrossRuleCase::CrossRuleCase(CaseKind kind, double alpha, double beta)
    : kind_(kind),
      alpha_(alpha),
      beta_(beta),
      row_(row_family(kind, alpha)),
      col_(col_family(kind, alpha, beta)),
      closed_(closed_form(kind, alpha, beta)) {}

std::map<std::string, double> CrossRuleCase::params() const {
  switch (kind_) {
    case CaseKind::LaguerreConnect: return {{"alpha", alpha_}, {"beta", beta_}};
    case CaseKind::LaguerreSigned:
    case CaseKind::UltrasphericalF: return {{"alpha", alpha_}};
    default: return {};
  }
}

double CrossRuleCase::default_tolerance() const {
  switch (kind_) {
    case CaseKind::Identity: return 1e-13;
    case CaseKind::LegendreX2: return 1e-12;
    case CaseKind::LaguerreConnect: return 1e-10;
    case CaseKind::LaguerreSigned:
    case CaseKind::UltrasphericalF: return 1e-9;
  }
  return 1e-9;
}

Orientation CrossRuleCase::default_orientation() const {
  // Row marching is stable for every case. For the Laguerre connection the
  // first row is (D_{0,0}, 0, 0, ...) by lower triangularity, so the D_{m,0}
  // column enters only through its corner and the consistency check.
  return Orientation::FillRows;
}

const std::vector<double>& CrossRuleCase::norms(std::size_t count) const {
  if (norms_.size() < count)
    norms_ = norm_constants(FamilySpec::ultraspherical(alpha_, Normalization::Classical), count);
  return norms_;
}

CoefficientTable CrossRuleCase::orthonormal(const CoefficientTable& t) const {
  if (kind_ != CaseKind::UltrasphericalF) return t;
  return to_orthonormal(t, norms(std::max(t.rows(), t.row_extent(0))));
}

CrossRuleProblem CrossRuleCase::problem(long N, Orientation orientation) const {
  if (N < 1) throw std::invalid_argument("problem size N must be >= 1");
  const auto L = static_cast<std::size_t>(2 * N + 1);
  std::vector<double> row0(L), col0(L);
  for (std::size_t k = 0; k < L; ++k) {
    const long i = static_cast<long>(k);
    row0[k] = closed_(0, i);
    col0[k] = kind_ == CaseKind::LaguerreConnect ? laguerre_connection_boundary(i, alpha_, beta_)
                                                  : closed_(i, 0);
  }
  if (kind_ == CaseKind::UltrasphericalF) {
    const auto& h = norms(L);
    for (std::size_t k = 0; k < L; ++k) {
      row0[k] /= std::sqrt(h[0] * h[k]);
      col0[k] /= std::sqrt(h[k] * h[0]);
    }
  }
  row0[0] = col0[0];
  return CrossRuleProblem{row_, col_, std::move(row0), std::move(col0), orientation};
}

CoefficientTable CrossRuleCase::fill_trapezoid(long N, Orientation orientation) const {
  return fill(problem(N, orientation), static_cast<std::size_t>(N));
}

CoefficientTable CrossRuleCase::fill_table(long N, Orientation orientation) const {
  const auto size = static_cast<std::size_t>(N + 1);
  CoefficientTable t = fill_trapezoid(N, orientation).block(size, size);
  if (kind_ == CaseKind::UltrasphericalF) t = to_classical(t, norms(size));
  return t;
}

CoefficientTable CrossRuleCase::closed_table(long N) const {
  const auto size = static_cast<std::size_t>(N + 1);
  return closed_.tabulate(size, size);
}

CoefficientTable CrossRuleCase::oracle_table(long N) const {
  const std::size_t K = oracle_nodes(N, N);
  const QuadratureRule rule = [&]() {
    switch (kind_) {
      case CaseKind::Identity: return gauss_from_coeffs(row_, K);
      case CaseKind::LegendreX2:
        return with_density(gauss_from_coeffs(row_, K), [](double x) { return x * x; }, 2, "x^2");
      case CaseKind::LaguerreConnect: return gauss_from_coeffs(col_, K);
      case CaseKind::LaguerreSigned: return signed_laguerre_rule(alpha_, K);
      case CaseKind::UltrasphericalF: return gauss_jacobi_symmetric(alpha_ - 1.0, K);
    }
    throw std::logic_error("unhandled case");
  }();
  const auto size = static_cast<std::size_t>(N + 1);
  std::vector<std::vector<double>> t(size, std::vector<double>(size));
  for (long m = 0; m <= N; ++m)
    for (long n = 0; n <= N; ++n)
      t[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)] =
          oracle_entry(row_, col_, rule, m, n);
  CoefficientTable out = CoefficientTable::rectangular(std::move(t), "quadrature " + rule.weight_descriptor());
  if (kind_ == CaseKind::UltrasphericalF) out = to_classical(out, norms(size));
  return out;
}

double relative_deviation(const CoefficientTable& a, const CoefficientTable& b,
                          const CoefficientTable& ref) {
  const std::size_t k = std::min({a.square_extent(), b.square_extent(), ref.square_extent()});
  double worst = 0.0;
  for (std::size_t m = 0; m < k; ++m)
    for (std::size_t n = 0; n < k; ++n) {
      const long i = static_cast<long>(m), j = static_cast<long>(n);
      const double d = std::abs(a.at(i, j) - b.at(i, j));
      if (!(d <= worst)) worst = d;
    }
  return worst / tiny_guard(ref.block(k, k).max_abs());
}

namespace {

bool within(double v, double tol) { return v <= tol; }  // false for NaN

}  // namespace

VerificationReport CrossRuleCase::verify(long N, double tol, Orientation orientation) const {
  VerificationReport r;
  r.tolerance = tol;
  const CoefficientTable trap = fill_trapezoid(N, orientation);
  r.residual = residual(trap, row_, col_) / tiny_guard(trap.max_abs());

  const CoefficientTable closed = closed_table(N);
  const CoefficientTable closed_on = orthonormal(closed);
  r.closed_residual = residual(closed_on, row_, col_) / tiny_guard(closed_on.max_abs());

  const CoefficientTable filled = fill_table(N, orientation);
  r.closed_dev = relative_deviation(filled, closed, closed);
  const CoefficientTable oracle = oracle_table(N);
  r.oracle_dev = std::max(relative_deviation(filled, oracle, oracle),
                          relative_deviation(closed, oracle, oracle));
  r.passed = within(r.residual, tol) && within(r.closed_residual, tol) &&
             within(r.closed_dev, tol) && within(r.oracle_dev, tol);
  return r;
}

GTable g_oracle_table(long m, long N) {
  if (N < m) throw std::invalid_argument("g_oracle_table: N must be >= m");
  const QuadratureRule rule = gauss_chebyshev(oracle_nodes(N, N));
  const auto size = static_cast<std::size_t>(N - m + 1);
  // P[k][i] = P_{m+i}^m(x_k)
  std::vector<std::vector<double>> P(rule.size(), std::vector<double>(size));
  for (std::size_t k = 0; k < rule.size(); ++k)
    for (std::size_t i = 0; i < size; ++i)
      P[k][i] = eval_assoc_legendre(m + static_cast<long>(i), m, rule.nodes()[k]);
  std::vector<std::vector<double>> upper(size);
  for (std::size_t i = 0; i < size; ++i)
    for (std::size_t j = i; j < size; ++j) {
      double s = 0.0;
      for (std::size_t k = 0; k < rule.size(); ++k) s += rule.weights()[k] * P[k][i] * P[k][j];
      upper[i].push_back(s);
    }
  return GTable(m, N, std::move(upper));
}

VerificationReport verify_gtable(const GTable& table, double tol) {
  VerificationReport r;
  r.tolerance = tol;
  const long m = table.order(), N = table.truncation();
  const double scale = tiny_guard(table.max_abs());
  r.residual = g_residual(table) / scale;
  r.closed_residual = 0.0;

  double closed = 0.0;
  auto track = [&closed](double got, double want) {
    const double d = std::abs(got - want) / std::abs(want);
    if (!(d <= closed)) closed = d;
  };
  const auto even = g_boundary_even(m, (N - m) / 2);
  for (long k = 0; m + 2 * k <= N; ++k) track(table(m, m + 2 * k), even[static_cast<std::size_t>(k)]);
  if (N >= m + 1) {
    const auto odd = g_boundary_odd(m, (N - m - 1) / 2);
    for (long k = 0; m + 2 * k + 1 <= N; ++k)
      track(table(m + 1, m + 2 * k + 1), odd[static_cast<std::size_t>(k)]);
  }
  if (N >= m + 2) {
    const auto spot = g_spot_checks(m);
    track(table(m + 2, m), spot.g_m2_m);
    track(table(m + 2, m + 2), spot.g_m2_m2);
  }
  r.closed_dev = closed;

  const GTable oracle = g_oracle_table(m, N);
  double worst = 0.0;
  for (long l = m; l <= N; ++l)
    for (long n = m; n <= N; ++n) {
      const double d = std::abs(table(l, n) - oracle(l, n));
      if (!(d <= worst)) worst = d;
    }
  r.oracle_dev = worst / tiny_guard(oracle.max_abs());
  r.passed = within(r.residual, tol) && within(r.closed_dev, tol) && within(r.oracle_dev, tol);
  return r;
}

}  // namespace ccoef
