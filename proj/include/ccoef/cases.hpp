#ifndef CCOEF_CASES_HPP
#define CCOEF_CASES_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccoef/crossrule.hpp"
#include "ccoef/families.hpp"
#include "ccoef/legendre_assoc.hpp"
#include "ccoef/quadrature.hpp"

namespace ccoef {

/// Max-norm deviations between the three independent routes to a table,
/// each relative to the largest entry of the reference table.
struct VerificationReport {
  double residual = 0.0;         // cross-rule violation of the filled table
  double closed_residual = 0.0;  // cross-rule violation of the closed form
  double closed_dev = 0.0;       // filled vs closed form
  double oracle_dev = 0.0;       // filled and closed form vs quadrature
  double tolerance = 0.0;
  bool passed = false;
};

enum class CaseKind { Identity, LegendreX2, LaguerreConnect, LaguerreSigned, UltrasphericalF };

/// Parses a case name ("identity", "legendre-x2", "laguerre-connect",
/// "laguerre-signed", "ultraspherical-f").
std::optional<CaseKind> parse_case(const std::string& name);
std::string case_name(CaseKind kind);

/// One worked example: coefficient families, boundary data, closed form and
/// quadrature oracle for the same matrix. Tables are (N+1) x (N+1) in the
/// normalization of the closed form; UltrasphericalF is classical Jacobi,
/// everything else orthonormal.
class CrossRuleCase {
public:
  CrossRuleCase(CaseKind kind, double alpha, double beta);

  CaseKind kind() const { return kind_; }
  std::string name() const { return case_name(kind_); }
  std::map<std::string, double> params() const;
  /// Default verification tolerance for the case.
  double default_tolerance() const;

  const CoefficientSequence& row_coeffs() const { return row_; }
  const CoefficientSequence& col_coeffs() const { return col_; }
  const ClosedFormTable& closed() const { return closed_; }
  Orientation default_orientation() const;

  /// Boundary data long enough for a full (N+1) x (N+1) block, in the
  /// orthonormal scaling used by the fill.
  CrossRuleProblem problem(long N, Orientation orientation) const;
  /// Raw trapezoidal fill in orthonormal scaling.
  CoefficientTable fill_trapezoid(long N, Orientation orientation) const;
  CoefficientTable fill_table(long N, Orientation orientation) const;
  CoefficientTable fill_table(long N) const { return fill_table(N, default_orientation()); }
  CoefficientTable closed_table(long N) const;
  CoefficientTable oracle_table(long N) const;
  /// Orthonormal scaling of a table in the case's output normalization.
  CoefficientTable orthonormal(const CoefficientTable& t) const;

  VerificationReport verify(long N, double tol, Orientation orientation) const;
  VerificationReport verify(long N, double tol) const {
    return verify(N, tol, default_orientation());
  }

private:
  const std::vector<double>& norms(std::size_t count) const;

  CaseKind kind_;
  double alpha_;
  double beta_;
  CoefficientSequence row_;
  CoefficientSequence col_;
  ClosedFormTable closed_;
  mutable std::vector<double> norms_;
};

/// max |a - b| over the common square, divided by max |ref|.
double relative_deviation(const CoefficientTable& a, const CoefficientTable& b,
                          const CoefficientTable& ref);

/// g^m_{l,n} for m <= l, n <= N by Gauss-Chebyshev quadrature.
GTable g_oracle_table(long m, long N);

/// g-table checks: seeded rows against the boundary formulas, spot values,
/// quadrature, and the three-term identity.
VerificationReport verify_gtable(const GTable& table, double tol);

}  // namespace ccoef

#endif  // CCOEF_CASES_HPP
