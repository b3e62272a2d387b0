#ifndef CCOEF_CROSSRULE_HPP
#define CCOEF_CROSSRULE_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ccoef/recurrence.hpp"

namespace ccoef {

/// Read outside a table's valid domain.
class DomainError : public std::out_of_range {
public:
  using std::out_of_range::out_of_range;
};

/// Table of D_{m,n} whose row m is valid for columns 0..row_extent(m)-1.
///
/// Row extents never increase with m. Tables produced by a forward fill are
/// trapezoidal; tables from closed forms are rectangular.
class CoefficientTable {
public:
  CoefficientTable() = default;
  CoefficientTable(std::vector<std::vector<double>> rows, std::string provenance);

  /// Rectangular table from a row-major matrix.
  static CoefficientTable rectangular(std::vector<std::vector<double>> rows,
                                      std::string provenance);

  std::size_t rows() const { return rows_.size(); }
  std::size_t row_extent(std::size_t m) const;
  bool contains(long m, long n) const;
  bool is_rectangular() const;

  /// Throws DomainError outside the valid domain.
  double at(long m, long n) const;
  /// D_{m,n} with the D_{-1,n} = D_{m,-1} = 0 convention.
  double at_or_zero_below(long m, long n) const;

  CoefficientTable transposed() const;
  /// Leading rows x cols block; throws DomainError if not fully covered.
  CoefficientTable block(std::size_t rows, std::size_t cols) const;
  /// Largest square block [0, k) x [0, k) inside the domain.
  std::size_t square_extent() const;

  double max_abs() const;
  const std::vector<std::vector<double>>& data() const { return rows_; }

  const std::string& provenance() const { return provenance_; }
  void set_provenance(std::string p) { provenance_ = std::move(p); }

private:
  std::vector<std::vector<double>> rows_;
  std::string provenance_;
};

enum class Orientation { FillRows, FillColumns };

/// Input to the cross-rule fill: coefficients of the row family p (a_m, b_m),
/// of the column family q (c_n, d_n), and boundary data.
///
/// FillRows consumes boundary_row0 = D_{0,n}; FillColumns consumes
/// boundary_col0 = D_{m,0}. The other boundary, when present, is only used
/// for verification.
struct CrossRuleProblem {
  CoefficientSequence row_coeffs;
  CoefficientSequence col_coeffs;
  std::vector<double> boundary_row0;
  std::optional<std::vector<double>> boundary_col0;
  Orientation orientation = Orientation::FillRows;

  /// Checks the boundary invariants; throws std::invalid_argument.
  void validate() const;
};

/// Fills `steps` rows (FillRows) or columns (FillColumns) beyond the
/// boundary. With a boundary of length L, steps <= L - 1 and the filled
/// row m is valid for n <= L - 1 - m.
CoefficientTable fill(const CrossRuleProblem& problem, std::size_t steps);

/// Maximal |lhs - rhs| of the cross rule
///   b_{m-1} D_{m-1,n} + a_m D_{m,n} + b_m D_{m+1,n}
///     = d_{n-1} D_{m,n-1} + c_n D_{m,n} + d_n D_{m,n+1}
/// over every (m, n) whose stencil lies in the table's domain.
double residual(const CoefficientTable& table, const CoefficientSequence& row_coeffs,
                const CoefficientSequence& col_coeffs);

struct ConsistencyReport {
  std::vector<double> discrepancy;
  double max_discrepancy = 0.0;
  double tolerance = 0.0;
  bool passed = true;
};

/// Compares the table's column 0 with independently supplied D_{m,0}.
ConsistencyReport consistency_check(const CoefficientTable& table,
                                    const std::vector<double>& boundary_col0, double tol);

}  // namespace ccoef

#endif  // CCOEF_CROSSRULE_HPP
