#include "ccoef/crossrule.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace ccoef {

CoefficientTable::CoefficientTable(std::vector<std::vector<double>> rows, std::string provenance)
    : rows_(std::move(rows)), provenance_(std::move(provenance)) {
  for (std::size_t m = 1; m < rows_.size(); ++m)
    if (rows_[m].size() > rows_[m - 1].size())
      throw std::invalid_argument("coefficient table: row extents must not increase");
}

CoefficientTable CoefficientTable::rectangular(std::vector<std::vector<double>> rows,
                                               std::string provenance) {
  for (const auto& r : rows)
    if (r.size() != rows.front().size())
      throw std::invalid_argument("coefficient table: ragged rectangular table");
  return CoefficientTable(std::move(rows), std::move(provenance));
}

std::size_t CoefficientTable::row_extent(std::size_t m) const {
  return m < rows_.size() ? rows_[m].size() : 0;
}

bool CoefficientTable::contains(long m, long n) const {
  return m >= 0 && n >= 0 && static_cast<std::size_t>(m) < rows_.size() &&
         static_cast<std::size_t>(n) < rows_[static_cast<std::size_t>(m)].size();
}

bool CoefficientTable::is_rectangular() const {
  return rows_.empty() || rows_.front().size() == rows_.back().size();
}

double CoefficientTable::at(long m, long n) const {
  if (!contains(m, n)) {
    std::ostringstream os;
    os << "entry (" << m << ", " << n << ") is outside the table domain";
    throw DomainError(os.str());
  }
  return rows_[static_cast<std::size_t>(m)][static_cast<std::size_t>(n)];
}

double CoefficientTable::at_or_zero_below(long m, long n) const {
  if (m < 0 || n < 0) return 0.0;
  return at(m, n);
}

CoefficientTable CoefficientTable::transposed() const {
  const std::size_t cols = rows_.empty() ? 0 : rows_.front().size();
  std::vector<std::vector<double>> t(cols);
  for (std::size_t n = 0; n < cols; ++n)
    for (std::size_t m = 0; m < rows_.size() && n < rows_[m].size(); ++m)
      t[n].push_back(rows_[m][n]);
  return CoefficientTable(std::move(t), provenance_);
}

CoefficientTable CoefficientTable::block(std::size_t rows, std::size_t cols) const {
  if (rows > rows_.size() || (rows > 0 && rows_[rows - 1].size() < cols)) {
    std::ostringstream os;
    os << "block " << rows << "x" << cols << " is not covered by the table domain";
    throw DomainError(os.str());
  }
  std::vector<std::vector<double>> out(rows);
  for (std::size_t m = 0; m < rows; ++m)
    out[m].assign(rows_[m].begin(), rows_[m].begin() + static_cast<std::ptrdiff_t>(cols));
  return CoefficientTable(std::move(out), provenance_);
}

std::size_t CoefficientTable::square_extent() const {
  std::size_t k = 0;
  while (k < rows_.size() && rows_[k].size() > k) ++k;
  return k;
}

double CoefficientTable::max_abs() const {
  double mx = 0.0;
  for (const auto& r : rows_)
    for (double v : r) mx = std::max(mx, std::abs(v));
  return mx;
}

void CrossRuleProblem::validate() const {
  if (boundary_row0.size() < 2)
    throw std::invalid_argument("cross-rule problem: boundary row needs at least 2 entries");
  if (boundary_col0) {
    if (boundary_col0->empty())
      throw std::invalid_argument("cross-rule problem: empty boundary column");
    if ((*boundary_col0)[0] != boundary_row0[0])
      throw std::invalid_argument("cross-rule problem: boundary corners D_{0,0} disagree");
  }
  if (orientation == Orientation::FillColumns) {
    if (!boundary_col0)
      throw std::invalid_argument("cross-rule problem: column fill requires boundary_col0");
    if (boundary_col0->size() < 2)
      throw std::invalid_argument("cross-rule problem: boundary column needs at least 2 entries");
  }
}

namespace {

// Row fill from D_{0,n}; `row` holds (a_m, b_m), `col` holds (c_n, d_n).
CoefficientTable fill_rows(const CoefficientSequence& row, const CoefficientSequence& col,
                           const std::vector<double>& boundary, std::size_t steps) {
  const std::size_t L = boundary.size();
  if (steps > L - 1) {
    std::ostringstream os;
    os << "fill: " << steps << " steps requested but a boundary of length " << L
       << " supports at most " << L - 1;
    throw std::invalid_argument(os.str());
  }
  row.ensure(steps + 1);
  col.ensure(L);

  std::vector<std::vector<double>> D;
  D.reserve(steps + 1);
  D.push_back(boundary);
  for (std::size_t m = 0; m < steps; ++m) {
    const long mm = static_cast<long>(m);
    const double am = row.a(mm), bm = row.b(mm), bm1 = row.b(mm - 1);
    const std::vector<double>& cur = D[m];
    const std::vector<double>* prev = m > 0 ? &D[m - 1] : nullptr;
    const std::size_t width = cur.size() - 1;
    std::vector<double> next(width);
    for (std::size_t n = 0; n < width; ++n) {
      const long nn = static_cast<long>(n);
      double rhs = (col.a(nn) - am) * cur[n] + col.b(nn) * cur[n + 1];
      if (n > 0) rhs += col.b(nn - 1) * cur[n - 1];
      if (prev) rhs -= bm1 * (*prev)[n];
      next[n] = rhs / bm;
    }
    D.push_back(std::move(next));
  }
  return CoefficientTable(std::move(D), "");
}

}  // namespace

CoefficientTable fill(const CrossRuleProblem& problem, std::size_t steps) {
  problem.validate();
  std::ostringstream prov;
  if (problem.orientation == Orientation::FillRows) {
    auto t = fill_rows(problem.row_coeffs, problem.col_coeffs, problem.boundary_row0, steps);
    prov << "cross-rule fill (rows) p=" << problem.row_coeffs.label()
         << " q=" << problem.col_coeffs.label();
    t.set_provenance(prov.str());
    return t;
  }
  // Transposed problem: the column family plays the row role.
  auto t = fill_rows(problem.col_coeffs, problem.row_coeffs, *problem.boundary_col0, steps)
               .transposed();
  prov << "cross-rule fill (columns) p=" << problem.row_coeffs.label()
       << " q=" << problem.col_coeffs.label();
  t.set_provenance(prov.str());
  return t;
}

double residual(const CoefficientTable& table, const CoefficientSequence& row_coeffs,
                const CoefficientSequence& col_coeffs) {
  double worst = 0.0;
  bool any = false;
  for (std::size_t mi = 0; mi + 1 < table.rows(); ++mi) {
    const long m = static_cast<long>(mi);
    for (std::size_t ni = 0; ni < table.row_extent(mi); ++ni) {
      const long n = static_cast<long>(ni);
      if (!table.contains(m + 1, n) || !table.contains(m, n + 1)) continue;
      any = true;
      const double lhs = row_coeffs.b(m - 1) * table.at_or_zero_below(m - 1, n) +
                         row_coeffs.a(m) * table.at(m, n) +
                         row_coeffs.b(m) * table.at(m + 1, n);
      const double rhs = col_coeffs.b(n - 1) * table.at_or_zero_below(m, n - 1) +
                         col_coeffs.a(n) * table.at(m, n) +
                         col_coeffs.b(n) * table.at(m, n + 1);
      const double d = std::abs(lhs - rhs);
      if (!(d <= worst)) worst = d;  // NaN propagates
    }
  }
  if (!any) throw std::invalid_argument("residual: table too small for a single stencil");
  return worst;
}

ConsistencyReport consistency_check(const CoefficientTable& table,
                                    const std::vector<double>& boundary_col0, double tol) {
  ConsistencyReport report;
  report.tolerance = tol;
  const std::size_t rows = std::min(table.rows(), boundary_col0.size());
  for (std::size_t m = 0; m < rows; ++m) {
    const double d = std::abs(table.at(static_cast<long>(m), 0) - boundary_col0[m]);
    report.discrepancy.push_back(d);
    report.max_discrepancy = std::max(report.max_discrepancy, d);
  }
  report.passed = report.max_discrepancy <= tol;
  return report;
}

}  // namespace ccoef
