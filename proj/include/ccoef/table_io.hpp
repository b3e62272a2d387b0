#ifndef CCOEF_TABLE_IO_HPP
#define CCOEF_TABLE_IO_HPP

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ccoef/cases.hpp"

namespace ccoef {

/// A dense table as exported by the CLI. `row_offset` is the index of the
/// first row and column (the order m for g-tables, otherwise 0).
struct TableArtifact {
  std::string case_name;
  std::map<std::string, double> params;
  long row_offset = 0;
  std::vector<std::vector<double>> entries;
  std::optional<VerificationReport> report;

  long m_max() const { return row_offset + static_cast<long>(entries.size()) - 1; }
  long n_max() const;
};

/// One row per line, comma separated, 17 significant digits.
void write_csv(std::ostream& os, const TableArtifact& t, bool header = false);

/// {"case", "params", "m_max", "n_max", "entries", "report"?}
std::string to_json(const TableArtifact& t);
/// Throws std::runtime_error on malformed input.
TableArtifact from_json(const std::string& text);

std::vector<std::vector<double>> dense(const CoefficientTable& t);

}  // namespace ccoef

#endif  // CCOEF_TABLE_IO_HPP
