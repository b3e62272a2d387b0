#include "ccoef/table_io.hpp"

#include <iomanip>
#include <ostream>
#include <stdexcept>

#include <json.hpp>

namespace ccoef {

using nlohmann::json;

long TableArtifact::n_max() const {
  const std::size_t cols = entries.empty() ? 0 : entries.front().size();
  return row_offset + static_cast<long>(cols) - 1;
}

void write_csv(std::ostream& os, const TableArtifact& t, bool header) {
  const auto old_flags = os.flags();
  const auto old_prec = os.precision();
  if (header && !t.entries.empty()) {
    os << "m\\n";
    for (std::size_t n = 0; n < t.entries.front().size(); ++n)
      os << ',' << t.row_offset + static_cast<long>(n);
    os << '\n';
  }
  os << std::setprecision(17);
  for (std::size_t m = 0; m < t.entries.size(); ++m) {
    if (header) os << t.row_offset + static_cast<long>(m) << ',';
    for (std::size_t n = 0; n < t.entries[m].size(); ++n) {
      if (n) os << ',';
      os << t.entries[m][n];
    }
    os << '\n';
  }
  os.flags(old_flags);
  os.precision(old_prec);
}

std::string to_json(const TableArtifact& t) {
  json j;
  j["case"] = t.case_name;
  j["params"] = json::object();
  for (const auto& [k, v] : t.params) j["params"][k] = v;
  if (t.row_offset != 0) j["params"]["m"] = t.row_offset;
  j["m_max"] = t.m_max();
  j["n_max"] = t.n_max();
  j["entries"] = t.entries;
  if (t.report) {
    j["report"] = {{"residual", t.report->residual},
                   {"closed_residual", t.report->closed_residual},
                   {"closed_dev", t.report->closed_dev},
                   {"oracle_dev", t.report->oracle_dev},
                   {"tolerance", t.report->tolerance},
                   {"passed", t.report->passed}};
  }
  return j.dump(2);
}

TableArtifact from_json(const std::string& text) {
  TableArtifact t;
  try {
    const json j = json::parse(text);
    t.case_name = j.at("case").get<std::string>();
    for (const auto& [k, v] : j.at("params").items()) t.params[k] = v.get<double>();
    t.entries = j.at("entries").get<std::vector<std::vector<double>>>();
    const long m_max = j.at("m_max").get<long>();
    t.row_offset = m_max - static_cast<long>(t.entries.size()) + 1;
    if (auto it = t.params.find("m"); it != t.params.end() && t.row_offset != 0) t.params.erase(it);
    if (j.contains("report")) {
      const auto& r = j.at("report");
      VerificationReport rep;
      rep.residual = r.at("residual").get<double>();
      rep.closed_residual = r.value("closed_residual", 0.0);
      rep.closed_dev = r.at("closed_dev").get<double>();
      rep.oracle_dev = r.at("oracle_dev").get<double>();
      rep.tolerance = r.value("tolerance", 0.0);
      rep.passed = r.value("passed", false);
      t.report = rep;
    }
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed table JSON: ") + e.what());
  }
  return t;
}

std::vector<std::vector<double>> dense(const CoefficientTable& t) { return t.data(); }

}  // namespace ccoef
