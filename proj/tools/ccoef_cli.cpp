// ccoef: build, verify and export connection-coefficient and g-tables.
//
// Exit status: 0 success, 1 verification failure, 2 invalid configuration,
// 3 numerical failure.

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ccoef/cases.hpp"
#include "ccoef/table_io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadConfig = 2;
constexpr int kExitInternal = 3;

struct JobConfig {
  std::string command;
  std::string case_name;
  std::string family = "legendre";
  std::string normalization = "orthonormal";
  std::string orientation;
  std::string format = "csv";
  std::string output;
  long n = 0;
  long m = 0;
  double alpha = 1.0;
  double beta = 0.0;
  std::optional<double> tol;
  bool header = false;
  bool verify = false;
};

class ConfigError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

void validate(const JobConfig& cfg) {
  if (cfg.n < 1) throw ConfigError("--n must be >= 1");
  if (cfg.tol && !(*cfg.tol > 0.0)) throw ConfigError("--tol must be positive");
  if (cfg.format != "csv" && cfg.format != "json")
    throw ConfigError("--format must be csv or json");
  if (!cfg.orientation.empty() && cfg.orientation != "rows" && cfg.orientation != "columns")
    throw ConfigError("--orientation must be rows or columns");
  if (cfg.command == "gtable" && (cfg.m < 0 || cfg.m > cfg.n))
    throw ConfigError("--m must satisfy 0 <= m <= n");
}

void emit(const JobConfig& cfg, const ccoef::TableArtifact& artifact) {
  std::ofstream file;
  if (!cfg.output.empty()) {
    file.open(cfg.output);
    if (!file) throw std::runtime_error("cannot open output file " + cfg.output);
  }
  std::ostream& os = cfg.output.empty() ? std::cout : file;
  if (cfg.format == "json") os << ccoef::to_json(artifact) << '\n';
  else ccoef::write_csv(os, artifact, cfg.header);
}

void print_report(const ccoef::VerificationReport& r) {
  std::ostringstream os;
  os.precision(3);
  os << std::scientific << "verify: residual=" << r.residual
     << " closed_residual=" << r.closed_residual << " closed_dev=" << r.closed_dev
     << " oracle_dev=" << r.oracle_dev << " tol=" << r.tolerance << " -> "
     << (r.passed ? "PASS" : "FAIL") << '\n';
  std::cerr << os.str();
}

int run_crossrule(const JobConfig& cfg) {
  const auto kind = ccoef::parse_case(cfg.case_name);
  if (!kind) throw ConfigError("unknown case '" + cfg.case_name + "'");
  const ccoef::CrossRuleCase c(*kind, cfg.alpha, cfg.beta);
  ccoef::Orientation orientation = c.default_orientation();
  if (cfg.orientation == "rows") orientation = ccoef::Orientation::FillRows;
  if (cfg.orientation == "columns") orientation = ccoef::Orientation::FillColumns;

  ccoef::TableArtifact artifact;
  artifact.case_name = c.name();
  artifact.params = c.params();

  const bool verifying = cfg.verify || cfg.command == "verify";
  std::optional<ccoef::VerificationReport> report;
  if (verifying) report = c.verify(cfg.n, cfg.tol.value_or(c.default_tolerance()), orientation);

  if (cfg.command == "closed") artifact.entries = c.closed_table(cfg.n).data();
  else artifact.entries = c.fill_table(cfg.n, orientation).data();
  artifact.report = report;

  if (cfg.command == "verify" && cfg.format == "csv") {
    std::ostringstream os;
    os.precision(17);
    os << "metric,value\nresidual," << report->residual << "\nclosed_residual,"
       << report->closed_residual << "\nclosed_dev," << report->closed_dev << "\noracle_dev,"
       << report->oracle_dev << "\ntolerance," << report->tolerance << "\npassed,"
       << (report->passed ? 1 : 0) << '\n';
    if (cfg.output.empty()) std::cout << os.str();
    else std::ofstream(cfg.output) << os.str();
  } else {
    emit(cfg, artifact);
  }
  if (report) {
    print_report(*report);
    if (!report->passed) return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_gtable(const JobConfig& cfg) {
  const ccoef::GTable g = ccoef::g_fill(cfg.m, cfg.n);
  ccoef::TableArtifact artifact;
  artifact.case_name = "gtable";
  artifact.row_offset = cfg.m;
  artifact.entries = g.dense();
  if (cfg.verify) artifact.report = ccoef::verify_gtable(g, cfg.tol.value_or(1e-8));
  emit(cfg, artifact);
  if (artifact.report) {
    print_report(*artifact.report);
    if (!artifact.report->passed) return kExitVerifyFailed;
  }
  return kExitOk;
}

int run_coeffs(const JobConfig& cfg) {
  const auto norm = cfg.normalization == "classical" ? ccoef::Normalization::Classical
                                                      : ccoef::Normalization::Orthonormal;
  if (cfg.normalization != "classical" && cfg.normalization != "orthonormal")
    throw ConfigError("--normalization must be orthonormal or classical");
  std::optional<ccoef::FamilySpec> family;
  std::map<std::string, double> params;
  if (cfg.family == "legendre") {
    family = ccoef::FamilySpec::legendre(norm);
  } else if (cfg.family == "laguerre") {
    family = ccoef::FamilySpec::laguerre(cfg.beta, norm);
    params["beta"] = cfg.beta;
  } else if (cfg.family == "ultraspherical") {
    family = ccoef::FamilySpec::ultraspherical(cfg.alpha, norm);
    params["alpha"] = cfg.alpha;
  } else {
    throw ConfigError("unknown family '" + cfg.family + "'");
  }
  const auto seq = ccoef::family_coefficients(*family);
  const auto count = static_cast<std::size_t>(cfg.n + 1);
  std::vector<double> h;
  if (norm == ccoef::Normalization::Classical) h = ccoef::norm_constants(*family, count);

  ccoef::TableArtifact artifact;
  artifact.case_name = "coeffs-" + cfg.family;
  artifact.params = params;
  for (std::size_t k = 0; k < count; ++k) {
    std::vector<double> row{seq.a(static_cast<long>(k)), seq.b(static_cast<long>(k))};
    if (!h.empty()) row.push_back(h[k]);
    artifact.entries.push_back(std::move(row));
  }
  emit(cfg, artifact);
  return kExitOk;
}

int dispatch(const JobConfig& cfg) {
  validate(cfg);
  if (cfg.command == "gtable") return run_gtable(cfg);
  if (cfg.command == "coeffs") return run_coeffs(cfg);
  return run_crossrule(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Connection-coefficient tables by the cross-rule recurrence"};
  app.require_subcommand(1);
  JobConfig cfg;

  auto add_output = [&cfg](CLI::App* sub) {
    sub->add_option("--format", cfg.format, "csv or json")->capture_default_str();
    sub->add_option("-o,--output", cfg.output, "output path (default: stdout)");
    sub->add_flag("--header", cfg.header, "CSV header row and index column");
    sub->add_option("--tol", cfg.tol, "verification tolerance override");
  };
  auto add_case = [&cfg, &add_output](CLI::App* sub) {
    sub->add_option("--case", cfg.case_name,
                    "identity | legendre-x2 | laguerre-connect | laguerre-signed | ultraspherical-f")
        ->required();
    sub->add_option("--n", cfg.n, "largest index N; tables are (N+1)x(N+1)")->required();
    sub->add_option("--alpha", cfg.alpha, "alpha parameter")->capture_default_str();
    sub->add_option("--beta", cfg.beta, "beta parameter")->capture_default_str();
    add_output(sub);
  };

  auto* fill = app.add_subcommand("fill", "fill a table by the cross rule from boundary data");
  add_case(fill);
  fill->add_option("--orientation", cfg.orientation, "rows or columns");
  fill->add_flag("--verify", cfg.verify, "attach a verification report; exit 1 on failure");

  auto* closed = app.add_subcommand("closed", "tabulate the closed form");
  add_case(closed);
  closed->add_flag("--verify", cfg.verify, "attach a verification report; exit 1 on failure");

  auto* verify = app.add_subcommand("verify", "compare fill, closed form and quadrature");
  add_case(verify);
  verify->add_option("--orientation", cfg.orientation, "rows or columns");

  auto* gtable = app.add_subcommand("gtable", "associated-Legendre product integrals g^m_{l,n}");
  gtable->add_option("--m", cfg.m, "order m")->required();
  gtable->add_option("--n", cfg.n, "truncation N")->required();
  gtable->add_flag("--verify", cfg.verify, "attach a verification report; exit 1 on failure");
  add_output(gtable);

  auto* coeffs = app.add_subcommand("coeffs", "recurrence coefficients a_n, b_n (and h_n)");
  coeffs->add_option("--family", cfg.family, "legendre | laguerre | ultraspherical")
      ->capture_default_str();
  coeffs->add_option("--n", cfg.n, "largest index")->required();
  coeffs->add_option("--alpha", cfg.alpha, "ultraspherical parameter")->capture_default_str();
  coeffs->add_option("--beta", cfg.beta, "Laguerre parameter")->capture_default_str();
  coeffs->add_option("--normalization", cfg.normalization, "orthonormal or classical")
      ->capture_default_str();
  add_output(coeffs);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  }
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg);
  } catch (const ConfigError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitBadConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInternal;
  }
}
