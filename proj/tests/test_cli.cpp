#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include "ccoef/table_io.hpp"

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(CCOEF_CLI_PATH) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  while (std::size_t n = std::fread(buf.data(), 1, buf.size(), pipe)) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> v;
  std::istringstream is(s);
  for (std::string l; std::getline(is, l);) v.push_back(l);
  return v;
}

}  // namespace

TEST_CASE("fill legendre-x2 as csv") {
  const Run r = run("fill --case legendre-x2 --n 12 --format csv");
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 13);
  CHECK(std::count(rows[0].begin(), rows[0].end(), ',') == 12);
  CHECK(rows[0].rfind("0.333333333333333", 0) == 0);
}

TEST_CASE("gtable json with verification") {
  const Run r = run("gtable --m 0 --n 8 --format json --verify");
  CHECK(r.status == 0);
  const auto t = ccoef::from_json(r.out);
  REQUIRE(t.report.has_value());
  CHECK(t.report->oracle_dev <= 1e-8);
  CHECK(t.entries.size() == 9);
}

TEST_CASE("equal laguerre parameters give the identity") {
  const Run r = run("fill --case laguerre-connect --alpha 1 --beta 1 --n 10 --verify --format json");
  CHECK(r.status == 0);
  const auto t = ccoef::from_json(r.out);
  for (std::size_t m = 0; m < t.entries.size(); ++m)
    for (std::size_t n = 0; n < t.entries[m].size(); ++n)
      CHECK(std::abs(t.entries[m][n] - (m == n ? 1.0 : 0.0)) <= 1e-13);
}

TEST_CASE("verify exit codes") {
  CHECK(run("verify --case identity --n 20").status == 0);
  CHECK(run("verify --case laguerre-connect --alpha 2.5 --beta 0.5 --n 20").status == 0);
  CHECK(run("verify --case ultraspherical-f --alpha 2 --n 16").status == 0);
  CHECK(run("verify --case legendre-x2 --n 20 --tol 1e-30").status == 1);
  CHECK(run("verify --case laguerre-signed --alpha 1 --n 10").status == 1);
}

TEST_CASE("invalid configuration exits 2") {
  CHECK(run("fill --case nonsense --n 4").status == 2);
  CHECK(run("fill --case identity --n 0").status == 2);
  CHECK(run("fill --case identity --n 4 --format xml").status == 2);
  CHECK(run("fill --case identity --n 4 --tol -1").status == 2);
  CHECK(run("gtable --m 5 --n 3").status == 2);
  CHECK(run("coeffs --family hermite --n 3").status == 2);
  CHECK(run("fill --case laguerre-connect --alpha -2 --n 4").status == 2);
  CHECK(run("bogus").status == 2);
  CHECK(run("").status == 2);
}

TEST_CASE("coeffs output") {
  const Run r = run("coeffs --family legendre --n 3 --normalization classical");
  CHECK(r.status == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 4);
  CHECK(rows[0].rfind("0,0.57735026918962", 0) == 0);
}

TEST_CASE("output file and json round trip") {
  const std::string path = "cli_roundtrip.json";
  REQUIRE(run("fill --case ultraspherical-f --alpha 0.5 --n 8 --format json -o " + path).status == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const auto t = ccoef::from_json(ss.str());
  const ccoef::CrossRuleCase c(ccoef::CaseKind::UltrasphericalF, 0.5, 0.0);
  const auto direct = c.fill_table(8).data();
  for (std::size_t m = 0; m < direct.size(); ++m)
    for (std::size_t n = 0; n < direct[m].size(); ++n)
      CHECK(std::memcmp(&t.entries[m][n], &direct[m][n], sizeof(double)) == 0);
  std::remove(path.c_str());
}
