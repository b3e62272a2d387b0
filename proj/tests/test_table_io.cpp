#include <doctest.h>

#include <cstring>
#include <sstream>

#include "ccoef/table_io.hpp"

using namespace ccoef;

namespace {

bool same_bits(double a, double b) { return std::memcmp(&a, &b, sizeof a) == 0; }

}  // namespace

TEST_CASE("csv output") {
  TableArtifact t;
  t.entries = {{1.0 / 3.0, 0.0}, {0.1, -2.5}};
  std::ostringstream os;
  write_csv(os, t);
  CHECK(os.str() == "0.33333333333333331,0\n0.10000000000000001,-2.5\n");
  std::ostringstream hs;
  t.row_offset = 2;
  write_csv(hs, t, true);
  CHECK(hs.str().rfind("m\\n,2,3\n2,", 0) == 0);
}

TEST_CASE("json round trip is bit exact") {
  const CrossRuleCase c(CaseKind::UltrasphericalF, 0.5, 0.0);
  TableArtifact t;
  t.case_name = c.name();
  t.params = c.params();
  t.entries = c.fill_table(10).data();
  t.report = c.verify(6, 1e-9);
  const TableArtifact back = from_json(to_json(t));
  CHECK(back.case_name == t.case_name);
  CHECK(back.params == t.params);
  CHECK(back.m_max() == 10);
  CHECK(back.n_max() == 10);
  REQUIRE(back.entries.size() == t.entries.size());
  for (std::size_t m = 0; m < t.entries.size(); ++m)
    for (std::size_t n = 0; n < t.entries[m].size(); ++n)
      CHECK(same_bits(back.entries[m][n], t.entries[m][n]));
  REQUIRE(back.report.has_value());
  CHECK(same_bits(back.report->oracle_dev, t.report->oracle_dev));
  CHECK(back.report->passed == t.report->passed);
}

TEST_CASE("json keeps the g-table order") {
  TableArtifact t;
  t.case_name = "gtable";
  t.row_offset = 3;
  t.entries = {{1.0, 0.0}, {0.0, 2.0}};
  const TableArtifact back = from_json(to_json(t));
  CHECK(back.row_offset == 3);
  CHECK(back.params.empty());
}

TEST_CASE("malformed json is rejected") {
  CHECK_THROWS_AS(from_json("{"), std::runtime_error);
  CHECK_THROWS_AS(from_json(R"({"case": "x"})"), std::runtime_error);
}
