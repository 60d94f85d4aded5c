#include <cstdio>
#include <fstream>
#include <sstream>

#include "adflux/config.hpp"
#include "adflux/field.hpp"
#include "adflux/snapshot.hpp"
#include "doctest.h"

using namespace adflux;

namespace {

const GasModel gas;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace

TEST_CASE("run config parsing") {
  SUBCASE("empty text yields the all-defaults demo config") {
    const RunConfig rc = parse_run_config("", "test");
    CHECK(rc.case_name == "sod");
    CHECK(rc.scheme == "hllem_fp");
    CHECK(rc.output_dir == "out");
  }
  SUBCASE("valid keys are applied") {
    const RunConfig rc = parse_run_config(
        "case = blunt_body\nscheme = hllem_fp\ncfl = 0.5\nseed = 9\n", "test");
    CHECK(rc.case_name == "blunt_body");
    CHECK(*rc.cfl == 0.5);
    CHECK(rc.seed == 9);
  }
  SUBCASE("unknown scheme lists the valid ones") {
    CHECK_THROWS_WITH_AS(parse_run_config("scheme = bogus\n", "test"),
                         doctest::Contains("valid schemes"),
                         std::invalid_argument);
  }
  SUBCASE("unknown keys are errors, not warnings") {
    CHECK_THROWS_WITH_AS(parse_run_config("cfll = 0.5\n", "test"),
                         doctest::Contains("unknown key"), ConfigError);
  }
  SUBCASE("conflicting stop rules are rejected") {
    CHECK_THROWS_AS(
        parse_run_config("t_end = 1.0\nmax_iters = 10\n", "test"), ConfigError);
  }
  SUBCASE("comments and blank lines are ignored") {
    const RunConfig rc =
        parse_run_config("# a comment\n\ncase = sod # trailing\n", "test");
    CHECK(rc.case_name == "sod");
  }
}

TEST_CASE("snapshot csv") {
  StructuredMesh mesh = make_rect_mesh(2, 2, 0, 1, 0, 1);
  FieldState f(2, 2);
  initialize_field(f, mesh, gas, [](double x, double y) {
    return Primitive{1.0 + x, 0.5, -0.25, 2.0 + y};
  });
  OutputMeta meta{"unit", "hlle", 3, 0.125, 42};
  const std::string path = "snapshot_unit_test.csv";
  write_snapshot_csv(path, f, mesh, gas, meta);
  const std::string text = slurp(path);

  // header carries provenance, then a column line, then 4 cell rows
  CHECK(text.find("case=unit") != std::string::npos);
  CHECK(text.find("scheme=hlle") != std::string::npos);
  CHECK(text.find("seed=42") != std::string::npos);
  int lines = 0;
  for (char ch : text)
    if (ch == '\n') ++lines;
  CHECK(lines == 2 + 4);

  // byte-identical on re-write with identical inputs
  const std::string path2 = "snapshot_unit_test_2.csv";
  write_snapshot_csv(path2, f, mesh, gas, meta);
  CHECK(slurp(path2) == text);
  std::remove(path.c_str());
  std::remove(path2.c_str());
}

TEST_CASE("snapshot vtk round trip of the cell count") {
  StructuredMesh mesh = make_rect_mesh(3, 2, 0, 3, 0, 2);
  FieldState f(3, 2);
  initialize_field(f, mesh, gas,
                   [](double, double) { return Primitive{1, 0, 0, 1}; });
  const std::string path = "snapshot_unit_test.vtk";
  write_snapshot_vtk(path, f, mesh, gas, {"unit", "hlle", 0, 0.0, 0});
  const std::string text = slurp(path);
  std::istringstream in(text);
  std::string line;
  int points = -1, cells = -1;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string word;
    ls >> word;
    if (word == "DIMENSIONS") {
      int a, b, c;
      ls >> a >> b >> c;
      points = a * b * c;
      cells = (a - 1) * (b - 1);
    }
    if (word == "CELL_DATA") ls >> cells;
  }
  CHECK(points == 4 * 3);
  CHECK(cells == 3 * 2);
  std::remove(path.c_str());
}

TEST_CASE("deterministic numeric formatting") {
  CHECK(format_g17(0.1) == format_g17(0.1));
  CHECK(format_g17(1.0) == "1");
  // round-trips through parsing
  const double v = 0.1234567890123456789;
  CHECK(std::stod(format_g17(v)) == v);
}
