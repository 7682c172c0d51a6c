#include <doctest.h>

#include <cstdio>

#include <json.hpp>

#include "idemcodes/cli.hpp"
#include "test_util.hpp"

using namespace idemcodes;

TEST_CASE("group spec parsing") {
  CHECK(parse_group_spec("cyclic(1)").n == 1);
  CHECK(parse_group_spec("metacyclic(9,3,4)").n == 27);
  CHECK(parse_group_spec(" direct( metacyclic(7,3,4), cyclic(5) ) ").n == 105);
  CHECK(parse_group_spec("metacyclic(9,3,4)").spec == "metacyclic(9,3,4)");
  CHECK(parse_group_spec(std::string("cayley(") + FIXTURES_DIR + "/q8.tab)").n == 8);

  CHECK_THROWS_AS((void)parse_group_spec("dihedral(4)"), error);
  CHECK_THROWS_AS((void)parse_group_spec("cyclic(4"), error);
  CHECK_THROWS_AS((void)parse_group_spec("cyclic(4)x"), error);
  CHECK_THROWS_AS((void)parse_group_spec("metacyclic(9,3)"), error);
  try {
    (void)parse_group_spec("cyclic(x)");
    CHECK(false);
  } catch (const error& e) {
    CHECK(std::string(e.what()).find("position") != std::string::npos);
  }
}

TEST_CASE("field spec parsing") {
  CHECK(parse_field_spec("gf(2)")->card() == 2);
  CHECK(parse_field_spec("gf(2^2)")->card() == 4);
  CHECK(parse_field_spec("gf(4)")->card() == 4);
  CHECK(parse_field_spec("GF(9)")->p() == 3);
  CHECK_THROWS_AS((void)parse_field_spec("gf(6)"), error);
  CHECK_THROWS_AS((void)parse_field_spec("gf(0)"), error);
  CHECK_THROWS_AS((void)parse_field_spec("field(2)"), error);
}

TEST_CASE("wedderburn command") {
  RunConfig cfg;
  cfg.group_spec = "cyclic(3)";
  cfg.field_spec = "gf(2)";
  cfg.command = "wedderburn";
  RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  // F2 C3 = F2 + F4.
  CHECK(res.out.find("field_order=4 dim=2") != std::string::npos);
  CHECK(res.out.find("field_order=2 dim=1") != std::string::npos);
  CHECK(res.out.find("complete=yes") != std::string::npos);
}

TEST_CASE("ssp command") {
  RunConfig cfg;
  cfg.group_spec = "metacyclic(11,5,3)";
  cfg.field_spec = "gf(2)";
  cfg.command = "ssp";
  RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  // The pair (<a>, 1).
  CHECK(res.out.find("H=0,1,2,3,4,5,6,7,8,9,10 K=0 [H:K]=11 o=10") != std::string::npos);
}

TEST_CASE("codes command finds the benchmark parameters") {
  RunConfig cfg;
  cfg.group_spec = "metacyclic(5,4,2)";
  cfg.field_spec = "gf(3)";
  cfg.command = "codes";
  RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  CHECK(res.out.find("[20,4,12]") != std::string::npos);
  CHECK(res.out.find("[20,4,8]") != std::string::npos);
}

TEST_CASE("gcd precondition is enforced") {
  RunConfig cfg;
  cfg.group_spec = "cyclic(6)";
  cfg.field_spec = "gf(2)";
  cfg.command = "wedderburn";
  CHECK_THROWS_AS((void)run(cfg), error);
}

TEST_CASE("json output is valid, deterministic, and matches text numbers") {
  RunConfig cfg;
  cfg.group_spec = "metacyclic(7,3,4)";
  cfg.field_spec = "gf(2)";
  cfg.command = "search";
  cfg.output = "json";
  RunResult a = run(cfg);
  RunResult b = run(cfg);
  CHECK(a.out == b.out);  // byte-identical (no timing in JSON)

  auto j = nlohmann::json::parse(a.out);
  CHECK(j["group"] == "metacyclic(7,3,4)");
  CHECK(j["field"] == "gf(2)");
  CHECK(j["ordering"].size() == 21);
  bool found = false;
  for (const auto& row : j["best"])
    if (row["k"] == 3 && row["d"] == 12) found = true;
  CHECK(found);

  cfg.threads = 3;  // enumeration partitioning must not change anything
  RunResult c = run(cfg);
  CHECK(c.out == a.out);

  cfg.output = "text";
  RunResult t = run(cfg);
  CHECK(t.out.find("k=3 d=12") != std::string::npos);
}

TEST_CASE("export") {
  RunConfig cfg;
  cfg.group_spec = "cyclic(3)";
  cfg.field_spec = "gf(2)";
  cfg.command = "codes";
  cfg.export_path = "/tmp/idemcodes_test_export.txt";
  RunResult res = run(cfg);
  CHECK(res.exit_code == 0);
  std::ifstream in(cfg.export_path);
  REQUIRE(in.good());
  std::string header;
  std::getline(in, header);
  CHECK(header == "3 1 2");
  std::remove(cfg.export_path.c_str());
}
