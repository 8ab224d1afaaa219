#include <cstdio>
#include <fstream>
#include <sstream>

#include "csdlab/cli.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace csdlab;
using namespace csdlab::cli;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("compute prints exact degrees") {
  auto r = run_cli({"compute", "--group", "D(8)"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("41/49") != std::string::npos);
  CHECK(r.out.find("5/8") != std::string::npos);
  CHECK(r.out.find("group") == 0);
}

TEST_CASE("decimal rendering") {
  auto r = run_cli({"--decimal", "compute", "--group", "D(8)"});
  REQUIRE(r.code == kExitOk);
  CHECK(r.out.find("0.836735") != std::string::npos);
  CHECK(r.out.find("41/49") == std::string::npos);
}

TEST_CASE("json output has every report column") {
  auto r = run_cli({"--format", "json", "compute", "--group", "S(3)", "--group", "Q(8)", "--all"});
  REQUIRE(r.code == kExitOk);
  auto doc = nlohmann::ordered_json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["group"] == "S(3)");
  CHECK(doc[0]["csd"] == "19/25");
  CHECK(doc[0]["lattice_size"] == 6);
  CHECK(doc[0]["is_iwasawa"] == false);
  CHECK(doc[1]["is_iwasawa"] == true);
  CHECK(doc[1]["sd"] == "1/1");
  CHECK(doc[0]["csd_star"].is_null());
  CHECK(doc[0]["wall_time_ms"].is_null());
  std::size_t i = 0;
  for (auto it = doc[0].begin(); it != doc[0].end(); ++it, ++i) CHECK(it.key() == run_report_columns()[i]);
}

TEST_CASE("csv output") {
  auto r = run_cli({"--format", "csv", "compute", "--group", "S(3)xZ(3)", "--sections"});
  REQUIRE(r.code == kExitOk);
  std::istringstream lines(r.out);
  std::string header, row;
  std::getline(lines, header);
  std::getline(lines, row);
  CHECK(header == "group,order,l1_size,lattice_size,csd,sd,ndeg,cdeg,d,csd_star,is_iwasawa,wall_time_ms");
  CHECK(row == "S(3)xZ(3),18,11,,85/121,,,,1/2,85/121,,");
}

TEST_CASE("csv quoting of commas in expressions") {
  Table t{{"group"}, {{std::string("ZM(7,3,2)")}}};
  CHECK(emit(t, Format::csv) == "group\n\"ZM(7,3,2)\"\n");
}

TEST_CASE("output is byte-identical across job counts") {
  auto one = run_cli({"--format", "json", "compute", "-g", "S(4)", "-g", "D(20)", "-g", "E(27)", "--all"});
  auto many = run_cli({"--jobs", "4", "--format", "json", "compute", "-g", "S(4)", "-g", "D(20)", "-g", "E(27)",
                       "--all"});
  CHECK(one.code == kExitOk);
  CHECK(one.out == many.out);
}

TEST_CASE("batch input") {
  const std::string path = "cli_test_batch.json";
  {
    std::ofstream f(path);
    f << R"json([{"group": "D(8)", "ops": ["csd"]}, {"group": "A(4)", "ops": ["sd", "csd_star"]}])json";
  }
  auto r = run_cli({"--format", "json", "compute", "--batch", path});
  std::remove(path.c_str());
  REQUIRE(r.code == kExitOk);
  auto doc = nlohmann::json::parse(r.out);
  REQUIRE(doc.size() == 2);
  CHECK(doc[0]["sd"].is_null());
  CHECK(doc[1]["csd"] == "7/16");
  CHECK(doc[1]["csd_star"] == "7/16");
  CHECK(doc[1]["lattice_size"] == 10);
}

TEST_CASE("verify families") {
  auto r = run_cli({"verify", "dihedral", "2..12"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("MISMATCH") == std::string::npos);
  auto p = run_cli({"--format", "csv", "verify", "pgroup", "1..60"});
  CHECK(p.code == kExitOk);
  CHECK(p.out.find("n=2 p=3 q=2,19/25,19/25,match") != std::string::npos);
  auto z = run_cli({"verify", "zq8bound", "2..3"});
  CHECK(z.code == kExitOk);
}

TEST_CASE("verify marks guardrail rows as skipped") {
  auto r = run_cli({"--max-order", "64", "--format", "csv", "verify", "quaternion", "5..7"});
  CHECK(r.code == kExitOk);
  CHECK(r.out.find("n=7,") != std::string::npos);
  CHECK(r.out.find("skipped") != std::string::npos);
}

TEST_CASE("scan modes") {
  auto star = run_cli({"--format", "csv", "scan", "csd-star", "-g", "E(27)", "-g", "D(8)", "-g", "Q(8)"});
  CHECK(star.code == kExitOk);
  CHECK(star.out.find("E(27),27,22/49,22/49,not-certified") != std::string::npos);
  CHECK(star.out.find("D(8),8,41/49,41/49,threshold-41/49") != std::string::npos);
  CHECK(star.out.find("Q(8),8,1/1,1/1,iwasawa-certified") != std::string::npos);

  auto eq = run_cli({"--format", "csv", "scan", "csd-eq-sd", "--family", "D", "--range", "6..8"});
  CHECK(eq.code == kExitUsage);  // D(7) is not a dihedral order
  auto mono = run_cli({"scan", "monotonicity", "-g", "S(3)"});
  CHECK(mono.code == kExitOk);
}

TEST_CASE("lattice and sections verbs") {
  auto lat = run_cli({"lattice", "--group", "S(3)"});
  CHECK(lat.code == kExitOk);
  CHECK(lat.out.rfind("size=1 members=0\n", 0) == 0);
  CHECK(lat.out.find("size=6 members=0,1,2,3,4,5") != std::string::npos);
  auto cyc = run_cli({"--format", "json", "lattice", "--group", "D(8)", "--cyclic"});
  CHECK(nlohmann::json::parse(cyc.out).size() == 7);
  auto sec = run_cli({"sections", "--group", "D(8)"});
  CHECK(sec.code == kExitOk);
  CHECK(sec.out.find("csd_star=41/49") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(run_cli({}).code == kExitUsage);
  CHECK(run_cli({"compute"}).code == kExitUsage);
  CHECK(run_cli({"compute", "--group", "Z("}).code == kExitUsage);
  CHECK(run_cli({"compute", "--group", "Q(12)"}).code == kExitUsage);
  CHECK(run_cli({"--format", "yaml", "compute", "-g", "Z(2)"}).code == kExitUsage);
  CHECK(run_cli({"verify", "nonsense", "1..2"}).code == kExitUsage);
  CHECK(run_cli({"verify", "dihedral", "5..2"}).code == kExitUsage);
  CHECK(run_cli({"--max-order", "10", "compute", "-g", "Z(11)"}).code == kExitGuardrail);
  CHECK(run_cli({"--max-lattice-order", "10", "compute", "-g", "S(4)", "--all"}).code == kExitGuardrail);
  CHECK(run_cli({"--max-sections-order", "10", "sections", "-g", "S(4)"}).code == kExitGuardrail);
  auto partial = run_cli({"--max-order", "10", "--format", "json", "compute", "-g", "Z(3)", "-g", "Z(11)"});
  CHECK(partial.code == kExitGuardrail);
  CHECK(nlohmann::json::parse(partial.out).size() == 1);
  CHECK(partial.err.find("Z(11)") != std::string::npos);
}
