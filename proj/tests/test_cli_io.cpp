#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "accut/cli.hpp"
#include "accut/result_io.hpp"
#include "accut/rudy.hpp"

using namespace accut;

namespace {

const std::string kData = ACCUT_TEST_DATA_DIR;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  REQUIRE(in.good());
  std::ostringstream out;
  out << in.rdbuf();
  return out.str();
}

std::string drop_wall_time(const std::string& text) {
  std::istringstream in(text);
  std::ostringstream out;
  std::string line;
  while (std::getline(in, line)) {
    if (line.find("wall_time") == std::string::npos) out << line << '\n';
  }
  return out.str();
}

ResultDocument sample_document() {
  ResultDocument d;
  d.graph_name = "toy.rud";
  d.algorithm = "cia1";
  d.p = "1";
  d.t_tot = 5;
  d.t_eq = 3;
  d.l_pop = 20;
  d.restarts = 2;
  d.seed = 7;
  d.best_anti = 0.5;
  d.best_max = 2.0 / 3.0;
  d.cut_size = 2.0;
  d.partition = {0, 2};
  d.wall_time = 0.125;
  return d;
}

}  // namespace

TEST_CASE("rudy parsing accepts the vendored graphs") {
  const Graph g = parse_rudy_file(kData + "/petersen.rud");
  CHECK(g.vertex_count() == 10);
  CHECK(g.edge_count() == 15);
  CHECK(g.volume() == 30.0);
  CHECK(parse_rudy_file(kData + "/rand9.rud").vertex_count() == 9);
}

TEST_CASE("rudy parsing reports precise line errors") {
  auto parse = [](const std::string& text) {
    std::istringstream in(text);
    return parse_rudy(in);
  };
  CHECK_THROWS_WITH_AS(parse(""), "empty input: missing header line", std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3\n"), "line 1: expected header \"<vertices> <edges>\"",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 1\n1 2\n"), "line 2: expected an edge \"<i> <j> <weight>\"",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 1\n1 4 1\n"), "line 2: endpoint out of range 1..3",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 1\n2 2 1\n"), "line 2: self-loops are not allowed",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 1\n1 2 -1\n"), "line 2: only nonnegative weights are in scope",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 2\n1 2 1\n2 1 2\n"), "line 3: duplicate edge (1, 2)",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 1\n1 2 1\n1 3 1\n"), "line 3: unexpected data after 1 edges",
                       std::runtime_error);
  CHECK_THROWS_WITH_AS(parse("3 2\n1 2 1\n"), "header announced 2 edges but the file has 1",
                       std::runtime_error);
  // blank lines are fine anywhere
  CHECK_NOTHROW(parse("\n3 2\n\n1 2 1\n2 3 1\n\n"));
}

TEST_CASE("json report matches the golden bytes") {
  const std::string expected =
      "{\n"
      "  \"graph_name\": \"toy.rud\",\n"
      "  \"algorithm\": \"cia1\",\n"
      "  \"config\": {\n"
      "    \"p\": \"1\",\n"
      "    \"t_tot\": 5,\n"
      "    \"t_eq\": 3,\n"
      "    \"l_pop\": 20,\n"
      "    \"restarts\": 2,\n"
      "    \"seed\": 7\n"
      "  },\n"
      "  \"best_anti\": 0.5,\n"
      "  \"best_max\": 0.6666666667,\n"
      "  \"cut_size\": 2,\n"
      "  \"partition\": [0,2],\n"
      "  \"wall_time\": 0.125\n"
      "}\n";
  CHECK(write_result(sample_document(), OutputFormat::json) == expected);
}

TEST_CASE("csv report matches the golden bytes") {
  const std::string expected =
      "graph_name,algorithm,p,t_tot,t_eq,l_pop,restarts,seed,"
      "best_anti,best_max,cut_size,partition,rounds,wall_time\n"
      "toy.rud,cia1,1,5,3,20,2,7,0.5,0.6666666667,2,0;2,,0.125\n";
  CHECK(write_result(sample_document(), OutputFormat::csv) == expected);
}

TEST_CASE("trace serialization for both levels") {
  ResultDocument d = sample_document();
  d.trace = {{0, Objective::anti, 0.25}, {1, Objective::anti, 0.5}, {2, Objective::maxcut, 0.75}};
  d.trace_level = TraceLevel::full;
  const std::string full = write_result(d, OutputFormat::json);
  CHECK(full.find("\"trace\": [\n"
                  "    {\"step\": 0, \"mode\": \"anti\", \"rate\": 0.25},\n"
                  "    {\"step\": 1, \"mode\": \"anti\", \"rate\": 0.5},\n"
                  "    {\"step\": 2, \"mode\": \"maxcut\", \"rate\": 0.75}\n"
                  "  ]") != std::string::npos);

  d.trace_level = TraceLevel::summary;
  const std::string summary = write_result(d, OutputFormat::json);
  CHECK(summary.find("{\"mode\": \"anti\", \"from_step\": 0, \"to_step\": 1, "
                     "\"rate_start\": 0.25, \"rate_end\": 0.5}") != std::string::npos);
  CHECK(summary.find("{\"mode\": \"maxcut\", \"from_step\": 2, \"to_step\": 2, "
                     "\"rate_start\": 0.75, \"rate_end\": 0.75}") != std::string::npos);

  d.trace_level = TraceLevel::none;
  CHECK(write_result(d, OutputFormat::json).find("trace") == std::string::npos);
}

TEST_CASE("reports refuse an empty partition") {
  ResultDocument d = sample_document();
  d.partition.clear();
  CHECK_THROWS_AS(write_result(d, OutputFormat::json), std::invalid_argument);
}

TEST_CASE("population reports include the round count") {
  ResultDocument d = sample_document();
  d.algorithm = "cia2";
  d.rounds = 4;
  CHECK(write_result(d, OutputFormat::json).find("\"rounds\": 4") != std::string::npos);
  const std::string csv = write_result(d, OutputFormat::csv);
  CHECK(csv.find(",4,0.125") != std::string::npos);
}

TEST_CASE("command line end to end") {
  const std::string out = "cli_io_end_to_end.json";
  SUBCASE("oracle run writes a parseable exact report") {
    const int rc = run_cli({"--graph", kData + "/petersen.rud", "--algo", "oracle", "--out", out});
    REQUIRE(rc == 0);
    const nlohmann::json doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["graph_name"] == "petersen.rud");
    CHECK(doc["algorithm"] == "oracle");
    // reports carry 10 significant digits, so parse-back is only that precise
    CHECK(doc["best_anti"].get<double>() == doctest::Approx(11.0 / 15.0).epsilon(1e-9));
    CHECK(doc["best_max"].get<double>() == doctest::Approx(12.0 / 15.0).epsilon(1e-9));
    CHECK(doc["cut_size"].get<double>() == 11.0);
    CHECK(doc["partition"].size() == 5);
    CHECK(doc["config"]["p"] == "1");
    CHECK(!doc.contains("rounds"));
    std::remove(out.c_str());
  }
  SUBCASE("solver run with trace and csv") {
    const int rc = run_cli({"--graph", kData + "/k3.rud", "--algo", "cia1", "--t-tot", "25",
                            "--restarts", "4", "--seed", "11", "--format", "csv", "--out", out});
    REQUIRE(rc == 0);
    const std::string text = slurp(out);
    CHECK(text.rfind("graph_name,algorithm,", 0) == 0);
    CHECK(text.find("k3.rud,cia1,1,25,3,20,4,11,0.5,", 0) != std::string::npos);
    std::remove(out.c_str());
  }
  SUBCASE("population run reports rounds") {
    const int rc = run_cli({"--graph", kData + "/p3.rud", "--algo", "cia2", "--t-tot", "30",
                            "--pop", "4", "--seed", "2", "--out", out});
    REQUIRE(rc == 0);
    const nlohmann::json doc = nlohmann::json::parse(slurp(out));
    CHECK(doc["best_anti"].get<double>() == 1.0);
    CHECK(doc["rounds"].get<int>() >= 2);
    // both sides of the optimal split have ratio 1; either witness is valid
    const bool witness_ok = doc["partition"] == nlohmann::json::array({1}) ||
                            doc["partition"] == nlohmann::json::array({0, 2});
    CHECK(witness_ok);
    std::remove(out.c_str());
  }
  SUBCASE("repeat runs differ only in wall time") {
    const std::string out2 = "cli_io_end_to_end_2.json";
    const std::vector<std::string> args{"--graph", kData + "/rand7.rud", "--algo", "cia1",
                                        "--t-tot", "40", "--restarts", "6", "--seed",
                                        "5",       "--trace", "full", "--out", out};
    std::vector<std::string> args2 = args;
    args2.back() = out2;
    REQUIRE(run_cli(args) == 0);
    REQUIRE(run_cli(args2) == 0);
    CHECK(drop_wall_time(slurp(out)) == drop_wall_time(slurp(out2)));
    CHECK(slurp(out).find("\"trace\"") != std::string::npos);
    std::remove(out.c_str());
    std::remove(out2.c_str());
  }
  SUBCASE("exit codes") {
    CHECK(run_cli({}) == 1);                                      // missing --graph
    CHECK(run_cli({"--graph", kData + "/nowhere.rud"}) == 2);     // unreadable file
    CHECK(run_cli({"--graph", kData + "/p3.rud", "--algo", "bogus"}) == 1);
    CHECK(run_cli({"--help"}) == 0);
  }
}
