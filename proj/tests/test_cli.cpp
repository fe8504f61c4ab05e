#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "json.hpp"

#include "lonesum/cli.hpp"
#include "lonesum/reference_tables.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run_cli(std::vector<std::string> args, const std::string& input = "") {
  std::istringstream in(input);
  std::ostringstream out, err;
  const int code = lonesum::cli::run(args, in, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::vector<std::string>> split_tsv(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) {
    std::vector<std::string> cells;
    std::istringstream fields(line);
    std::string cell;
    while (std::getline(fields, cell, '\t')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

void check_table(const std::string& what, const lonesum::reference::Table& published) {
  const Outcome r = run_cli({"table", "--what", what, "--max", "5"});
  REQUIRE(r.code == 0);
  const auto rows = split_tsv(r.out);
  REQUIRE(rows.size() == 7);
  CHECK(rows[0] == std::vector<std::string>{"m\\n", "0", "1", "2", "3", "4", "5"});
  for (std::size_t m = 0; m <= 5; ++m) {
    REQUIRE(rows[m + 1].size() == 7);
    CHECK(rows[m + 1][0] == std::to_string(m));
    for (std::size_t n = 0; n <= 5; ++n) {
      if (what == "d" && m == 5 && n == 4) {
        CHECK(rows[m + 1][n + 1] == "90946");
      } else {
        CHECK(rows[m + 1][n + 1] == std::to_string(published[m][n]));
      }
    }
  }
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("count") {
  CHECK(run_cli({"count", "--k", "2", "--m", "3", "--n", "3"}).out == "108\n");
  CHECK(run_cli({"count", "--total", "--m", "3", "--n", "3"}).out == "344\n");
  CHECK(run_cli({"count", "--lonesum", "--m", "2", "--n", "2"}).out == "14\n");
  CHECK(run_cli({"count", "--tilde-lonesum", "--m", "2", "--n", "2"}).out == "5\n");
  CHECK(run_cli({"count", "--m", "2", "--n", "2"}).code == 2);
  CHECK(run_cli({"count", "--k", "1", "--total", "--m", "2", "--n", "2"}).code == 2);
  CHECK(run_cli({"count", "--k", "1", "--m", "x", "--n", "2"}).code == 2);
}

TEST_CASE("table reproduces the published layouts") {
  check_table("d1", lonesum::reference::kD1);
  check_table("d2", lonesum::reference::kD2);
  check_table("d", lonesum::reference::kD);
}

TEST_CASE("table json and dk") {
  const Outcome r = run_cli({"table", "--what", "dk", "--k", "3", "--max", "4", "--format", "json"});
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["what"] == "dk");
  CHECK(j["k"] == 3);
  CHECK(j["values"][3][3] == "6");
  CHECK(j["values"][4][4] == "888");
  CHECK(run_cli({"table", "--what", "dk", "--max", "4"}).code == 2);
  CHECK(run_cli({"table", "--what", "nope"}).code == 2);
}

TEST_CASE("classify") {
  const Outcome r = run_cli({"classify"}, "2 3\n110\n101\n");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["decomposable"] == false);
  CHECK(j["witness"]["rows"] == nlohmann::json::array({0, 1}));
  CHECK(j["witness"]["cols"] == nlohmann::json::array({0, 1, 2}));
  CHECK(j["witness"]["pattern"] == 0);
  CHECK(j["witness"]["pattern_matrix"] == "110;101");
  CHECK(r.out.rfind("{\"rows\":2,\"cols\":3,\"decomposable\":false,\"witness\":", 0) == 0);

  const auto ok = nlohmann::json::parse(run_cli({"classify"}, "2 2\n10\n01\n").out);
  CHECK(ok["decomposable"] == true);
  CHECK(ok["order"] == 2);
  CHECK(ok["lonesum"] == false);
  CHECK(ok["pair_class"] == "two_ones_blocks");
}

TEST_CASE("decompose") {
  const Outcome r = run_cli({"decompose"}, "2 3\n111\n010\n");
  REQUIRE(r.code == 0);
  const auto j = nlohmann::json::parse(r.out);
  CHECK(j["decomposition"]["order"] == 1);
  CHECK(j["decomposition"]["blocks"][0]["shape"] == nlohmann::json::array({3, 1}));
  CHECK(j["decomposition"]["zero_rows"].empty());

  const Outcome bad = run_cli({"decompose"}, "2 3\n110\n101\n");
  CHECK(bad.code == 1);
  CHECK(nlohmann::json::parse(bad.out)["witness"]["pattern"] == 0);
  CHECK_FALSE(bad.err.empty());
}

TEST_CASE("bad input is reported with a location") {
  const Outcome r = run_cli({"classify"}, "2 2\n12\n00\n");
  CHECK(r.code == 2);
  CHECK(r.err.find("line 2, column 2") != std::string::npos);
  CHECK(run_cli({"classify", "--input", "/nonexistent/matrix.txt"}).code == 2);
  CHECK(run_cli({"frobnicate"}).code == 2);
  CHECK(run_cli({}).code == 2);
}

TEST_CASE("verify tables warns about the asymmetric published entry") {
  const Outcome r = run_cli({"verify", "--suite", "tables"});
  CHECK(r.code == 0);
  CHECK(r.out.find("WARN [tables] D(5,4): published 90446, computed 90946") != std::string::npos);
  CHECK(r.out.find("FAIL") == std::string::npos);
}

TEST_CASE("verify exit codes") {
  CHECK(run_cli({"verify", "--suite", "recurrence", "--suite", "prop6"}).code == 0);
  const Outcome congruence = run_cli({"verify", "--suite", "congruence", "--primes", "5"});
  CHECK(congruence.code == 1);
  CHECK(congruence.out.find("stirling_periodicity {1 5} vs {5 5}") != std::string::npos);
  CHECK(run_cli({"verify", "--suite", "congruence", "--primes", "4"}).code == 2);
  CHECK(run_cli({"verify", "--suite", "unknown"}).code == 2);
}

TEST_CASE("egf-check") {
  const Outcome r = run_cli({"egf-check", "--order", "6"});
  CHECK(r.code == 0);
  const auto rows = split_tsv(r.out);
  REQUIRE(rows.size() > 1);
  CHECK(rows[0] == std::vector<std::string>{"kind", "m", "n", "formula", "series", "status"});
  for (std::size_t i = 1; i < rows.size(); ++i) CHECK(rows[i].back() == "ok");
  CHECK(run_cli({"egf-check", "--order", "4", "--max-sum", "6"}).code == 2);
}

TEST_CASE("oracle output is deterministic") {
  const Outcome a = run_cli({"oracle", "--m", "3", "--n", "4", "--threads", "1"});
  const Outcome b = run_cli({"oracle", "--m", "3", "--n", "4", "--threads", "4"});
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  const auto j = nlohmann::json::parse(a.out);
  CHECK(j["total"] == 4096);
  CHECK(j["lonesum"] == 1066);
  CHECK_FALSE(j.contains("elapsed_seconds"));
  const auto timed = nlohmann::json::parse(run_cli({"oracle", "--m", "2", "--n", "2", "--timing"}).out);
  CHECK(timed.contains("elapsed_seconds"));
  CHECK(run_cli({"oracle", "--m", "5", "--n", "5", "--max-cells", "20"}).code == 2);
}

}  // TEST_SUITE
