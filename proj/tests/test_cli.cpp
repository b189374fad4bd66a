/*
   Copyright 2026 The skein-lab Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <filesystem>
#include <fstream>
#include <sstream>

#include <doctest.h>
#include <json.hpp>

#include "skein/cli.hpp"
#include "support.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = skein::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("poly prints the canonical form") {
  Result r = run({"poly", "--pd", skein::testing::kTrefoilPd});
  CHECK(r.code == 0);
  CHECK(r.out == skein::testing::oracle_values().at("P_trefoil") + "\n");

  Result j = run({"poly", "--dt", "4 6 8 2", "--format", "json"});
  CHECK(j.code == 0);
  auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.dump().find(skein::testing::oracle_values().at("P_figure_eight")) != std::string::npos);
}

TEST_CASE("kauffman and seifert subcommands") {
  Result k = run({"kauffman", "--braid", "1 1 1"});
  CHECK(k.code == 0);
  CHECK(k.out == skein::testing::oracle_values().at("F_trefoil") + "\n");

  Result s = run({"seifert", "--dt", "4 6 8 2"});
  CHECK(s.code == 0);
  CHECK(contains(s.out, "s=3"));
  CHECK(contains(s.out, "genus=1"));
}

TEST_CASE("bounds on the figure-eight") {
  Result r = run({"bounds", "--dt", "4 6 8 2"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "mfw_lower=3"));

  Result t = run({"bounds", "--dt", "4 6 2", "--tb", "1", "--mu", "0"});
  CHECK(t.code == 0);
  CHECK(contains(t.out, "bi_slack=0"));
}

TEST_CASE("check reports every invariant") {
  Result r = run({"check", "--gauss", "1 -2 3 -1 2 -3"});
  CHECK(r.code == 0);
  CHECK(contains(r.out, "identity"));
  CHECK(contains(r.out, "kauffman_skein"));
  CHECK_FALSE(contains(r.out, "FAIL"));
}

TEST_CASE("twist echoes P1 at n = 0") {
  fs::path seed = fs::temp_directory_path() / "skein_cli_seed.txt";
  {
    std::ofstream out(seed);
    out << "P1: " << skein::testing::oracle_values().at("P_trefoil") << "\n";
    out << "Pinf: 1*l^1*m^1\n";
  }
  Result r = run({"twist", "--seed", seed.string(), "--n", "0"});
  CHECK(r.code == 0);
  CHECK(r.out == skein::testing::oracle_values().at("P_trefoil") + "\n");

  {
    std::ofstream out(seed);
    out << "pd: " << skein::testing::kTrefoilPd << "\ncrossing: 0\n";
  }
  Result d = run({"twist", "--seed", seed.string(), "--n", "0"});
  CHECK(d.code == 0);
  CHECK(d.out == skein::testing::oracle_values().at("P_trefoil") + "\n");
  fs::remove(seed);
}

TEST_CASE("family table") {
  Result r = run({"family", "--kind", "torus2", "--from", "1", "--to", "3", "--k", "1"});
  CHECK(r.code == 0);
  CHECK(std::count(r.out.begin(), r.out.end(), '\n') == 4);
}

TEST_CASE("exit codes") {
  CHECK(run({}).code == skein::cli::kExitUsage);
  CHECK(run({"poly"}).code == skein::cli::kExitUsage);
  CHECK(run({"poly", "--dt", "4 6 3"}).code == skein::cli::kExitUsage);
  CHECK(run({"nope"}).code == skein::cli::kExitUsage);
  CHECK(run({"poly", "--dt", "8 10 12 14 2 4 6", "--budget", "2"}).code == skein::cli::kExitError);
  CHECK(run({"twist", "--seed", "/nonexistent/seed", "--n", "1"}).code != 0);
}

TEST_CASE("scan writes results and reports partial runs") {
  fs::path dir = fs::temp_directory_path() / "skein_cli_scan";
  fs::remove_all(dir);
  fs::create_directories(dir);
  {
    std::ofstream t(dir / "t.tsv");
    t << "3_1\tdt:4 6 2\n4_1\tdt:4 6 8 2\n7_1\tdt:8 10 12 14 2 4 6\n";
  }
  Result ok = run({"scan", "--table", (dir / "t.tsv").string(), "--out", (dir / "r.jsonl").string()});
  CHECK(ok.code == 0);
  CHECK(fs::exists(dir / "r.summary.csv"));

  Result part = run({"scan", "--table", (dir / "t.tsv").string(), "--out", (dir / "p.jsonl").string(), "--budget", "2"});
  CHECK(part.code == skein::cli::kExitPartial);

  Result res = run({"resume", "--results", (dir / "r.jsonl").string(), "--table", (dir / "t.tsv").string()});
  CHECK(res.code == 0);
  fs::remove_all(dir);
}
