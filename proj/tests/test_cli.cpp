// Copyright 2026 The simplegames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <catch_amalgamated.hpp>

#include <sstream>

#include <json.hpp>

#include "cli.hpp"

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = sgcli::run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("classify") {
  const auto r = run({"classify", "(32211)_5"});
  CHECK(r.code == 0);
  CHECK(r.out.find("ipsodual") != std::string::npos);
  const auto j = run({"--json", "classify", "5:EAE8E8A8"});
  REQUIRE(j.code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  CHECK(doc.at("n") == 5);
  CHECK(doc.at("mask_hex") == "EAE8E8A8");
  CHECK(doc.at("ipsodual") == true);
  CHECK(doc.at("quota").at("weights") == nlohmann::json::array({3, 2, 2, 1, 1}));
}

TEST_CASE("operations") {
  CHECK(run({"median", "dict_1", "3:CC", "3:F0"}).out == "(111)_2\n");
  CHECK(run({"median", "3:AA", "3:CC", "3:F0"}).out == "(111)_2\n");
  CHECK(run({"chi", "--by", "3", "3:AA", "3:CC"}).out == "(111)_2\n");
  CHECK(run({"quotient", "(111)_2", "--map", "1:1,2:1,3:2"}).out == "(10)_1\n");
  CHECK(run({"compound", "(111)_2", "3:AA", "3:CC", "3:F0"}).out == "(111)_2\n");
  CHECK(run({"chi", "--by", "4", "3:AA", "3:CC"}).out == "(1101)_2\n");
}

TEST_CASE("measures") {
  CHECK(run({"weight", "(11111)_3"}).out == "3\n");
  CHECK(run({"depth", "dem3^2"}).out == "3\n");
  CHECK(run({"wtable", "--max", "5"}).out == "W: 0,0,1,2,3\nD: 0,0,1,2,3\n");
  const auto fano = run({"depth", "fano"});
  CHECK(fano.code == 1);
  CHECK(fano.out.find("at least 3") != std::string::npos);
}

TEST_CASE("influence and quota recognition") {
  CHECK(run({"influence", "s6.23"}).out == "1 > 2~3 > 4~5 > 6\n");
  CHECK(run({"influence", "icosa"}).out == "trivial\n");
  const auto q = run({"is-quota", "(32211)_5"});
  CHECK(q.code == 0);
  CHECK(q.out.find("(32211)_5") != std::string::npos);
  const auto ico = run({"is-quota", "icosa"});
  CHECK(ico.code == 0);
  CHECK(ico.out.rfind("no", 0) == 0);
}

TEST_CASE("enumeration and census") {
  const auto e = run({"enumerate", "--voters", "3"});
  CHECK(e.out == "AA\nCC\nE8\nF0\n");
  CHECK(e.err == "4 games\n");
  const auto c = run({"census", "--powerful-max", "5"});
  CHECK(c.code == 0);
  CHECK(c.out.find("classes: 1 0 1 1 4 (total 7)") != std::string::npos);
  const auto j = run({"--json", "census", "--powerful-max", "3"});
  std::istringstream lines(j.out);
  std::string line;
  std::vector<nlohmann::json> records;
  while (std::getline(lines, line)) records.push_back(nlohmann::json::parse(line));
  REQUIRE(records.size() == 2);
  CHECK(records[1].at("mask_hex") == "E8");
  CHECK(records[1].at("weight") == 1);
  CHECK(records[1].at("quota").at("weights") == nlohmann::json::array({1, 1, 1}));
  CHECK(records[1].at("transitive") == true);
}

TEST_CASE("decompose") {
  for (const char* method : {"median", "chi", "quota", "tree", "dnf"}) {
    INFO(method);
    CHECK(run({"decompose", "(32211)_5", "--method", method}).code == 0);
  }
}

TEST_CASE("errors map to exit codes") {
  CHECK(run({}).code == 2);
  CHECK(run({"bogus"}).code == 2);
  CHECK(run({"classify", "3:17"}).code == 1);
  CHECK(run({"classify", "nothing"}).code == 2);
  CHECK(run({"median", "3:AA", "3:CC"}).code == 2);
  CHECK(run({"decompose", "(1111)_4", "--method", "chi"}).code == 1);
  CHECK(run({"weight", "(1111)_4"}).code == 1);
}
