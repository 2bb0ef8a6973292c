// Copyright 2026 The slopekit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <sstream>

#include "app.hpp"
#include "doctest.h"
#include "slopekit/report.hpp"

using slopekit::cli::run;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_SUITE("cli") {
  TEST_CASE("range parsing") {
    CHECK(slopekit::cli::parse_range("12..16") == std::vector<long>{12, 13, 14, 15, 16});
    CHECK(slopekit::cli::parse_range("7,5,7") == std::vector<long>{5, 7});
    CHECK(slopekit::cli::parse_range("3") == std::vector<long>{3});
    CHECK_THROWS_AS(slopekit::cli::parse_range("9..2"), std::invalid_argument);
    CHECK_THROWS_AS(slopekit::cli::parse_range("x"), std::invalid_argument);
  }

  TEST_CASE("slopes rows") {
    const auto r = call({"slopes", "--p", "2", "--k", "12"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2,12,3\n") != std::string::npos);
    const auto s = call({"slopes", "--p", "59", "--k", "16"});
    CHECK(s.out.find("positive slope") != std::string::npos);
  }

  TEST_CASE("measure rows") {
    const auto r = call({"measure", "--p", "59", "--k", "16"});
    CHECK(r.code == 0);
    CHECK(r.out.find("59,16,2,") != std::string::npos);
    CHECK(r.out.find(",2,1,1/60,59/60") != std::string::npos);
    const auto n = call({"measure", "--p", "5", "--k", "12", "--include-newforms", "--format", "json"});
    CHECK(n.code == 0);
    CHECK(n.out.find("5/11 5/11 5/11") != std::string::npos);
  }

  TEST_CASE("verify exit codes") {
    CHECK(call({"verify", "binomial-carries", "--p", "2,3,5", "--a-max", "300"}).code == 0);
    CHECK(call({"verify", "constant-rows", "--p", "5,7", "--r-max", "60"}).code == 0);
    const auto det = call({"verify", "determinant", "--R-max", "6", "--p", "5"});
    CHECK(det.code == 0);
    CHECK(det.out.find("(p-1)^{R(R-1)/2}") != std::string::npos);
    CHECK(call({"verify", "general-constants", "--p", "5", "--r", "14", "--alpha", "3"}).code == 0);
    CHECK(call({"verify", "hecke", "--t-max", "4", "--delta-max", "2"}).code == 0);
  }

  TEST_CASE("usage errors exit with 2") {
    CHECK(call({}).code == 2);
    CHECK(call({"verify", "nonsense"}).code == 2);
    CHECK(call({"slopes", "--p", "4", "--k", "12"}).code == 2);
    CHECK(call({"slopes", "--p", "5"}).code == 2);
    CHECK(call({"measure", "--p", "5", "--k", "13"}).code == 2);
    CHECK(call({"slopes", "--p", "5", "--k", "12", "--format", "xml"}).code == 2);
    CHECK(call({"verify", "general-below", "--p", "5", "--r", "14"}).code == 2);
  }

  TEST_CASE("resource guard produces a partial table") {
    const auto r = call({"measure", "--p", "5", "--k", "12..80", "--max-dim", "3"});
    CHECK(r.code == 2);
    CHECK(r.out.find("cutoff: max-dimension guard") != std::string::npos);
  }

  TEST_CASE("lambda table") {
    const auto r = call({"lambda", "--p", "5", "--R", "1", "--alpha", "3"});
    CHECK(r.code == 0);
    CHECK(r.out.find("5,1,3,2,1,-1/4") != std::string::npos);
    CHECK(r.out.find("5,1,3,3,0,7/4") != std::string::npos);
  }

  TEST_CASE("parallel output matches serial output") {
    for (const std::vector<std::string>& base :
         {std::vector<std::string>{"verify", "matrix", "--p", "5,7", "--r-max", "40"},
          std::vector<std::string>{"slopes", "--p", "3,5", "--k", "12..50"},
          std::vector<std::string>{"measure", "--p", "7", "--k", "12..60", "--format", "json"}}) {
      auto serial = base;
      serial.insert(serial.end(), {"--jobs", "1"});
      auto parallel = base;
      parallel.insert(parallel.end(), {"--jobs", "4"});
      CHECK(call(serial).out == call(parallel).out);
    }
  }

  TEST_CASE("csv and json rendering") {
    slopekit::report::Table t("demo", {"a", "b", "hidden"});
    t.json_only = {"hidden"};
    t.add_row({"1", "x,y", "secret"});
    t.notes.push_back("n");
    std::ostringstream csv, json;
    slopekit::report::write(csv, t, slopekit::report::Format::csv);
    CHECK(csv.str() == "a,b\n1,\"x,y\"\n# n\n");
    slopekit::report::write(json, t, slopekit::report::Format::json);
    CHECK(json.str().find("\"a\": 1") != std::string::npos);
    CHECK(json.str().find("\"hidden\": \"secret\"") != std::string::npos);
    CHECK_THROWS_AS(t.add_row({"1"}), std::invalid_argument);
  }

  TEST_CASE("odd weights are reported and listed weights honored") {
    const auto r = call({"measure", "--p", "5", "--k", "13,16,24"});
    REQUIRE(r.code == 0);
    CHECK(r.out.find("# odd weights skipped (no level-one forms): 13") != std::string::npos);
    CHECK(r.out.find("\n5,16,") != std::string::npos);
    CHECK(r.out.find("\n5,24,") != std::string::npos);
    CHECK(r.out.find("\n5,20,") == std::string::npos);
  }
}
