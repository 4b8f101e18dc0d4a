/* Copyright (C) 2026 The stickel Authors
 * This program is Licensed under the Apache License, Version 2.0
 * (the "License"); you may not use this file except in compliance
 * with the License. You may obtain a copy of the License at
 *   http://www.apache.org/licenses/LICENSE-2.0
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License. See accompanying LICENSE file.
 */

#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "stickel/error.hpp"
#include "stickel/suite.hpp"

using namespace stickel;
namespace fs = std::filesystem;

TEST_SUITE("suite") {

TEST_CASE("config validation") {
  CHECK_NOTHROW(SuiteConfig{}.validate());
  SuiteConfig c;
  c.e_values = {3, 4};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SuiteConfig{};
  c.groups = {"S3", "M11"};
  CHECK_THROWS_WITH_AS(c.validate(), doctest::Contains("F21"), ConfigError);
  c = SuiteConfig{};
  c.crux = {{7, 5}};
  CHECK_THROWS_AS(c.validate(), ConfigError);
  c = SuiteConfig{};
  c.format = "xml";
  CHECK_THROWS_AS(c.validate(), ConfigError);
}

TEST_CASE("config json") {
  const SuiteConfig d;
  CHECK(SuiteConfig::from_json(d.to_json()).to_json() == d.to_json());
  const SuiteConfig c = SuiteConfig::from_json(nlohmann::json::parse(R"({"primes":[3,5]})"));
  CHECK(c.primes == std::vector<long>{3, 5});
  CHECK(c.groups == d.groups);
  CHECK_THROWS_AS(SuiteConfig::from_json(nlohmann::json::parse(R"({"prime":[3]})")),
                  ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(nlohmann::json::parse("[1]")), ConfigError);
  CHECK_THROWS_AS(SuiteConfig::from_json(nlohmann::json::parse(R"({"primes":"x"})")),
                  ConfigError);
}

TEST_CASE("helpers") {
  CHECK(instance_prime(3) == 7);
  CHECK(instance_prime(5) == 11);
  CHECK(instance_prime(7) == 29);
  CHECK(instance_prime(9) == 19);
  CHECK(example_offsets(3) == std::vector<long>{0, -1, 1, -2});
  CHECK(example_offsets(1) == std::vector<long>{0});
  CHECK(example_offsets(5) == std::vector<long>{0, -2, 1, -4});
  auto F21 = preset_group("F21");
  const Elem s = F21->parse_element("(1 2 3 4 5 6 7)");
  const auto [t, q] = default_cocycle(*F21, s);
  CHECK(F21->mul(F21->mul(t, s), F21->inv(t)) == F21->pow(s, q));
  CHECK(q % 7 != 1);
  auto C5 = preset_group("C5");
  const auto [t5, q5] = default_cocycle(*C5, 1);
  CHECK(t5 == 0);
  CHECK(q5 == 11);
}

TEST_CASE("csv rendering quotes text fields") {
  Report r;
  r.name = "x";
  r.add("id", "a,b", "1/2", "say \"hi\"", true);
  const std::string csv = report_csv(r);
  std::istringstream is(csv);
  std::string header, row;
  std::getline(is, header);
  std::getline(is, row);
  CHECK(header.find("identity") != std::string::npos);
  CHECK(row == R"("id","a,b","1/2","say ""hi""",true)");
}

TEST_CASE("small suite run writes reports and is repeatable") {
  SuiteConfig c;
  c.groups = {"C3", "S3"};
  c.factorization_groups = {"C3"};
  c.ledger_groups = {"S3"};
  c.primes = {5, 7};
  c.crux = {{7, 3}};
  c.e_values = {3};
  c.ledger_cases = 5;
  const fs::path a = fs::temp_directory_path() / "stickel_suite_test_a";
  const fs::path b = fs::temp_directory_path() / "stickel_suite_test_b";
  fs::remove_all(a);
  fs::remove_all(b);
  const SuiteResult ra = run_suite(c, a);
  const SuiteResult rb = run_suite(c, b);
  CHECK(ra.pass);
  CHECK(ra.first_failure.empty());
  REQUIRE(ra.files == rb.files);
  CHECK(std::find(ra.files.begin(), ra.files.end(), "summary.json") != ra.files.end());
  for (const auto &f : ra.files) {
    std::ifstream x(a / f, std::ios::binary), y(b / f, std::ios::binary);
    std::stringstream sx, sy;
    sx << x.rdbuf();
    sy << y.rdbuf();
    CHECK_MESSAGE(sx.str() == sy.str(), f);
  }
  c.format = "csv";
  const fs::path d = fs::temp_directory_path() / "stickel_suite_test_csv";
  fs::remove_all(d);
  const SuiteResult rc = run_suite(c, d);
  CHECK(rc.pass);
  CHECK(fs::exists(d / "chartab_S3.csv"));
  fs::remove_all(a);
  fs::remove_all(b);
  fs::remove_all(d);
}

}
