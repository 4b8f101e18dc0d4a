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

#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "stickel/error.hpp"
#include "stickel/groups.hpp"
#include "stickel/report.hpp"

namespace stickel {

// Rejected suite configuration; the CLI maps this to a usage error.
class ConfigError : public Error {
public:
  using Error::Error;
};

struct SuiteConfig {
  std::vector<std::string> groups{"C3", "C5", "C7", "C9", "S3",
                                  "D5", "A4", "Q8", "F21"};
  std::vector<std::string> factorization_groups{"C3", "C5", "S3", "F21"};
  std::vector<std::string> ledger_groups{"S3", "F21"};
  std::vector<long> primes{3, 5, 7, 11, 13, 31};
  std::vector<std::pair<long, long>> crux{{7, 3}, {11, 5}, {31, 3}, {31, 5}};
  std::vector<long> e_values{3, 5, 7, 9};
  int ledger_cases = 100;
  std::uint64_t seed = 20260101;
  std::string format = "json"; // json | csv
  long precision = 0;          // lambda precision override, 0 = default

  /// Throws ConfigError naming the offending entry.
  void validate() const;

  /// Keys as in to_json; absent keys keep their defaults.
  static SuiteConfig from_json(const nlohmann::json &j);
  nlohmann::json to_json() const;
};

/// Smallest prime p with p = 1 mod e.
long instance_prime(long e);
/// Offsets 0, (1-e)/2, 1, 1-e, deduplicated, in that order.
std::vector<long> example_offsets(long e);

/// Cocycle data (t, q) with t s t^-1 = s^q, q prime and coprime to |s|;
/// prefers a t acting nontrivially on <s>, else t = 1 and q = 1 mod |s|.
std::pair<Elem, long> default_cocycle(const FiniteGroup &G, Elem s);

/// One report per check, in a fixed order.
std::vector<Report> suite_reports(const SuiteConfig &config);

struct SuiteResult {
  bool pass = true;
  std::string first_failure; // "report: identity [subject]"
  std::vector<std::string> files;
};

/// Runs every check and writes <out>/<report>.json (or .csv) plus
/// <out>/summary.json. Output is byte-stable for a fixed config.
SuiteResult run_suite(const SuiteConfig &config,
                      const std::filesystem::path &out);

/// "identity,subject,lhs,rhs,pass" rows with a header line.
std::string report_csv(const Report &r);

} // namespace stickel
