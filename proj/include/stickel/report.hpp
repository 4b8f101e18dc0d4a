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

#include <algorithm>
#include <string>
#include <vector>

#include <json.hpp>

namespace stickel {

// One compared identity: both sides are computed by independent routes and
// rendered as strings (fractions, cyclotomic or tame elements).
struct CheckLine {
  std::string identity;
  std::string subject;
  std::string lhs;
  std::string rhs;
  bool pass = false;
};

struct Report {
  std::string name;
  nlohmann::json meta = nlohmann::json::object();
  std::vector<CheckLine> lines;

  void add(std::string identity, std::string subject, std::string lhs,
           std::string rhs, bool pass) {
    lines.push_back({std::move(identity), std::move(subject), std::move(lhs),
                     std::move(rhs), pass});
  }
  void add_equal(std::string identity, std::string subject, std::string lhs,
                 std::string rhs) {
    const bool ok = lhs == rhs;
    add(std::move(identity), std::move(subject), std::move(lhs),
        std::move(rhs), ok);
  }
  void append(const Report &other) {
    lines.insert(lines.end(), other.lines.begin(), other.lines.end());
  }

  bool pass() const {
    return std::all_of(lines.begin(), lines.end(),
                       [](const CheckLine &l) { return l.pass; });
  }

  const CheckLine *first_failure() const {
    for (const auto &l : lines)
      if (!l.pass)
        return &l;
    return nullptr;
  }

  nlohmann::json to_json() const {
    nlohmann::json checks = nlohmann::json::array();
    for (const auto &l : lines)
      checks.push_back({{"identity", l.identity},
                        {"subject", l.subject},
                        {"lhs", l.lhs},
                        {"rhs", l.rhs},
                        {"pass", l.pass}});
    return {{"name", name}, {"meta", meta}, {"checks", checks},
            {"pass", pass()}};
  }
};

} // namespace stickel
