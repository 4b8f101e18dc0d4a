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

// Acceptance run: one PASS/FAIL line per criterion, exit 1 if any fails.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>

#include <unistd.h>

#include "stickel/characters.hpp"
#include "stickel/gaussjacobi.hpp"
#include "stickel/ledger.hpp"
#include "stickel/localmodel.hpp"
#include "stickel/stickelberger.hpp"
#include "stickel/suite.hpp"

using namespace stickel;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  long checks = 0;
  std::string failure; // empty when everything passed
  void take(const Report &r) {
    checks += static_cast<long>(r.lines.size());
    if (const CheckLine *f = r.first_failure(); f && failure.empty())
      failure = r.name + ": " + f->identity + " [" + f->subject + "] " +
                f->lhs + " != " + f->rhs;
  }
};

bool run(int id, const char *what, double budget,
         const std::function<Outcome()> &body) {
  const auto t0 = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception &e) {
    o.failure = std::string("exception: ") + e.what();
  }
  const double secs =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
          .count();
  if (o.failure.empty() && secs > budget)
    o.failure = "over time budget";
  const bool ok = o.failure.empty();
  char line[256];
  std::snprintf(line, sizeof line,
                "CRITERION %d %s  %-34s checks=%-6ld %.2fs (budget %.0fs)", id,
                ok ? "PASS" : "FAIL", what, o.checks, secs, budget);
  std::cout << line;
  if (!ok)
    std::cout << "  " << o.failure;
  std::cout << std::endl;
  return ok;
}

const std::vector<std::string> kGroups{"C3", "C5", "C7", "C9", "S3",
                                       "D5", "A4", "Q8", "F21"};

std::string slurp(const fs::path &p) {
  std::ifstream is(p, std::ios::binary);
  std::stringstream ss;
  ss << is.rdbuf();
  return ss.str();
}

} // namespace

int main() {
  bool all = true;

  all &= run(1, "pairing identities", 10, [] {
    Outcome o;
    for (const auto &name : kGroups) {
      const TablePtr T = irr_table(preset_group(name));
      const auto &G = T->group();
      for (Elem s = 0; s < G.order(); ++s) {
        o.take(verify_induction_identities(T, s));
        if (G.element_order(s) % 2)
          o.take(verify_adams_identities(T, s));
      }
    }
    return o;
  });

  all &= run(2, "character table certification", 10, [] {
    Outcome o;
    for (const auto &name : preset_names())
      o.take(verify_character_table(irr_table(preset_group(name))));
    return o;
  });

  all &= run(3, "free generator determinants", 30, [] {
    Outcome o;
    for (long e : {3L, 5L, 7L, 9L})
      for (long n : example_offsets(e))
        o.take(verify_free_generator(e, n, instance_prime(e)));
    return o;
  });

  all &= run(4, "resolvend factorization", 20, [] {
    Outcome o;
    for (const char *name : {"C3", "C5", "S3", "F21"}) {
      const TablePtr T = irr_table(preset_group(name));
      const auto &G = T->group();
      for (Elem s = 0; s < G.order(); ++s) {
        if (G.element_order(s) % 2 == 0)
          continue;
        const auto [t, q] = default_cocycle(G, s);
        o.take(verify_factorization(T, s, t, q));
      }
    }
    return o;
  });

  all &= run(5, "gauss and jacobi identities", 30, [] {
    Outcome o;
    for (long p : {3L, 5L, 7L, 11L, 13L, 31L})
      o.take(verify_gauss_identities(p));
    return o;
  });

  all &= run(6, "jacobi star valuations", 60, [] {
    Outcome o;
    for (auto [p, e] : std::vector<std::pair<long, long>>{
             {7, 3}, {11, 5}, {31, 3}, {31, 5}})
      o.take(crux_check(p, e).to_report());
    return o;
  });

  all &= run(7, "ledger structure", 10, [] {
    Outcome o;
    for (const char *name : {"S3", "F21"}) {
      const TablePtr T = irr_table(preset_group(name));
      o.take(verify_ledger_random(T, 100, 20260101));
      const auto &G = T->group();
      for (Elem s = 1; s < G.order(); ++s)
        if (G.element_order(s) % 2)
          o.take(verify_build_f(T, s, default_cocycle(G, s).second));
    }
    return o;
  });

  all &= run(8, "byte-identical suite reruns", 60, [] {
    Outcome o;
    const fs::path base = fs::temp_directory_path() /
                          ("stickel_accept_" + std::to_string(::getpid()));
    const fs::path a = base / "a", b = base / "b";
    fs::remove_all(base);
    const SuiteConfig cfg;
    const SuiteResult ra = run_suite(cfg, a);
    const SuiteResult rb = run_suite(cfg, b);
    if (!ra.pass)
      o.failure = "suite failed: " + ra.first_failure;
    if (ra.files != rb.files && o.failure.empty())
      o.failure = "file lists differ";
    for (const auto &f : ra.files) {
      ++o.checks;
      if (slurp(a / f) != slurp(b / f) && o.failure.empty())
        o.failure = "bytes differ in " + f;
    }
    fs::remove_all(base);
    return o;
  });

  return all ? 0 : 1;
}
