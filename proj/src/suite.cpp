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

#include "stickel/suite.hpp"

#include <fstream>
#include <numeric>
#include <set>
#include <sstream>

#include "stickel/characters.hpp"
#include "stickel/gaussjacobi.hpp"
#include "stickel/ledger.hpp"
#include "stickel/localmodel.hpp"
#include "stickel/stickelberger.hpp"

namespace stickel {

namespace {

void check_presets(const std::vector<std::string> &names, const char *key) {
  for (const auto &n : names) {
    try {
      preset_group(n);
    } catch (const DomainError &e) {
      throw ConfigError(std::string(key) + ": " + e.what());
    }
  }
}

std::string offset_tag(long n) {
  return n < 0 ? "m" + std::to_string(-n) : std::to_string(n);
}

void prefix_subjects(Report &r, const std::string &prefix) {
  for (auto &l : r.lines)
    l.subject = prefix + ":" + l.subject;
}

} // namespace

// first t in element order with s^q != s, so Frobenius acts nontrivially
// when the group allows it
std::pair<Elem, long> default_cocycle(const FiniteGroup &G, Elem s) {
  const long o = G.element_order(s);
  for (Elem t = 1; t < G.order(); ++t)
    for (long q = 2; q < 200; ++q) {
      if (!is_prime_long(q) || std::gcd(q, o) != 1 || q % o == 1 % o)
        continue;
      if (G.mul(G.mul(t, s), G.inv(t)) == G.pow(s, q))
        return {t, q};
    }
  for (long q = 2;; ++q)
    if (is_prime_long(q) && q % o == 1 % o)
      return {G.identity(), q};
}

long instance_prime(long e) {
  for (long p = 2;; ++p)
    if (is_prime_long(p) && (p - 1) % e == 0)
      return p;
}

std::vector<long> example_offsets(long e) {
  std::vector<long> out;
  for (long n : {0L, (1 - e) / 2, 1L, 1 - e})
    if (std::abs(n) <= e - 1 &&
        std::find(out.begin(), out.end(), n) == out.end())
      out.push_back(n);
  return out;
}

void SuiteConfig::validate() const {
  check_presets(groups, "groups");
  check_presets(factorization_groups, "factorization_groups");
  check_presets(ledger_groups, "ledger_groups");
  for (long p : primes)
    if (!is_prime_long(p) || p > kMaxGaussPrime)
      throw ConfigError("primes: " + std::to_string(p) +
                        " is not a supported prime (<= " +
                        std::to_string(kMaxGaussPrime) + ")");
  for (const auto &[p, e] : crux) {
    const std::string tag =
        "crux: (" + std::to_string(p) + ", " + std::to_string(e) + ")";
    if (!is_prime_long(p) || p > kMaxGaussPrime)
      throw ConfigError(tag + ": p is not a supported prime");
    if (e < 1 || e % 2 == 0)
      throw ConfigError(tag + ": e must be odd");
    if ((p - 1) % e != 0)
      throw ConfigError(tag + ": e does not divide p - 1");
  }
  for (long e : e_values)
    if (e < 1 || e % 2 == 0)
      throw ConfigError("e_values: " + std::to_string(e) + " must be odd");
  if (ledger_cases < 0)
    throw ConfigError("ledger_cases must be nonnegative");
  if (format != "json" && format != "csv")
    throw ConfigError("format must be json or csv, got '" + format + "'");
  if (precision < 0)
    throw ConfigError("precision must be nonnegative");
}

SuiteConfig SuiteConfig::from_json(const nlohmann::json &j) {
  SuiteConfig c;
  if (!j.is_object())
    throw ConfigError("suite config must be a JSON object");
  static const std::set<std::string> known{
      "groups", "factorization_groups", "ledger_groups", "primes", "crux",
      "e_values", "ledger_cases", "seed", "format", "precision"};
  for (const auto &[k, v] : j.items())
    if (!known.count(k))
      throw ConfigError("unknown config key '" + k + "'");
  try {
    if (j.contains("groups"))
      c.groups = j["groups"].get<std::vector<std::string>>();
    if (j.contains("factorization_groups"))
      c.factorization_groups =
          j["factorization_groups"].get<std::vector<std::string>>();
    if (j.contains("ledger_groups"))
      c.ledger_groups = j["ledger_groups"].get<std::vector<std::string>>();
    if (j.contains("primes"))
      c.primes = j["primes"].get<std::vector<long>>();
    if (j.contains("crux")) {
      c.crux.clear();
      for (const auto &pe : j["crux"])
        c.crux.emplace_back(pe.at(0).get<long>(), pe.at(1).get<long>());
    }
    if (j.contains("e_values"))
      c.e_values = j["e_values"].get<std::vector<long>>();
    if (j.contains("ledger_cases"))
      c.ledger_cases = j["ledger_cases"].get<int>();
    if (j.contains("seed"))
      c.seed = j["seed"].get<std::uint64_t>();
    if (j.contains("format"))
      c.format = j["format"].get<std::string>();
    if (j.contains("precision"))
      c.precision = j["precision"].get<long>();
  } catch (const nlohmann::json::exception &e) {
    throw ConfigError(std::string("malformed suite config: ") + e.what());
  }
  return c;
}

nlohmann::json SuiteConfig::to_json() const {
  nlohmann::json cx = nlohmann::json::array();
  for (const auto &[p, e] : crux)
    cx.push_back({p, e});
  return {{"groups", groups},
          {"factorization_groups", factorization_groups},
          {"ledger_groups", ledger_groups},
          {"primes", primes},
          {"crux", cx},
          {"e_values", e_values},
          {"ledger_cases", ledger_cases},
          {"seed", seed},
          {"format", format},
          {"precision", precision}};
}

std::vector<Report> suite_reports(const SuiteConfig &config) {
  config.validate();
  std::vector<Report> out;

  for (const auto &name : config.groups) {
    const GroupPtr G = preset_group(name);
    const TablePtr T = irr_table(G);
    Report ct = verify_character_table(T);
    ct.name = "chartab_" + name;
    out.push_back(std::move(ct));

    Report ind, ad;
    ind.name = "stickelberger_" + name;
    ad.name = "adams_" + name;
    ind.meta = ad.meta = {{"group", name}};
    for (Elem s = 0; s < G->order(); ++s) {
      Report r = verify_induction_identities(T, s);
      prefix_subjects(r, G->label(s));
      ind.append(r);
      if (G->element_order(s) % 2 == 1) {
        Report a = verify_adams_identities(T, s);
        prefix_subjects(a, G->label(s));
        ad.append(a);
      }
    }
    out.push_back(std::move(ind));
    out.push_back(std::move(ad));
  }

  for (long e : config.e_values) {
    const long p = instance_prime(e);
    for (long n : example_offsets(e)) {
      Report r = verify_free_generator(e, n, p);
      r.name = "free_generator_e" + std::to_string(e) + "_n" + offset_tag(n);
      out.push_back(std::move(r));
    }
  }

  for (const auto &name : config.factorization_groups) {
    const GroupPtr G = preset_group(name);
    const TablePtr T = irr_table(G);
    Report fac;
    fac.name = "factorization_" + name;
    fac.meta = {{"group", name}, {"cocycles", nlohmann::json::array()}};
    for (Elem s = 0; s < G->order(); ++s) {
      if (G->element_order(s) % 2 == 0)
        continue;
      const auto [t, q] = default_cocycle(*G, s);
      Report r = verify_factorization(T, s, t, q);
      fac.meta["cocycles"].push_back(r.meta);
      prefix_subjects(r, G->label(s));
      fac.append(r);
    }
    out.push_back(std::move(fac));
  }

  for (long p : config.primes) {
    Report r = verify_gauss_identities(p);
    r.name = "gauss_p" + std::to_string(p);
    out.push_back(std::move(r));
  }

  for (const auto &[p, e] : config.crux) {
    const CruxResult cr = crux_check(p, e, config.precision);
    Report r = cr.to_report();
    r.name = "crux_p" + std::to_string(p) + "_e" + std::to_string(e);
    r.meta["result"] = cr.to_json();
    out.push_back(std::move(r));
  }

  for (const auto &name : config.ledger_groups) {
    const GroupPtr G = preset_group(name);
    const TablePtr T = irr_table(G);
    Report r = verify_ledger_random(T, config.ledger_cases, config.seed);
    r.name = "ledger_" + name;
    for (Elem s = 0; s < G->order(); ++s) {
      const long o = G->element_order(s);
      if (o % 2 == 0)
        continue;
      long q = 2;
      while (!is_prime_long(q) || std::gcd(q, o) != 1)
        ++q;
      Report b = verify_build_f(T, s, q);
      prefix_subjects(b, G->label(s));
      r.append(b);
    }
    out.push_back(std::move(r));
  }
  return out;
}

std::string report_csv(const Report &r) {
  auto quote = [](const std::string &s) {
    std::string o = "\"";
    for (char c : s) {
      if (c == '"')
        o += '"';
      o += c;
    }
    return o + "\"";
  };
  std::ostringstream os;
  os << "identity,subject,lhs,rhs,pass\n";
  for (const auto &l : r.lines)
    os << quote(l.identity) << "," << quote(l.subject) << "," << quote(l.lhs)
       << "," << quote(l.rhs) << "," << (l.pass ? "true" : "false") << "\n";
  return os.str();
}

SuiteResult run_suite(const SuiteConfig &config,
                      const std::filesystem::path &out) {
  const auto reports = suite_reports(config);
  std::filesystem::create_directories(out);
  SuiteResult res;
  nlohmann::json index = nlohmann::json::array();
  for (const auto &r : reports) {
    const std::string file = r.name + (config.format == "csv" ? ".csv" : ".json");
    std::ofstream os(out / file, std::ios::binary);
    if (config.format == "csv")
      os << report_csv(r);
    else
      os << r.to_json().dump(1) << "\n";
    if (!os)
      throw Error("cannot write " + (out / file).string());
    res.files.push_back(file);

    long failed = 0;
    for (const auto &l : r.lines)
      failed += l.pass ? 0 : 1;
    if (const CheckLine *f = r.first_failure(); f && res.pass) {
      res.pass = false;
      res.first_failure = r.name + ": " + f->identity + " [" + f->subject + "]";
    }
    index.push_back({{"name", r.name},
                     {"file", file},
                     {"checks", r.lines.size()},
                     {"failed", failed},
                     {"pass", r.pass()}});
  }
  const nlohmann::json summary = {{"config", config.to_json()},
                                  {"reports", index},
                                  {"pass", res.pass},
                                  {"first_failure", res.first_failure}};
  std::ofstream os(out / "summary.json", std::ios::binary);
  os << summary.dump(1) << "\n";
  res.files.push_back("summary.json");
  return res;
}

} // namespace stickel
