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

// stickel: command-line front end for the verification suites.
// Exit status: 0 all checks pass, 1 a check failed, 2 usage error.

#include <filesystem>
#include <fstream>
#include <sstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "stickel/characters.hpp"
#include "stickel/gaussjacobi.hpp"
#include "stickel/ledger.hpp"
#include "stickel/localmodel.hpp"
#include "stickel/stickelberger.hpp"
#include "stickel/suite.hpp"

using namespace stickel;
using nlohmann::json;

namespace {

constexpr int kPass = 0, kFail = 1, kUsage = 2;

struct Options {
  std::string group = "S3";
  std::string s = "1";
  long p = 7;
  long e = 3;
  long n = 0;
  long order = 0;
  long q = 0;
  long instance_p = 0; // localmodel verify --p, 0 = smallest p = 1 mod e
  long a = -1;
  bool star = false;
  std::string format = "json";
  long precision = 0;
  std::string out;
  std::string places;
  std::string config;
};

class UsageError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

json read_json_file(const std::string &path) {
  std::ifstream is(path);
  if (!is)
    throw UsageError("cannot open " + path);
  try {
    return json::parse(is);
  } catch (const json::parse_error &e) {
    throw UsageError(path + ": " + e.what());
  }
}

// Prints (or writes to <out>/<name>.json|csv) and maps pass to the exit code.
// csv is used when --format csv is set.
int emit(const Options &o, const std::string &name, const json &doc,
         const std::string &csv, bool pass) {
  const bool as_csv = o.format == "csv";
  const std::string text = as_csv ? csv : doc.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::filesystem::create_directories(o.out);
    std::ofstream os(std::filesystem::path(o.out) /
                         (name + (as_csv ? ".csv" : ".json")),
                     std::ios::binary);
    os << text;
    std::cout << name << ": " << (pass ? "pass" : "FAIL") << "\n";
  }
  return pass ? kPass : kFail;
}

int emit_report(const Options &o, const Report &r) {
  return emit(o, r.name, r.to_json(), report_csv(r), r.pass());
}

Elem element_arg(const FiniteGroup &G, const std::string &text) {
  try {
    return G.parse_element(text);
  } catch (const Error &e) {
    throw UsageError(std::string("--s: ") + e.what());
  }
}

int cmd_chartab(const Options &o) {
  const TablePtr T = irr_table(preset_group(o.group));
  const Report r = verify_character_table(T);
  const auto &G = T->group();
  std::ostringstream csv;
  csv << "chi,degree";
  for (std::size_t c = 0; c < G.classes().size(); ++c)
    csv << ",\"" << G.label(G.classes().representatives[c]) << "\"";
  csv << "\n";
  for (std::size_t i = 0; i < T->size(); ++i) {
    csv << "chi" << i << "," << T->degree(i);
    for (std::size_t c = 0; c < G.classes().size(); ++c)
      csv << ",\"" << T->value(i, static_cast<int>(c)).to_string() << "\"";
    csv << "\n";
  }
  json doc = {{"table", T->to_json()}, {"certification", r.to_json()}};
  return emit(o, "chartab_" + o.group, doc, csv.str(), r.pass());
}

int cmd_pairing(const Options &o) {
  const GroupPtr G = preset_group(o.group);
  const TablePtr T = irr_table(G);
  const Elem s = element_arg(*G, o.s);
  const CyclicChars cc = CyclicChars::make(T, s);
  if (o.star && cc.order % 2 == 0)
    throw UsageError("--star needs an element of odd order; |s| = " +
                     std::to_string(cc.order));
  json values = json::array();
  std::string csv = "chi,degree,value\n";
  for (std::size_t i = 0; i < T->size(); ++i) {
    const VirtualChar chi = VirtualChar::irreducible(T, i);
    const Rational v = o.star ? star_pairing(chi, cc) : pairing(chi, cc);
    values.push_back({{"chi", "chi" + std::to_string(i)},
                      {"degree", T->degree(i)},
                      {"value", to_fraction_string(v)}});
    csv += "chi" + std::to_string(i) + "," + std::to_string(T->degree(i)) +
           "," + to_fraction_string(v) + "\n";
  }
  Report r = verify_induction_identities(T, s);
  if (cc.order % 2 == 1)
    r.append(verify_adams_identities(T, s));
  json doc = {{"group", G->name()},
              {"s", G->label(s)},
              {"order", cc.order},
              {"star", o.star},
              {"values", values},
              {"report", r.to_json()}};
  return emit(o, "pairing_" + o.group, doc, csv, r.pass());
}

int cmd_localmodel_verify(const Options &o, bool group_given) {
  if (group_given) {
    const GroupPtr G = preset_group(o.group);
    const TablePtr T = irr_table(G);
    const Elem s = element_arg(*G, o.s);
    if (G->element_order(s) % 2 == 0)
      throw UsageError("--s must have odd order");
    auto [t, q] = default_cocycle(*G, s);
    if (o.q > 0) {
      // first t with t s t^-1 = s^q for the requested residue size
      q = o.q;
      t = -1;
      for (Elem c = 0; c < G->order() && t < 0; ++c)
        if (G->mul(G->mul(c, s), G->inv(c)) == G->pow(s, q))
          t = c;
      if (t < 0)
        throw UsageError("no t in " + o.group + " with t s t^-1 = s^" +
                         std::to_string(q));
    }
    Report r = verify_factorization(T, s, t, q);
    r.name = "factorization_" + o.group;
    return emit_report(o, r);
  }
  if (o.e < 1)
    throw UsageError("--e must be positive");
  const long p = o.instance_p > 0 ? o.instance_p : instance_prime(o.e);
  Report r = verify_free_generator(o.e, o.n, p);
  return emit_report(o, r);
}

int cmd_gauss(const Options &o) {
  const long d = o.order > 0 ? o.order : o.e;
  if ((o.p - 1) % d != 0)
    throw UsageError("--order " + std::to_string(d) +
                     " does not divide p - 1");
  json chars = json::array();
  Report r;
  r.name = "gauss_p" + std::to_string(o.p) + "_d" + std::to_string(d);
  r.meta = {{"p", o.p}, {"order", d}};
  for (long a = 0; a < d; ++a) {
    if (o.a >= 0 ? a != o.a : std::gcd(a, d) != 1 && d != 1)
      continue;
    const MultChar chi = MultChar::make(o.p, d, a);
    chars.push_back(gauss_values(chi));
    r.append(verify_gauss_character(chi));
  }
  json doc = {{"p", o.p}, {"order", d}, {"characters", chars},
              {"report", r.to_json()}};
  return emit(o, r.name, doc, report_csv(r), r.pass());
}

int cmd_crux(const Options &o) {
  const CruxResult cr = crux_check(o.p, o.e, o.precision);
  return emit(o,
              "crux_p" + std::to_string(o.p) + "_e" + std::to_string(o.e),
              cr.to_json(), report_csv(cr.to_report()), cr.pass);
}

int cmd_ledger_demo(const Options &o) {
  json spec;
  if (o.places.empty())
    spec = {{"group", o.group},
            {"places",
             {{{"label", "v1"}, {"q", 7}, {"s", "(1 2 3)"}},
              {{"label", "v2"}, {"q", 5}, {"s", "(1 3 2)"}},
              {{"label", "v3"}, {"q", 2}, {"s", 0}}}}};
  else
    spec = read_json_file(o.places);
  return emit_report(o, ledger_demo(spec));
}

int cmd_suite(const Options &o, bool format_given, bool precision_given) {
  SuiteConfig cfg;
  if (!o.config.empty())
    cfg = SuiteConfig::from_json(read_json_file(o.config));
  if (format_given)
    cfg.format = o.format;
  if (precision_given)
    cfg.precision = o.precision;
  cfg.validate();
  const std::string out = o.out.empty() ? "stickel_reports" : o.out;
  const SuiteResult res = run_suite(cfg, out);
  std::cout << "wrote " << res.files.size() << " files to " << out << "\n";
  if (!res.pass) {
    std::cout << "FAIL " << res.first_failure << "\n";
    return kFail;
  }
  std::cout << "all checks pass\n";
  return kPass;
}

} // namespace

int main(int argc, char **argv) {
  CLI::App app{"Exact checks for Stickelberger pairings, tame local models, "
               "Gauss and Jacobi sums"};
  app.require_subcommand(1);
  Options o;

  auto add_group = [&](CLI::App *c) {
    return c->add_option("--group", o.group, "group preset")
        ->capture_default_str();
  };
  auto add_common = [&](CLI::App *c) {
    c->add_option("--format", o.format, "json or csv")
        ->check(CLI::IsMember({"json", "csv"}))
        ->capture_default_str();
    c->add_option("--out", o.out, "write output into this directory");
  };

  auto *chartab = app.add_subcommand("chartab", "character table of a preset");
  add_group(chartab);
  add_common(chartab);

  auto *pairing_cmd = app.add_subcommand("pairing", "pairings <chi, s>");
  add_group(pairing_cmd);
  pairing_cmd->add_option("--s", o.s, "element index or cycle notation")
      ->capture_default_str();
  pairing_cmd->add_flag("--star", o.star, "symmetric window");
  add_common(pairing_cmd);

  auto *localmodel = app.add_subcommand("localmodel", "tame local model");
  localmodel->require_subcommand(1);
  auto *lm_verify = localmodel->add_subcommand(
      "verify", "free generator check (--e/--n) or factorisation (--group)");
  auto *lm_group = add_group(lm_verify);
  lm_verify->add_option("--s", o.s, "element for --group")->capture_default_str();
  lm_verify->add_option("--e", o.e, "order of H = C_e")->capture_default_str();
  lm_verify->add_option("--n", o.n, "offset n, |n| <= e - 1")
      ->capture_default_str();
  lm_verify->add_option("--p", o.instance_p, "instance prime, p = 1 mod e");
  lm_verify->add_option("--q", o.q, "residue size for --group");
  add_common(lm_verify);

  auto *gauss = app.add_subcommand("gauss", "Gauss, Jacobi and J* values");
  gauss->add_option("--p", o.p, "prime <= 101")->capture_default_str();
  gauss->add_option("--order,--e", o.order, "character order d | p - 1");
  gauss->add_option("--a", o.a, "single exponent a (chi(g) = zeta_d^a)");
  add_common(gauss);

  auto *crux = app.add_subcommand("crux", "J* valuations against window gaps");
  crux->add_option("--p", o.p, "prime <= 101")->capture_default_str();
  crux->add_option("--e", o.e, "odd e | p - 1")->capture_default_str();
  crux->add_option("--precision", o.precision, "starting lambda precision");
  add_common(crux);

  auto *ledger = app.add_subcommand("ledger", "place-indexed homomorphisms");
  ledger->require_subcommand(1);
  auto *demo = ledger->add_subcommand("demo", "build_f, decompose, recompose");
  demo->add_option("--places", o.places, "places JSON file");
  add_group(demo);
  add_common(demo);

  auto *suite = app.add_subcommand("suite", "run every verifier");
  suite->add_option("--config", o.config, "suite config JSON");
  auto *suite_format = suite->add_option("--format", o.format, "json or csv")
                           ->check(CLI::IsMember({"json", "csv"}));
  auto *suite_prec =
      suite->add_option("--precision", o.precision, "lambda precision override");
  suite->add_option("--out", o.out, "report directory")
      ->default_str("stickel_reports");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp &e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  } catch (const CLI::CallForAllHelp &e) {
    return app.exit(e) == 0 ? kPass : kUsage;
  } catch (const CLI::ParseError &e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*chartab)
      return cmd_chartab(o);
    if (*pairing_cmd)
      return cmd_pairing(o);
    if (*lm_verify)
      return cmd_localmodel_verify(o, lm_group->count() > 0);
    if (*gauss)
      return cmd_gauss(o);
    if (*crux)
      return cmd_crux(o);
    if (*demo)
      return cmd_ledger_demo(o);
    if (*suite)
      return cmd_suite(o, suite_format->count() > 0, suite_prec->count() > 0);
  } catch (const UsageError &e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const ConfigError &e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const GroupError &e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception &e) {
    std::cerr << "check failure: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
