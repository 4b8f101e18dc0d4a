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

#include "stickel/ledger.hpp"

#include <numeric>
#include <random>

#include "stickel/error.hpp"
#include "stickel/gaussjacobi.hpp"
#include "stickel/padic.hpp"
#include "stickel/stickelberger.hpp"

namespace stickel {

namespace {

void require_same_table(const TablePtr &a, const TablePtr &b) {
  if (a.get() != b.get())
    throw DomainError("homomorphisms over different character tables");
}

std::string chi_label(std::size_t i) { return "chi" + std::to_string(i); }

std::size_t irreducible_index(const VirtualChar &v) {
  for (std::size_t i = 0; i < v.coeffs().size(); ++i)
    if (v.coeff(i) != 0) {
      if (v.coeff(i) != 1)
        throw InternalError("twisted character is not irreducible");
      return i;
    }
  throw InternalError("twisted character vanished");
}

} // namespace

// ---- ReprHom -------------------------------------------------------------

ReprHom ReprHom::trivial(TablePtr table) {
  ReprHom f;
  f.values.assign(table->size(), TameElement(1));
  f.table = std::move(table);
  return f;
}

TameElement ReprHom::evaluate(const VirtualChar &chi) const {
  require_same_table(table, chi.table());
  if (!chi.is_integral())
    throw DomainError("evaluate: virtual character " + chi.to_string() +
                      " is not integral");
  TameElement r(1);
  for (std::size_t i = 0; i < values.size(); ++i)
    if (chi.coeff(i) != 0)
      r *= values[i].pow(chi.coeff(i).get_num().get_si());
  return r;
}

ReprHom operator*(const ReprHom &a, const ReprHom &b) {
  require_same_table(a.table, b.table);
  ReprHom r = a;
  for (std::size_t i = 0; i < r.values.size(); ++i)
    r.values[i] *= b.values[i];
  return r;
}

bool operator==(const ReprHom &a, const ReprHom &b) {
  return a.table.get() == b.table.get() && a.values == b.values;
}

bool ReprHom::is_trivial() const {
  for (const auto &v : values)
    if (!(v == TameElement(1)))
      return false;
  return true;
}

nlohmann::json ReprHom::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (std::size_t i = 0; i < values.size(); ++i)
    j.push_back({{"chi", chi_label(i)}, {"value", values[i].to_json()}});
  return j;
}

// ---- PlacedHom -----------------------------------------------------------

std::vector<std::string> PlacedHom::support() const {
  std::vector<std::string> out;
  for (const auto &[l, e] : entries)
    out.push_back(l);
  return out;
}

bool operator==(const PlacedHom &a, const PlacedHom &b) {
  if (a.table.get() != b.table.get() || a.entries.size() != b.entries.size())
    return false;
  for (const auto &[l, e] : a.entries) {
    auto it = b.entries.find(l);
    if (it == b.entries.end() || !(it->second.place == e.place) ||
        !(it->second.f == e.f))
      return false;
  }
  return true;
}

nlohmann::json PlacedHom::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  const auto &G = table->group();
  for (const auto &[l, e] : entries)
    j.push_back({{"label", l},
                 {"q", e.place.q},
                 {"s", G.label(e.place.s)},
                 {"f", e.f.to_json()}});
  return j;
}

PlacedHom build_f(const TablePtr &table, const std::vector<Place> &places) {
  PlacedHom out;
  out.table = table;
  const auto &G = table->group();
  for (const auto &pl : places) {
    if (pl.s < 0 || pl.s >= G.order())
      throw DomainError("place " + pl.label + ": element out of range");
    const long o = G.element_order(pl.s);
    if (o % 2 == 0)
      throw DomainError("place " + pl.label + ": |s| = " + std::to_string(o) +
                        " is even");
    LocalFieldSpec{pl.q, o}.validate();
    if (out.entries.count(pl.label))
      throw DomainError("duplicate place label " + pl.label);
    if (pl.s == G.identity())
      continue; // unramified
    const CyclicChars cc = CyclicChars::make(table, pl.s);
    ReprHom f;
    f.table = table;
    for (std::size_t i = 0; i < table->size(); ++i) {
      const VirtualChar chi = VirtualChar::irreducible(table, i);
      const VirtualChar v = adams(chi, 2) - Rational(2) * chi;
      f.values.push_back(TameElement::monomial(pairing(v, cc)));
    }
    out.entries.emplace(pl.label, PlacedEntry{pl, std::move(f)});
  }
  return out;
}

std::vector<PlacedHom> decompose(const PlacedHom &f) {
  std::vector<PlacedHom> parts;
  for (const auto &[l, e] : f.entries) {
    PlacedHom one;
    one.table = f.table;
    one.entries.emplace(l, e);
    parts.push_back(std::move(one));
  }
  return parts;
}

PlacedHom recompose(const TablePtr &table, const std::vector<PlacedHom> &parts) {
  PlacedHom out;
  out.table = table;
  for (const auto &part : parts) {
    require_same_table(table, part.table);
    for (const auto &[l, e] : part.entries) {
      auto it = out.entries.find(l);
      if (it == out.entries.end()) {
        out.entries.emplace(l, e);
        continue;
      }
      if (!(it->second.place == e.place))
        throw DomainError("place " + l + " carries conflicting data");
      it->second.f = it->second.f * e.f;
    }
  }
  return out;
}

ReprHom norm_restrict(const ReprHom &f, const std::vector<long> &twists) {
  if (twists.empty())
    throw DomainError("norm_restrict: empty transversal");
  const long N = f.table->conductor();
  ReprHom r = ReprHom::trivial(f.table);
  for (const long k : twists) {
    if (std::gcd(k, N) != 1)
      throw DomainError("norm_restrict: twist " + std::to_string(k) +
                        " is not coprime to the conductor " +
                        std::to_string(N));
    for (std::size_t i = 0; i < f.table->size(); ++i) {
      const std::size_t j = irreducible_index(
          galois_twist(VirtualChar::irreducible(f.table, i), k));
      r.values[i] *= f.values[j].galois_apply(k);
    }
  }
  return r;
}

// ---- verifiers -----------------------------------------------------------

Report verify_build_f(const TablePtr &table, Elem s, long q) {
  const auto &G = table->group();
  Report rep;
  rep.name = "build_f";
  rep.meta = {{"group", G.name()}, {"s", G.label(s)}, {"q", q}};
  const PlacedHom f = build_f(table, {Place{"v", q, s}});
  const CyclicChars cc = CyclicChars::make(table, s);
  for (std::size_t i = 0; i < table->size(); ++i) {
    const VirtualChar chi = VirtualChar::irreducible(table, i);
    const Rational expected = star_pairing(chi, cc) - pairing(chi, cc);
    const std::string lhs =
        f.entries.empty() ? "0/1"
                          : to_fraction_string(
                                f.entries.begin()->second.f.values[i].valuation());
    rep.add_equal("build_f_exponent_is_star_minus_plain", chi_label(i), lhs,
                  to_fraction_string(expected));
  }
  return rep;
}

namespace {

const long kResidueSizes[] = {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 17, 19, 23, 25};

ReprHom random_hom(const TablePtr &table, std::mt19937_64 &rng) {
  const long N = table->conductor();
  std::uniform_int_distribution<long> ex(-6, 6), den(1, 6), root(0, N - 1);
  ReprHom f;
  f.table = table;
  for (std::size_t i = 0; i < table->size(); ++i) {
    Rational e(ex(rng), den(rng));
    e.canonicalize();
    f.values.push_back(TameElement::monomial(e, CycNum::zeta(N, root(rng))));
  }
  return f;
}

std::vector<long> random_units(long N, std::size_t count, std::mt19937_64 &rng) {
  std::vector<long> units;
  for (long k = 1; k <= std::max(N, 1L); ++k)
    if (std::gcd(k, N) == 1)
      units.push_back(k);
  std::uniform_int_distribution<std::size_t> pick(0, units.size() - 1);
  std::vector<long> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(units[pick(rng)]);
  return out;
}

} // namespace

Report verify_ledger_random(const TablePtr &table, int cases,
                            std::uint64_t seed) {
  const auto &G = table->group();
  Report rep;
  rep.name = "ledger";
  rep.meta = {{"group", G.name()}, {"cases", cases}, {"seed", seed}};
  std::mt19937_64 rng(seed);

  std::vector<Elem> odd;
  for (Elem g = 0; g < G.order(); ++g)
    if (G.element_order(g) % 2 == 1)
      odd.push_back(g);
  std::uniform_int_distribution<std::size_t> pick_s(0, odd.size() - 1);
  std::uniform_int_distribution<int> nplaces(1, 4);
  std::uniform_int_distribution<std::size_t> pick_q(0, std::size(kResidueSizes) - 1);

  for (int c = 0; c < cases; ++c) {
    const std::string subject = "case" + std::to_string(c);
    std::vector<Place> places;
    const int np = nplaces(rng);
    for (int k = 0; k < np; ++k) {
      const Elem s = odd[pick_s(rng)];
      long q;
      do
        q = kResidueSizes[pick_q(rng)];
      while (std::gcd(q, static_cast<long>(G.element_order(s))) != 1);
      places.push_back(Place{"v" + std::to_string(k), q, s});
    }
    const PlacedHom f = build_f(table, places);
    rep.add("recompose_decompose_build_f", subject,
            std::to_string(f.entries.size()) + " places", "round trip",
            recompose(table, decompose(f)) == f);

    // synthetic values, with a split of each place into two factors
    PlacedHom g;
    g.table = table;
    std::vector<PlacedHom> parts;
    for (const auto &pl : places) {
      const ReprHom a = random_hom(table, rng), b = random_hom(table, rng);
      g.entries.emplace(pl.label, PlacedEntry{pl, a * b});
      PlacedHom pa, pb;
      pa.table = pb.table = table;
      pa.entries.emplace(pl.label, PlacedEntry{pl, a});
      pb.entries.emplace(pl.label, PlacedEntry{pl, b});
      parts.push_back(pa);
      parts.push_back(pb);
    }
    rep.add("recompose_decompose_synthetic", subject,
            std::to_string(g.entries.size()) + " places", "round trip",
            recompose(table, decompose(g)) == g);
    rep.add("recompose_multiplies_componentwise", subject, "split factors",
            "product", recompose(table, parts) == g);

    const ReprHom h = random_hom(table, rng);
    rep.add("norm_restrict_trivial_transversal", subject, "N_{1}(f)", "f",
            norm_restrict(h, {1}) == h);
    const long N = table->conductor();
    const auto t1 = random_units(N, 2, rng), t2 = random_units(N, 2, rng);
    std::vector<long> prod;
    for (long a : t1)
      for (long b : t2)
        prod.push_back(N == 1 ? 1 : mod_floor(a * b, N));
    rep.add("norm_restrict_composes", subject, "N_T2(N_T1(f))", "N_T1T2(f)",
            norm_restrict(norm_restrict(h, t1), t2) == norm_restrict(h, prod));
  }
  return rep;
}

Report ledger_demo(const nlohmann::json &spec) {
  if (!spec.is_object() || !spec.contains("group") || !spec.contains("places"))
    throw DomainError("places spec needs \"group\" and \"places\"");
  const GroupPtr G = preset_group(spec.at("group").get<std::string>());
  const TablePtr table = irr_table(G);
  std::vector<Place> places;
  for (const auto &p : spec.at("places")) {
    Place pl;
    pl.label = p.at("label").get<std::string>();
    pl.q = p.at("q").get<long>();
    const auto &s = p.at("s");
    pl.s = s.is_number_integer() ? s.get<int>()
                                 : G->parse_element(s.get<std::string>());
    places.push_back(pl);
  }
  const PlacedHom f = build_f(table, places);
  Report rep;
  rep.name = "ledger_demo";
  rep.meta = {{"group", G->name()}, {"f", f.to_json()}};
  const auto parts = decompose(f);
  rep.meta["parts"] = parts.size();
  rep.add("recompose_decompose", "f", std::to_string(parts.size()) + " parts",
          "round trip", recompose(table, parts) == f);
  for (const auto &[l, e] : f.entries)
    for (auto line : verify_build_f(table, e.place.s, e.place.q).lines) {
      line.subject = l + ":" + line.subject;
      rep.lines.push_back(line);
    }
  return rep;
}

// ---- crux ------------------------------------------------------------------

nlohmann::json CruxResult::to_json() const {
  nlohmann::json ids = nlohmann::json::array();
  for (const auto &id : identifications) {
    nlohmann::json map = nlohmann::json::array();
    for (long r = 0; r < e; ++r)
      map.push_back(MultChar::make(p, e, id.u * r).to_string());
    ids.push_back({{"u", id.u}, {"map", map}, {"match", id.match}});
  }
  nlohmann::json rows = nlohmann::json::array();
  for (const auto &c : per_chi)
    rows.push_back({{"chi", c.chi},
                    {"image", c.image},
                    {"lhs_val", to_fraction_string(c.lhs_val)},
                    {"rhs_val", to_fraction_string(c.rhs_val)}});
  return {{"p", p},
          {"e", e},
          {"identifications", ids},
          {"reported_u", reported_u},
          {"per_chi", rows},
          {"pass", pass}};
}

Report CruxResult::to_report() const {
  Report rep;
  rep.name = "crux";
  rep.meta = {{"p", p}, {"e", e}, {"reported_u", reported_u}};
  nlohmann::json matches = nlohmann::json::array();
  for (const auto &id : identifications)
    if (id.match)
      matches.push_back(id.u);
  rep.meta["matching_u"] = matches;
  rep.add("identification_exists", "C" + std::to_string(e),
          std::to_string(matches.size()) + " matching", ">= 1",
          !matches.empty());
  for (const auto &c : per_chi)
    rep.add_equal("j_star_valuation_equals_window_gap",
                  c.chi + "->" + c.image, to_fraction_string(c.lhs_val),
                  to_fraction_string(c.rhs_val));
  return rep;
}

CruxResult crux_check(long p, long e, long lambda_precision) {
  if (!is_prime_long(p) || p > kMaxGaussPrime)
    throw DomainError("crux: p must be a prime <= " +
                      std::to_string(kMaxGaussPrime));
  if (e < 1 || e % 2 == 0 || (p - 1) % e != 0)
    throw DomainError("crux: e must be odd and divide p - 1");
  const GroupPtr G = preset_group("C" + std::to_string(e));
  const TablePtr table = cyclic_table(G);
  const Elem s = e == 1 ? 0 : 1;
  const CyclicChars cc = CyclicChars::make(table, s);

  // rows of a cyclic table: row r is xi^r
  std::vector<Rational> rhs(e), val(e);
  for (long r = 0; r < e; ++r) {
    const VirtualChar chi = VirtualChar::irreducible(table, r);
    rhs[r] = Rational(p - 1) * (star_pairing(chi, cc) - pairing(chi, cc));
    rhs[r].canonicalize();
    val[r] = cyclotomic_valuation(j_star(MultChar::make(p, e, r)), p,
                                  lambda_precision)
                 .lambda_val;
  }

  CruxResult res;
  res.p = p;
  res.e = e;
  bool found = false;
  for (long u = 1; u <= e; ++u) {
    if (std::gcd(u, e) != 1 || (e > 1 && u == e))
      continue;
    CruxIdentification id{u, true};
    for (long r = 0; r < e && id.match; ++r)
      id.match = val[mod_floor(u * r, e)] == rhs[r];
    if (id.match && !found) {
      found = true;
      res.reported_u = u;
    }
    res.identifications.push_back(id);
  }
  for (long r = 0; r < e; ++r) {
    const long a = mod_floor(res.reported_u * r, e);
    res.per_chi.push_back({"xi^" + std::to_string(r),
                           MultChar::make(p, e, a).to_string(), val[a], rhs[r]});
  }
  res.pass = found;
  return res;
}

} // namespace stickel
