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

#include <set>

#include "stickel/error.hpp"
#include "stickel/ledger.hpp"
#include "stickel/stickelberger.hpp"
#include "test_util.hpp"

using namespace stickel;

namespace {

TameElement w(const Rational &e, const CycNum &c = 1) {
  return TameElement::monomial(e, c);
}

ReprHom synthetic(const TablePtr &T, std::mt19937_64 &rng) {
  std::uniform_int_distribution<long> ex(-3, 3);
  ReprHom f;
  f.table = T;
  for (std::size_t i = 0; i < T->size(); ++i) {
    CycNum c;
    do
      c = testutil::random_cyc(T->conductor(), rng, 2);
    while (c.is_zero());
    f.values.push_back(w(Rational(ex(rng)), c));
  }
  return f;
}

std::size_t twisted_index(const TablePtr &T, std::size_t i, long k) {
  const VirtualChar v = galois_twist(VirtualChar::irreducible(T, i), k);
  for (std::size_t j = 0; j < T->size(); ++j)
    if (v.coeff(j) == 1)
      return j;
  throw std::runtime_error("twist is not irreducible");
}

} // namespace

TEST_SUITE("ledger") {

TEST_CASE("build_f examples") {
  auto T3 = irr_table(preset_group("C3"));
  const PlacedHom empty = build_f(T3, {});
  CHECK(empty.support().empty());
  const PlacedHom unram = build_f(T3, {{"v", 7, 0}});
  CHECK(unram.support().empty());

  const PlacedHom f = build_f(T3, {{"v", 7, 1}});
  REQUIRE(f.support() == std::vector<std::string>{"v"});
  const ReprHom &h = f.entries.at("v").f;
  CHECK(h.values[0] == w(0));
  CHECK(h.values[testutil::cyclic_char(T3, 1, 1)] == w(0));
  CHECK(h.values[testutil::cyclic_char(T3, 1, 2)] == w(-1));

  auto S3 = preset_group("S3");
  auto TS = irr_table(S3);
  const std::size_t std2 = testutil::find_char(
      TS, [](const VirtualChar &c) { return c.value_at(0) == CycNum(2); });
  const PlacedHom g = build_f(TS, {{"v", 5, S3->parse_element("(1 2 3)")}});
  CHECK(g.entries.at("v").f.values[std2] == w(-1));
  CHECK(verify_build_f(TS, S3->parse_element("(1 2 3)"), 5).pass());
}

TEST_CASE("build_f rejections") {
  auto S3 = preset_group("S3");
  auto TS = irr_table(S3);
  CHECK_THROWS_AS(build_f(TS, {{"v", 5, S3->parse_element("(1 2)")}}), DomainError);
  CHECK_THROWS_AS(build_f(TS, {{"v", 3, S3->parse_element("(1 2 3)")}}), DomainError);
  CHECK_THROWS_AS(build_f(TS, {{"v", 5, 1}, {"v", 7, 1}}), DomainError);
  CHECK_THROWS_AS(build_f(TS, {{"v", 5, 99}}), DomainError);
}

TEST_CASE("build_f exponents equal the window gap") {
  for (const char *name : {"C3", "C5", "C7", "C9", "S3", "D5", "A4", "F21"}) {
    auto G = preset_group(name);
    auto T = irr_table(G);
    for (Elem s = 1; s < G->order(); ++s) {
      const long o = G->element_order(s);
      if (o % 2 == 0)
        continue;
      const long q = o == 3 ? 7 : 2;
      const PlacedHom f = build_f(T, {{"v", q, s}});
      for (std::size_t i = 0; i < T->size(); ++i) {
        const VirtualChar chi = VirtualChar::irreducible(T, i);
        CHECK(f.entries.at("v").f.values[i] ==
              w(star_pairing(chi, s) - pairing(chi, s)));
      }
    }
  }
}

TEST_CASE("decompose and recompose") {
  auto S3 = preset_group("S3");
  auto T = irr_table(S3);
  const Elem r = S3->parse_element("(1 2 3)");
  const PlacedHom one = build_f(T, {{"a", 5, r}});
  CHECK(decompose(one).size() == 1);
  CHECK(recompose(T, decompose(one)) == one);

  const PlacedHom two = build_f(T, {{"a", 5, r}, {"b", 7, S3->mul(r, r)}});
  const auto parts = decompose(two);
  CHECK(parts.size() == 2);
  CHECK(recompose(T, parts) == two);
  CHECK(recompose(T, parts).support() == std::vector<std::string>{"a", "b"});

  const PlacedHom three =
      build_f(T, {{"p2", 2, r}, {"p5", 5, r}, {"p11", 11, S3->mul(r, r)}});
  CHECK(recompose(T, decompose(three)) == three);

  // a repeated label multiplies its values
  const PlacedHom sq = recompose(T, {one, one});
  for (std::size_t i = 0; i < T->size(); ++i)
    CHECK(sq.entries.at("a").f.values[i] == one.entries.at("a").f.values[i].pow(2));
  PlacedHom clash = one;
  clash.entries.at("a").place.q = 11;
  CHECK_THROWS_AS(recompose(T, {one, clash}), DomainError);
}

TEST_CASE("repr hom evaluation") {
  auto T = irr_table(preset_group("S3"));
  std::mt19937_64 rng(5);
  const ReprHom f = synthetic(T, rng);
  const VirtualChar a = VirtualChar::irreducible(T, 1);
  const VirtualChar b = VirtualChar::irreducible(T, 2);
  CHECK(f.evaluate(a + b) == f.values[1] * f.values[2]);
  CHECK(f.evaluate(a - b) == f.values[1] * f.values[2].inverse());
  CHECK_THROWS_AS(f.evaluate(make_rational(1, 2) * a), DomainError);
  CHECK(ReprHom::trivial(T).is_trivial());
  CHECK((f * ReprHom::trivial(T)) == f);
}

TEST_CASE("norm_restrict") {
  std::mt19937_64 rng(9);
  for (const char *name : {"C3", "C5", "S3", "F21"}) {
    auto T = irr_table(preset_group(name));
    const ReprHom f = synthetic(T, rng);
    CHECK(norm_restrict(f, {1}) == f);
    const long N = T->conductor();
    std::vector<long> units;
    for (long k = 1; k < N; ++k)
      if (std::gcd(k, N) == 1)
        units.push_back(k);
    const long k = units.back();
    // definition unwinding for d = 2
    const ReprHom g = norm_restrict(f, {1, k});
    for (std::size_t i = 0; i < T->size(); ++i)
      CHECK(g.values[i] == f.values[i] * f.values[twisted_index(T, i, k)].galois_apply(k));
    // composed transversals against the product transversal
    for (long a : units)
      for (long b : units) {
        std::vector<long> prod;
        for (long x : {1L, a})
          for (long y : {1L, b})
            prod.push_back(x * y % N);
        CHECK(norm_restrict(norm_restrict(f, {1, a}), {1, b}) == norm_restrict(f, prod));
      }
    CHECK_THROWS_AS(norm_restrict(f, {}), DomainError);
    if (N > 1) {
      CHECK_THROWS_AS(norm_restrict(f, {N}), DomainError);
    }
  }
}

TEST_CASE("randomised ledger report") {
  for (const char *name : {"S3", "F21"}) {
    const Report r = verify_ledger_random(irr_table(preset_group(name)), 20, 1234);
    CHECK(r.pass());
    std::set<std::string> ids;
    for (const auto &l : r.lines)
      ids.insert(l.identity);
    CHECK(ids.count("recompose_decompose_build_f"));
    CHECK(ids.count("norm_restrict_composes"));
  }
}

TEST_CASE("ledger demo input") {
  const auto spec = nlohmann::json::parse(
      R"J({"group":"S3","places":[{"label":"a","q":5,"s":"(1 2 3)"},{"label":"b","q":7,"s":0}]})J");
  const Report r = ledger_demo(spec);
  CHECK(r.pass());
  CHECK(r.meta["parts"] == 1);
  CHECK_THROWS_AS(ledger_demo(nlohmann::json::object()), DomainError);
}

TEST_CASE("crux examples") {
  const CruxResult r = crux_check(7, 3);
  CHECK(r.pass);
  std::multiset<Rational> gaps;
  for (const auto &c : r.per_chi)
    if (c.chi != "xi^0")
      gaps.insert(c.rhs_val);
  CHECK(gaps == std::multiset<Rational>{Rational(0), Rational(-6)});
  for (const auto &c : r.per_chi) {
    CHECK(c.lhs_val == c.rhs_val);
    if (c.chi == "xi^0")
      CHECK(c.rhs_val == 0);
  }
  const CruxResult r11 = crux_check(11, 5);
  CHECK(r11.pass);
  std::vector<Rational> g11;
  for (const auto &c : r11.per_chi)
    g11.push_back(c.rhs_val);
  CHECK(g11 == std::vector<Rational>{0, 0, 0, -10, -10});
  CHECK(r11.to_report().pass());
  CHECK(crux_check(13, 1).pass);
  CHECK_THROWS_AS(crux_check(7, 2), DomainError);
  CHECK_THROWS_AS(crux_check(7, 5), DomainError);
  CHECK_THROWS_AS(crux_check(103, 3), DomainError);
}

TEST_CASE("crux counts matching identifications") {
  const CruxResult r = crux_check(31, 5);
  CHECK(r.pass);
  CHECK(r.identifications.size() == 4);
  long matches = 0;
  for (const auto &id : r.identifications)
    matches += id.match;
  CHECK(matches >= 1);
  CHECK(r.to_json()["identifications"].size() == 4);
}

}
