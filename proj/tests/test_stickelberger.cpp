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

#include <cmath>

#include "stickel/error.hpp"
#include "stickel/stickelberger.hpp"
#include "test_util.hpp"

using namespace stickel;

namespace {

// Numerical pairing: multiplicities from the character values on <s> by a
// floating-point DFT, then the window sum. Returns (plain, star).
std::pair<double, double> numeric_pairings(const VirtualChar &chi, Elem s) {
  const FiniteGroup &G = chi.table()->group();
  const long o = G.element_order(s);
  double plain = 0, star = 0;
  for (long j = 0; j < o; ++j) {
    testutil::cplx m = 0;
    for (long i = 0; i < o; ++i)
      m += testutil::numeric(chi.value_at(G.pow(s, i))) *
           testutil::root_of_unity(o, -i * j);
    m /= static_cast<double>(o);
    plain += m.real() * static_cast<double>(j) / o;
    if (o % 2) {
      const long r = j <= (o - 1) / 2 ? j : j - o;
      star += m.real() * static_cast<double>(r) / o;
    }
  }
  return {plain, star};
}

const char *kPresets[] = {"C3", "C5", "C7", "C9", "S3", "D5", "A4", "Q8", "F21"};

} // namespace

TEST_SUITE("stickelberger") {

TEST_CASE("pairing examples") {
  auto C3 = preset_group("C3");
  auto T = irr_table(C3);
  const VirtualChar one = VirtualChar::trivial(T);
  const VirtualChar x1 = VirtualChar::irreducible(T, testutil::cyclic_char(T, 1, 1));
  const VirtualChar x2 = VirtualChar::irreducible(T, testutil::cyclic_char(T, 1, 2));
  for (Elem s = 0; s < 3; ++s)
    CHECK(pairing(one, s) == 0);
  CHECK(pairing(x1, 1) == make_rational(1, 3));
  CHECK(pairing(x2, 1) == make_rational(2, 3));
  CHECK(star_pairing(one, 1) == 0);
  CHECK(star_pairing(x1, 1) == make_rational(1, 3));
  CHECK(star_pairing(x2, 1) == make_rational(-1, 3));
  CHECK(pairing(x1, 0) == 0);

  auto S3 = preset_group("S3");
  auto TS = irr_table(S3);
  const VirtualChar chi = VirtualChar::irreducible(
      TS, testutil::find_char(TS, [](const VirtualChar &c) { return c.value_at(0) == CycNum(2); }));
  const Elem r = S3->parse_element("(1 2 3)");
  CHECK(pairing(chi, r) == 1);
  CHECK(star_pairing(chi, r) == 0);
  CHECK_THROWS_AS(star_pairing(chi, S3->parse_element("(1 2)")), DomainError);
}

TEST_CASE("symmetric window") {
  CHECK(symmetric_representative(0, 3) == 0);
  CHECK(symmetric_representative(2, 3) == -1);
  CHECK(symmetric_representative(-1, 5) == -1);
  CHECK(symmetric_representative(7, 5) == 2);
  CHECK(symmetric_representative(3, 5) == -2);
}

TEST_CASE("xi, xi_star and d on a cyclic group of order 3") {
  auto C3 = preset_group("C3");
  auto T = irr_table(C3);
  const CyclicChars cc = CyclicChars::make(T, 1);
  const VirtualChar e1 = cc.xi_power(1), e2 = cc.xi_power(2);
  CHECK(xi(cc) == make_rational(1, 3) * (e1 + make_rational(2, 1) * e2));
  CHECK(xi_star(cc) - xi(cc) == -e2);
  CHECK(d_element(cc) == -e2);
  const CyclicChars c0 = CyclicChars::make(T, 0);
  CHECK(d_element(c0).is_zero());
  CHECK(xi(c0).is_zero());
}

TEST_CASE("pairings agree with a numerical oracle") {
  for (const char *name : kPresets) {
    auto G = preset_group(name);
    auto T = irr_table(G);
    for (Elem s = 0; s < G->order(); ++s)
      for (std::size_t i = 0; i < T->size(); ++i) {
        const VirtualChar chi = VirtualChar::irreducible(T, i);
        const auto [plain, star] = numeric_pairings(chi, s);
        CHECK(std::abs(pairing(chi, s).get_d() - plain) < 1e-8);
        if (G->element_order(s) % 2)
          CHECK(std::abs(star_pairing(chi, s).get_d() - star) < 1e-8);
      }
  }
}

TEST_CASE("pairings are linear and conjugation invariant") {
  for (const char *name : {"S3", "A4", "F21", "D5"}) {
    auto G = preset_group(name);
    auto T = irr_table(G);
    for (Elem s = 0; s < G->order(); ++s) {
      const VirtualChar a = VirtualChar::irreducible(T, T->size() - 1);
      const VirtualChar b = VirtualChar::irreducible(T, 1 % T->size());
      const VirtualChar c = make_rational(3, 1) * a - make_rational(1, 2) * b;
      CHECK(pairing(c, s) == make_rational(3, 1) * pairing(a, s) -
                                 make_rational(1, 2) * pairing(b, s));
      for (Elem x = 0; x < G->order(); ++x)
        CHECK(pairing(a, G->conjugate(s, x)) == pairing(a, s));
    }
  }
}

TEST_CASE("window gap is an integer in {0, -1} per constituent") {
  for (const char *name : kPresets) {
    auto G = preset_group(name);
    auto T = irr_table(G);
    for (Elem s = 0; s < G->order(); ++s) {
      if (G->element_order(s) % 2 == 0)
        continue;
      for (std::size_t i = 0; i < T->size(); ++i) {
        const VirtualChar chi = VirtualChar::irreducible(T, i);
        const Rational gap = star_pairing(chi, s) - pairing(chi, s);
        CHECK(gap.get_den() == 1);
        CHECK(gap <= 0);
        CHECK(-gap <= T->degree(i));
        CHECK(star_pairing(chi, s) == pairing(adams(chi, 2) - chi, s));
      }
    }
  }
}

TEST_CASE("identity verifiers pass on every preset") {
  for (const char *name : kPresets) {
    auto G = preset_group(name);
    auto T = irr_table(G);
    for (Elem s = 0; s < G->order(); ++s) {
      const Report a = verify_induction_identities(T, s);
      CHECK_MESSAGE(a.pass(), name << " s=" << s);
      CHECK_FALSE(a.lines.empty());
      if (G->element_order(s) % 2) {
        const Report b = verify_adams_identities(T, s);
        CHECK_MESSAGE(b.pass(), name << " s=" << s);
      } else {
        CHECK_THROWS_AS(verify_adams_identities(T, s), DomainError);
      }
    }
  }
}

TEST_CASE("multiplicities on the restriction") {
  auto S3 = preset_group("S3");
  auto T = irr_table(S3);
  const CyclicChars cc = CyclicChars::make(T, S3->parse_element("(1 2 3)"));
  const VirtualChar chi = VirtualChar::irreducible(T, 2);
  const auto m = restriction_multiplicities(chi, cc);
  REQUIRE(m.size() == 3);
  CHECK(m[0] == 0);
  CHECK(m[1] == 1);
  CHECK(m[2] == 1);
}

}
