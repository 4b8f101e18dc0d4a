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

#include <algorithm>
#include <map>
#include <set>

#include "stickel/error.hpp"
#include "stickel/groups.hpp"

using namespace stickel;

namespace {

// Class sizes by brute-force conjugation.
std::multiset<std::size_t> brute_class_sizes(const FiniteGroup &G) {
  std::vector<bool> seen(G.order(), false);
  std::multiset<std::size_t> sizes;
  for (Elem g = 0; g < G.order(); ++g) {
    if (seen[g])
      continue;
    std::set<Elem> cls;
    for (Elem x = 0; x < G.order(); ++x)
      cls.insert(G.mul(G.mul(G.inv(x), g), x));
    for (Elem c : cls)
      seen[c] = true;
    sizes.insert(cls.size());
  }
  return sizes;
}

} // namespace

TEST_SUITE("groups") {

TEST_CASE("closure of generators") {
  auto c3 = FiniteGroup::from_cycles({{{1, 2, 3}}});
  CHECK(c3->order() == 3);
  CHECK(c3->is_abelian());
  auto s3 = FiniteGroup::from_cycles({{{1, 2}}, {{1, 2, 3}}});
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  auto f21 = FiniteGroup::from_cycles({{{1, 2, 3, 4, 5, 6, 7}}, {{2, 3, 5}, {4, 7, 6}}});
  CHECK(f21->order() == 21);
  for (Elem g = 1; g < f21->order(); ++g) {
    const int o = f21->element_order(g);
    CHECK((o == 3 || o == 7));
  }
}

TEST_CASE("element orders") {
  auto s3 = preset_group("S3");
  CHECK(s3->element_order(s3->identity()) == 1);
  CHECK(s3->element_order(s3->parse_element("(1 2 3)")) == 3);
  CHECK(s3->element_order(s3->parse_element("(1 2)")) == 2);
  for (const auto &name : preset_names()) {
    auto G = preset_group(name);
    for (Elem g = 0; g < G->order(); ++g)
      for (Elem x = 0; x < G->order(); ++x)
        CHECK(G->element_order(G->conjugate(g, x)) == G->element_order(g));
  }
}

TEST_CASE("conjugacy classes") {
  auto c3 = preset_group("C3");
  CHECK(c3->classes().size() == 3);
  auto s3 = preset_group("S3");
  std::multiset<std::size_t> sizes;
  for (const auto &c : s3->classes().classes)
    sizes.insert(c.size());
  CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
  for (const auto &name : preset_names()) {
    auto G = preset_group(name);
    std::multiset<std::size_t> got;
    std::size_t total = 0;
    for (const auto &c : G->classes().classes) {
      got.insert(c.size());
      total += c.size();
      CHECK(G->order() % static_cast<int>(c.size()) == 0);
    }
    CHECK(total == static_cast<std::size_t>(G->order()));
    CHECK(got == brute_class_sizes(*G));
    CHECK(G->classes().classes[0] == std::vector<Elem>{0});
  }
}

TEST_CASE("cyclic subgroups and cosets") {
  auto s3 = preset_group("S3");
  const Elem r = s3->parse_element("(1 2 3)");
  const auto h = s3->cyclic_subgroup(r);
  REQUIRE(h.size() == 3);
  CHECK(h[0] == s3->identity());
  CHECK(h[1] == r);
  CHECK(h[2] == s3->mul(r, r));
  CHECK(s3->right_transversal(h).size() == 2);
  CHECK_THROWS_AS(s3->right_transversal({0, r}), GroupError);
}

TEST_CASE("table input is validated") {
  // Z/3 with identity at index 2
  std::vector<std::vector<int>> t = {{1, 2, 0}, {2, 0, 1}, {0, 1, 2}};
  auto g = FiniteGroup::from_table(t);
  CHECK(g->order() == 3);
  CHECK(g->mul(0, 1) == 1);
  // not associative: a Latin square that is not a group table
  std::vector<std::vector<int>> bad = {{0, 1, 2, 3, 4},
                                       {1, 0, 3, 4, 2},
                                       {2, 4, 0, 1, 3},
                                       {3, 2, 4, 0, 1},
                                       {4, 3, 1, 2, 0}};
  CHECK_THROWS_AS(FiniteGroup::from_table(bad), GroupError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 1}}), GroupError);
}

TEST_CASE("json input and labels") {
  auto g = FiniteGroup::from_json(nlohmann::json::parse(R"({"perm_gens": [[[1,2,3]], [[1,2]]]})"));
  CHECK(g->order() == 6);
  for (Elem x = 0; x < g->order(); ++x)
    CHECK(g->parse_element(g->label(x)) == x);
  CHECK(g->label(0) == "()");
  CHECK(g->parse_element("4") == 4);
}

TEST_CASE("presets") {
  const std::map<std::string, int> orders{{"C1", 1}, {"C3", 3}, {"C5", 5},
                                          {"C7", 7}, {"C9", 9}, {"S3", 6},
                                          {"D5", 10}, {"A4", 12}, {"Q8", 8},
                                          {"F21", 21}};
  for (const auto &[name, o] : orders)
    CHECK(preset_group(name)->order() == o);
  auto q8 = preset_group("Q8");
  int involutions = 0;
  for (Elem g = 0; g < 8; ++g)
    involutions += q8->element_order(g) == 2;
  CHECK(involutions == 1);
  CHECK_THROWS_WITH_AS(preset_group("M11"), doctest::Contains("S3"), DomainError);
}

TEST_CASE("subgroups") {
  CHECK(preset_group("S3")->subgroups().size() == 6);
  CHECK(preset_group("A4")->subgroups().size() == 10);
  CHECK(preset_group("Q8")->subgroups().size() == 6);
  auto s3 = preset_group("S3");
  const Subgroup h = Subgroup::cyclic(s3, s3->parse_element("(1 2 3)"));
  CHECK(h.group->order() == 3);
  CHECK(h.embed[1] == s3->parse_element("(1 2 3)"));
}

}
