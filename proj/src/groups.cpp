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

#include "stickel/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "stickel/error.hpp"

namespace stickel {

namespace {

// (a*b)(x) = b(a(x)): apply a first.
Perm compose(const Perm &a, const Perm &b) {
  Perm r(a.size());
  for (std::size_t x = 0; x < a.size(); ++x)
    r[x] = b[a[x]];
  return r;
}

Perm cycles_to_perm(const std::vector<std::vector<int>> &cycles, int degree) {
  Perm p(degree);
  std::iota(p.begin(), p.end(), 0);
  std::vector<bool> seen(degree, false);
  for (const auto &cyc : cycles) {
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      int a = cyc[i] - 1, b = cyc[(i + 1) % cyc.size()] - 1;
      if (a < 0 || a >= degree)
        throw GroupError("cycle point out of range: " +
                         std::to_string(cyc[i]));
      if (seen[a])
        throw GroupError("cycles are not disjoint at point " +
                         std::to_string(cyc[i]));
      seen[a] = true;
      p[a] = b;
    }
  }
  return p;
}

std::vector<std::vector<int>> parse_cycles(const std::string &text) {
  std::vector<std::vector<int>> cycles;
  std::vector<int> cur;
  bool open = false;
  std::string num;
  auto flush = [&] {
    if (!num.empty()) {
      if (!open)
        throw GroupError("malformed cycle notation: '" + text + "'");
      cur.push_back(std::stoi(num));
      num.clear();
    }
  };
  for (char c : text) {
    if (c == '(') {
      if (open)
        throw GroupError("malformed cycle notation: '" + text + "'");
      open = true;
      cur.clear();
    } else if (c == ')') {
      flush();
      if (!open)
        throw GroupError("malformed cycle notation: '" + text + "'");
      open = false;
      if (!cur.empty())
        cycles.push_back(cur);
    } else if (c >= '0' && c <= '9') {
      num.push_back(c);
    } else if (c == ' ' || c == ',') {
      flush();
    } else {
      throw GroupError("malformed cycle notation: '" + text + "'");
    }
  }
  if (open)
    throw GroupError("malformed cycle notation: '" + text + "'");
  return cycles;
}

} // namespace

void FiniteGroup::finish() {
  const int n = order_;
  inverse_.assign(n, -1);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      if (mul(a, b) == 0) {
        inverse_[a] = b;
        break;
      }
  elem_order_.assign(n, 0);
  exponent_ = 1;
  for (int g = 0; g < n; ++g) {
    int k = 1;
    Elem x = g;
    while (x != 0) {
      x = mul(x, g);
      ++k;
    }
    elem_order_[g] = k;
    exponent_ = std::lcm(exponent_, k);
  }
  classes_.class_of.assign(n, -1);
  for (int g = 0; g < n; ++g) {
    if (classes_.class_of[g] >= 0)
      continue;
    const int ci = static_cast<int>(classes_.classes.size());
    std::set<Elem> cls;
    for (int x = 0; x < n; ++x)
      cls.insert(conjugate(g, x));
    classes_.classes.emplace_back(cls.begin(), cls.end());
    classes_.representatives.push_back(g);
    for (Elem c : cls)
      classes_.class_of[c] = ci;
  }
}

GroupPtr FiniteGroup::from_table(const std::vector<std::vector<int>> &table,
                                 std::string name) {
  const int n = static_cast<int>(table.size());
  if (n == 0)
    throw GroupError("empty multiplication table");
  if (n > kMaxGroupOrder)
    throw GroupError("group order " + std::to_string(n) +
                     " exceeds the supported bound " +
                     std::to_string(kMaxGroupOrder));
  for (int a = 0; a < n; ++a) {
    if (static_cast<int>(table[a].size()) != n)
      throw GroupError("multiplication table is not square");
    for (int b = 0; b < n; ++b)
      if (table[a][b] < 0 || table[a][b] >= n)
        throw GroupError("table not closed: " + std::to_string(a) + "*" +
                         std::to_string(b) + " = " +
                         std::to_string(table[a][b]));
  }
  int e = -1;
  for (int a = 0; a < n && e < 0; ++a) {
    bool ok = true;
    for (int b = 0; b < n && ok; ++b)
      ok = table[a][b] == b && table[b][a] == b;
    if (ok)
      e = a;
  }
  if (e < 0)
    throw GroupError("table has no identity element");
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw GroupError("table is not associative at (" +
                           std::to_string(a) + ", " + std::to_string(b) +
                           ", " + std::to_string(c) + ")");
  for (int a = 0; a < n; ++a) {
    bool has = false;
    for (int b = 0; b < n && !has; ++b)
      has = table[a][b] == e;
    if (!has)
      throw GroupError("element " + std::to_string(a) + " has no inverse");
  }
  // identity first, others in table order
  std::vector<int> to_new(n), to_old;
  to_old.push_back(e);
  for (int a = 0; a < n; ++a)
    if (a != e)
      to_old.push_back(a);
  for (int i = 0; i < n; ++i)
    to_new[to_old[i]] = i;
  std::shared_ptr<FiniteGroup> g(new FiniteGroup());
  g->order_ = n;
  g->name_ = std::move(name);
  g->table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      g->table_[i * n + j] = to_new[table[to_old[i]][to_old[j]]];
  g->finish();
  return g;
}

GroupPtr FiniteGroup::from_permutations(const std::vector<Perm> &generators,
                                        std::string name) {
  std::size_t degree = 0;
  for (const auto &p : generators)
    degree = std::max(degree, p.size());
  Perm id(degree);
  std::iota(id.begin(), id.end(), 0);
  auto pad = [&](Perm p) {
    const std::size_t old = p.size();
    p.resize(degree);
    for (std::size_t i = old; i < degree; ++i)
      p[i] = static_cast<int>(i);
    return p;
  };
  std::vector<Perm> gens;
  for (const auto &p : generators) {
    Perm q = pad(p);
    std::vector<int> check = q;
    std::sort(check.begin(), check.end());
    if (check != id)
      throw GroupError("generator is not a permutation");
    gens.push_back(std::move(q));
  }
  std::vector<Perm> elems{id};
  std::map<Perm, int> index{{id, 0}};
  for (std::size_t k = 0; k < elems.size(); ++k) {
    for (const auto &g : gens) {
      Perm x = compose(elems[k], g);
      if (!index.count(x)) {
        if (static_cast<int>(elems.size()) >= kMaxGroupOrder)
          throw GroupError("generated group exceeds the supported order " +
                           std::to_string(kMaxGroupOrder));
        index.emplace(x, static_cast<int>(elems.size()));
        elems.push_back(std::move(x));
      }
    }
  }
  const int n = static_cast<int>(elems.size());
  std::shared_ptr<FiniteGroup> grp(new FiniteGroup());
  grp->order_ = n;
  grp->name_ = std::move(name);
  grp->table_.resize(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      grp->table_[i * n + j] = index.at(compose(elems[i], elems[j]));
  grp->perms_ = std::move(elems);
  grp->finish();
  return grp;
}

GroupPtr FiniteGroup::from_cycles(
    const std::vector<std::vector<std::vector<int>>> &generators,
    std::string name) {
  int degree = 1;
  for (const auto &g : generators)
    for (const auto &c : g)
      for (int x : c)
        degree = std::max(degree, x);
  std::vector<Perm> perms;
  for (const auto &g : generators)
    perms.push_back(cycles_to_perm(g, degree));
  return from_permutations(perms, std::move(name));
}

GroupPtr FiniteGroup::from_json(const nlohmann::json &j, std::string name) {
  if (j.contains("perm_gens"))
    return from_cycles(
        j.at("perm_gens").get<std::vector<std::vector<std::vector<int>>>>(),
        std::move(name));
  if (j.contains("table"))
    return from_table(j.at("table").get<std::vector<std::vector<int>>>(),
                      std::move(name));
  throw GroupError("group JSON needs 'perm_gens' or 'table'");
}

Elem FiniteGroup::pow(Elem a, long k) const {
  long o = elem_order_[a];
  k %= o;
  if (k < 0)
    k += o;
  Elem r = 0;
  for (long i = 0; i < k; ++i)
    r = mul(r, a);
  return r;
}

bool FiniteGroup::is_abelian() const {
  for (int a = 0; a < order_; ++a)
    for (int b = a + 1; b < order_; ++b)
      if (mul(a, b) != mul(b, a))
        return false;
  return true;
}

std::vector<Elem> FiniteGroup::cyclic_subgroup(Elem s) const {
  std::vector<Elem> out;
  Elem x = 0;
  do {
    out.push_back(x);
    x = mul(x, s);
  } while (x != 0);
  return out;
}

bool FiniteGroup::is_subgroup(const std::vector<Elem> &subset) const {
  if (subset.empty())
    return false;
  std::vector<bool> in(order_, false);
  for (Elem x : subset) {
    if (x < 0 || x >= order_)
      return false;
    in[x] = true;
  }
  if (!in[0])
    return false;
  for (Elem a : subset)
    for (Elem b : subset)
      if (!in[mul(a, inv(b))])
        return false;
  return true;
}

std::vector<Elem>
FiniteGroup::right_transversal(const std::vector<Elem> &subgroup) const {
  if (!is_subgroup(subgroup))
    throw GroupError("right_transversal: subset is not a subgroup");
  std::vector<bool> covered(order_, false);
  std::vector<Elem> reps;
  for (Elem g = 0; g < order_; ++g) {
    if (covered[g])
      continue;
    reps.push_back(g);
    for (Elem h : subgroup)
      covered[mul(h, g)] = true;
  }
  return reps;
}

std::string FiniteGroup::label(Elem g) const {
  if (perms_.empty())
    return "g" + std::to_string(g);
  const Perm &p = perms_[g];
  std::ostringstream os;
  std::vector<bool> seen(p.size(), false);
  for (std::size_t x = 0; x < p.size(); ++x) {
    if (seen[x] || p[x] == static_cast<int>(x))
      continue;
    os << "(";
    std::size_t y = x;
    bool first = true;
    while (!seen[y]) {
      seen[y] = true;
      os << (first ? "" : " ") << y + 1;
      first = false;
      y = static_cast<std::size_t>(p[y]);
    }
    os << ")";
  }
  std::string s = os.str();
  return s.empty() ? "()" : s;
}

Elem FiniteGroup::parse_element(const std::string &text) const {
  if (!text.empty() &&
      std::all_of(text.begin(), text.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int k = std::stoi(text);
    if (k < 0 || k >= order_)
      throw GroupError("element index out of range: " + text);
    return k;
  }
  if (perms_.empty())
    throw GroupError("cycle notation needs a permutation group");
  auto cycles = parse_cycles(text);
  const int degree = static_cast<int>(perms_[0].size());
  Perm p = cycles_to_perm(cycles, degree);
  for (int g = 0; g < order_; ++g)
    if (perms_[g] == p)
      return g;
  throw GroupError("permutation " + text + " is not in the group");
}

std::vector<std::vector<Elem>> FiniteGroup::subgroups() const {
  std::set<std::vector<Elem>> found;
  for (Elem a = 0; a < order_; ++a) {
    for (Elem b = a; b < order_; ++b) {
      std::vector<bool> in(order_, false);
      std::vector<Elem> elems{0};
      in[0] = true;
      for (std::size_t k = 0; k < elems.size(); ++k) {
        for (Elem g : {a, b}) {
          Elem x = mul(elems[k], g);
          if (!in[x]) {
            in[x] = true;
            elems.push_back(x);
          }
        }
      }
      std::sort(elems.begin(), elems.end());
      found.insert(elems);
    }
  }
  std::vector<std::vector<Elem>> out(found.begin(), found.end());
  std::stable_sort(out.begin(), out.end(),
                   [](const auto &x, const auto &y) { return x.size() < y.size(); });
  return out;
}

Subgroup Subgroup::make(GroupPtr parent, std::vector<Elem> elements) {
  if (!parent->is_subgroup(elements))
    throw GroupError("Subgroup::make: subset is not a subgroup of " +
                     parent->name());
  auto zero = std::find(elements.begin(), elements.end(), 0);
  std::rotate(elements.begin(), zero, zero + 1);
  Subgroup h;
  h.parent = parent;
  h.embed = elements;
  h.index_of.assign(parent->order(), -1);
  for (std::size_t i = 0; i < elements.size(); ++i)
    h.index_of[elements[i]] = static_cast<int>(i);
  const int m = static_cast<int>(elements.size());
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      table[i][j] = h.index_of[parent->mul(elements[i], elements[j])];
  h.group = FiniteGroup::from_table(table, parent->name() + "-sub");
  return h;
}

Subgroup Subgroup::cyclic(GroupPtr parent, Elem s) {
  auto elems = parent->cyclic_subgroup(s);
  Subgroup h = make(parent, elems);
  return h;
}

namespace {

// Quaternion units as (sign, unit) with unit in {1, i, j, k}.
GroupPtr build_q8() {
  // multiplication of basis units 0=1,1=i,2=j,3=k: unit product and sign
  const int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  const int sign[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
  auto code = [](int s, int u) { return (s < 0 ? 4 : 0) + u; };
  auto mulq = [&](int a, int b) {
    int sa = a >= 4 ? -1 : 1, ua = a % 4, sb = b >= 4 ? -1 : 1, ub = b % 4;
    return code(sa * sb * sign[ua][ub], unit[ua][ub]);
  };
  // right-regular representation: x -> x * g
  auto regular = [&](int g) {
    Perm p(8);
    for (int x = 0; x < 8; ++x)
      p[x] = mulq(x, g);
    return p;
  };
  return FiniteGroup::from_permutations({regular(1), regular(2)}, "Q8");
}

std::vector<std::vector<int>> cycle_n(int n) {
  std::vector<int> c(n);
  std::iota(c.begin(), c.end(), 1);
  return {c};
}

} // namespace

std::vector<std::string> preset_names() {
  return {"C1", "C3", "C5", "C7", "C9", "S3", "D5", "A4", "Q8", "F21"};
}

GroupPtr preset_group(const std::string &name) {
  if (name == "C1")
    return FiniteGroup::from_table({{0}}, "C1");
  if (name.size() >= 2 && name[0] == 'C' &&
      std::all_of(name.begin() + 1, name.end(), [](char c) { return c >= '0' && c <= '9'; })) {
    int n = std::stoi(name.substr(1));
    if (n >= 2 && n <= kMaxGroupOrder)
      return FiniteGroup::from_cycles({cycle_n(n)}, name);
  }
  if (name == "S3")
    return FiniteGroup::from_cycles({{{1, 2}}, {{1, 2, 3}}}, "S3");
  if (name == "D5")
    return FiniteGroup::from_cycles({{{1, 2, 3, 4, 5}}, {{2, 5}, {3, 4}}}, "D5");
  if (name == "A4")
    return FiniteGroup::from_cycles({{{1, 2, 3}}, {{1, 2}, {3, 4}}}, "A4");
  if (name == "Q8")
    return build_q8();
  if (name == "F21")
    return FiniteGroup::from_cycles(
        {{{1, 2, 3, 4, 5, 6, 7}}, {{2, 3, 5}, {4, 7, 6}}}, "F21");
  std::string list;
  for (const auto &p : preset_names())
    list += (list.empty() ? "" : ", ") + p;
  throw DomainError("unknown group preset '" + name + "' (available: " + list +
                    ", Cn)");
}

} // namespace stickel
