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

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace stickel {

/// Index of an element inside its FiniteGroup; 0 is always the identity.
using Elem = int;

/// A permutation of {0, ..., degree-1}, image list.
using Perm = std::vector<int>;

inline constexpr int kMaxGroupOrder = 360;

struct ConjClassSet {
  std::vector<std::vector<Elem>> classes; // classes[0] = {identity}
  std::vector<int> class_of;              // element -> class index
  std::vector<Elem> representatives;      // smallest element of each class

  std::size_t size() const { return classes.size(); }
};

/**
 * Finite group given by its full Cayley table.
 *
 * Elements are numbered identity first, then in discovery order (closure
 * order for permutation input, table order for table input). The group laws
 * are checked at construction and the object is immutable afterwards.
 */
class FiniteGroup {
public:
  /// Table rows/columns indexed by element; any element may be the identity.
  static std::shared_ptr<const FiniteGroup>
  from_table(const std::vector<std::vector<int>> &table, std::string name = "");

  /// Closure of permutation generators. Each generator is a list of disjoint
  /// cycles over points 1..degree, e.g. {{1,2,3},{4,5}}.
  static std::shared_ptr<const FiniteGroup>
  from_cycles(const std::vector<std::vector<std::vector<int>>> &generators,
              std::string name = "");

  static std::shared_ptr<const FiniteGroup>
  from_permutations(const std::vector<Perm> &generators, std::string name = "");

  /// {"perm_gens": [[cycle,...],...]} or {"table": [[...]]}
  static std::shared_ptr<const FiniteGroup> from_json(const nlohmann::json &j,
                                                      std::string name = "");

  int order() const { return order_; }
  const std::string &name() const { return name_; }
  Elem identity() const { return 0; }
  Elem mul(Elem a, Elem b) const { return table_[a * order_ + b]; }
  Elem inv(Elem a) const { return inverse_[a]; }
  Elem pow(Elem a, long k) const;
  Elem conjugate(Elem g, Elem by) const { return mul(mul(inv(by), g), by); }
  int element_order(Elem g) const { return elem_order_[g]; }
  int exponent() const { return exponent_; }
  bool is_abelian() const;

  const ConjClassSet &classes() const { return classes_; }
  int class_of(Elem g) const { return classes_.class_of[g]; }

  /// [s^0, s^1, ..., s^(|s|-1)]
  std::vector<Elem> cyclic_subgroup(Elem s) const;

  /// One representative (smallest index) per right coset H g.
  std::vector<Elem> right_transversal(const std::vector<Elem> &subgroup) const;

  bool is_subgroup(const std::vector<Elem> &subset) const;

  /// Permutation labels when built from permutations (points 0-based).
  const std::vector<Perm> &permutations() const { return perms_; }

  /// Cycle notation with 1-based points, e.g. "(1 2 3)(4 5)"; "()" for the
  /// identity. Falls back to "g<index>" for table groups.
  std::string label(Elem g) const;

  /// Parse an element by index ("3") or cycle notation ("(1 2 3)").
  Elem parse_element(const std::string &text) const;

  /// All subgroups (as sorted element lists), found by closure of subsets of
  /// at most two generators; enough for the preset groups.
  std::vector<std::vector<Elem>> subgroups() const;

private:
  FiniteGroup() = default;
  void finish();

  int order_ = 0;
  std::string name_;
  std::vector<int> table_;
  std::vector<int> inverse_;
  std::vector<int> elem_order_;
  int exponent_ = 1;
  ConjClassSet classes_;
  std::vector<Perm> perms_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

/// A subgroup H <= G with its own standalone FiniteGroup.
struct Subgroup {
  GroupPtr parent;
  GroupPtr group;              // H as a group; element k corresponds to embed[k]
  std::vector<Elem> embed;     // H index -> G index
  std::vector<int> index_of;   // G index -> H index or -1

  static Subgroup make(GroupPtr parent, std::vector<Elem> elements);
  /// <s> with H index i corresponding to s^i.
  static Subgroup cyclic(GroupPtr parent, Elem s);
};

/// Named presets: C1, C3, C5, C7, C9, S3, D5, A4, Q8, F21 (= C7 x| C3).
GroupPtr preset_group(const std::string &name);
std::vector<std::string> preset_names();

} // namespace stickel
