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
#include <string>
#include <vector>

#include <json.hpp>

#include "stickel/cyclotomic.hpp"
#include "stickel/groups.hpp"
#include "stickel/report.hpp"

namespace stickel {

class CharTable;
using TablePtr = std::shared_ptr<const CharTable>;

/**
 * Exact table of irreducible characters of a finite group.
 *
 * Values live in Q(zeta_e), e = exponent of the group. Rows of tables built
 * by irr_table() are sorted by degree, the trivial character first, then by
 * the lexicographic order of their canonical values, so that every
 * downstream report is reproducible. Construction certifies both
 * orthogonality relations and sum of squared degrees = |G|.
 */
class CharTable {
public:
  const FiniteGroup &group() const { return *group_; }
  const GroupPtr &group_ptr() const { return group_; }
  std::size_t size() const { return values_.size(); }
  long conductor() const { return conductor_; }
  long degree(std::size_t chi) const { return degrees_[chi]; }
  const std::vector<long> &degrees() const { return degrees_; }

  const CycNum &value(std::size_t chi, int cls) const {
    return values_[chi][cls];
  }
  const std::vector<CycNum> &row(std::size_t chi) const {
    return values_[chi];
  }
  const CycNum &value_at(std::size_t chi, Elem g) const {
    return values_[chi][group_->class_of(g)];
  }

  /// Index of the trivial character (always 0 for sorted tables).
  std::size_t trivial_index() const { return 0; }

  /// Throws InternalError when an orthogonality relation fails.
  void certify() const;

  nlohmann::json to_json() const;

  friend TablePtr irr_table(GroupPtr g);
  friend TablePtr cyclic_table(GroupPtr h);

private:
  CharTable(GroupPtr g, long conductor, std::vector<std::vector<CycNum>> rows);

  GroupPtr group_;
  long conductor_;
  std::vector<std::vector<CycNum>> values_;
  std::vector<long> degrees_;
};

/// Irreducible characters by the modular (Dixon) method: simultaneous
/// eigenvectors of the class matrices over F_P, P = 1 mod exponent, then an
/// exact lift of each value to Q(zeta_e).
TablePtr irr_table(GroupPtr g);

/// Table of a cyclic group h whose element i is gen^i (as produced by
/// Subgroup::cyclic). Row j is xi^j with xi(gen^i) = zeta_|h|^i.
TablePtr cyclic_table(GroupPtr h);

/**
 * Rational combination of irreducible characters. Integer coefficients give
 * R_G, rational ones give Q R_G.
 */
class VirtualChar {
public:
  VirtualChar() = default;
  explicit VirtualChar(TablePtr table);
  VirtualChar(TablePtr table, std::vector<Rational> coeffs);

  static VirtualChar irreducible(TablePtr table, std::size_t chi);
  static VirtualChar trivial(TablePtr table) {
    return irreducible(table, table->trivial_index());
  }

  const TablePtr &table() const { return table_; }
  const std::vector<Rational> &coeffs() const { return coeffs_; }
  const Rational &coeff(std::size_t chi) const { return coeffs_[chi]; }

  /// Values per conjugacy class.
  std::vector<CycNum> class_values() const;
  CycNum value_at(Elem g) const;
  bool is_integral() const;
  bool is_zero() const;

  VirtualChar &operator+=(const VirtualChar &b);
  VirtualChar &operator-=(const VirtualChar &b);
  VirtualChar &operator*=(const Rational &c);
  friend VirtualChar operator+(VirtualChar a, const VirtualChar &b) {
    return a += b;
  }
  friend VirtualChar operator-(VirtualChar a, const VirtualChar &b) {
    return a -= b;
  }
  friend VirtualChar operator*(const Rational &c, VirtualChar a) {
    return a *= c;
  }
  friend VirtualChar operator-(VirtualChar a) {
    return a *= Rational(-1);
  }
  friend bool operator==(const VirtualChar &a, const VirtualChar &b);

  /// "1/3*x1 + 2/3*x2" on irreducible indices.
  std::string to_string() const;
  nlohmann::json to_json() const;

private:
  void require_same(const VirtualChar &b) const;
  TablePtr table_;
  std::vector<Rational> coeffs_;
};

/// Decompose a class function (values per class) into irreducibles. Throws
/// DomainError if some coefficient is not rational.
VirtualChar decompose(const TablePtr &table, const std::vector<CycNum> &values);

/// (1/|G|) sum_g a(g) conj(b(g)), computed from values.
Rational inner_product(const VirtualChar &a, const VirtualChar &b);

/// Pointwise product, re-decomposed.
VirtualChar product(const VirtualChar &a, const VirtualChar &b);

/// Restriction to h; h_table must be a table of h.group.
VirtualChar restrict_to(const VirtualChar &chi, const Subgroup &h,
                        const TablePtr &h_table);

/// Induced character by the value formula
/// Ind(xi)(g) = (1/|H|) sum_{x in G, x g x^-1 in H} xi(x g x^-1).
VirtualChar induce(const VirtualChar &xi, const Subgroup &h,
                   const TablePtr &g_table);

/// psi_k(chi)(g) = chi(g^k).
VirtualChar adams(const VirtualChar &chi, long k);

/// (omega o chi)(g) = galois_apply(chi(g), k); k coprime to the exponent.
VirtualChar galois_twist(const VirtualChar &chi, long k);

/// Row and column orthogonality, sum of squared degrees, Frobenius
/// reciprocity over every subgroup and Adams composition psi_a psi_b =
/// psi_ab on a fixed sample of virtual characters, as explicit checks.
Report verify_character_table(const TablePtr &table);

} // namespace stickel
