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

#include <map>
#include <string>

#include <json.hpp>

#include "stickel/characters.hpp"
#include "stickel/cyclotomic.hpp"
#include "stickel/report.hpp"

namespace stickel {

/// Residue size q of the local field and the denominator bound m of the
/// tame extension L(zeta_m, w^(1/m)); gcd(m, q) = 1.
struct LocalFieldSpec {
  long q = 2;
  long m = 1;

  void validate() const;
};

/**
 * Finite sum  sum_a c_a * w^a  with rational exponents a and cyclotomic
 * coefficients, w a formal uniformiser. The relation between w and p is
 * never imposed: exponents add under multiplication and nothing else.
 */
class TameElement {
public:
  TameElement() = default;
  TameElement(const CycNum &c); // constant term
  TameElement(long c) : TameElement(CycNum(c)) {}

  static TameElement monomial(const Rational &exponent, const CycNum &c = 1);

  const std::map<Rational, CycNum> &terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  /// Minimal exponent with nonzero coefficient. DomainError on zero.
  const Rational &valuation() const;
  const CycNum &leading_coeff() const;
  CycNum coeff(const Rational &exponent) const;

  /// Integer powers; negative powers need an invertible monomial.
  TameElement pow(long e) const;
  TameElement inverse() const;

  /// Applies zeta -> zeta^k to every coefficient.
  TameElement galois_apply(long k) const;

  TameElement &operator+=(const TameElement &b);
  TameElement &operator-=(const TameElement &b);
  TameElement &operator*=(const TameElement &b);
  friend TameElement operator+(TameElement a, const TameElement &b) {
    return a += b;
  }
  friend TameElement operator-(TameElement a, const TameElement &b) {
    return a -= b;
  }
  friend TameElement operator*(TameElement a, const TameElement &b) {
    return a *= b;
  }
  friend bool operator==(const TameElement &a, const TameElement &b);

  /// e.g. "1/3 w^0 + 1/3 w^1/3"; "0" for zero.
  std::string to_string() const;
  nlohmann::json to_json() const;

private:
  void add_term(const Rational &e, const CycNum &c);
  std::map<Rational, CycNum> terms_;
};

/// sigma: w^(a/m) -> zeta_m^a w^(a/m), roots of unity fixed.
TameElement sigma_action(const TameElement &x, const LocalFieldSpec &spec,
                         long power = 1);
/// phi: zeta -> zeta^q on coefficients, w^(1/m) fixed.
TameElement frobenius_action(const TameElement &x, const LocalFieldSpec &spec);
TameElement frobenius_inverse(const TameElement &x, const LocalFieldSpec &spec);

/// Element of L^c G: sum over group elements with TameElement coefficients.
class GroupAlgebraElement {
public:
  explicit GroupAlgebraElement(GroupPtr g) : group_(std::move(g)) {}

  static GroupAlgebraElement unit(GroupPtr g);

  const FiniteGroup &group() const { return *group_; }
  const GroupPtr &group_ptr() const { return group_; }
  const std::map<Elem, TameElement> &terms() const { return terms_; }
  TameElement coeff(Elem g) const;
  void add(Elem g, const TameElement &c);

  /// Coefficientwise map.
  template <class F> GroupAlgebraElement map_coeffs(F f) const {
    GroupAlgebraElement r(group_);
    for (const auto &[g, c] : terms_)
      r.add(g, f(c));
    return r;
  }

  GroupAlgebraElement operator*(const GroupAlgebraElement &b) const;
  GroupAlgebraElement times_element(Elem g) const;    // x * g
  GroupAlgebraElement conjugated_by(Elem t) const;    // t^-1 x t
  friend bool operator==(const GroupAlgebraElement &a,
                         const GroupAlgebraElement &b);

  nlohmann::json to_json() const;

private:
  GroupPtr group_;
  std::map<Elem, TameElement> terms_;
};

/// beta_g = (1/|g|) sum_i w^(i/|g|)
TameElement beta(long order);
/// beta*_g = (1/|g|) sum_i w^((i + (1-|g|)/2)/|g|), |g| odd
TameElement beta_star(long order);

/// Resolvend sum_i sigma^i(beta_g) g^-i. Needs gcd(|g|, q) = 1, |g| | m.
GroupAlgebraElement phi_g(const GroupPtr &g, Elem elem,
                          const LocalFieldSpec &spec);
/// Starred resolvend built from beta*_g; |g| odd.
GroupAlgebraElement phi_star_g(const GroupPtr &g, Elem elem,
                               const LocalFieldSpec &spec);

/// Det(x)(chi) for x supported on a cyclic subgroup <s>:
///   prod_j (sum_h x_h xi^j(h))^{(chi|<s>, xi^j)}.
/// DomainError on non-cyclic support, non-integral multiplicities, or a
/// non-invertible eigen-factor raised to a negative power.
TameElement det_resolvend(const GroupAlgebraElement &x, const VirtualChar &chi);

/// Smallest-order element s with support(x) inside <s>, or -1.
Elem cyclic_support_generator(const GroupAlgebraElement &x);

/// Exhibits w_M^n O_M = O_L H alpha for H = C_e fixed by twisted sums, a
/// resolvend determinant per character, and a change-of-basis determinant
/// that must be a unit at the instance prime p (e | p - 1).
Report verify_free_generator(long e, long n, long p);

/// Factorisation checks for a tame cocycle sigma -> s, phi -> t with
/// t s t^-1 = s^q and |s| odd; the unramified factor is the unit resolvend.
Report verify_factorization(const TablePtr &g_table, Elem s, Elem t, long q);

} // namespace stickel
