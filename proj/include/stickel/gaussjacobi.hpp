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

#include <string>
#include <vector>

#include <json.hpp>

#include "stickel/cyclotomic.hpp"
#include "stickel/report.hpp"

namespace stickel {

constexpr long kMaxGaussPrime = 101;

/// Discrete logarithms in F_p^x to the base smallest_primitive_root(p).
class FpContext {
public:
  explicit FpContext(long p); // DomainError unless p prime, p <= 101

  long prime() const { return p_; }
  long generator() const { return g_; }
  long log(long x) const;     // x != 0 mod p
  long exp(long k) const;     // g^k mod p

private:
  long p_, g_;
  std::vector<long> log_, exp_;
};

/**
 * Multiplicative character of F_p^x with chi(g) = zeta_d^a, g the smallest
 * primitive root. Stored reduced: d is the exact order and gcd(a, d) = 1
 * (d = 1, a = 0 for the trivial character).
 */
struct MultChar {
  long p = 2;
  long order = 1;
  long a = 0;

  /// d must divide p - 1.
  static MultChar make(long p, long d, long a);
  /// Every character of F_p^x, as make(p, p-1, a) for a = 0..p-2.
  static std::vector<MultChar> all(long p);

  bool is_trivial() const { return order == 1; }
  /// Exponent k with chi(x) = zeta_order^k, 0 <= k < order.
  long exponent_at(const FpContext &ctx, long x) const;
  /// chi(-1) = +-1.
  long sign_at_minus_one() const;

  MultChar pow(long k) const;
  MultChar conj() const { return pow(-1); }
  friend MultChar operator*(const MultChar &x, const MultChar &y);
  friend bool operator==(const MultChar &x, const MultChar &y) = default;

  std::string to_string() const; // "chi[3/5]" meaning chi(g) = zeta_5^3
  nlohmann::json to_json() const;
};

/// tau(chi) = sum_{x in F_p^x} chi(x)^-1 zeta_p^x; tau(trivial) = 1.
CycNum gauss_sum(const MultChar &chi);

/// J(chi1, chi2) = sum_{x != 0,1} chi1(x)^-1 chi2(1-x)^-1. Both characters
/// and their product must be nontrivial (DomainError otherwise).
CycNum jacobi_sum(const MultChar &chi1, const MultChar &chi2);

/// J*(chi) = tau(chi^2) tau(chi)^-2, evaluated as tau(chi^2) tau(chi^-1)^2 / p^2
/// for nontrivial chi; 1 for the trivial character.
CycNum j_star(const MultChar &chi);

/// Absolute norm of J is +-p^k for some integer k (k may be negative).
Report verify_ell_unit(const CycNum &J, long p);

/// All Gauss and Jacobi identities over F_p: conjugate products, the
/// Jacobi relation and integrality on all admissible pairs, J* norms,
/// J* against 1/J(chi, chi), and Galois stability of J*.
Report verify_gauss_identities(long p);

/// The identities of verify_gauss_identities restricted to one character
/// (pairs are formed with chi itself).
Report verify_gauss_character(const MultChar &chi);

/// Values for one character, as emitted by the gauss subcommand.
nlohmann::json gauss_values(const MultChar &chi);

} // namespace stickel
