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

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "stickel/rational.hpp"

namespace stickel {

/// Coefficients of the n-th cyclotomic polynomial, constant term first.
/// Results are cached process-wide (write-once per n).
const std::vector<Integer> &cyclotomic_polynomial(long n);

/**
 * An exact element of the cyclotomic field Q(zeta_n).
 *
 * Stored on the power basis 1, z, ..., z^(phi(n)-1) of Q(zeta_n), with
 * z = zeta_n = exp(2 pi i / n), as an integer numerator vector over a single
 * positive denominator. The representation is canonical: the numerator has
 * no trailing zeros, and gcd(content, den) = 1. The roots of unity form a
 * compatible system: zeta_{kn}^k = zeta_n.
 *
 * Binary operations embed both operands into Q(zeta_lcm); the conductor of
 * the result is that lcm and is never minimised.
 */
class CycNum {
public:
  CycNum() = default; // zero in Q(zeta_1)
  CycNum(const Rational &q, long conductor = 1);
  CycNum(long v) : CycNum(Rational(v)) {}

  /// zeta_n^power. Throws DomainError for n < 1.
  static CycNum zeta(long n, long power = 1);

  /// Build from exponent/coefficient pairs sum c_i zeta_n^i (any i, reduced).
  static CycNum from_terms(long n,
                           const std::vector<std::pair<long, Rational>> &terms);

  /// Build from integer counts on exponents 0..n-1 of zeta_n, all divided by
  /// den. The fast path used by Gauss-sum style accumulations.
  static CycNum from_exponent_counts(long n, const std::vector<Integer> &counts,
                                     const Integer &den = 1);

  long conductor() const { return n_; }
  bool is_zero() const { return num_.empty(); }

  /// Numerator coefficient on zeta_n^i (0 <= i < phi(n)), over denominator().
  const std::vector<Integer> &numerators() const { return num_; }
  const Integer &denominator() const { return den_; }
  Rational coeff(long i) const;

  /// Canonical representative in Q(zeta_m) for m a multiple of conductor().
  CycNum embed(long m) const;

  /// zeta -> zeta^k. Requires gcd(k, conductor) = 1.
  CycNum galois_apply(long k) const;
  CycNum conj() const { return galois_apply(-1); }

  /// The rational value if this lies in Q.
  std::optional<Rational> as_rational() const;

  CycNum inverse() const; // throws DivisionByZero
  CycNum pow(long e) const;

  /// Absolute norm N_{Q(zeta_n)/Q}, computed as Res(Phi_n, a).
  Rational norm() const;

  CycNum &operator+=(const CycNum &b);
  CycNum &operator-=(const CycNum &b);
  CycNum &operator*=(const CycNum &b);
  CycNum &operator/=(const CycNum &b);
  CycNum operator-() const;

  friend CycNum operator+(CycNum a, const CycNum &b) { return a += b; }
  friend CycNum operator-(CycNum a, const CycNum &b) { return a -= b; }
  friend CycNum operator*(CycNum a, const CycNum &b) { return a *= b; }
  friend CycNum operator/(CycNum a, const CycNum &b) { return a /= b; }

  /// Field equality (compares in the common conductor).
  friend bool operator==(const CycNum &a, const CycNum &b);

  /// Total order on canonical forms inside a fixed conductor m; used only for
  /// reproducible sorting.
  static std::strong_ordering compare_in(long m, const CycNum &a,
                                         const CycNum &b);

  /// Numerical value, for diagnostics and test oracles only.
  std::pair<double, double> to_complex() const;

  std::string to_string() const;

  /// {"n": n, "coeffs": [[i, "p/q"], ...]} with nonzero coefficients only.
  nlohmann::json to_json() const;
  static CycNum from_json(const nlohmann::json &j);

private:
  CycNum(long n, std::vector<Integer> num, Integer den);
  void canonicalize();
  static CycNum reduce_poly(long n, std::vector<Integer> poly, Integer den);

  long n_ = 1;
  std::vector<Integer> num_;
  Integer den_ = 1;
};

/// Determinant of a square matrix over cyclotomic fields (Gaussian
/// elimination with exact pivoting on nonzero entries).
CycNum determinant(std::vector<std::vector<CycNum>> m);

} // namespace stickel
