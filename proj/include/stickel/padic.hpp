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

#include <vector>

#include <json.hpp>

#include "stickel/cyclotomic.hpp"

namespace stickel {

/// Smallest primitive root modulo the prime p (cached, write-once).
long smallest_primitive_root(long p);

/// v(lambda) = 1 and v(p) = 1 normalisations of a single valuation.
struct Valuation {
  Rational lambda_val;
  Rational p_val;
  long precision; // lambda-adic precision M the value was read at

  nlohmann::json to_json() const;
};

/**
 * Truncated element of Q_p(zeta_p), written p^shift * sum_{i<p-1} a_i lambda^i
 * with lambda = zeta_p - 1 and integral coordinates a_i known modulo p^digits.
 *
 * Because 1, lambda, ..., lambda^(p-2) have distinct valuations modulo p-1,
 * the valuation of the body is exactly min_i (i + (p-1) v_p(a_i)). Working
 * modulo p^N coordinatewise is the same as working modulo lambda^((p-1)N).
 */
class PadicApprox {
public:
  /// Zero with the given lambda-adic precision.
  PadicApprox(long p, long lambda_precision);

  static PadicApprox from_integer(long p, const Integer &v,
                                  long lambda_precision);
  /// lambda = zeta_p - 1
  static PadicApprox lambda(long p, long lambda_precision);

  long prime() const { return p_; }
  /// Absolute lambda-adic precision: the value is known modulo lambda^M.
  long precision() const { return (p_ - 1) * (shift_ + digits_); }
  long shift() const { return shift_; }
  const std::vector<Integer> &coords() const { return coords_; }

  /// Throws PrecisionExhausted when every stored coordinate vanishes.
  Valuation valuation() const;
  bool is_zero_to_precision() const;

  PadicApprox pow(long e) const;

  PadicApprox &operator+=(const PadicApprox &b);
  PadicApprox &operator-=(const PadicApprox &b);
  PadicApprox &operator*=(const PadicApprox &b);
  PadicApprox operator-() const;
  friend PadicApprox operator+(PadicApprox a, const PadicApprox &b) {
    return a += b;
  }
  friend PadicApprox operator-(PadicApprox a, const PadicApprox &b) {
    return a -= b;
  }
  friend PadicApprox operator*(PadicApprox a, const PadicApprox &b) {
    return a *= b;
  }

  /// Equality modulo the smaller of the two precisions.
  bool congruent(const PadicApprox &b) const;

private:
  PadicApprox(long p, long digits, long shift, std::vector<Integer> coords);
  Integer modulus() const;
  void reduce();
  friend PadicApprox embed_cyclotomic(const CycNum &, long, long);

  long p_;
  long digits_;
  long shift_ = 0;
  std::vector<Integer> coords_;
};

/// Teichmueller lift of a (mod p) to lambda-adic precision M.
PadicApprox teichmueller(long p, long a, long lambda_precision);

/// Ring embedding Q(zeta_{p(p-1)}) -> Q_p(zeta_p) sending zeta_p to 1 + lambda
/// and zeta_{p-1} to the Teichmueller lift of smallest_primitive_root(p).
/// Requires conductor(a) | p(p-1).
PadicApprox embed_cyclotomic(const CycNum &a, long p, long lambda_precision);

/// Default starting precision 4(p-1); doubled on PrecisionExhausted up to
/// 64(p-1). Throws PrecisionExhausted if the cap is hit (a true zero).
Valuation cyclotomic_valuation(const CycNum &a, long p,
                               long lambda_precision = 0);

} // namespace stickel
