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

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <string>

#include "stickel/error.hpp"

namespace stickel {

using Integer = mpz_class;
using Rational = mpq_class;

// "p/q" with q >= 1 always present, e.g. "3/1", "-2/5".
inline std::string to_fraction_string(const Rational &r) {
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

// Accepts "p/q" or a bare integer "p".
inline Rational parse_fraction(const std::string &s) {
  Rational r;
  if (s.empty() || r.set_str(s, 10) != 0)
    throw DomainError("malformed fraction string: '" + s + "'");
  if (r.get_den() == 0)
    throw DomainError("zero denominator in fraction string: '" + s + "'");
  r.canonicalize();
  return r;
}

inline Rational make_rational(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline long mod_floor(long a, long m) {
  long r = a % m;
  return r < 0 ? r + m : r;
}

// a^e mod m for m < 2^32.
inline std::uint64_t powmod_u64(std::uint64_t a, std::uint64_t e,
                                std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1)
      r = r * a % m;
    a = a * a % m;
    e >>= 1;
  }
  return r;
}

// Inverse of a modulo m (gcd(a, m) = 1 assumed), result in [0, m).
inline long inverse_mod(long a, long m) {
  long g = m, x = 0, x1 = 1, r = mod_floor(a, m);
  while (r != 0) {
    long q = g / r;
    long t = g - q * r;
    g = r;
    r = t;
    t = x - q * x1;
    x = x1;
    x1 = t;
  }
  if (g != 1)
    throw DomainError("inverse_mod: " + std::to_string(a) +
                      " is not invertible modulo " + std::to_string(m));
  return mod_floor(x, m);
}

inline bool is_prime_long(long n) {
  if (n < 2)
    return false;
  for (long d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

inline long euler_phi(long n) {
  long r = n;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      while (n % d == 0)
        n /= d;
      r -= r / d;
    }
  }
  if (n > 1)
    r -= r / n;
  return r;
}

} // namespace stickel
