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

#include "stickel/padic.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace stickel {

namespace {

void require_prime(long p) {
  if (!is_prime_long(p))
    throw DomainError("padic: " + std::to_string(p) + " is not prime");
}

long digits_for(long p, long lambda_precision) {
  if (lambda_precision < 1)
    throw DomainError("padic: precision must be positive");
  return (lambda_precision + p - 2) / (p - 1);
}

Integer ipow(long p, long e) {
  Integer r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(p),
                static_cast<unsigned long>(e));
  return r;
}

long vp(const Integer &v, long p) {
  Integer t = v;
  long k = 0;
  const Integer pz(p);
  while (t != 0 && mpz_divisible_ui_p(t.get_mpz_t(), p)) {
    mpz_divexact_ui(t.get_mpz_t(), t.get_mpz_t(), p);
    ++k;
  }
  return k;
}

// lambda^(p-1) = sum_j tail[j] lambda^j, tail[j] = -binom(p, j+1).
const std::vector<Integer> &eisenstein_tail(long p) {
  static std::mutex mu;
  static std::map<long, std::vector<Integer>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(p);
  if (it != cache.end())
    return it->second;
  std::vector<Integer> tail(p - 1);
  for (long j = 0; j + 1 < p; ++j) {
    Integer b;
    mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(p),
                 static_cast<unsigned long>(j + 1));
    tail[j] = -b;
  }
  return cache.emplace(p, std::move(tail)).first->second;
}

} // namespace

long smallest_primitive_root(long p) {
  require_prime(p);
  static std::mutex mu;
  static std::map<long, long> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(p); it != cache.end())
    return it->second;
  if (p == 2)
    return cache[p] = 1;
  std::vector<long> factors;
  long m = p - 1;
  for (long d = 2; d * d <= m; ++d) {
    if (m % d == 0) {
      factors.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  }
  if (m > 1)
    factors.push_back(m);
  for (long g = 2; g < p; ++g) {
    bool ok = true;
    for (long q : factors)
      if (powmod_u64(g, (p - 1) / q, p) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return cache[p] = g;
  }
  throw InternalError("no primitive root found");
}

nlohmann::json Valuation::to_json() const {
  return {{"lambda_val", to_fraction_string(lambda_val)},
          {"p_val", to_fraction_string(p_val)},
          {"precision", precision}};
}

PadicApprox::PadicApprox(long p, long lambda_precision) : p_(p) {
  require_prime(p);
  digits_ = digits_for(p, lambda_precision);
  coords_.assign(p - 1, Integer(0));
}

PadicApprox::PadicApprox(long p, long digits, long shift,
                         std::vector<Integer> coords)
    : p_(p), digits_(digits), shift_(shift), coords_(std::move(coords)) {
  reduce();
}

Integer PadicApprox::modulus() const { return ipow(p_, digits_); }

void PadicApprox::reduce() {
  const Integer m = modulus();
  for (auto &c : coords_) {
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
  }
}

PadicApprox PadicApprox::from_integer(long p, const Integer &v,
                                      long lambda_precision) {
  PadicApprox r(p, lambda_precision);
  r.coords_[0] = v;
  r.reduce();
  return r;
}

PadicApprox PadicApprox::lambda(long p, long lambda_precision) {
  PadicApprox r(p, lambda_precision);
  if (p == 2) {
    r.coords_[0] = -2; // zeta_2 - 1
  } else {
    r.coords_[1] = 1;
  }
  r.reduce();
  return r;
}

bool PadicApprox::is_zero_to_precision() const {
  return std::all_of(coords_.begin(), coords_.end(),
                     [](const Integer &c) { return c == 0; });
}

Valuation PadicApprox::valuation() const {
  long best = -1;
  for (long i = 0; i < static_cast<long>(coords_.size()); ++i) {
    if (coords_[i] == 0)
      continue;
    long v = i + (p_ - 1) * vp(coords_[i], p_);
    if (best < 0 || v < best)
      best = v;
  }
  if (best < 0)
    throw PrecisionExhausted(precision());
  const long lam = best + (p_ - 1) * shift_;
  Rational pv(lam, p_ - 1);
  pv.canonicalize();
  return Valuation{Rational(lam), pv, precision()};
}

PadicApprox PadicApprox::operator-() const {
  std::vector<Integer> c = coords_;
  for (auto &x : c)
    x = -x;
  return PadicApprox(p_, digits_, shift_, std::move(c));
}

PadicApprox &PadicApprox::operator+=(const PadicApprox &b) {
  if (b.p_ != p_)
    throw DomainError("padic: prime mismatch");
  const long s = std::min(shift_, b.shift_);
  const long absolute = std::min(shift_ + digits_, b.shift_ + b.digits_);
  const Integer fa = ipow(p_, shift_ - s), fb = ipow(p_, b.shift_ - s);
  for (std::size_t i = 0; i < coords_.size(); ++i)
    coords_[i] = coords_[i] * fa + b.coords_[i] * fb;
  shift_ = s;
  digits_ = std::max(1L, absolute - s);
  reduce();
  return *this;
}

PadicApprox &PadicApprox::operator-=(const PadicApprox &b) {
  return *this += -b;
}

PadicApprox &PadicApprox::operator*=(const PadicApprox &b) {
  if (b.p_ != p_)
    throw DomainError("padic: prime mismatch");
  const long d = p_ - 1;
  std::vector<Integer> prod(2 * d - 1);
  for (long i = 0; i < d; ++i) {
    if (coords_[i] == 0)
      continue;
    for (long j = 0; j < d; ++j)
      mpz_addmul(prod[i + j].get_mpz_t(), coords_[i].get_mpz_t(),
                 b.coords_[j].get_mpz_t());
  }
  const auto &tail = eisenstein_tail(p_);
  for (long k = 2 * d - 2; k >= d; --k) {
    if (prod[k] == 0)
      continue;
    const Integer c = prod[k];
    for (long j = 0; j < d; ++j)
      mpz_addmul(prod[k - d + j].get_mpz_t(), c.get_mpz_t(),
                 tail[j].get_mpz_t());
    prod[k] = 0;
  }
  prod.resize(d);
  coords_ = std::move(prod);
  shift_ += b.shift_;
  digits_ = std::min(digits_, b.digits_);
  reduce();
  return *this;
}

PadicApprox PadicApprox::pow(long e) const {
  if (e < 0)
    throw DomainError("padic: negative powers are not supported");
  PadicApprox r = from_integer(p_, 1, (p_ - 1) * digits_);
  PadicApprox base = *this;
  while (e) {
    if (e & 1)
      r *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return r;
}

bool PadicApprox::congruent(const PadicApprox &b) const {
  PadicApprox d = *this - b;
  return d.is_zero_to_precision();
}

PadicApprox teichmueller(long p, long a, long lambda_precision) {
  require_prime(p);
  if (mod_floor(a, p) == 0)
    throw DomainError("teichmueller: " + std::to_string(a) +
                      " is divisible by " + std::to_string(p));
  const long N = digits_for(p, lambda_precision);
  const Integer m = ipow(p, N);
  Integer x = mod_floor(a, p);
  const Integer pz(p);
  for (long it = 0; it <= N; ++it)
    mpz_powm(x.get_mpz_t(), x.get_mpz_t(), pz.get_mpz_t(), m.get_mpz_t());
  return PadicApprox::from_integer(p, x, lambda_precision);
}

PadicApprox embed_cyclotomic(const CycNum &a, long p, long lambda_precision) {
  require_prime(p);
  const long n0 = p * (p - 1);
  const long n = a.conductor();
  if (n0 % n != 0)
    throw DomainError("embed_cyclotomic: conductor " + std::to_string(n) +
                      " does not divide " + std::to_string(n0));
  const long N = digits_for(p, lambda_precision);
  const long M = N * (p - 1);

  // split the denominator into p^e * u
  Integer den = a.denominator();
  long e = 0;
  while (mpz_divisible_ui_p(den.get_mpz_t(), p)) {
    mpz_divexact_ui(den.get_mpz_t(), den.get_mpz_t(), p);
    ++e;
  }
  // body precision must cover the shift-free numerator
  const Integer modulus = ipow(p, N);
  Integer uinv;
  if (mpz_invert(uinv.get_mpz_t(), den.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw InternalError("embed_cyclotomic: unit part not invertible");

  // images of zeta_p^j, j = 0..p-1
  std::vector<PadicApprox> zp;
  zp.reserve(p);
  zp.push_back(PadicApprox::from_integer(p, 1, M));
  const PadicApprox one_plus_lambda =
      PadicApprox::from_integer(p, 1, M) + PadicApprox::lambda(p, M);
  for (long j = 1; j < p; ++j)
    zp.push_back(zp.back() * one_plus_lambda);
  const PadicApprox T = teichmueller(p, smallest_primitive_root(p), M);
  const Integer t = T.coords()[0];

  // zeta_n^i = zeta_{n0}^{k i};  zeta_{n0} -> zeta_p^{-1} * T
  const long k = n0 / n;
  std::vector<Integer> acc(p - 1);
  const auto &num = a.numerators();
  for (std::size_t i = 0; i < num.size(); ++i) {
    if (num[i] == 0)
      continue;
    const long ex = k * static_cast<long>(i);
    const long jp = mod_floor(-ex, p);
    const long jt = mod_floor(ex, p - 1);
    Integer tp;
    mpz_powm_ui(tp.get_mpz_t(), t.get_mpz_t(), static_cast<unsigned long>(jt),
                modulus.get_mpz_t());
    Integer scale = num[i] * tp;
    const auto &img = zp[jp].coords();
    for (long c = 0; c < p - 1; ++c)
      mpz_addmul(acc[c].get_mpz_t(), scale.get_mpz_t(), img[c].get_mpz_t());
  }
  for (auto &c : acc)
    c *= uinv;
  return PadicApprox(p, N, -e, std::move(acc));
}

Valuation cyclotomic_valuation(const CycNum &a, long p, long lambda_precision) {
  require_prime(p);
  long M = lambda_precision > 0 ? lambda_precision : 4 * (p - 1);
  const long cap = 64 * (p - 1);
  while (true) {
    try {
      return embed_cyclotomic(a, p, M).valuation();
    } catch (const PrecisionExhausted &) {
      if (M >= cap)
        throw;
      M = std::min(2 * M, cap);
    }
  }
}

} // namespace stickel
