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

#include "stickel/cyclotomic.hpp"

#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <sstream>

namespace stickel {

namespace {

struct CycloPoly {
  std::vector<Integer> coeffs; // length phi+1, monic
  // nonzero (index, coefficient) pairs below the leading term
  std::vector<std::pair<long, Integer>> tail;
};

long radical(long n) {
  long r = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      r *= d;
      while (n % d == 0)
        n /= d;
    }
  }
  return n > 1 ? r * n : r;
}

int mobius_squarefree(long n) {
  int s = 1;
  for (long d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      n /= d;
      if (n % d == 0)
        return 0;
      s = -s;
    }
  }
  if (n > 1)
    s = -s;
  return s;
}

std::vector<Integer> compute_cyclotomic(long n) {
  long r = radical(n);
  std::vector<long> mul, div;
  for (long d = 1; d <= r; ++d) {
    if (r % d != 0)
      continue;
    int mu = mobius_squarefree(r / d);
    if (mu == 1)
      mul.push_back(d);
    else if (mu == -1)
      div.push_back(d);
  }
  std::vector<Integer> p{Integer(1)};
  for (long d : mul) { // p *= (x^d - 1)
    std::vector<Integer> q(p.size() + d);
    for (std::size_t i = 0; i < p.size(); ++i) {
      q[i + d] += p[i];
      q[i] -= p[i];
    }
    p = std::move(q);
  }
  for (long d : div) { // p /= (x^d - 1), exact
    std::size_t qn = p.size() - d;
    std::vector<Integer> q(qn);
    for (std::size_t i = 0; i < qn; ++i) {
      Integer prev = (static_cast<long>(i) >= d) ? q[i - d] : Integer(0);
      q[i] = prev - p[i];
    }
    p = std::move(q);
  }
  long k = n / r;
  if (k == 1)
    return p;
  std::vector<Integer> out((p.size() - 1) * k + 1);
  for (std::size_t i = 0; i < p.size(); ++i)
    out[i * k] = p[i];
  return out;
}

const CycloPoly &cyclo(long n) {
  static std::mutex mu;
  static std::map<long, std::unique_ptr<CycloPoly>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end())
    return *it->second;
  auto cp = std::make_unique<CycloPoly>();
  cp->coeffs = compute_cyclotomic(n);
  for (std::size_t i = 0; i + 1 < cp->coeffs.size(); ++i)
    if (cp->coeffs[i] != 0)
      cp->tail.emplace_back(static_cast<long>(i), cp->coeffs[i]);
  auto &ref = *cp;
  cache.emplace(n, std::move(cp));
  return ref;
}

void trim(std::vector<Integer> &v) {
  while (!v.empty() && v.back() == 0)
    v.pop_back();
}

// Polynomials over Q, constant term first, no trailing zeros.
using QPoly = std::vector<Rational>;

void trimq(QPoly &v) {
  while (!v.empty() && v.back() == 0)
    v.pop_back();
}

// a = q*b + r
void divmod(const QPoly &a, const QPoly &b, QPoly &q, QPoly &r) {
  r = a;
  q.assign(a.size() >= b.size() ? a.size() - b.size() + 1 : 0, Rational(0));
  const Rational &lb = b.back();
  while (r.size() >= b.size() && !r.empty()) {
    std::size_t shift = r.size() - b.size();
    Rational c = r.back() / lb;
    q[shift] = c;
    for (std::size_t j = 0; j < b.size(); ++j)
      r[shift + j] -= c * b[j];
    r.pop_back();
    trimq(r);
  }
  trimq(q);
}

QPoly polymul(const QPoly &a, const QPoly &b) {
  if (a.empty() || b.empty())
    return {};
  QPoly c(a.size() + b.size() - 1, Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      c[i + j] += a[i] * b[j];
  trimq(c);
  return c;
}

QPoly polysub(const QPoly &a, const QPoly &b) {
  QPoly c(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    c[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i)
    c[i] -= b[i];
  trimq(c);
  return c;
}

// ---- multi-modular resultant -------------------------------------------

using u64 = std::uint64_t;

long resultant_mod(std::vector<u64> f, std::vector<u64> g, u64 P) {
  auto tr = [](std::vector<u64> &v) {
    while (!v.empty() && v.back() == 0)
      v.pop_back();
  };
  tr(f);
  tr(g);
  u64 res = 1;
  while (true) {
    if (g.empty())
      return 0;
    long m = static_cast<long>(f.size()) - 1;
    long n = static_cast<long>(g.size()) - 1;
    if (n == 0)
      return static_cast<long>(res * powmod_u64(g[0], m, P) % P);
    // r = f mod g
    std::vector<u64> r = f;
    u64 inv_lg = powmod_u64(g.back(), P - 2, P);
    while (r.size() >= g.size()) {
      u64 c = r.back() * inv_lg % P;
      std::size_t shift = r.size() - g.size();
      for (std::size_t j = 0; j < g.size(); ++j)
        r[shift + j] = (r[shift + j] + P - c * g[j] % P) % P;
      r.pop_back();
      tr(r);
    }
    if (r.empty())
      return 0;
    long k = static_cast<long>(r.size()) - 1;
    if ((m * n) % 2 == 1)
      res = (P - res) % P;
    res = res * powmod_u64(g.back(), m - k, P) % P;
    f = std::move(g);
    g = std::move(r);
  }
}

bool is_prime_u64(u64 n) {
  if (n < 2)
    return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0)
      return false;
  return true;
}

double log2_l2norm(const std::vector<Integer> &v) {
  // log2 sqrt(sum v_i^2)
  Integer s = 0;
  for (const auto &x : v)
    s += x * x;
  if (s == 0)
    return 0.0;
  long e = 0;
  double d = mpz_get_d_2exp(&e, s.get_mpz_t());
  return 0.5 * (std::log2(d) + static_cast<double>(e));
}

Integer integer_resultant(const std::vector<Integer> &f,
                          const std::vector<Integer> &g) {
  long m = static_cast<long>(f.size()) - 1;
  long n = static_cast<long>(g.size()) - 1;
  double bits = n * log2_l2norm(f) + m * log2_l2norm(g) + 4.0;
  Integer modulus = 1, x = 0;
  u64 P = (u64(1) << 31) - 1;
  Integer bound = 1;
  bound <<= static_cast<unsigned long>(std::ceil(bits)) + 1;
  while (modulus <= bound) {
    while (!is_prime_u64(P))
      --P;
    Integer lg = g.back() % Integer(static_cast<unsigned long>(P));
    if (lg == 0) {
      --P;
      continue;
    }
    std::vector<u64> fm(f.size()), gm(g.size());
    Integer Pz(static_cast<unsigned long>(P));
    for (std::size_t i = 0; i < f.size(); ++i) {
      Integer t = f[i] % Pz;
      if (t < 0)
        t += Pz;
      fm[i] = t.get_ui();
    }
    for (std::size_t i = 0; i < g.size(); ++i) {
      Integer t = g[i] % Pz;
      if (t < 0)
        t += Pz;
      gm[i] = t.get_ui();
    }
    u64 r = static_cast<u64>(resultant_mod(fm, gm, P));
    // Garner step: x += modulus * ((r - x) * modulus^-1 mod P)
    Integer xm = x % Pz;
    if (xm < 0)
      xm += Pz;
    Integer mm = modulus % Pz;
    u64 inv = powmod_u64(mm.get_ui(), P - 2, P);
    u64 diff = (r + P - xm.get_ui() % P) % P;
    u64 t = diff * inv % P;
    x += modulus * Integer(static_cast<unsigned long>(t));
    modulus *= Pz;
    --P;
  }
  if (x * 2 > modulus)
    x -= modulus;
  return x;
}

} // namespace

const std::vector<Integer> &cyclotomic_polynomial(long n) {
  if (n < 1)
    throw DomainError("cyclotomic_polynomial: n must be >= 1");
  return cyclo(n).coeffs;
}

CycNum::CycNum(long n, std::vector<Integer> num, Integer den)
    : n_(n), num_(std::move(num)), den_(std::move(den)) {
  canonicalize();
}

CycNum::CycNum(const Rational &q, long conductor) : n_(conductor) {
  if (conductor < 1)
    throw DomainError("CycNum: conductor must be >= 1");
  if (q != 0) {
    num_.push_back(q.get_num());
    den_ = q.get_den();
  }
}

void CycNum::canonicalize() {
  trim(num_);
  if (num_.empty()) {
    den_ = 1;
    return;
  }
  if (den_ < 0) {
    den_ = -den_;
    for (auto &c : num_)
      c = -c;
  }
  Integer g = den_;
  for (const auto &c : num_) {
    if (g == 1)
      break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  }
  if (g != 1) {
    for (auto &c : num_)
      mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den_.get_mpz_t(), den_.get_mpz_t(), g.get_mpz_t());
  }
}

CycNum CycNum::reduce_poly(long n, std::vector<Integer> poly, Integer den) {
  const CycloPoly &cp = cyclo(n);
  const long phi = static_cast<long>(cp.coeffs.size()) - 1;
  for (long i = static_cast<long>(poly.size()) - 1; i >= phi; --i) {
    if (poly[i] == 0)
      continue;
    const Integer c = poly[i];
    const long base = i - phi;
    for (const auto &[j, a] : cp.tail)
      mpz_submul(poly[base + j].get_mpz_t(), c.get_mpz_t(), a.get_mpz_t());
    poly[i] = 0;
  }
  if (static_cast<long>(poly.size()) > phi)
    poly.resize(phi);
  return CycNum(n, std::move(poly), std::move(den));
}

CycNum CycNum::zeta(long n, long power) {
  if (n < 1)
    throw DomainError("zeta: n must be >= 1");
  std::vector<Integer> poly(n);
  poly[mod_floor(power, n)] = 1;
  return reduce_poly(n, std::move(poly), 1);
}

CycNum
CycNum::from_terms(long n,
                   const std::vector<std::pair<long, Rational>> &terms) {
  if (n < 1)
    throw DomainError("CycNum: conductor must be >= 1");
  Integer den = 1;
  for (const auto &t : terms)
    mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.second.get_den_mpz_t());
  std::vector<Integer> poly(n);
  for (const auto &[i, c] : terms) {
    Integer scaled = c.get_num() * (den / c.get_den());
    poly[mod_floor(i, n)] += scaled;
  }
  return reduce_poly(n, std::move(poly), den);
}

CycNum CycNum::from_exponent_counts(long n, const std::vector<Integer> &counts,
                                    const Integer &den) {
  if (n < 1)
    throw DomainError("CycNum: conductor must be >= 1");
  std::vector<Integer> poly(n);
  for (std::size_t i = 0; i < counts.size(); ++i)
    poly[i % n] += counts[i];
  return reduce_poly(n, std::move(poly), den);
}

Rational CycNum::coeff(long i) const {
  if (i < 0 || i >= static_cast<long>(num_.size()))
    return Rational(0);
  Rational r(num_[i], den_);
  r.canonicalize();
  return r;
}

CycNum CycNum::embed(long m) const {
  if (m < 1 || m % n_ != 0)
    throw DomainError("embed: target conductor " + std::to_string(m) +
                      " is not a multiple of " + std::to_string(n_));
  if (m == n_)
    return *this;
  const long k = m / n_;
  if (num_.empty())
    return CycNum(m, {}, 1);
  std::vector<Integer> poly((num_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < num_.size(); ++i)
    poly[i * k] = num_[i];
  return reduce_poly(m, std::move(poly), den_);
}

CycNum CycNum::galois_apply(long k) const {
  if (std::gcd(mod_floor(k, n_), n_) != 1 && n_ != 1)
    throw DomainError("galois_apply: " + std::to_string(k) +
                      " is not coprime to conductor " + std::to_string(n_));
  const long kk = mod_floor(k, n_);
  if (kk == 1 % n_ || num_.size() <= 1)
    return *this;
  std::vector<Integer> poly(n_);
  for (std::size_t i = 0; i < num_.size(); ++i)
    poly[(static_cast<long>(i) * kk) % n_] += num_[i];
  return reduce_poly(n_, std::move(poly), den_);
}

std::optional<Rational> CycNum::as_rational() const {
  if (num_.empty())
    return Rational(0);
  if (num_.size() == 1) {
    Rational r(num_[0], den_);
    r.canonicalize();
    return r;
  }
  return std::nullopt;
}

CycNum CycNum::inverse() const {
  if (is_zero())
    throw DivisionByZero();
  if (num_.size() == 1) {
    Rational r(den_, num_[0]);
    r.canonicalize();
    return CycNum(r, n_);
  }
  const auto &phi_poly = cyclo(n_).coeffs;
  QPoly r0(phi_poly.begin(), phi_poly.end());
  QPoly r1(num_.begin(), num_.end());
  QPoly s0, s1{Rational(1)};
  while (r1.size() > 1) {
    QPoly q, r;
    divmod(r0, r1, q, r);
    if (r.empty())
      throw InternalError("inverse: element is a zero divisor");
    QPoly s2 = polysub(s0, polymul(q, s1));
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    // keep r1 monic to contain coefficient growth
    Rational lc = r1.back();
    for (auto &c : r1)
      c /= lc;
    for (auto &c : s1)
      c /= lc;
  }
  // s1 * a == r1[0] (mod Phi_n), inverse of num/den is den * s1 / r1[0]
  std::vector<std::pair<long, Rational>> terms;
  Rational scale = Rational(den_) / r1[0];
  for (std::size_t i = 0; i < s1.size(); ++i)
    if (s1[i] != 0)
      terms.emplace_back(static_cast<long>(i), s1[i] * scale);
  return from_terms(n_, terms);
}

CycNum CycNum::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  CycNum result(Rational(1), n_);
  CycNum base = *this;
  while (e) {
    if (e & 1)
      result *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return result;
}

Rational CycNum::norm() const {
  if (is_zero())
    return Rational(0);
  const auto &f = cyclo(n_).coeffs;
  const long phi = static_cast<long>(f.size()) - 1;
  Integer res;
  if (num_.size() == 1) {
    mpz_pow_ui(res.get_mpz_t(), num_[0].get_mpz_t(),
               static_cast<unsigned long>(phi));
  } else {
    res = integer_resultant(f, num_);
  }
  Integer dpow;
  mpz_pow_ui(dpow.get_mpz_t(), den_.get_mpz_t(),
             static_cast<unsigned long>(phi));
  Rational out(res, dpow);
  out.canonicalize();
  return out;
}

CycNum &CycNum::operator+=(const CycNum &b) {
  const long m = std::lcm(n_, b.n_);
  if (m != n_)
    *this = embed(m);
  const CycNum bb = (b.n_ == m) ? b : b.embed(m);
  // a/da + b/db = (a*db + b*da) / (da*db)
  std::vector<Integer> out(std::max(num_.size(), bb.num_.size()));
  for (std::size_t i = 0; i < num_.size(); ++i)
    out[i] = num_[i] * bb.den_;
  for (std::size_t i = 0; i < bb.num_.size(); ++i)
    mpz_addmul(out[i].get_mpz_t(), bb.num_[i].get_mpz_t(), den_.get_mpz_t());
  num_ = std::move(out);
  den_ *= bb.den_;
  canonicalize();
  return *this;
}

CycNum CycNum::operator-() const {
  CycNum r = *this;
  for (auto &c : r.num_)
    c = -c;
  return r;
}

CycNum &CycNum::operator-=(const CycNum &b) { return *this += -b; }

CycNum &CycNum::operator*=(const CycNum &b) {
  const long m = std::lcm(n_, b.n_);
  const CycNum aa = (n_ == m) ? *this : embed(m);
  const CycNum bb = (b.n_ == m) ? b : b.embed(m);
  if (aa.num_.empty() || bb.num_.empty()) {
    *this = CycNum(m, {}, 1);
    return *this;
  }
  std::vector<Integer> poly(aa.num_.size() + bb.num_.size() - 1);
  for (std::size_t i = 0; i < aa.num_.size(); ++i) {
    if (aa.num_[i] == 0)
      continue;
    for (std::size_t j = 0; j < bb.num_.size(); ++j)
      mpz_addmul(poly[i + j].get_mpz_t(), aa.num_[i].get_mpz_t(),
                 bb.num_[j].get_mpz_t());
  }
  *this = reduce_poly(m, std::move(poly), aa.den_ * bb.den_);
  return *this;
}

CycNum &CycNum::operator/=(const CycNum &b) {
  if (b.is_zero())
    throw DivisionByZero();
  return *this *= b.inverse();
}

bool operator==(const CycNum &a, const CycNum &b) {
  if (a.n_ == b.n_)
    return a.num_ == b.num_ && a.den_ == b.den_;
  const long m = std::lcm(a.n_, b.n_);
  const CycNum aa = a.embed(m), bb = b.embed(m);
  return aa.num_ == bb.num_ && aa.den_ == bb.den_;
}

std::strong_ordering CycNum::compare_in(long m, const CycNum &a,
                                        const CycNum &b) {
  const CycNum aa = a.embed(m), bb = b.embed(m);
  const std::size_t len = std::max(aa.num_.size(), bb.num_.size());
  for (std::size_t i = 0; i < len; ++i) {
    Rational x = aa.coeff(static_cast<long>(i));
    Rational y = bb.coeff(static_cast<long>(i));
    if (x < y)
      return std::strong_ordering::less;
    if (y < x)
      return std::strong_ordering::greater;
  }
  return std::strong_ordering::equal;
}

std::pair<double, double> CycNum::to_complex() const {
  double re = 0, im = 0;
  const double d = den_.get_d();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    const double ang = 2.0 * std::numbers::pi * static_cast<double>(i) /
                       static_cast<double>(n_);
    re += num_[i].get_d() * std::cos(ang);
    im += num_[i].get_d() * std::sin(ang);
  }
  return {re / d, im / d};
}

std::string CycNum::to_string() const {
  if (num_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0)
      continue;
    Rational c(num_[i], den_);
    c.canonicalize();
    if (!first)
      os << (c < 0 ? " - " : " + ");
    else if (c < 0)
      os << "-";
    first = false;
    Rational ac = abs(c);
    if (i == 0) {
      os << ac.get_str();
    } else {
      if (ac != 1)
        os << ac.get_str() << "*";
      os << "z" << n_ << "^" << i;
    }
  }
  return os.str();
}

nlohmann::json CycNum::to_json() const {
  nlohmann::json coeffs = nlohmann::json::array();
  for (std::size_t i = 0; i < num_.size(); ++i) {
    if (num_[i] == 0)
      continue;
    coeffs.push_back({static_cast<long>(i), to_fraction_string(coeff(i))});
  }
  return {{"n", n_}, {"coeffs", coeffs}};
}

CycNum CycNum::from_json(const nlohmann::json &j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("coeffs"))
    throw DomainError("CycNum JSON must be an object with 'n' and 'coeffs'");
  const long n = j.at("n").get<long>();
  std::vector<std::pair<long, Rational>> terms;
  for (const auto &t : j.at("coeffs")) {
    if (!t.is_array() || t.size() != 2)
      throw DomainError("CycNum JSON coefficient must be [index, \"p/q\"]");
    terms.emplace_back(t[0].get<long>(),
                       parse_fraction(t[1].get<std::string>()));
  }
  return from_terms(n, terms);
}

CycNum determinant(std::vector<std::vector<CycNum>> m) {
  const std::size_t n = m.size();
  for (const auto &row : m)
    if (row.size() != n)
      throw DomainError("determinant: matrix is not square");
  CycNum det(1);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c].is_zero())
      ++piv;
    if (piv == n)
      return CycNum(0);
    if (piv != c) {
      std::swap(m[piv], m[c]);
      det = -det;
    }
    det *= m[c][c];
    const CycNum inv = m[c][c].inverse();
    for (std::size_t r = c + 1; r < n; ++r) {
      if (m[r][c].is_zero())
        continue;
      const CycNum f = m[r][c] * inv;
      for (std::size_t k = c; k < n; ++k)
        m[r][k] -= f * m[c][k];
    }
  }
  return det;
}

} // namespace stickel
