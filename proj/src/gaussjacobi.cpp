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

#include "stickel/gaussjacobi.hpp"

#include <numeric>

#include "stickel/error.hpp"
#include "stickel/padic.hpp"

namespace stickel {

namespace {

void require_supported_prime(long p) {
  if (!is_prime_long(p))
    throw DomainError(std::to_string(p) + " is not prime");
  if (p > kMaxGaussPrime)
    throw DomainError("prime " + std::to_string(p) +
                      " exceeds the supported bound " +
                      std::to_string(kMaxGaussPrime));
}

// k with |x| = p^k, or nullopt if another prime divides x.
std::optional<long> p_power_exponent(Integer x, long p) {
  x = abs(x);
  if (x == 0)
    return std::nullopt;
  long k = 0;
  while (mpz_divisible_ui_p(x.get_mpz_t(), static_cast<unsigned long>(p))) {
    x /= p;
    ++k;
  }
  if (x != 1)
    return std::nullopt;
  return k;
}

} // namespace

FpContext::FpContext(long p) : p_(p) {
  require_supported_prime(p);
  g_ = p == 2 ? 1 : smallest_primitive_root(p);
  log_.assign(p, -1);
  exp_.resize(p - 1);
  long x = 1;
  for (long k = 0; k < p - 1; ++k) {
    exp_[k] = x;
    log_[x] = k;
    x = x * g_ % p;
  }
}

long FpContext::log(long x) const {
  x = mod_floor(x, p_);
  if (x == 0)
    throw DomainError("discrete log of 0");
  return log_[x];
}

long FpContext::exp(long k) const { return exp_[mod_floor(k, p_ - 1)]; }

MultChar MultChar::make(long p, long d, long a) {
  require_supported_prime(p);
  if (d < 1 || (p - 1) % d != 0)
    throw DomainError("character order " + std::to_string(d) +
                      " does not divide p - 1 = " + std::to_string(p - 1));
  a = mod_floor(a, d);
  const long g = std::gcd(a, d);
  MultChar c;
  c.p = p;
  c.order = d / g;
  c.a = c.order == 1 ? 0 : a / g;
  return c;
}

std::vector<MultChar> MultChar::all(long p) {
  std::vector<MultChar> out;
  for (long a = 0; a < p - 1; ++a)
    out.push_back(make(p, p - 1, a));
  if (out.empty())
    out.push_back(make(p, 1, 0));
  return out;
}

long MultChar::exponent_at(const FpContext &ctx, long x) const {
  return mod_floor(a * ctx.log(x), order);
}

long MultChar::sign_at_minus_one() const {
  // chi(-1) = zeta_d^(a (p-1)/2)
  const long k = mod_floor(a * ((p - 1) / 2), order);
  return k == 0 ? 1 : -1;
}

MultChar MultChar::pow(long k) const { return make(p, order, a * k); }

MultChar operator*(const MultChar &x, const MultChar &y) {
  if (x.p != y.p)
    throw DomainError("characters of different prime fields");
  const long d = std::lcm(x.order, y.order);
  return MultChar::make(x.p, d, x.a * (d / x.order) + y.a * (d / y.order));
}

std::string MultChar::to_string() const {
  return "chi[" + std::to_string(a) + "/" + std::to_string(order) + "]";
}

nlohmann::json MultChar::to_json() const {
  return {{"p", p}, {"order", order}, {"a", a}};
}

CycNum gauss_sum(const MultChar &chi) {
  if (chi.is_trivial())
    return CycNum(1);
  const FpContext ctx(chi.p);
  const long n = std::lcm(chi.p, chi.order);
  const long up = n / chi.p, ud = n / chi.order;
  std::vector<Integer> counts(n);
  for (long x = 1; x < chi.p; ++x) {
    const long e = x * up - chi.exponent_at(ctx, x) * ud;
    counts[mod_floor(e, n)] += 1;
  }
  return CycNum::from_exponent_counts(n, counts);
}

CycNum jacobi_sum(const MultChar &chi1, const MultChar &chi2) {
  if (chi1.is_trivial() || chi2.is_trivial() || (chi1 * chi2).is_trivial())
    throw DomainError("jacobi_sum: degenerate pair " + chi1.to_string() +
                      ", " + chi2.to_string());
  const FpContext ctx(chi1.p);
  const long n = std::lcm(chi1.order, chi2.order);
  const long u1 = n / chi1.order, u2 = n / chi2.order;
  std::vector<Integer> counts(n);
  for (long x = 2; x < chi1.p; ++x) {
    const long e =
        -chi1.exponent_at(ctx, x) * u1 - chi2.exponent_at(ctx, 1 - x) * u2;
    counts[mod_floor(e, n)] += 1;
  }
  return CycNum::from_exponent_counts(n, counts);
}

CycNum j_star(const MultChar &chi) {
  if (chi.is_trivial())
    return CycNum(1);
  const CycNum t = gauss_sum(chi.conj());
  return gauss_sum(chi.pow(2)) * t * t *
         CycNum(Rational(1) / (Rational(chi.p) * chi.p));
}

Report verify_ell_unit(const CycNum &J, long p) {
  Report rep;
  rep.name = "ell_unit";
  rep.meta = {{"p", p}, {"value", J.to_json()}};
  if (J.is_zero()) {
    rep.add("norm_is_p_power", "J", "0", "+-p^k", false);
    return rep;
  }
  const Rational N = J.norm();
  const auto kn = p_power_exponent(N.get_num(), p);
  const auto kd = p_power_exponent(N.get_den(), p);
  const bool ok = kn && kd;
  const std::string rhs =
      ok ? std::string(N < 0 ? "-" : "") + std::to_string(p) + "^" +
               std::to_string(*kn - *kd)
         : "+-p^k";
  rep.add("norm_is_p_power", "J", to_fraction_string(N), rhs, ok);
  return rep;
}

Report verify_gauss_identities(long p) {
  require_supported_prime(p);
  Report rep;
  rep.name = "gauss_jacobi";
  rep.meta = {{"p", p}};
  const auto chars = MultChar::all(p);
  std::vector<CycNum> tau;
  for (const auto &c : chars)
    tau.push_back(gauss_sum(c));
  // chars[i] = make(p, p-1, i), so products index by addition of a
  const long n = p - 1;
  auto idx = [&](long a) { return static_cast<std::size_t>(mod_floor(a, n)); };

  for (long i = 1; i < n; ++i) {
    const auto &c = chars[i];
    const CycNum lhs = tau[i] * tau[idx(-i)];
    const CycNum rhs(c.sign_at_minus_one() * p);
    rep.add("gauss_conjugate_product", c.to_string(), lhs.to_string(),
            rhs.to_string(), lhs == rhs);
  }
  for (long i = 1; i < n; ++i)
    for (long j = 1; j < n; ++j) {
      if (idx(i + j) == 0)
        continue;
      const std::string subject =
          chars[i].to_string() + "," + chars[j].to_string();
      const CycNum J = jacobi_sum(chars[i], chars[j]);
      const CycNum lhs = J * tau[idx(i + j)];
      const CycNum rhs = tau[i] * tau[j];
      rep.add("jacobi_gauss_relation", subject, lhs.to_string(),
              rhs.to_string(), lhs == rhs);
      rep.add("jacobi_integrality", subject, J.denominator().get_str(), "1",
              J.denominator() == 1);
    }
  std::vector<CycNum> jstar;
  for (const auto &c : chars)
    jstar.push_back(j_star(c));
  for (long i = 0; i < static_cast<long>(chars.size()); ++i) {
    const auto &c = chars[i];
    const CycNum &js = jstar[i];
    for (const auto &l : verify_ell_unit(js, p).lines)
      rep.add("j_star_norm_is_p_power", c.to_string(), l.lhs, l.rhs, l.pass);
    if (!c.is_trivial() && !c.pow(2).is_trivial()) {
      const CycNum prod = js * jacobi_sum(c, c);
      rep.add("j_star_inverts_jacobi", c.to_string(), prod.to_string(), "1",
              prod == CycNum(1));
    }
    const long m = std::lcm(p, c.order);
    for (long k = 2; k < m; ++k) {
      if (std::gcd(k, m) != 1)
        continue;
      const CycNum lhs = js.galois_apply(k);
      const CycNum &rhs = jstar[idx(i * k)];
      rep.add("j_star_galois_stable", c.to_string() + ",k=" + std::to_string(k),
              lhs.to_string(), rhs.to_string(), lhs == rhs);
    }
  }
  return rep;
}

Report verify_gauss_character(const MultChar &chi) {
  Report rep;
  rep.name = "gauss_character";
  rep.meta = {{"chi", chi.to_json()}};
  const std::string subject = chi.to_string();
  const long p = chi.p;
  if (!chi.is_trivial()) {
    const CycNum lhs = gauss_sum(chi) * gauss_sum(chi.conj());
    const CycNum rhs(chi.sign_at_minus_one() * p);
    rep.add("gauss_conjugate_product", subject, lhs.to_string(),
            rhs.to_string(), lhs == rhs);
  }
  if (!chi.is_trivial() && !chi.pow(2).is_trivial()) {
    const CycNum J = jacobi_sum(chi, chi);
    const CycNum lhs = J * gauss_sum(chi.pow(2));
    const CycNum t = gauss_sum(chi);
    rep.add("jacobi_gauss_relation", subject, lhs.to_string(),
            (t * t).to_string(), lhs == t * t);
    rep.add("jacobi_integrality", subject, J.denominator().get_str(), "1",
            J.denominator() == 1);
    const CycNum prod = j_star(chi) * J;
    rep.add("j_star_inverts_jacobi", subject, prod.to_string(), "1",
            prod == CycNum(1));
  }
  for (const auto &l : verify_ell_unit(j_star(chi), p).lines)
    rep.add("j_star_norm_is_p_power", subject, l.lhs, l.rhs, l.pass);
  return rep;
}

nlohmann::json gauss_values(const MultChar &chi) {
  nlohmann::json j = {{"chi", chi.to_json()},
                      {"label", chi.to_string()},
                      {"tau", gauss_sum(chi).to_json()},
                      {"j_star", j_star(chi).to_json()}};
  if (!chi.is_trivial() && !chi.pow(2).is_trivial())
    j["jacobi_chi_chi"] = jacobi_sum(chi, chi).to_json();
  else
    j["jacobi_chi_chi"] = nullptr;
  return j;
}

} // namespace stickel
