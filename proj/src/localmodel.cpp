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

#include "stickel/localmodel.hpp"

#include <numeric>
#include <sstream>

#include "stickel/error.hpp"
#include "stickel/padic.hpp"
#include "stickel/stickelberger.hpp"

namespace stickel {

namespace {

bool is_prime_power(long q) {
  if (q < 2)
    return false;
  long p = 2;
  while (q % p != 0)
    ++p;
  while (q % p == 0)
    q /= p;
  return q == 1;
}

std::string exponent_string(const Rational &e) {
  return e.get_den() == 1 ? e.get_num().get_str()
                          : "(" + e.get_str() + ")";
}

} // namespace

void LocalFieldSpec::validate() const {
  if (!is_prime_power(q))
    throw DomainError("residue size q = " + std::to_string(q) +
                      " is not a prime power");
  if (m < 1)
    throw DomainError("exponent denominator m must be positive");
  if (std::gcd(m, q) != 1)
    throw DomainError("tameness violated: gcd(m, q) = gcd(" +
                      std::to_string(m) + ", " + std::to_string(q) + ") != 1");
}

// ---- TameElement -------------------------------------------------------

TameElement::TameElement(const CycNum &c) {
  if (!c.is_zero())
    terms_.emplace(Rational(0), c);
}

TameElement TameElement::monomial(const Rational &exponent, const CycNum &c) {
  TameElement t;
  t.add_term(exponent, c);
  return t;
}

void TameElement::add_term(const Rational &exponent, const CycNum &c) {
  if (c.is_zero())
    return;
  Rational e = exponent;
  e.canonicalize(); // map keys must be canonical
  auto it = terms_.find(e);
  if (it == terms_.end()) {
    terms_.emplace(e, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

const Rational &TameElement::valuation() const {
  if (terms_.empty())
    throw DomainError("valuation of the zero tame element");
  return terms_.begin()->first;
}

const CycNum &TameElement::leading_coeff() const {
  if (terms_.empty())
    throw DomainError("leading coefficient of the zero tame element");
  return terms_.begin()->second;
}

CycNum TameElement::coeff(const Rational &exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? CycNum(0) : it->second;
}

TameElement TameElement::inverse() const {
  if (!is_monomial())
    throw DomainError("tame element " + to_string() +
                      " is not an invertible monomial");
  const auto &[e, c] = *terms_.begin();
  return monomial(-e, c.inverse());
}

TameElement TameElement::pow(long e) const {
  if (e < 0)
    return inverse().pow(-e);
  TameElement r(1), base = *this;
  while (e) {
    if (e & 1)
      r *= base;
    e >>= 1;
    if (e)
      base *= base;
  }
  return r;
}

TameElement TameElement::galois_apply(long k) const {
  TameElement r;
  for (const auto &[e, c] : terms_)
    r.add_term(e, c.galois_apply(k));
  return r;
}

TameElement &TameElement::operator+=(const TameElement &b) {
  for (const auto &[e, c] : b.terms_)
    add_term(e, c);
  return *this;
}

TameElement &TameElement::operator-=(const TameElement &b) {
  for (const auto &[e, c] : b.terms_)
    add_term(e, -c);
  return *this;
}

TameElement &TameElement::operator*=(const TameElement &b) {
  TameElement r;
  for (const auto &[ea, ca] : terms_)
    for (const auto &[eb, cb] : b.terms_) {
      Rational e = ea + eb;
      e.canonicalize();
      r.add_term(e, ca * cb);
    }
  *this = std::move(r);
  return *this;
}

bool operator==(const TameElement &a, const TameElement &b) {
  if (a.terms_.size() != b.terms_.size())
    return false;
  auto ia = a.terms_.begin();
  auto ib = b.terms_.begin();
  for (; ia != a.terms_.end(); ++ia, ++ib)
    if (ia->first != ib->first || !(ia->second == ib->second))
      return false;
  return true;
}

std::string TameElement::to_string() const {
  if (terms_.empty())
    return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto &[e, c] : terms_) {
    if (!first)
      os << " + ";
    first = false;
    os << "(" << c.to_string() << ")*w^" << exponent_string(e);
  }
  return os.str();
}

nlohmann::json TameElement::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto &[e, c] : terms_)
    j.push_back({{"exponent", to_fraction_string(e)}, {"coeff", c.to_json()}});
  return j;
}

TameElement sigma_action(const TameElement &x, const LocalFieldSpec &spec,
                         long power) {
  TameElement r;
  for (const auto &[e, c] : x.terms()) {
    Rational scaled = e * spec.m;
    scaled.canonicalize();
    if (scaled.get_den() != 1)
      throw DomainError("exponent " + e.get_str() +
                        " has a denominator not dividing m = " +
                        std::to_string(spec.m));
    const long k = scaled.get_num().get_si();
    r += TameElement::monomial(e, c * CycNum::zeta(spec.m, k * power));
  }
  return r;
}

TameElement frobenius_action(const TameElement &x, const LocalFieldSpec &spec) {
  return x.galois_apply(spec.q);
}

TameElement frobenius_inverse(const TameElement &x,
                              const LocalFieldSpec &spec) {
  TameElement r;
  for (const auto &[e, c] : x.terms()) {
    const long n = c.conductor();
    const long k = n == 1 ? 1 : inverse_mod(spec.q, n);
    r += TameElement::monomial(e, c.galois_apply(k));
  }
  return r;
}

// ---- GroupAlgebraElement -----------------------------------------------

GroupAlgebraElement GroupAlgebraElement::unit(GroupPtr g) {
  GroupAlgebraElement r(std::move(g));
  r.add(0, TameElement(1));
  return r;
}

TameElement GroupAlgebraElement::coeff(Elem g) const {
  auto it = terms_.find(g);
  return it == terms_.end() ? TameElement() : it->second;
}

void GroupAlgebraElement::add(Elem g, const TameElement &c) {
  if (c.is_zero())
    return;
  auto it = terms_.find(g);
  if (it == terms_.end()) {
    terms_.emplace(g, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero())
    terms_.erase(it);
}

GroupAlgebraElement
GroupAlgebraElement::operator*(const GroupAlgebraElement &b) const {
  if (group_.get() != b.group_.get())
    throw DomainError("group algebra elements over different groups");
  GroupAlgebraElement r(group_);
  for (const auto &[g, c] : terms_)
    for (const auto &[h, d] : b.terms_)
      r.add(group_->mul(g, h), c * d);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::times_element(Elem g) const {
  GroupAlgebraElement r(group_);
  for (const auto &[h, c] : terms_)
    r.add(group_->mul(h, g), c);
  return r;
}

GroupAlgebraElement GroupAlgebraElement::conjugated_by(Elem t) const {
  GroupAlgebraElement r(group_);
  for (const auto &[h, c] : terms_)
    r.add(group_->conjugate(h, t), c);
  return r;
}

bool operator==(const GroupAlgebraElement &a, const GroupAlgebraElement &b) {
  if (a.group_.get() != b.group_.get() || a.terms_.size() != b.terms_.size())
    return false;
  for (const auto &[g, c] : a.terms_) {
    auto it = b.terms_.find(g);
    if (it == b.terms_.end() || !(it->second == c))
      return false;
  }
  return true;
}

nlohmann::json GroupAlgebraElement::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto &[g, c] : terms_)
    j.push_back({{"element", group_->label(g)}, {"coeff", c.to_json()}});
  return j;
}

// ---- resolvends --------------------------------------------------------

TameElement beta(long order) {
  TameElement b;
  for (long i = 0; i < order; ++i)
    b += TameElement::monomial(Rational(i, order), CycNum(Rational(1, order)));
  return b;
}

TameElement beta_star(long order) {
  if (order % 2 == 0)
    throw DomainError("beta_star: element order " + std::to_string(order) +
                      " is even");
  TameElement b;
  const long shift = (1 - order) / 2;
  for (long i = 0; i < order; ++i) {
    Rational e(i + shift, order);
    e.canonicalize();
    b += TameElement::monomial(e, CycNum(Rational(1, order)));
  }
  return b;
}

namespace {

GroupAlgebraElement resolvend_from(const GroupPtr &g, Elem elem,
                                   const TameElement &b,
                                   const LocalFieldSpec &spec) {
  spec.validate();
  const long o = g->element_order(elem);
  if (std::gcd(o, spec.q) != 1)
    throw DomainError("tameness violated: gcd(|g|, q) != 1");
  if (spec.m % o != 0)
    throw DomainError("element order " + std::to_string(o) +
                      " does not divide m = " + std::to_string(spec.m));
  GroupAlgebraElement r(g);
  for (long i = 0; i < o; ++i)
    r.add(g->pow(elem, -i), sigma_action(b, spec, i));
  return r;
}

} // namespace

GroupAlgebraElement phi_g(const GroupPtr &g, Elem elem,
                          const LocalFieldSpec &spec) {
  return resolvend_from(g, elem, beta(g->element_order(elem)), spec);
}

GroupAlgebraElement phi_star_g(const GroupPtr &g, Elem elem,
                               const LocalFieldSpec &spec) {
  return resolvend_from(g, elem, beta_star(g->element_order(elem)), spec);
}

Elem cyclic_support_generator(const GroupAlgebraElement &x) {
  const auto &G = x.group();
  Elem best = -1;
  for (Elem s = 0; s < G.order(); ++s) {
    if (best >= 0 && G.element_order(s) >= G.element_order(best))
      continue;
    const auto cyc = G.cyclic_subgroup(s);
    std::vector<bool> in(G.order(), false);
    for (Elem h : cyc)
      in[h] = true;
    bool ok = true;
    for (const auto &[h, c] : x.terms())
      ok = ok && in[h];
    if (ok)
      best = s;
  }
  return best;
}

TameElement det_resolvend(const GroupAlgebraElement &x, const VirtualChar &chi) {
  if (chi.table()->group_ptr().get() != x.group_ptr().get())
    throw DomainError("det_resolvend: character and element over different groups");
  const Elem s = cyclic_support_generator(x);
  if (s < 0)
    throw DomainError("det_resolvend: support is not contained in a cyclic subgroup");
  const CyclicChars cc = CyclicChars::make(chi.table(), s);
  const auto mult = restriction_multiplicities(chi, cc);
  TameElement det(1);
  for (long j = 0; j < cc.order; ++j) {
    if (mult[j] == 0)
      continue;
    if (mult[j].get_den() != 1)
      throw DomainError("det_resolvend: multiplicity of xi^" +
                        std::to_string(j) + " is not an integer");
    TameElement factor;
    for (const auto &[h, c] : x.terms()) {
      const long i = cc.h.index_of[h];
      factor += c * TameElement(CycNum::zeta(cc.order, i * j));
    }
    const long m = mult[j].get_num().get_si();
    if (m < 0 && (!factor.is_monomial()))
      throw DomainError("det_resolvend: eigen-factor for xi^" +
                        std::to_string(j) + " is not invertible: " +
                        factor.to_string());
    det *= factor.pow(m);
  }
  return det;
}

// ---- verifiers ---------------------------------------------------------

Report verify_free_generator(long e, long n, long p) {
  if (e < 1)
    throw DomainError("e must be positive");
  if (std::labs(n) > e - 1)
    throw DomainError("offset n must satisfy |n| <= e - 1");
  if (!is_prime_long(p) || (p - 1) % e != 0)
    throw DomainError("instance prime p must satisfy p = 1 mod e");
  LocalFieldSpec spec{p, e};
  spec.validate();

  Report rep;
  rep.name = "free_generator";
  rep.meta = {{"e", e}, {"n", n}, {"p", p}};

  GroupPtr H = preset_group("C" + std::to_string(e));
  TablePtr table = cyclic_table(H);

  TameElement alpha;
  for (long i = 0; i < e; ++i) {
    Rational ex(n + i, e);
    ex.canonicalize();
    alpha += TameElement::monomial(ex, CycNum(Rational(1, e)));
  }
  std::vector<TameElement> conj(e);
  for (long j = 0; j < e; ++j)
    conj[j] = sigma_action(alpha, spec, j);

  GroupAlgebraElement resolvend(H);
  for (long j = 0; j < e; ++j)
    resolvend.add(H->pow(1 % H->order(), -j), conj[j]);

  for (long c = 0; c < e; ++c) {
    // r in {n, ..., n+e-1} with r = c mod e
    const long r = n + mod_floor(c - n, e);
    Rational ex(r, e);
    ex.canonicalize();
    const TameElement expected = TameElement::monomial(ex);
    TameElement twisted;
    for (long j = 0; j < e; ++j)
      twisted += conj[j] * TameElement(CycNum::zeta(e, -r * j));
    const std::string subject = "xi^" + std::to_string(c);
    rep.add_equal("twisted_sum_is_monomial", subject, twisted.to_string(),
                  expected.to_string());
    const TameElement det =
        det_resolvend(resolvend, VirtualChar::irreducible(table, c));
    rep.add_equal("resolvend_det_is_monomial", subject, det.to_string(),
                  expected.to_string());
  }

  // change of basis {s^j(alpha)} -> {w_M^(n+l)}
  std::vector<std::vector<CycNum>> mat(e, std::vector<CycNum>(e));
  for (long j = 0; j < e; ++j)
    for (long l = 0; l < e; ++l) {
      Rational ex(n + l, e);
      ex.canonicalize();
      mat[j][l] = conj[j].coeff(ex);
    }
  const CycNum det = determinant(mat);
  if (det.is_zero()) {
    rep.add("change_of_basis_unit", "det", "0", "unit", false);
  } else {
    const Valuation v = cyclotomic_valuation(det, p);
    rep.add_equal("change_of_basis_unit", "lambda_val",
                  to_fraction_string(v.lambda_val), "0/1");
    rep.meta["change_of_basis_det"] = det.to_json();
  }
  return rep;
}

Report verify_factorization(const TablePtr &g_table, Elem s, Elem t, long q) {
  const GroupPtr &gp = g_table->group_ptr();
  const auto &G = *gp;
  if (G.mul(G.mul(t, s), G.inv(t)) != G.pow(s, q))
    throw DomainError("cocycle relation t s t^-1 = s^q fails for s = " +
                      G.label(s) + ", t = " + G.label(t) +
                      ", q = " + std::to_string(q));
  const long o = G.element_order(s);
  if (o % 2 == 0)
    throw DomainError("verify_factorization: |s| must be odd");
  LocalFieldSpec spec{q, o};
  spec.validate();

  Report rep;
  rep.name = "factorization";
  rep.meta = {{"group", G.name()},
              {"s", G.label(s)},
              {"t", G.label(t)},
              {"q", q}};

  const CyclicChars cc = CyclicChars::make(g_table, s);
  const GroupAlgebraElement r = phi_g(gp, s, spec);
  const GroupAlgebraElement rs = phi_star_g(gp, s, spec);

  for (const auto *x : {&r, &rs}) {
    const std::string which = x == &r ? "phi" : "phi_star";
    const auto sig = x->map_coeffs(
        [&](const TameElement &c) { return sigma_action(c, spec); });
    rep.add("resolvend_sigma_equivariance", which, "sigma(r)", "r*s",
            sig == x->times_element(s));
    const auto frob = x->map_coeffs(
        [&](const TameElement &c) { return frobenius_action(c, spec); });
    rep.add("resolvend_frobenius_equivariance", which, "phi(r)", "t^-1*r*t",
            frob == x->conjugated_by(t));
  }

  for (std::size_t i = 0; i < g_table->size(); ++i) {
    const VirtualChar chi = VirtualChar::irreducible(g_table, i);
    const std::string subject = "chi" + std::to_string(i);
    const TameElement d = det_resolvend(r, chi);
    const TameElement ds = det_resolvend(rs, chi);
    const Rational p = pairing(chi, cc), ps = star_pairing(chi, cc);
    rep.add_equal("det_phi_is_pairing_monomial", subject, d.to_string(),
                  TameElement::monomial(p).to_string());
    rep.add_equal("det_phi_star_is_star_pairing_monomial", subject,
                  ds.to_string(), TameElement::monomial(ps).to_string());

    const TameElement lhs = ds * d.inverse();
    const VirtualChar psi2 = adams(chi, 2);
    const TameElement rhs = det_resolvend(r, psi2) * d.pow(-2);
    rep.add("quotient_equals_adams_quotient", subject, lhs.to_string(),
            rhs.to_string(), lhs == rhs);

    const Rational f_exp = pairing(psi2 - Rational(2) * chi, cc);
    rep.add_equal("representing_exponent", subject,
                  to_fraction_string(lhs.valuation()),
                  to_fraction_string(f_exp));
  }
  return rep;
}

} // namespace stickel
