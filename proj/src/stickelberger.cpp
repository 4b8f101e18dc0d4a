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

#include "stickel/stickelberger.hpp"

#include "stickel/error.hpp"

namespace stickel {

namespace {

void require_odd(long o, const char *what) {
  if (o % 2 == 0)
    throw DomainError(std::string(what) + ": element order " +
                      std::to_string(o) + " is even");
}

std::string chi_label(std::size_t i) { return "chi" + std::to_string(i); }

} // namespace

CyclicChars CyclicChars::make(const TablePtr &g_table, Elem s) {
  const auto &G = g_table->group();
  if (s < 0 || s >= G.order())
    throw DomainError("element index out of range");
  CyclicChars cc;
  cc.g_table = g_table;
  cc.s = s;
  cc.order = G.element_order(s);
  cc.h = Subgroup::cyclic(g_table->group_ptr(), s);
  cc.h_table = cyclic_table(cc.h.group);
  return cc;
}

VirtualChar CyclicChars::xi_power(long j) const {
  return VirtualChar::irreducible(h_table,
                                  static_cast<std::size_t>(mod_floor(j, order)));
}

std::vector<Rational> restriction_multiplicities(const VirtualChar &chi,
                                                 const CyclicChars &cc) {
  return restrict_to(chi, cc.h, cc.h_table).coeffs();
}

long symmetric_representative(long j, long o) {
  long r = mod_floor(j, o);
  return (2 * r > o - 1) ? r - o : r;
}

Rational pairing(const VirtualChar &chi, const CyclicChars &cc) {
  const auto m = restriction_multiplicities(chi, cc);
  Rational s(0);
  for (long j = 0; j < cc.order; ++j)
    if (m[j] != 0)
      s += m[j] * Rational(j, cc.order);
  s.canonicalize();
  return s;
}

Rational pairing(const VirtualChar &chi, Elem s) {
  return pairing(chi, CyclicChars::make(chi.table(), s));
}

Rational star_pairing(const VirtualChar &chi, const CyclicChars &cc) {
  require_odd(cc.order, "star_pairing");
  const auto m = restriction_multiplicities(chi, cc);
  Rational s(0);
  for (long j = 0; j < cc.order; ++j)
    if (m[j] != 0)
      s += m[j] * Rational(symmetric_representative(j, cc.order), cc.order);
  s.canonicalize();
  return s;
}

Rational star_pairing(const VirtualChar &chi, Elem s) {
  return star_pairing(chi, CyclicChars::make(chi.table(), s));
}

VirtualChar xi(const CyclicChars &cc) {
  VirtualChar v(cc.h_table);
  for (long j = 1; j < cc.order; ++j)
    v += Rational(j, cc.order) * cc.xi_power(j);
  return v;
}

VirtualChar xi_star(const CyclicChars &cc) {
  require_odd(cc.order, "xi_star");
  VirtualChar v(cc.h_table);
  for (long j = 1; j <= (cc.order - 1) / 2; ++j)
    v += Rational(j, cc.order) * (cc.xi_power(j) - cc.xi_power(-j));
  return v;
}

VirtualChar d_element(const CyclicChars &cc) {
  require_odd(cc.order, "d_element");
  VirtualChar v(cc.h_table);
  for (long j = 1; j <= (cc.order - 1) / 2; ++j)
    v -= cc.xi_power(-j);
  return v;
}

Report verify_induction_identities(const TablePtr &g_table, Elem s) {
  const auto &G = g_table->group();
  const CyclicChars cc = CyclicChars::make(g_table, s);
  const bool odd = cc.order % 2 == 1;
  Report rep;
  rep.name = "induction_identities";
  rep.meta = {{"group", G.name()},
              {"element", G.label(s)},
              {"element_order", cc.order}};

  const VirtualChar ind_xi = induce(xi(cc), cc.h, g_table);
  VirtualChar ind_xi_star, ind_d;
  if (odd) {
    ind_xi_star = induce(xi_star(cc), cc.h, g_table);
    ind_d = induce(d_element(cc), cc.h, g_table);
    // closed form of Xi* - Xi, built term by term
    VirtualChar closed(cc.h_table);
    for (long j = 1; j <= (cc.order - 1) / 2; ++j)
      closed -= cc.xi_power(-j);
    rep.add_equal("xi_star_minus_xi_closed_form", "<s>",
                  (xi_star(cc) - xi(cc)).to_string(), closed.to_string());
  }
  for (std::size_t i = 0; i < g_table->size(); ++i) {
    const VirtualChar chi = VirtualChar::irreducible(g_table, i);
    const Rational p = pairing(chi, cc);
    rep.add_equal("pairing_equals_induced_xi", chi_label(i),
                  to_fraction_string(p),
                  to_fraction_string(inner_product(ind_xi, chi)));
    if (!odd)
      continue;
    const Rational ps = star_pairing(chi, cc);
    rep.add_equal("star_pairing_equals_induced_xi_star", chi_label(i),
                  to_fraction_string(ps),
                  to_fraction_string(inner_product(ind_xi_star, chi)));
    rep.add_equal("star_minus_plain_equals_induced_d", chi_label(i),
                  to_fraction_string(ps - p),
                  to_fraction_string(inner_product(ind_d, chi)));
  }
  return rep;
}

Report verify_adams_identities(const TablePtr &g_table, Elem s) {
  const auto &G = g_table->group();
  const CyclicChars cc = CyclicChars::make(g_table, s);
  require_odd(cc.order, "verify_adams_identities");
  Report rep;
  rep.name = "adams_identities";
  rep.meta = {{"group", G.name()},
              {"element", G.label(s)},
              {"element_order", cc.order}};
  const VirtualChar Xs = xi_star(cc), X = xi(cc);
  for (long j = 1; j < cc.order; ++j) {
    const VirtualChar xj = cc.xi_power(j);
    const Rational lhs = inner_product(Xs, xj);
    const Rational rhs = inner_product(X, adams(xj, 2) - xj);
    const Rational rhs_sq = inner_product(X, cc.xi_power(2 * j) - xj);
    rep.add_equal("xi_star_component_via_adams", "xi^" + std::to_string(j),
                  to_fraction_string(lhs), to_fraction_string(rhs));
    rep.add_equal("xi_star_component_via_square", "xi^" + std::to_string(j),
                  to_fraction_string(lhs), to_fraction_string(rhs_sq));
  }
  for (std::size_t i = 0; i < g_table->size(); ++i) {
    const VirtualChar chi = VirtualChar::irreducible(g_table, i);
    rep.add_equal("star_pairing_equals_adams_pairing", chi_label(i),
                  to_fraction_string(star_pairing(chi, cc)),
                  to_fraction_string(pairing(adams(chi, 2) - chi, cc)));
  }
  return rep;
}

} // namespace stickel
