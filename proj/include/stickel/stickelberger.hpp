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

#include "stickel/characters.hpp"
#include "stickel/report.hpp"

namespace stickel {

/**
 * The cyclic subgroup <s> of G together with its characters xi_s^j,
 * xi_s(s^i) = zeta_|s|^i. Since zeta_|s| = zeta_|G|^(|G|/|s|) inside the
 * compatible system of roots of unity, this is the normalisation the
 * pairings require.
 */
struct CyclicChars {
  TablePtr g_table;
  Elem s = 0;
  long order = 1;
  Subgroup h;
  TablePtr h_table; // row j is xi_s^j

  static CyclicChars make(const TablePtr &g_table, Elem s);

  VirtualChar xi_power(long j) const; // xi_s^j, j taken mod |s|
};

/// Multiplicities m_j of xi_s^j in chi restricted to <s>, j = 0..|s|-1.
std::vector<Rational> restriction_multiplicities(const VirtualChar &chi,
                                                 const CyclicChars &cc);

/// Representative of j in the symmetric window [(1-o)/2, (o-1)/2], o odd.
long symmetric_representative(long j, long o);

/// <chi, s>_G = sum_j m_j * {j/|s|}; linear in chi.
Rational pairing(const VirtualChar &chi, const CyclicChars &cc);
Rational pairing(const VirtualChar &chi, Elem s);

/// <chi, s>*_G with the symmetric window. DomainError on even |s|.
Rational star_pairing(const VirtualChar &chi, const CyclicChars &cc);
Rational star_pairing(const VirtualChar &chi, Elem s);

/// Xi_s = (1/|s|) sum_{j=1}^{|s|-1} j xi^j on <s>.
VirtualChar xi(const CyclicChars &cc);
/// Xi*_s = (1/|s|) sum_{j=1}^{(|s|-1)/2} j (xi^j - xi^-j); |s| odd.
VirtualChar xi_star(const CyclicChars &cc);
/// d(s) = -sum_{j=1}^{(|s|-1)/2} xi^-j; |s| odd.
VirtualChar d_element(const CyclicChars &cc);

/// For every irreducible chi: the pairings against inner products with the
/// induced Xi_s, Xi*_s and d(s), and the closed form of Xi*_s - Xi_s.
Report verify_induction_identities(const TablePtr &g_table, Elem s);

/// For |s| odd: (Xi*_s, xi^j) = (Xi_s, psi_2(xi^j) - xi^j) on <s> for all j,
/// and <chi, s>* = <psi_2(chi) - chi, s> for every irreducible chi.
Report verify_adams_identities(const TablePtr &g_table, Elem s);

} // namespace stickel
