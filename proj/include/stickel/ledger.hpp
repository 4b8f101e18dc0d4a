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

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "stickel/characters.hpp"
#include "stickel/localmodel.hpp"
#include "stickel/report.hpp"

namespace stickel {

/// Homomorphism on R_G given by its values on the irreducible characters.
struct ReprHom {
  TablePtr table;
  std::vector<TameElement> values; // indexed like the rows of table

  static ReprHom trivial(TablePtr table);

  /// Value on an integral virtual character: prod_i values[i]^{c_i}.
  TameElement evaluate(const VirtualChar &chi) const;

  friend ReprHom operator*(const ReprHom &a, const ReprHom &b);
  friend bool operator==(const ReprHom &a, const ReprHom &b);
  bool is_trivial() const;

  nlohmann::json to_json() const;
};

/// Arithmetic data of a place: residue size and the image of the inertia
/// generator. Labels are opaque.
struct Place {
  std::string label;
  long q = 2;
  Elem s = 0;

  friend bool operator==(const Place &, const Place &) = default;
};

struct PlacedEntry {
  Place place;
  ReprHom f;
};

/// Finitely supported family of local homomorphisms keyed by place label.
struct PlacedHom {
  TablePtr table;
  std::map<std::string, PlacedEntry> entries;

  std::vector<std::string> support() const;
  friend bool operator==(const PlacedHom &a, const PlacedHom &b);
  nlohmann::json to_json() const;
};

/// f_v(chi) = w_v^{<psi_2 chi - 2 chi, s_v>}. Places with s_v = 1 are left
/// out. DomainError on even |s_v| or gcd(|s_v|, q_v) != 1.
PlacedHom build_f(const TablePtr &table, const std::vector<Place> &places);

/// One single-place family per entry, in label order.
std::vector<PlacedHom> decompose(const PlacedHom &f);
/// Componentwise product; repeated labels must carry the same place data.
PlacedHom recompose(const TablePtr &table, const std::vector<PlacedHom> &parts);

/// Value on chi: prod_k galois_apply(f(chi^(k)), k) over the twists k, where
/// chi^(k) is chi with zeta -> zeta^k applied to its values. Twists must be
/// coprime to the table conductor and to every value conductor.
ReprHom norm_restrict(const ReprHom &f, const std::vector<long> &twists);

/// build_f exponents against <chi,s>* - <chi,s> for every irreducible chi.
Report verify_build_f(const TablePtr &table, Elem s, long q);

/// Randomised structural checks: recompose(decompose(f)) = f on `cases`
/// multi-place instances, norm_restrict with {1} is the identity, and
/// composed transversals agree with the product transversal.
Report verify_ledger_random(const TablePtr &table, int cases,
                            std::uint64_t seed);

/// Input {"group": preset, "places": [{"label", "q", "s"}, ...]}; s is an
/// element index or cycle notation.
Report ledger_demo(const nlohmann::json &spec);

struct CruxIdentification {
  long u = 1; // chi_r -> chi[u r / e]
  bool match = false;
};

struct CruxChi {
  std::string chi;
  std::string image;
  Rational lhs_val; // v_lambda(J*(image))
  Rational rhs_val; // (p-1)(<chi,s>* - <chi,s>)
};

struct CruxResult {
  long p = 0;
  long e = 0;
  std::vector<CruxIdentification> identifications;
  long reported_u = 1; // first match, or 1 if none matched
  std::vector<CruxChi> per_chi;
  bool pass = false;

  nlohmann::json to_json() const;
  Report to_report() const;
};

/// Valuation-level comparison for G = C_e = <s> over F_p: every group
/// isomorphism from the characters of G to the order-e characters of
/// F_p^x is tried. e odd, e | p - 1, p <= 101.
/// lambda_precision = 0 uses the default starting precision.
CruxResult crux_check(long p, long e, long lambda_precision = 0);

} // namespace stickel
