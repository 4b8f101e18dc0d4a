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

#include "stickel/characters.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "stickel/error.hpp"

namespace stickel {

namespace {

using u64 = std::uint64_t;
using ModMat = std::vector<std::vector<u64>>; // row-major

u64 inv_mod(u64 a, u64 P) { return powmod_u64(a, P - 2, P); }

// Row-reduce in place; returns pivot columns.
std::vector<std::size_t> rref(ModMat &m, u64 P) {
  std::vector<std::size_t> pivots;
  if (m.empty())
    return pivots;
  const std::size_t rows = m.size(), cols = m[0].size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && m[piv][c] == 0)
      ++piv;
    if (piv == rows)
      continue;
    std::swap(m[piv], m[r]);
    const u64 inv = inv_mod(m[r][c], P);
    for (auto &x : m[r])
      x = x * inv % P;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c] == 0)
        continue;
      const u64 f = m[i][c];
      for (std::size_t k = 0; k < cols; ++k)
        m[i][k] = (m[i][k] + P - f * m[r][k] % P) % P;
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

// Basis of the null space {y : m y = 0} as column vectors.
std::vector<std::vector<u64>> nullspace(ModMat m, std::size_t cols, u64 P) {
  auto piv = rref(m, P);
  std::vector<bool> is_piv(cols, false);
  for (auto c : piv)
    is_piv[c] = true;
  std::vector<std::vector<u64>> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_piv[free])
      continue;
    std::vector<u64> y(cols, 0);
    y[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i)
      y[piv[i]] = (P - m[i][free]) % P;
    basis.push_back(std::move(y));
  }
  return basis;
}

// Product of a K x K matrix with the K x d matrix whose columns are `cols`.
ModMat mul_cols(const ModMat &a, const std::vector<std::vector<u64>> &cols,
                u64 P) {
  const std::size_t K = a.size(), d = cols.size();
  ModMat out(K, std::vector<u64>(d, 0));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      u64 s = 0;
      for (std::size_t k = 0; k < K; ++k)
        s = (s + a[i][k] * cols[j][k]) % P;
      out[i][j] = s;
    }
  return out;
}

// Split the invariant subspace spanned by `space` into simultaneous
// eigenspaces of all class matrices.
void split(const std::vector<ModMat> &mats, std::vector<std::vector<u64>> space,
           std::size_t start, u64 P,
           std::vector<std::vector<u64>> &out_vectors) {
  const std::size_t K = mats[0].size();
  if (space.size() == 1) {
    out_vectors.push_back(space[0]);
    return;
  }
  for (std::size_t j = start; j < mats.size(); ++j) {
    const ModMat AB = mul_cols(mats[j], space, P);
    std::vector<std::vector<std::vector<u64>>> pieces;
    std::size_t found = 0;
    for (u64 lam = 0; lam < P && found < space.size(); ++lam) {
      // (A - lam) B y = 0
      ModMat m = AB;
      for (std::size_t i = 0; i < K; ++i)
        for (std::size_t c = 0; c < space.size(); ++c)
          m[i][c] = (m[i][c] + P - lam * space[c][i] % P) % P;
      auto ys = nullspace(m, space.size(), P);
      if (ys.empty())
        continue;
      std::vector<std::vector<u64>> piece;
      for (const auto &y : ys) {
        std::vector<u64> v(K, 0);
        for (std::size_t c = 0; c < space.size(); ++c)
          for (std::size_t i = 0; i < K; ++i)
            v[i] = (v[i] + y[c] * space[c][i]) % P;
        piece.push_back(std::move(v));
      }
      found += piece.size();
      pieces.push_back(std::move(piece));
    }
    if (found != space.size())
      throw InternalError("class algebra does not split modulo P");
    if (pieces.size() == 1)
      continue;
    for (auto &piece : pieces)
      split(mats, std::move(piece), j + 1, P, out_vectors);
    return;
  }
  throw InternalError("simultaneous eigenspace did not become one-dimensional");
}

u64 choose_prime(long exponent, long order) {
  for (u64 P = static_cast<u64>(exponent) + 1;; P += static_cast<u64>(exponent)) {
    if (P > static_cast<u64>(2 * order + 2) && is_prime_long(static_cast<long>(P)))
      return P;
  }
}

u64 primitive_root_mod(u64 P) {
  std::vector<u64> fac;
  u64 m = P - 1;
  for (u64 d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      fac.push_back(d);
      while (m % d == 0)
        m /= d;
    }
  if (m > 1)
    fac.push_back(m);
  for (u64 g = 2;; ++g) {
    bool ok = true;
    for (u64 q : fac)
      if (powmod_u64(g, (P - 1) / q, P) == 1) {
        ok = false;
        break;
      }
    if (ok)
      return g;
  }
}

std::vector<std::vector<CycNum>> dixon_rows(const FiniteGroup &G) {
  const auto &cc = G.classes();
  const std::size_t K = cc.size();
  const long n = G.order();
  const long e = G.exponent();
  const u64 P = choose_prime(e, n);

  // A_j[r][k] = #{x in C_j : x^-1 g_k in C_r}
  std::vector<ModMat> mats(K, ModMat(K, std::vector<u64>(K, 0)));
  for (std::size_t j = 0; j < K; ++j)
    for (std::size_t k = 0; k < K; ++k) {
      const Elem gk = cc.representatives[k];
      for (Elem x : cc.classes[j]) {
        const int r = G.class_of(G.mul(G.inv(x), gk));
        mats[j][r][k] = (mats[j][r][k] + 1) % P;
      }
    }

  std::vector<std::vector<u64>> full;
  for (std::size_t k = 0; k < K; ++k) {
    std::vector<u64> v(K, 0);
    v[k] = 1;
    full.push_back(std::move(v));
  }
  std::vector<std::vector<u64>> omegas;
  split(mats, std::move(full), 1, P, omegas);
  if (omegas.size() != K)
    throw InternalError("Dixon: wrong number of characters");

  std::vector<int> inverse_class(K);
  for (std::size_t k = 0; k < K; ++k)
    inverse_class[k] = G.class_of(G.inv(cc.representatives[k]));

  const u64 z = powmod_u64(primitive_root_mod(P), (P - 1) / e, P);
  const u64 z_inv = inv_mod(z, P);
  const u64 e_inv = inv_mod(static_cast<u64>(e), P);

  std::vector<std::vector<CycNum>> rows;
  for (auto w : omegas) {
    if (w[0] == 0)
      throw InternalError("Dixon: eigenvector vanishes at the identity");
    const u64 s0 = inv_mod(w[0], P);
    for (auto &x : w)
      x = x * s0 % P;
    u64 S = 0;
    for (std::size_t k = 0; k < K; ++k) {
      const u64 csz = cc.classes[k].size() % P;
      S = (S + w[k] * w[inverse_class[k]] % P * inv_mod(csz, P)) % P;
    }
    const u64 d2 = static_cast<u64>(n) % P * inv_mod(S, P) % P;
    long deg = -1;
    for (long d = 1; d * d <= n; ++d)
      if (static_cast<u64>(d * d) % P == d2) {
        deg = d;
        break;
      }
    if (deg < 0)
      throw InternalError("Dixon: degree recovery failed");
    std::vector<u64> chi_mod(K);
    for (std::size_t k = 0; k < K; ++k)
      chi_mod[k] = static_cast<u64>(deg) * w[k] % P *
                   inv_mod(cc.classes[k].size() % P, P) % P;

    std::vector<CycNum> row;
    row.reserve(K);
    for (std::size_t k = 0; k < K; ++k) {
      const Elem g = cc.representatives[k];
      std::vector<u64> pw(e);
      Elem x = 0;
      for (long l = 0; l < e; ++l) {
        pw[l] = chi_mod[G.class_of(x)];
        x = G.mul(x, g);
      }
      std::vector<Integer> counts(e);
      for (long t = 0; t < e; ++t) {
        u64 acc = 0;
        const u64 zt = powmod_u64(z_inv, static_cast<u64>(t), P);
        u64 zz = 1;
        for (long l = 0; l < e; ++l) {
          acc = (acc + pw[l] * zz) % P;
          zz = zz * zt % P;
        }
        const u64 mult = acc * e_inv % P;
        if (mult > static_cast<u64>(deg))
          throw InternalError("Dixon: eigenvalue multiplicity out of range");
        counts[t] = static_cast<unsigned long>(mult);
      }
      row.push_back(CycNum::from_exponent_counts(e, counts));
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

} // namespace

CharTable::CharTable(GroupPtr g, long conductor,
                     std::vector<std::vector<CycNum>> rows)
    : group_(std::move(g)), conductor_(conductor), values_(std::move(rows)) {
  for (auto &row : values_)
    for (auto &v : row)
      if (v.conductor() != conductor_)
        v = v.embed(conductor_);
  for (const auto &row : values_) {
    auto d = row[0].as_rational();
    if (!d || d->get_den() != 1 || *d <= 0)
      throw InternalError("character degree is not a positive integer");
    degrees_.push_back(d->get_num().get_si());
  }
  certify();
}

void CharTable::certify() const {
  const auto &G = *group_;
  const auto &cc = G.classes();
  const std::size_t K = cc.size();
  if (values_.size() != K)
    throw InternalError("character table is not square");
  long sum_sq = 0;
  for (long d : degrees_)
    sum_sq += d * d;
  if (sum_sq != G.order())
    throw InternalError("sum of squared degrees differs from |G|");
  std::vector<std::vector<CycNum>> conj(K, std::vector<CycNum>(K));
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t k = 0; k < K; ++k)
      conj[i][k] = values_[i][k].conj();
  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i; j < K; ++j) {
      CycNum s(Rational(0), conductor_);
      for (std::size_t k = 0; k < K; ++k)
        s += CycNum(Rational(static_cast<long>(cc.classes[k].size()))) *
             values_[i][k] * conj[j][k];
      if (!(s == CycNum(Rational(i == j ? G.order() : 0))))
        throw InternalError("row orthogonality fails for characters " +
                            std::to_string(i) + ", " + std::to_string(j));
    }
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t l = k; l < K; ++l) {
      CycNum s(Rational(0), conductor_);
      for (std::size_t i = 0; i < K; ++i)
        s += values_[i][k] * conj[i][l];
      Rational expect(0);
      if (k == l) {
        expect = Rational(G.order(), static_cast<long>(cc.classes[k].size()));
        expect.canonicalize();
      }
      if (!(s == CycNum(expect)))
        throw InternalError("column orthogonality fails for classes " +
                            std::to_string(k) + ", " + std::to_string(l));
    }
}

nlohmann::json CharTable::to_json() const {
  const auto &G = *group_;
  nlohmann::json classes = nlohmann::json::array();
  for (std::size_t k = 0; k < G.classes().size(); ++k) {
    const Elem r = G.classes().representatives[k];
    classes.push_back({{"representative", G.label(r)},
                       {"size", static_cast<long>(G.classes().classes[k].size())},
                       {"element_order", G.element_order(r)}});
  }
  nlohmann::json chars = nlohmann::json::array();
  for (std::size_t i = 0; i < values_.size(); ++i) {
    nlohmann::json vals = nlohmann::json::array();
    for (const auto &v : values_[i])
      vals.push_back(v.to_json());
    chars.push_back({{"index", static_cast<long>(i)},
                     {"degree", degrees_[i]},
                     {"values", vals}});
  }
  return {{"group", G.name()},
          {"order", G.order()},
          {"conductor", conductor_},
          {"classes", classes},
          {"characters", chars}};
}

TablePtr irr_table(GroupPtr g) {
  auto rows = dixon_rows(*g);
  const long e = g->exponent();
  for (auto &row : rows)
    for (auto &v : row)
      v = v.embed(e);
  auto is_trivial = [](const std::vector<CycNum> &row) {
    return std::all_of(row.begin(), row.end(),
                       [](const CycNum &v) { return v == CycNum(1); });
  };
  std::sort(rows.begin(), rows.end(),
            [&](const std::vector<CycNum> &a, const std::vector<CycNum> &b) {
              const auto da = *a[0].as_rational(), db = *b[0].as_rational();
              if (da != db)
                return da < db;
              const bool ta = is_trivial(a), tb = is_trivial(b);
              if (ta != tb)
                return ta;
              for (std::size_t k = 0; k < a.size(); ++k) {
                auto c = CycNum::compare_in(e, a[k], b[k]);
                if (c != 0)
                  return c < 0;
              }
              return false;
            });
  return TablePtr(new CharTable(g, e, std::move(rows)));
}

TablePtr cyclic_table(GroupPtr h) {
  const int o = h->order();
  for (int i = 1; i <= o && o > 1; ++i)
    if (h->mul(i - 1, 1) != i % o)
      throw GroupError("cyclic_table: element i must equal gen^i");
  std::vector<std::vector<CycNum>> rows(o, std::vector<CycNum>(o));
  for (int j = 0; j < o; ++j)
    for (int i = 0; i < o; ++i)
      rows[j][h->class_of(i)] = CycNum::zeta(o, static_cast<long>(i) * j);
  return TablePtr(new CharTable(h, o, std::move(rows)));
}

// ---- VirtualChar -------------------------------------------------------

VirtualChar::VirtualChar(TablePtr table)
    : table_(std::move(table)), coeffs_(table_->size(), Rational(0)) {}

VirtualChar::VirtualChar(TablePtr table, std::vector<Rational> coeffs)
    : table_(std::move(table)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != table_->size())
    throw DomainError("VirtualChar: coefficient count differs from table size");
}

VirtualChar VirtualChar::irreducible(TablePtr table, std::size_t chi) {
  VirtualChar v(table);
  if (chi >= v.coeffs_.size())
    throw DomainError("irreducible index out of range");
  v.coeffs_[chi] = 1;
  return v;
}

std::vector<CycNum> VirtualChar::class_values() const {
  const std::size_t K = table_->size();
  std::vector<CycNum> out(K, CycNum(Rational(0), table_->conductor()));
  for (std::size_t i = 0; i < K; ++i) {
    if (coeffs_[i] == 0)
      continue;
    const CycNum c(coeffs_[i]);
    for (std::size_t k = 0; k < K; ++k)
      out[k] += c * table_->value(i, static_cast<int>(k));
  }
  return out;
}

CycNum VirtualChar::value_at(Elem g) const {
  CycNum out(Rational(0), table_->conductor());
  const int k = table_->group().class_of(g);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != 0)
      out += CycNum(coeffs_[i]) * table_->value(i, k);
  return out;
}

bool VirtualChar::is_integral() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational &c) { return c.get_den() == 1; });
}

bool VirtualChar::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(),
                     [](const Rational &c) { return c == 0; });
}

void VirtualChar::require_same(const VirtualChar &b) const {
  if (table_ != b.table_)
    throw DomainError("virtual characters belong to different tables");
}

VirtualChar &VirtualChar::operator+=(const VirtualChar &b) {
  require_same(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] += b.coeffs_[i];
  return *this;
}

VirtualChar &VirtualChar::operator-=(const VirtualChar &b) {
  require_same(b);
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    coeffs_[i] -= b.coeffs_[i];
  return *this;
}

VirtualChar &VirtualChar::operator*=(const Rational &c) {
  for (auto &x : coeffs_)
    x *= c;
  return *this;
}

bool operator==(const VirtualChar &a, const VirtualChar &b) {
  return a.table_ == b.table_ && a.coeffs_ == b.coeffs_;
}

std::string VirtualChar::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0)
      continue;
    if (!first)
      os << (coeffs_[i] < 0 ? " - " : " + ");
    else if (coeffs_[i] < 0)
      os << "-";
    first = false;
    Rational a = abs(coeffs_[i]);
    if (a != 1)
      os << a.get_str() << "*";
    os << "x" << i;
  }
  return first ? "0" : os.str();
}

nlohmann::json VirtualChar::to_json() const {
  nlohmann::json j = nlohmann::json::array();
  for (const auto &c : coeffs_)
    j.push_back(to_fraction_string(c));
  return j;
}

// ---- operations --------------------------------------------------------

namespace {

Rational class_inner(const TablePtr &t, const std::vector<CycNum> &a,
                     const std::vector<CycNum> &b) {
  const auto &G = t->group();
  CycNum s(Rational(0), t->conductor());
  for (std::size_t k = 0; k < a.size(); ++k) {
    if (a[k].is_zero() || b[k].is_zero())
      continue;
    s += CycNum(Rational(static_cast<long>(G.classes().classes[k].size()))) *
         a[k] * b[k].conj();
  }
  auto r = s.as_rational();
  if (!r)
    throw DomainError("inner product is not rational");
  Rational out = *r / G.order();
  out.canonicalize();
  return out;
}

} // namespace

VirtualChar decompose(const TablePtr &table,
                      const std::vector<CycNum> &values) {
  if (values.size() != table->size())
    throw DomainError("class function has the wrong number of classes");
  std::vector<Rational> coeffs;
  coeffs.reserve(table->size());
  for (std::size_t i = 0; i < table->size(); ++i)
    coeffs.push_back(class_inner(table, values, table->row(i)));
  return VirtualChar(table, std::move(coeffs));
}

Rational inner_product(const VirtualChar &a, const VirtualChar &b) {
  if (a.table() != b.table())
    throw DomainError("inner_product: characters of different groups");
  return class_inner(a.table(), a.class_values(), b.class_values());
}

VirtualChar product(const VirtualChar &a, const VirtualChar &b) {
  if (a.table() != b.table())
    throw DomainError("product: characters of different groups");
  auto va = a.class_values();
  const auto vb = b.class_values();
  for (std::size_t k = 0; k < va.size(); ++k)
    va[k] *= vb[k];
  return decompose(a.table(), va);
}

VirtualChar restrict_to(const VirtualChar &chi, const Subgroup &h,
                        const TablePtr &h_table) {
  if (h.parent.get() != chi.table()->group_ptr().get())
    throw DomainError("restrict: subgroup of a different group");
  if (h_table->group_ptr().get() != h.group.get())
    throw DomainError("restrict: table does not belong to the subgroup");
  const auto &H = *h.group;
  const auto &G = chi.table()->group();
  const auto gvals = chi.class_values();
  std::vector<CycNum> hv;
  hv.reserve(H.classes().size());
  for (std::size_t c = 0; c < H.classes().size(); ++c) {
    const Elem rep = H.classes().representatives[c];
    hv.push_back(gvals[G.class_of(h.embed[rep])]);
  }
  return decompose(h_table, hv);
}

VirtualChar induce(const VirtualChar &xi, const Subgroup &h,
                   const TablePtr &g_table) {
  if (xi.table()->group_ptr().get() != h.group.get())
    throw DomainError("induce: character is not on the subgroup");
  if (g_table->group_ptr().get() != h.parent.get())
    throw DomainError("induce: table does not belong to the parent group");
  const auto &G = *h.parent;
  const auto &H = *h.group;
  const auto hvals = xi.class_values();
  std::vector<CycNum> gv;
  for (std::size_t k = 0; k < G.classes().size(); ++k) {
    const Elem g = G.classes().representatives[k];
    CycNum s(Rational(0), xi.table()->conductor());
    for (Elem x = 0; x < G.order(); ++x) {
      const Elem y = G.mul(G.mul(x, g), G.inv(x));
      const int hi = h.index_of[y];
      if (hi >= 0)
        s += hvals[H.class_of(hi)];
    }
    gv.push_back(s * CycNum(Rational(1, H.order())));
  }
  return decompose(g_table, gv);
}

VirtualChar adams(const VirtualChar &chi, long k) {
  if (k < 1)
    throw DomainError("adams: k must be positive");
  const auto &G = chi.table()->group();
  const auto vals = chi.class_values();
  std::vector<CycNum> out;
  out.reserve(vals.size());
  for (std::size_t c = 0; c < vals.size(); ++c) {
    const Elem g = G.classes().representatives[c];
    out.push_back(vals[G.class_of(G.pow(g, k))]);
  }
  VirtualChar r;
  try {
    r = decompose(chi.table(), out);
  } catch (const DomainError &e) {
    throw InternalError(std::string("adams: ") + e.what());
  }
  if (chi.is_integral() && !r.is_integral())
    throw InternalError("adams: image of an integral character is not integral");
  return r;
}

VirtualChar galois_twist(const VirtualChar &chi, long k) {
  const long e = chi.table()->conductor();
  if (std::gcd(mod_floor(k, e), e) != 1 && e != 1)
    throw DomainError("galois_twist: " + std::to_string(k) +
                      " is not coprime to the exponent " + std::to_string(e));
  auto vals = chi.class_values();
  for (auto &v : vals)
    v = v.galois_apply(k);
  return decompose(chi.table(), vals);
}

Report verify_character_table(const TablePtr &table) {
  const auto &G = table->group();
  const auto &cc = G.classes();
  const std::size_t K = table->size();
  Report rep;
  rep.name = "character_table";
  rep.meta = {{"group", G.name()},
              {"order", G.order()},
              {"classes", static_cast<long>(K)},
              {"degrees", table->degrees()}};

  long sum_sq = 0;
  for (long d : table->degrees())
    sum_sq += d * d;
  rep.add_equal("degree_square_sum", G.name(), std::to_string(sum_sq),
                std::to_string(G.order()));

  for (std::size_t i = 0; i < K; ++i)
    for (std::size_t j = i; j < K; ++j) {
      const Rational ip = inner_product(VirtualChar::irreducible(table, i),
                                        VirtualChar::irreducible(table, j));
      rep.add_equal("row_orthogonality",
                    "chi" + std::to_string(i) + ",chi" + std::to_string(j),
                    to_fraction_string(ip),
                    to_fraction_string(Rational(i == j ? 1 : 0)));
    }
  for (std::size_t k = 0; k < K; ++k)
    for (std::size_t l = k; l < K; ++l) {
      CycNum s(Rational(0), table->conductor());
      for (std::size_t i = 0; i < K; ++i)
        s += table->value(i, static_cast<int>(k)) *
             table->value(i, static_cast<int>(l)).conj();
      Rational expect(0);
      if (k == l)
        expect = make_rational(G.order(),
                               static_cast<long>(cc.classes[k].size()));
      rep.add("column_orthogonality",
              "C" + std::to_string(k) + ",C" + std::to_string(l),
              s.to_string(), CycNum(expect).to_string(), s == CycNum(expect));
    }

  const auto subs = G.subgroups();
  for (std::size_t hi = 0; hi < subs.size(); ++hi) {
    const auto &elements = subs[hi];
    const Subgroup h = Subgroup::make(table->group_ptr(), elements);
    const TablePtr ht = irr_table(h.group);
    std::vector<VirtualChar> res;
    for (std::size_t i = 0; i < K; ++i)
      res.push_back(restrict_to(VirtualChar::irreducible(table, i), h, ht));
    for (std::size_t a = 0; a < ht->size(); ++a) {
      const VirtualChar psi = VirtualChar::irreducible(ht, a);
      const VirtualChar ind = induce(psi, h, table);
      for (std::size_t i = 0; i < K; ++i) {
        const Rational lhs =
            inner_product(ind, VirtualChar::irreducible(table, i));
        const Rational rhs = inner_product(psi, res[i]);
        rep.add_equal("frobenius_reciprocity",
                      "H" + std::to_string(hi) + ":psi" + std::to_string(a) +
                          ",chi" +
                          std::to_string(i),
                      to_fraction_string(lhs), to_fraction_string(rhs));
      }
    }
  }

  // sample: every irreducible, and chi_i - 2 chi_j for consecutive pairs
  std::vector<VirtualChar> sample;
  for (std::size_t i = 0; i < K; ++i)
    sample.push_back(VirtualChar::irreducible(table, i));
  for (std::size_t i = 0; i + 1 < K; ++i)
    sample.push_back(sample[i] - Rational(2) * sample[i + 1]);
  const long ks[] = {2, 3, 5};
  for (std::size_t v = 0; v < sample.size(); ++v)
    for (long a : ks)
      for (long b : ks) {
        const VirtualChar lhs = adams(adams(sample[v], b), a);
        const VirtualChar rhs = adams(sample[v], a * b);
        rep.add_equal("adams_composition",
                      "v" + std::to_string(v) + ":" + std::to_string(a) + "*" +
                          std::to_string(b),
                      lhs.to_string(), rhs.to_string());
      }
  return rep;
}

} // namespace stickel
