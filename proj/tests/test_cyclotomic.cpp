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

#include <doctest.h>

#include <numeric>

#include "stickel/cyclotomic.hpp"
#include "stickel/error.hpp"
#include "test_util.hpp"

using namespace stickel;
using testutil::numeric;

namespace {

// Phi_n by repeated exact division of x^n - 1 by Phi_d, d | n, d < n.
std::vector<Integer> phi_by_division(long n) {
  std::vector<Integer> p(n + 1);
  p[0] = -1;
  p[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d)
      continue;
    const auto q = phi_by_division(d);
    // long division, q monic
    std::vector<Integer> out(p.size() - q.size() + 1);
    for (long i = static_cast<long>(out.size()) - 1; i >= 0; --i) {
      out[i] = p[i + q.size() - 1];
      for (std::size_t j = 0; j < q.size(); ++j)
        p[i + j] -= out[i] * q[j];
    }
    p = out;
  }
  return p;
}

} // namespace

TEST_SUITE("cyclotomic") {

TEST_CASE("zeta examples") {
  CHECK(CycNum::zeta(1, 5) == CycNum(1));
  CHECK(CycNum::zeta(4, 2) == CycNum(-1));
  const CycNum a = CycNum::zeta(6, 2).embed(12);
  const CycNum b = CycNum::zeta(12, 4);
  CHECK(a == b);
  CHECK(a.numerators() == b.embed(12).numerators());
  CHECK_THROWS_AS(CycNum::zeta(0, 1), DomainError);
}

TEST_CASE("arithmetic examples") {
  const CycNum z3 = CycNum::zeta(3);
  CHECK((z3 + z3 * z3) + CycNum(1) == CycNum(0));
  CHECK((z3 + z3 * z3 + CycNum(1)).is_zero());
  CHECK(CycNum::zeta(5) * CycNum::zeta(5, 4) == CycNum(1));
  const CycNum d = z3 - z3 * z3;
  CHECK(d * d == CycNum(-3));
  CHECK_THROWS_AS(z3 / CycNum(0), DivisionByZero);
  CHECK_THROWS_AS(CycNum(0).inverse(), DivisionByZero);
}

TEST_CASE("galois examples") {
  CHECK(CycNum::zeta(5).galois_apply(2) == CycNum::zeta(5, 2));
  CHECK(CycNum(make_rational(3, 7)).galois_apply(5) == CycNum(make_rational(3, 7)));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 10; ++i) {
    const CycNum a = testutil::random_cyc(7, rng);
    CHECK(a.galois_apply(2).galois_apply(3) == a.galois_apply(6));
  }
  CHECK_THROWS_AS(CycNum::zeta(6).galois_apply(2), DomainError);
  CHECK(CycNum::zeta(5, 1).conj() == CycNum::zeta(5, 4));
}

TEST_CASE("as_rational examples") {
  const CycNum z3 = CycNum::zeta(3);
  REQUIRE((z3 + z3 * z3).as_rational().has_value());
  CHECK(*(z3 + z3 * z3).as_rational() == Rational(-1));
  CHECK_FALSE(z3.as_rational().has_value());
  const CycNum z = CycNum::zeta(5);
  const CycNum x = (z + z.pow(4)) * (z.pow(2) + z.pow(3)) * CycNum(-1);
  REQUIRE(x.as_rational().has_value());
  // oracle: numerical value of the product
  CHECK(std::abs(numeric(x).real() - x.as_rational()->get_d()) < 1e-9);
}

TEST_CASE("cyclotomic polynomial matches exact division") {
  for (long n = 1; n <= 60; ++n)
    CHECK_MESSAGE(cyclotomic_polynomial(n) == phi_by_division(n), "n = " << n);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  const long conductors[] = {1, 3, 4, 5, 8, 9, 12, 15, 21};
  for (long n : conductors)
    for (int i = 0; i < 6; ++i) {
      const CycNum a = testutil::random_cyc(n, rng);
      const CycNum b = testutil::random_cyc(n, rng);
      const CycNum c = testutil::random_cyc(3 * n, rng);
      CHECK(a * b == b * a);
      CHECK((a * b).numerators() == (b * a).numerators());
      CHECK((a + b) * c == a * c + b * c);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a - a == CycNum(0));
      if (!b.is_zero())
        CHECK((a / b) * b == a);
      // numeric oracle
      CHECK(testutil::close(numeric(a * c), numeric(a) * numeric(c)));
      CHECK(testutil::close(numeric(a + c), numeric(a) + numeric(c)));
    }
}

TEST_CASE("galois action is a ring automorphism") {
  std::mt19937_64 rng(13);
  const long n = 15;
  for (long k = 1; k < n; ++k) {
    if (std::gcd(k, n) != 1)
      continue;
    const CycNum a = testutil::random_cyc(n, rng), b = testutil::random_cyc(n, rng);
    CHECK((a + b).galois_apply(k) == a.galois_apply(k) + b.galois_apply(k));
    CHECK((a * b).galois_apply(k) == a.galois_apply(k) * b.galois_apply(k));
  }
}

TEST_CASE("product of conjugates is rational and equals the norm") {
  std::mt19937_64 rng(17);
  const long conductors[] = {3, 5, 7, 8, 12, 20};
  for (long n : conductors) {
    const CycNum a = testutil::random_cyc(n, rng);
    CycNum prod(1);
    for (long k = 1; k < n; ++k)
      if (std::gcd(k, n) == 1)
        prod *= a.galois_apply(k);
    REQUIRE(prod.as_rational().has_value());
    CHECK(*prod.as_rational() == a.norm());
  }
}

TEST_CASE("inverse and powers") {
  std::mt19937_64 rng(19);
  for (int i = 0; i < 8; ++i) {
    const CycNum a = testutil::random_cyc(20, rng);
    if (a.is_zero())
      continue;
    CHECK(a * a.inverse() == CycNum(1));
    CHECK(a.pow(-2) * a.pow(3) == a);
  }
}

TEST_CASE("json round trip is exact") {
  std::mt19937_64 rng(23);
  for (long n : {1L, 7L, 12L, 30L}) {
    const CycNum a = testutil::random_cyc(n, rng) * CycNum(make_rational(1, 6));
    const auto j = a.to_json();
    const CycNum b = CycNum::from_json(j);
    CHECK(b == a);
    CHECK(b.to_json().dump() == j.dump());
  }
  const auto j = CycNum(3).to_json();
  CHECK(j.dump() == R"({"coeffs":[[0,"3/1"]],"n":1})");
}

TEST_CASE("determinant") {
  const CycNum z = CycNum::zeta(3);
  // Vandermonde on 1, z, z^2: det = prod_{i<j} (x_j - x_i)
  std::vector<std::vector<CycNum>> m(3, std::vector<CycNum>(3));
  const CycNum x[] = {CycNum(1), z, z * z};
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      m[i][j] = x[i].pow(j);
  const CycNum expect = (x[1] - x[0]) * (x[2] - x[0]) * (x[2] - x[1]);
  CHECK(determinant(m) == expect);
  CHECK(determinant({{CycNum(1), CycNum(2)}, {CycNum(2), CycNum(4)}}) == CycNum(0));
}

}
