/*
 *   Copyright 2026 The diffbrauer Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "doctest.h"

#include <algorithm>

#include "diffbrauer/matrix.hpp"
#include "diffbrauer/roots.hpp"
#include "support/oracles.hpp"

using namespace diffbrauer;
using namespace diffbrauer::testing;

TEST_CASE("rational canonical form") {
  CHECK(Rational(mpz_class(2), mpz_class(4)).str() == "1/2");
  CHECK(Rational(mpz_class(-3), mpz_class(-6)).str() == "1/2");
  CHECK(Rational(mpz_class(3), mpz_class(-6)).str() == "-1/2");
  CHECK(Rational(mpz_class(0), mpz_class(-7)).den() == 1);
  CHECK(Rational::parse("-10/4") == q(-5, 2));
  CHECK(Rational::parse("17") == q(17));
  CHECK_THROWS_AS(Rational::parse("1/0"), Error);
  CHECK_THROWS_AS(Rational::parse("abc"), Error);
  CHECK_THROWS_AS(Rational::parse("1/-2"), Error);
  CHECK_THROWS_AS(q(1) / q(0), Error);
}

TEST_CASE("polynomial representation has no trailing zeros") {
  CHECK(poly({1, 2, 0, 0}).coeffs().size() == 2);
  CHECK(poly({0}).is_zero());
  CHECK(poly({0}).degree() == -1);
  const Polynomial a = poly({-1, 0, 1}), b = poly({1, 1});
  CHECK(a - b * poly({-1, 1}) == Polynomial{});
  CHECK(gcd(a, poly({2, 2})) == poly({1, 1}));
  const auto [qt, r] = poly({1, 0, 0, 1}).divmod(poly({1, 1}));
  CHECK(qt == poly({1, -1, 1}));
  CHECK(r.is_zero());
}

TEST_CASE("rational function canonical form") {
  const RF f(poly({-1, 0, 1}), poly({-2, 2}));
  CHECK(f.num() == Polynomial{q(1, 2), q(1, 2)});
  CHECK(f.den() == poly({1}));
  const RF g(poly({2}), poly({0, 4}));
  CHECK(g.den() == poly({0, 1}));
  CHECK(g.num() == Polynomial{q(1, 2)});
  CHECK(RF(poly({0}), poly({5, 1})).den() == poly({1}));
  CHECK_THROWS_AS(RF(poly({1}), Polynomial{}), Error);

  Random rnd(11);
  for (int k = 0; k < 200; ++k) {
    const RF a = rnd.function(), b = rnd.function();
    const RF s1 = (a + b) * b, s2 = a * b + b * b;
    CHECK(s1 == s2);
    CHECK(s1.num().coeffs() == s2.num().coeffs());
    CHECK(s1.den().leading() == q(1));
    CHECK(gcd(s1.num(), s1.den()).degree() <= 0);
  }
}

TEST_CASE("rf_derive examples") {
  CHECK(rf_derive(rf({0, 0, 1})) == rf({0, 2}));
  CHECK(rf_derive(rf({1}, {0, 1})) == rf({-1}, {0, 0, 1}));
  CHECK(rf_derive(rf({0, 1}, {1, 1})) == rf({1}, {1, 2, 1}));
  CHECK(rf_derive(RF(q(7, 3))).is_zero());
}

TEST_CASE("rf_derive agrees with the quotient rule after clearing denominators") {
  Random rnd(12);
  for (int k = 0; k < 300; ++k) {
    const Polynomial p = rnd.polynomial(4);
    Polynomial d = rnd.polynomial(3);
    if (d.is_zero()) continue;
    const RF g = rf_derive(RF(p, d));
    // g = (p'd - pd') / d^2  <=>  g.num * d^2 = (p'd - pd') * g.den
    CHECK(g.num() * d * d == (p.derivative() * d - p * d.derivative()) * g.den());
    CHECK(g.is_zero() == RF(p, d).is_constant());
  }
}

TEST_CASE("derivation is additive and Leibniz") {
  Random rnd(13);
  for (int k = 0; k < 300; ++k) {
    const RF f = rnd.function(3), g = rnd.function(3);
    CHECK(rf_derive(f + g) == rf_derive(f) + rf_derive(g));
    CHECK(rf_derive(f * g) == rf_derive(f) * g + f * rf_derive(g));
  }
}

TEST_CASE("char_poly examples") {
  CHECK(char_poly(QMatrix::identity(2)) == poly({1, -2, 1}));
  const QMatrix d{{q(0), q(0), q(0), q(0)}, {q(0), q(2), q(0), q(0)}, {q(0), q(0), q(-2), q(0)}, {q(0), q(0), q(0), q(0)}};
  CHECK(char_poly(d) == poly({0, 0, -4, 0, 1}));
  const QMatrix companion{{q(0), q(1)}, {q(1), q(1)}};
  CHECK(char_poly(companion) == poly({-1, -1, 1}));
  CHECK_THROWS_AS(char_poly(QMatrix(2, 3)), Error);
}

TEST_CASE("char_poly matches Faddeev-LeVerrier over Q") {
  Random rnd(14);
  for (int k = 0; k < 150; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 6));
    QMatrix m = rnd.rational_matrix(n);
    // sparse patterns exercise the Hessenberg pivot search
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (rnd.integer(0, 2) == 0) m(i, j) = Rational(0);
    CHECK(char_poly(m) == faddeev_leverrier(m));
  }
}

TEST_CASE("char_poly matches Faddeev-LeVerrier over Q(x)") {
  Random rnd(15);
  for (int k = 0; k < 30; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
    const RFMatrix m = rnd.function_matrix(n);
    CHECK(char_poly(m) == faddeev_leverrier(m));
  }
}

TEST_CASE("char_poly is a similarity invariant") {
  Random rnd(16);
  for (int k = 0; k < 100; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 5));
    const QMatrix m = rnd.rational_matrix(n), p = rnd.invertible_rational(n);
    CHECK(char_poly(p * m * inverse(p)) == char_poly(m));
  }
}

TEST_CASE("resultant agrees with the Sylvester determinant") {
  Random rnd(17);
  for (int k = 0; k < 200; ++k) {
    const Polynomial a = rnd.polynomial(4), b = rnd.polynomial(4);
    if (a.is_zero() || b.is_zero()) continue;
    CHECK(resultant(a, b) == sylvester_resultant(a, b));
  }
}

TEST_CASE("rational_roots examples") {
  const RootData a = rational_roots(poly({0, 0, -4, 0, 1}));
  CHECK(a.roots == std::vector<Rational>{q(-2), q(0), q(0), q(2)});
  CHECK(a.splits);
  const RootData b = rational_roots(poly({1, 0, 1}));
  CHECK(b.roots.empty());
  CHECK_FALSE(b.splits);
  const RootData c = rational_roots(Polynomial{q(-3, 2), q(1)});
  CHECK(c.roots == std::vector<Rational>{q(3, 2)});
  CHECK(c.splits);
  CHECK_THROWS_AS(rational_roots(Polynomial{}), Error);
  CHECK(rational_roots(poly({5})).splits);
}

TEST_CASE("rational_roots matches candidate evaluation with deflation") {
  Random rnd(18);
  for (int k = 0; k < 200; ++k) {
    Polynomial p = Polynomial(rnd.rational(4, 3));
    if (p.is_zero()) p = poly({1});
    const long linear = rnd.integer(0, 4);
    for (long i = 0; i < linear; ++i) p = p * Polynomial{-rnd.rational(4, 4), q(1)};
    if (rnd.integer(0, 1)) p = p * poly({rnd.integer(1, 3), 0, 1});
    if (rnd.integer(0, 1)) p = p * poly({-2, 0, 1});
    const RootData got = rational_roots(p);
    CHECK(got.roots == brute_force_roots(p));
    CHECK(got.splits == (static_cast<long>(got.roots.size()) == p.degree()));
  }
}

TEST_CASE("positive_divisors matches trial division") {
  for (long n : {1L, 2L, 12L, 97L, 360L, 1001L, 65536L, 999983L * 3}) {
    std::vector<mpz_class> expect = naive_divisors(mpz_class(n));
    std::sort(expect.begin(), expect.end());
    CHECK(positive_divisors(mpz_class(n)) == expect);
    CHECK(positive_divisors(mpz_class(-n)) == expect);
  }
}

TEST_CASE("squarefree_part examples") {
  CHECK(squarefree_part(poly({0, 0, -2, 1})) == poly({0, -2, 1}));
  CHECK(squarefree_part(poly({1, 0, 1})) == poly({1, 0, 1}));
  const Polynomial p = poly({-1, 1}).pow(3) * poly({1, 1});
  CHECK(squarefree_part(p) == poly({-1, 0, 1}));
  CHECK_THROWS_AS(squarefree_part(Polynomial{}), Error);
}

TEST_CASE("log_derivative_solve examples") {
  const auto zero = log_derivative_solve(RF());
  REQUIRE(zero.has_value());
  CHECK(*zero == RF(1));
  CHECK_FALSE(log_derivative_solve(RF(1)).has_value());
  const auto two_over_x = log_derivative_solve(rf({2}, {0, 1}));
  REQUIRE(two_over_x.has_value());
  CHECK(*two_over_x == rf({0, 0, 1}));
  CHECK_FALSE(log_derivative_solve(rf({1}, {0, 2})).has_value());
  const auto neg = log_derivative_solve(rf({-3}, {1, 1}));
  REQUIRE(neg.has_value());
  CHECK(*neg == rf({1}, {1, 3, 3, 1}));
}

TEST_CASE("log_derivative_solve solutions satisfy the equation") {
  Random rnd(19);
  for (int k = 0; k < 100; ++k) {
    RF y = RF(rnd.rational(3, 2));
    if (y.is_zero()) y = RF(1);
    const long factors = rnd.integer(0, 3);
    for (long i = 0; i < factors; ++i) {
      const RF lin = RF(Polynomial{rnd.rational(3, 2), q(rnd.integer(1, 2))});
      y = y * lin.pow(static_cast<int>(rnd.integer(-2, 2)));
    }
    if (rnd.integer(0, 1)) y = y * RF(poly({1, 0, 1}));
    const RF f = rf_derive(y) / y;
    const auto sol = log_derivative_solve(f);
    REQUIRE(sol.has_value());
    CHECK(rf_derive(*sol) == f * *sol);
    CHECK((*sol / y).is_constant());
  }
}

TEST_CASE("log_derivative_solve none agrees with bounded brute force") {
  const LogDerivativeTable table(4, 3);
  std::vector<RF> inputs = {RF(1), RF(q(-5, 7)), rf({1}, {0, 2}), rf({1}, {0, 0, 1}), rf({0, 1}),
                            rf({1}, {1, 0, 1}), rf({3}, {1, 0, 1}), rf({1}, {-3, 3}), rf({2, 0, 5}, {0, 1}),
                            rf({1}, {0, 1}) + RF(1), rf({1, 1}, {-1, 0, 1}) * RF(q(1, 3))};
  Random rnd(20);
  for (int k = 0; k < 15; ++k) inputs.push_back(rnd.function(2));
  int checked_none = 0;
  for (const RF& f : inputs) {
    const auto sol = log_derivative_solve(f);
    if (sol) {
      CHECK(rf_derive(*sol) == f * *sol);
    } else {
      ++checked_none;
      CHECK_FALSE(table.has_solution(f));
    }
  }
  CHECK(checked_none >= 11);
  // the table does find solutions that exist
  CHECK(table.has_solution(rf({2}, {0, 1})));
  CHECK(table.has_solution(rf({1}, {1, 1}) - rf({2, 0}, {3, 0, 1}) * RF(poly({0, 1}))));
}
