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

#include "diffbrauer/roots.hpp"

#include <algorithm>
#include <map>

#include "diffbrauer/error.hpp"

namespace diffbrauer {

namespace {

mpz_class pollard_brent(const mpz_class& n) {
  if (n % 2 == 0) return 2;
  for (unsigned long seed = 1;; ++seed) {
    mpz_class y = seed + 1, c = seed, m = 128, g = 1, r = 1, q = 1, x, ys;
    const auto f = [&](const mpz_class& v) { return mpz_class((v * v + c) % n); };
    do {
      x = y;
      for (mpz_class i = 0; i < r; ++i) y = f(y);
      mpz_class k = 0;
      do {
        ys = y;
        for (mpz_class i = 0, lim = std::min(m, mpz_class(r - k)); i < lim; ++i) {
          y = f(y);
          q = (q * abs(mpz_class(x - y))) % n;
        }
        g = gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = gcd(mpz_class(abs(mpz_class(x - ys))), n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(mpz_class n, std::map<mpz_class, unsigned>& out) {
  for (unsigned long p = 2; p < 65536 && p * p <= n; p += (p == 2 ? 1 : 2)) {
    while (n % p == 0) {
      ++out[mpz_class(p)];
      n /= p;
    }
  }
  if (n == 1) return;
  if (mpz_probab_prime_p(n.get_mpz_t(), 30) > 0) {
    ++out[n];
    return;
  }
  const mpz_class d = pollard_brent(n);
  factor_into(d, out);
  factor_into(mpz_class(n / d), out);
}

// q^deg · p(num/den) for integer coefficients, exact.
mpz_class scaled_value(const std::vector<mpz_class>& coeffs, const mpz_class& num, const mpz_class& den) {
  mpz_class acc = 0, den_pow = 1;
  for (std::size_t k = coeffs.size(); k-- > 0;) {
    acc = acc * num + coeffs[k] * den_pow;
    den_pow *= den;
  }
  return acc;
}

}  // namespace

std::vector<mpz_class> primitive_integer_form(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "primitive form of the zero polynomial");
  mpz_class l = 1;
  for (const Rational& c : p.coeffs()) l = lcm(l, c.den());
  std::vector<mpz_class> out;
  mpz_class g = 0;
  for (const Rational& c : p.coeffs()) {
    out.emplace_back(c.num() * (l / c.den()));
    g = gcd(g, out.back());
  }
  if (p.leading().sign() < 0) g = -g;
  for (mpz_class& c : out) c /= g;
  return out;
}

std::vector<mpz_class> positive_divisors(const mpz_class& n) {
  if (n == 0) fail(ErrorCode::InvalidArgument, "divisors of zero");
  std::map<mpz_class, unsigned> factors;
  factor_into(abs(n), factors);
  std::vector<mpz_class> divs{1};
  for (const auto& [prime, mult] : factors) {
    const std::size_t base = divs.size();
    mpz_class pk = 1;
    for (unsigned e = 1; e <= mult; ++e) {
      pk *= prime;
      for (std::size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

RootData rational_roots(const Polynomial& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "rational roots of the zero polynomial");
  RootData out;
  Polynomial rest = p;
  // Zero roots first so the trailing coefficient is nonzero.
  while (rest.degree() > 0 && rest.constant_term().is_zero()) {
    out.roots.emplace_back(0);
    rest = rest / Polynomial::variable();
  }
  if (rest.degree() > 0) {
    // Distinct roots of p are the roots of its squarefree part, whose
    // coefficients are usually far smaller.
    const std::vector<mpz_class> sq = primitive_integer_form(squarefree_part(rest));
    const std::vector<mpz_class> nums = positive_divisors(sq.front());
    const std::vector<mpz_class> dens = positive_divisors(sq.back());
    // Cauchy bound on |root|, scaled to avoid fractions: |r| <= 1 + max|a_i/a_n|.
    mpz_class max_ratio_num = 0;
    for (std::size_t k = 0; k + 1 < sq.size(); ++k) max_ratio_num = std::max(max_ratio_num, mpz_class(abs(sq[k])));
    const Rational bound = Rational(1) + Rational(max_ratio_num, abs(sq.back()));
    std::vector<Rational> found;
    for (const mpz_class& d : dens)
      for (const mpz_class& n : nums) {
        if (gcd(n, d) != 1) continue;
        if (Rational(n, d) > bound) continue;
        for (const mpz_class& s : {mpz_class(n), mpz_class(-n)})
          if (scaled_value(sq, s, d) == 0) found.emplace_back(s, d);
      }
    for (const Rational& r : found) {
      const Polynomial lin{-r, Rational(1)};
      for (;;) {
        auto [q, rem] = rest.divmod(lin);
        if (!rem.is_zero()) break;
        out.roots.push_back(r);
        rest = std::move(q);
      }
    }
  }
  std::sort(out.roots.begin(), out.roots.end());
  out.splits = static_cast<long>(out.roots.size()) == p.degree();
  return out;
}

std::vector<Rational> distinct(const std::vector<Rational>& sorted_multiset) {
  std::vector<Rational> out = sorted_multiset;
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys) {
  if (xs.size() != ys.size()) fail(ErrorCode::DimensionMismatch, "interpolation nodes and values differ in length");
  std::vector<Rational> dd(ys.begin(), ys.end());
  for (std::size_t level = 1; level < xs.size(); ++level)
    for (std::size_t i = xs.size() - 1; i >= level; --i) dd[i] = (dd[i] - dd[i - 1]) / (xs[i] - xs[i - level]);
  Polynomial acc;
  for (std::size_t i = xs.size(); i-- > 0;) acc = acc * Polynomial{-xs[i], Rational(1)} + Polynomial(dd[i]);
  return acc;
}

Polynomial rothstein_trager_resultant(const Polynomial& a, const Polynomial& q) {
  const Polynomial dq = q.derivative();
  const std::size_t points = static_cast<std::size_t>(std::max(0L, q.degree())) + 1;
  std::vector<Rational> xs, ys;
  for (std::size_t k = 0; k < points; ++k) {
    const Rational t(static_cast<long>(k));
    xs.push_back(t);
    ys.push_back(resultant(q, a - Polynomial(t) * dq));
  }
  return interpolate(xs, ys);
}

std::optional<RationalFunction> log_derivative_solve(const RationalFunction& f) {
  if (f.is_zero()) return RationalFunction(1);
  const Polynomial& a = f.num();
  const Polynomial& q = f.den();
  // Nonzero polynomial part (including nonzero constants): no rational solution.
  if (a.degree() >= q.degree()) return std::nullopt;
  // Poles of order > 1 never occur in a logarithmic derivative.
  if (!gcd(q, q.derivative()).is_constant()) return std::nullopt;
  const RootData residues = rational_roots(rothstein_trager_resultant(a, q));
  if (!residues.splits) return std::nullopt;
  for (const Rational& r : residues.roots)
    if (!r.is_integer()) return std::nullopt;
  RationalFunction y(1);
  for (const Rational& n : distinct(residues.roots)) {
    const Polynomial g = gcd(q, a - Polynomial(n) * q.derivative());
    y *= RationalFunction(g).pow(static_cast<int>(n.num().get_si()));
  }
  if (!(y.derivative() == f * y)) fail(ErrorCode::Integrity, "assembled logarithmic-derivative solution failed its check");
  return y;
}

}  // namespace diffbrauer
