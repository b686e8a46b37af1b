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

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "diffbrauer/polynomial.hpp"
#include "diffbrauer/rational_function.hpp"

namespace diffbrauer {

struct RootData {
  /// Rational roots, sorted ascending, each repeated by its multiplicity.
  std::vector<Rational> roots;
  /// True iff the multiplicities add up to the degree.
  bool splits = false;
};

/// Integer coefficients with gcd 1 and positive leading coefficient,
/// proportional to `p`.
std::vector<mpz_class> primitive_integer_form(const Polynomial& p);

/// All positive divisors of |n| (n != 0), ascending.
std::vector<mpz_class> positive_divisors(const mpz_class& n);

/// Rational roots with multiplicity by the rational-root test and deflation.
RootData rational_roots(const Polynomial& p);

/// The distinct elements of a sorted multiset.
std::vector<Rational> distinct(const std::vector<Rational>& sorted_multiset);

/// Newton interpolation through (xs[i], ys[i]); xs pairwise distinct.
Polynomial interpolate(std::span<const Rational> xs, std::span<const Rational> ys);

/// res_x(q, a - t·q') as a polynomial in t.
Polynomial rothstein_trager_resultant(const Polynomial& a, const Polynomial& q);

/// A nonzero y in Q(x) with y' = f·y, or nullopt when f is not the
/// logarithmic derivative of a rational function.
std::optional<RationalFunction> log_derivative_solve(const RationalFunction& f);

}  // namespace diffbrauer
