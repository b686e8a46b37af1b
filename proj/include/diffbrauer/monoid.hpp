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

#include <cstddef>
#include <vector>

namespace diffbrauer {

using Element = std::size_t;
using Subset = std::vector<Element>;  // sorted, no duplicates

/// Commutative monoid given by its Cayley table; the axioms are checked
/// exhaustively on construction.
class FiniteCommutativeMonoid {
 public:
  FiniteCommutativeMonoid(std::vector<std::vector<Element>> table, Element identity);

  /// (Z/k, ×) with elements labelled by their residues.
  static FiniteCommutativeMonoid multiplicative_mod(std::size_t k);

  std::size_t size() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element op(Element a, Element b) const { return table_[a][b]; }
  const std::vector<std::vector<Element>>& table() const { return table_; }

  bool is_submonoid(const Subset& n) const;

  friend bool operator==(const FiniteCommutativeMonoid&, const FiniteCommutativeMonoid&) = default;

 private:
  std::vector<std::vector<Element>> table_;
  Element identity_;
};

struct QuotientMonoid {
  /// Classes ordered by their smallest element; each class sorted.
  std::vector<Subset> classes;
  std::vector<std::size_t> class_of;
  std::vector<std::vector<std::size_t>> table;
  std::size_t identity = 0;

  FiniteCommutativeMonoid as_monoid() const { return {table, identity}; }
};

/// M/N under m1 ~ m2 iff m1·n1 = m2·n2 for some n1, n2 in N.
QuotientMonoid quotient(const FiniteCommutativeMonoid& m, const Subset& n);

/// U(M) = { a : ab = 1 for some b }.
Subset units(const FiniteCommutativeMonoid& m);

/// { a : abn ∈ N for some b ∈ M, n ∈ N }, the elements whose class in M/N is
/// invertible.
Subset quotient_units(const FiniteCommutativeMonoid& m, const Subset& n);

/// Elements mapping to units of M/N, computed from the quotient itself.
Subset pullback_units(const FiniteCommutativeMonoid& m, const Subset& n);

/// Every submonoid of m (subsets containing the identity, closed under op).
std::vector<Subset> submonoids(const FiniteCommutativeMonoid& m);

/// All commutative monoids of the given size up to isomorphism, identity 0.
std::vector<FiniteCommutativeMonoid> enumerate_commutative_monoids(std::size_t size);

}  // namespace diffbrauer
