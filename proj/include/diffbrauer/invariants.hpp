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
#include <variant>
#include <vector>

#include "diffbrauer/diffalg.hpp"
#include "diffbrauer/polynomial.hpp"

namespace diffbrauer {

using RFPoly = UPoly<RationalFunction>;

/// Matrix of X ↦ ZX − XZ acting on the row-major vectorization of X,
/// namely Z ⊗ I − I ⊗ Zᵀ.
struct AdOperator {
  std::size_t n = 0;
  RFMatrix matrix;
};

AdOperator ad_matrix(const DiffMatrixAlgebra& alg);

/// Row-major flattening X ↦ (X_11, X_12, ..., X_nn)ᵀ matching ad_matrix.
RFMatrix vectorize(const RFMatrix& x);

struct InvariantReport {
  RFPoly ad_char_poly;
  RFPoly ad_squarefree;
  /// Rational roots with multiplicity; empty unless the char poly has
  /// constant coefficients.
  std::vector<Rational> root_multiset;
  bool splits = false;
  /// Smallest k <= 2n-1 with ad^k = 0.
  std::optional<unsigned> nilpotency_index;
  /// Present only for constant Z.
  std::optional<std::vector<Rational>> e_value_set;
  /// Z is constant: root set, e-values and nilpotency index are class data.
  bool stable = false;

  friend bool operator==(const InvariantReport&, const InvariantReport&) = default;
};

InvariantReport eig_diff_report(const DiffMatrixAlgebra& alg);

/// Sorted set of rational e-values; throws Unsupported for non-constant Z.
std::vector<Rational> e_values(const DiffMatrixAlgebra& alg);

enum class WitnessKind { EValueSet, RootSet, NilpotencyIndex, ScalarTest };
const char* witness_kind_name(WitnessKind kind) noexcept;

/// EValueSet: sorted rational sets. RootSet: squarefree ad char polys.
/// NilpotencyIndex and ScalarTest: nilpotency indices (absent = not nilpotent).
using InvariantValue = std::variant<std::vector<Rational>, RFPoly, std::optional<unsigned>>;

struct SeparationWitness {
  WitnessKind kind = WitnessKind::EValueSet;
  InvariantValue left;
  InvariantValue right;

  friend bool operator==(const SeparationWitness&, const SeparationWitness&) = default;
};

/// A witness that a and b lie in different classes, or nullopt
/// (inconclusive). Over Q(x) only the e-value set is compared; over Q the
/// squarefree ad char poly and the nilpotency index are compared as well.
std::optional<SeparationWitness> separate(const DiffMatrixAlgebra& a, const DiffMatrixAlgebra& b);

/// Recomputes the invariant named by `w` on both algebras and checks that
/// the stored values are reproduced and differ.
bool witness_reproduces(const DiffMatrixAlgebra& a, const DiffMatrixAlgebra& b, const SeparationWitness& w);

}  // namespace diffbrauer
