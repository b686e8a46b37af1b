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
#include <optional>
#include <shared_mutex>
#include <vector>

#include "diffbrauer/diffalg.hpp"
#include "diffbrauer/invariants.hpp"

namespace diffbrauer {

/// tensor(A_i, (M_amp_i, 0)) is carried onto tensor(A_j, (M_amp_j, 0)) by `certificate`.
struct RegisteredEquivalence {
  std::size_t i = 0;
  std::size_t j = 0;
  std::size_t amp_i = 1;
  std::size_t amp_j = 1;
  GaugeCertificate certificate;
};

struct RegisteredSeparation {
  std::size_t i = 0;
  std::size_t j = 0;
  SeparationWitness witness;
};

enum class Distinction { Equivalent, NotEquivalent, Unknown };
const char* distinction_name(Distinction d) noexcept;

/// Presented algebras with verified equivalence certificates and
/// reproducible separation witnesses. Readers may query concurrently;
/// mutations take an exclusive lock.
class ClassRegistry {
 public:
  explicit ClassRegistry(std::size_t tensor_bound = 4);
  ClassRegistry(const ClassRegistry& other);
  ClassRegistry& operator=(const ClassRegistry& other);

  std::size_t tensor_bound() const { return tensor_bound_; }
  std::size_t size() const;
  DiffMatrixAlgebra algebra(std::size_t i) const;
  std::vector<DiffMatrixAlgebra> algebras() const;
  std::vector<RegisteredEquivalence> equivalences() const;
  std::vector<RegisteredSeparation> separations() const;

  /// Returns the index of an identical presentation if one is stored.
  std::size_t add_algebra(const DiffMatrixAlgebra& alg);

  /// Verifies and stores the certificate. Throws InvalidArgument when it
  /// fails and Integrity when the pair is already separated.
  void add_equivalence(const RegisteredEquivalence& eq);

  /// Computes and stores a witness for (i, j); false if none is found.
  bool add_separation(std::size_t i, std::size_t j);
  /// Stores a given witness after checking it reproduces.
  void add_separation(const RegisteredSeparation& sep);

  /// Runs the triviality decision on A_i; on success registers (M_1, 0) and
  /// the amplified certificate, returning the index of (M_1, 0).
  std::optional<std::size_t> certify_trivial(std::size_t i);

  /// From stored equivalences i ~ i2 and j ~ j2 (or i == i2, j == j2),
  /// registers tensor(A_i, A_j) and tensor(A_i2, A_j2) with the Kronecker
  /// certificate between them. Returns the two new indices.
  std::pair<std::size_t, std::size_t> derive_tensor_equivalence(std::size_t i, std::size_t j, std::size_t i2, std::size_t j2);

  Distinction distinguish(std::size_t i, std::size_t j) const;

 private:
  std::size_t add_algebra_locked(const DiffMatrixAlgebra& alg);
  void add_equivalence_locked(const RegisteredEquivalence& eq);
  std::vector<std::size_t> classes_locked() const;
  std::vector<std::size_t> classes_with_locked(const RegisteredEquivalence& extra) const;
  bool separated_locked(const std::vector<std::size_t>& cls, std::size_t ci, std::size_t cj) const;
  std::optional<RegisteredEquivalence> find_edge_locked(std::size_t from, std::size_t to) const;
  void require_index(std::size_t i) const;

  std::size_t tensor_bound_;
  std::vector<DiffMatrixAlgebra> algebras_;
  std::vector<RegisteredEquivalence> equivalences_;
  std::vector<RegisteredSeparation> separations_;
  mutable std::shared_mutex mutex_;
};

/// Amplification tensor(alg, (M_p, 0)).
DiffMatrixAlgebra amplify(const DiffMatrixAlgebra& alg, std::size_t p);

}  // namespace diffbrauer
