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

#include "diffbrauer/diffalg.hpp"
#include "diffbrauer/invariants.hpp"

namespace diffbrauer {

enum class TrivialityStatus { TrivialWithCertificate, NontrivialWithWitness, Unknown };
const char* triviality_status_name(TrivialityStatus status) noexcept;

struct TrivialityVerdict {
  TrivialityStatus status = TrivialityStatus::Unknown;
  /// Certifies alg -> (M_n, 0).
  std::optional<GaugeCertificate> certificate;
  /// Separates alg from (M_1, 0).
  std::optional<SeparationWitness> witness;

  friend bool operator==(const TrivialityVerdict&, const TrivialityVerdict&) = default;
};

/// Decides whether alg is in the trivial class. A user certificate that
/// verifies against (M_n, 0) settles the question first.
TrivialityVerdict decide_trivial(const DiffMatrixAlgebra& alg,
                                 const std::optional<GaugeCertificate>& user_certificate = std::nullopt);

/// For constant Z = θI + N over Q(x) with N nilpotent: Y = exp(−N x) and
/// shift θ. Throws InvalidArgument when Z has another form.
GaugeCertificate nilpotent_exp_certificate(const DiffMatrixAlgebra& alg);

/// Over Q: a ScalarTest witness iff Z is not scalar.
std::optional<SeparationWitness> scalar_obstruction(const DiffMatrixAlgebra& alg);

}  // namespace diffbrauer
