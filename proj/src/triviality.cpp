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

#include "diffbrauer/triviality.hpp"

#include "diffbrauer/error.hpp"

namespace diffbrauer {

const char* triviality_status_name(TrivialityStatus status) noexcept {
  switch (status) {
    case TrivialityStatus::TrivialWithCertificate: return "TrivialWithCertificate";
    case TrivialityStatus::NontrivialWithWitness: return "NontrivialWithWitness";
    case TrivialityStatus::Unknown: return "Unknown";
  }
  return "unknown";
}

GaugeCertificate nilpotent_exp_certificate(const DiffMatrixAlgebra& alg) {
  if (alg.base() != BaseRing::RationalFunctionField)
    fail(ErrorCode::InvalidArgument, "exponential certificates need the base Q(x)");
  const auto zq = constant_part(alg.z());
  if (!zq) fail(ErrorCode::InvalidArgument, "exponential certificates need a constant derivation matrix");
  const std::size_t n = alg.n();
  const Rational theta = zq->trace() / Rational(static_cast<long>(n));
  const QMatrix nil = *zq - QMatrix::scalar(n, theta);
  if (!nil.pow(static_cast<unsigned>(n)).is_zero())
    fail(ErrorCode::InvalidArgument, "derivation matrix is not scalar plus nilpotent");

  // Σ_k (−N x)^k / k!, which stops at k = n − 1.
  const RFMatrix step = RationalFunction(-RationalFunction::x()) * lift(nil);
  RFMatrix term = RFMatrix::identity(n), y = term;
  for (std::size_t k = 1; k < n; ++k) {
    term = RationalFunction(Rational(1) / Rational(static_cast<long>(k))) * (term * step);
    if (term.is_zero()) break;
    y += term;
  }
  GaugeCertificate cert{std::move(y), std::nullopt};
  if (!theta.is_zero()) cert.scalar_shift = RationalFunction(theta);
  return cert;
}

std::optional<SeparationWitness> scalar_obstruction(const DiffMatrixAlgebra& alg) {
  if (alg.base() != BaseRing::ConstantField) fail(ErrorCode::InvalidArgument, "scalar obstruction applies over Q only");
  if (alg.z().is_scalar()) return std::nullopt;
  const InvariantReport rep = eig_diff_report(alg);
  return SeparationWitness{WitnessKind::ScalarTest, rep.nilpotency_index, std::optional<unsigned>(1U)};
}

TrivialityVerdict decide_trivial(const DiffMatrixAlgebra& alg, const std::optional<GaugeCertificate>& user_certificate) {
  const std::size_t n = alg.n();
  const DiffMatrixAlgebra zero = DiffMatrixAlgebra::trivial(alg.base(), n);
  if (user_certificate && verify_certificate(alg, zero, *user_certificate))
    return {TrivialityStatus::TrivialWithCertificate, user_certificate, std::nullopt};

  const DiffMatrixAlgebra unit = DiffMatrixAlgebra::trivial(alg.base(), 1);
  if (alg.base() == BaseRing::ConstantField) {
    if (alg.z().is_scalar()) {
      GaugeCertificate cert{RFMatrix::identity(n), std::nullopt};
      if (!alg.z()(0, 0).is_zero()) cert.scalar_shift = alg.z()(0, 0);
      return {TrivialityStatus::TrivialWithCertificate, std::move(cert), std::nullopt};
    }
    auto w = separate(alg, unit);
    if (!w) w = scalar_obstruction(alg);
    return {TrivialityStatus::NontrivialWithWitness, std::nullopt, std::move(w)};
  }

  if (!alg.has_constant_z()) return {};
  const InvariantReport rep = eig_diff_report(alg);
  for (const Rational& r : rep.root_multiset)
    if (!r.is_zero()) return {TrivialityStatus::NontrivialWithWitness, std::nullopt, separate(alg, unit)};
  if (rep.splits) return {TrivialityStatus::TrivialWithCertificate, nilpotent_exp_certificate(alg), std::nullopt};
  return {};
}

}  // namespace diffbrauer
