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

#include "diffbrauer/invariants.hpp"

#include "diffbrauer/error.hpp"
#include "diffbrauer/roots.hpp"

namespace diffbrauer {

namespace {

Polynomial to_q_poly(const RFPoly& p) {
  std::vector<Rational> out;
  for (const RationalFunction& c : p.coeffs()) out.push_back(*c.constant_value());
  return Polynomial(std::move(out));
}

RFPoly to_rf_poly(const Polynomial& p) {
  std::vector<RationalFunction> out(p.coeffs().begin(), p.coeffs().end());
  return RFPoly(std::move(out));
}

bool constant_coefficients(const RFPoly& p) {
  for (const RationalFunction& c : p.coeffs())
    if (!c.is_constant()) return false;
  return true;
}

std::optional<unsigned> nilpotency(const RFMatrix& ad, std::size_t n) {
  const unsigned cap = static_cast<unsigned>(2 * n - 1);
  if (ad.is_zero()) return 1U;
  RFMatrix power = ad;
  for (unsigned k = 2; k <= cap; ++k) {
    power = power * ad;
    if (power.is_zero()) return k;
  }
  return std::nullopt;
}

std::optional<unsigned> nilpotency(const QMatrix& ad, std::size_t n) {
  const unsigned cap = static_cast<unsigned>(2 * n - 1);
  if (ad.is_zero()) return 1U;
  QMatrix power = ad;
  for (unsigned k = 2; k <= cap; ++k) {
    power = power * ad;
    if (power.is_zero()) return k;
  }
  return std::nullopt;
}

void require_stable(const DiffMatrixAlgebra& alg) {
  if (!alg.has_constant_z())
    fail(ErrorCode::Unsupported, "invariants are class data only for a constant derivation matrix");
}

}  // namespace

AdOperator ad_matrix(const DiffMatrixAlgebra& alg) {
  const std::size_t n = alg.n();
  const RFMatrix id = RFMatrix::identity(n);
  return {n, kron(alg.z(), id) - kron(id, alg.z().transpose())};
}

RFMatrix vectorize(const RFMatrix& x) { return RFMatrix(x.rows() * x.cols(), 1, x.data()); }

InvariantReport eig_diff_report(const DiffMatrixAlgebra& alg) {
  InvariantReport rep;
  const std::size_t n = alg.n();
  const AdOperator ad = ad_matrix(alg);
  if (const auto zq = constant_part(alg.z())) {
    const QMatrix adq = *constant_part(ad.matrix);
    const Polynomial cp = char_poly(adq);
    const Polynomial sq = squarefree_part(cp);
    const RootData roots = rational_roots(cp);
    rep.ad_char_poly = to_rf_poly(cp);
    rep.ad_squarefree = to_rf_poly(sq);
    rep.root_multiset = roots.roots;
    rep.splits = roots.splits;
    rep.nilpotency_index = nilpotency(adq, n);
    rep.e_value_set = rational_roots(sq).roots;
    rep.stable = true;
    return rep;
  }
  rep.ad_char_poly = char_poly(ad.matrix);
  rep.ad_squarefree = squarefree_part(rep.ad_char_poly);
  if (constant_coefficients(rep.ad_char_poly)) {
    const RootData roots = rational_roots(to_q_poly(rep.ad_char_poly));
    rep.root_multiset = roots.roots;
    rep.splits = roots.splits;
  }
  rep.nilpotency_index = nilpotency(ad.matrix, n);
  rep.stable = false;
  return rep;
}

std::vector<Rational> e_values(const DiffMatrixAlgebra& alg) {
  require_stable(alg);
  const QMatrix adq = *constant_part(ad_matrix(alg).matrix);
  return rational_roots(squarefree_part(char_poly(adq))).roots;
}

const char* witness_kind_name(WitnessKind kind) noexcept {
  switch (kind) {
    case WitnessKind::EValueSet: return "EValueSet";
    case WitnessKind::RootSet: return "RootSet";
    case WitnessKind::NilpotencyIndex: return "NilpotencyIndex";
    case WitnessKind::ScalarTest: return "ScalarTest";
  }
  return "unknown";
}

namespace {

std::optional<SeparationWitness> separate_reports(BaseRing base, const InvariantReport& ra, const InvariantReport& rb) {
  if (*ra.e_value_set != *rb.e_value_set) return SeparationWitness{WitnessKind::EValueSet, *ra.e_value_set, *rb.e_value_set};
  if (base == BaseRing::ConstantField) {
    if (!(ra.ad_squarefree == rb.ad_squarefree))
      return SeparationWitness{WitnessKind::RootSet, ra.ad_squarefree, rb.ad_squarefree};
    if (ra.nilpotency_index != rb.nilpotency_index)
      return SeparationWitness{WitnessKind::NilpotencyIndex, ra.nilpotency_index, rb.nilpotency_index};
  }
  return std::nullopt;
}

}  // namespace

std::optional<SeparationWitness> separate(const DiffMatrixAlgebra& a, const DiffMatrixAlgebra& b) {
  if (a.base() != b.base()) fail(ErrorCode::BaseMismatch, "cannot compare algebras over different base rings");
  require_stable(a);
  require_stable(b);
  return separate_reports(a.base(), eig_diff_report(a), eig_diff_report(b));
}

bool witness_reproduces(const DiffMatrixAlgebra& a, const DiffMatrixAlgebra& b, const SeparationWitness& w) {
  if (a.base() != b.base() || !a.has_constant_z() || !b.has_constant_z()) return false;
  if (w.left == w.right) return false;
  const InvariantReport ra = eig_diff_report(a), rb = eig_diff_report(b);
  switch (w.kind) {
    case WitnessKind::EValueSet:
      return w.left == InvariantValue(*ra.e_value_set) && w.right == InvariantValue(*rb.e_value_set);
    case WitnessKind::RootSet:
      return a.base() == BaseRing::ConstantField && w.left == InvariantValue(ra.ad_squarefree) &&
             w.right == InvariantValue(rb.ad_squarefree);
    case WitnessKind::NilpotencyIndex:
    case WitnessKind::ScalarTest:
      return a.base() == BaseRing::ConstantField && w.left == InvariantValue(ra.nilpotency_index) &&
             w.right == InvariantValue(rb.nilpotency_index);
  }
  return false;
}

}  // namespace diffbrauer
