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

#include "diffbrauer/triviality.hpp"
#include "support/oracles.hpp"

using namespace diffbrauer;
using namespace diffbrauer::testing;

namespace {

constexpr BaseRing kQ = BaseRing::ConstantField;
constexpr BaseRing kQx = BaseRing::RationalFunctionField;

RFMatrix e(std::size_t n, std::size_t i, std::size_t j) { return RFMatrix::unit(n, i, j); }
RFMatrix diag(std::initializer_list<long> d) {
  RFMatrix m(d.size(), d.size());
  std::size_t k = 0;
  for (long v : d) m(k, k) = RF(v), ++k;
  return m;
}
const RF X = RF::x();

void check_sound(const DiffMatrixAlgebra& alg, const TrivialityVerdict& v) {
  const DiffMatrixAlgebra zero = DiffMatrixAlgebra::trivial(alg.base(), alg.n());
  switch (v.status) {
    case TrivialityStatus::TrivialWithCertificate:
      REQUIRE(v.certificate.has_value());
      CHECK_FALSE(v.witness.has_value());
      CHECK(verify_certificate(alg, zero, *v.certificate));
      break;
    case TrivialityStatus::NontrivialWithWitness:
      REQUIRE(v.witness.has_value());
      CHECK_FALSE(v.certificate.has_value());
      CHECK(witness_reproduces(alg, DiffMatrixAlgebra::trivial(alg.base(), 1), *v.witness));
      break;
    case TrivialityStatus::Unknown:
      CHECK_FALSE(v.certificate.has_value());
      CHECK_FALSE(v.witness.has_value());
      break;
  }
}

}  // namespace

TEST_CASE("decide_trivial examples") {
  const DiffMatrixAlgebra scalar(kQ, RFMatrix::scalar(3, RF(5)));
  const TrivialityVerdict a = decide_trivial(scalar);
  CHECK(a.status == TrivialityStatus::TrivialWithCertificate);
  check_sound(scalar, a);

  const DiffMatrixAlgebra nil_q(kQ, e(2, 0, 1));
  const TrivialityVerdict b = decide_trivial(nil_q);
  CHECK(b.status == TrivialityStatus::NontrivialWithWitness);
  REQUIRE(b.witness.has_value());
  CHECK(b.witness->kind == WitnessKind::NilpotencyIndex);
  CHECK(b.witness->left == InvariantValue(std::optional<unsigned>(3)));

  const DiffMatrixAlgebra nil_qx(kQx, e(2, 0, 1));
  const TrivialityVerdict c = decide_trivial(nil_qx);
  CHECK(c.status == TrivialityStatus::TrivialWithCertificate);
  REQUIRE(c.certificate.has_value());
  CHECK(c.certificate->y == RFMatrix::identity(2) - X * e(2, 0, 1));
  CHECK_FALSE(c.certificate->scalar_shift.has_value());

  const DiffMatrixAlgebra d31(kQx, diag({3, 1}));
  const TrivialityVerdict d = decide_trivial(d31);
  CHECK(d.status == TrivialityStatus::NontrivialWithWitness);
  REQUIRE(d.witness.has_value());
  CHECK(d.witness->kind == WitnessKind::EValueSet);
  CHECK(d.witness->left == InvariantValue(std::vector<Rational>{q(-2), q(0), q(2)}));
  CHECK(d.witness->right == InvariantValue(std::vector<Rational>{q(0)}));

  const TrivialityVerdict rot = decide_trivial(DiffMatrixAlgebra(kQx, RFMatrix{{RF(0), RF(1)}, {RF(-1), RF(0)}}));
  CHECK(rot.status == TrivialityStatus::Unknown);
}

TEST_CASE("decide_trivial over Q covers every non-scalar shape") {
  const std::vector<RFMatrix> zs = {diag({1, 2}), e(2, 0, 1), RFMatrix{{RF(0), RF(1)}, {RF(-1), RF(0)}},
                                    diag({1, 1, 2}), e(3, 0, 2)};
  for (const RFMatrix& z : zs) {
    const DiffMatrixAlgebra alg(kQ, z);
    const TrivialityVerdict v = decide_trivial(alg);
    CHECK(v.status == TrivialityStatus::NontrivialWithWitness);
    check_sound(alg, v);
  }
}

TEST_CASE("non-constant derivation matrices are Unknown unless a certificate verifies") {
  Random rnd(41);
  for (int k = 0; k < 10; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
    const RFMatrix y = rnd.invertible_function_matrix(n);
    const DiffMatrixAlgebra alg = gauge_transform(DiffMatrixAlgebra::trivial(kQx, n), y);
    if (alg.has_constant_z()) continue;
    CHECK(decide_trivial(alg).status == TrivialityStatus::Unknown);
    const GaugeCertificate cert{inverse(y), std::nullopt};
    const TrivialityVerdict v = decide_trivial(alg, cert);
    CHECK(v.status == TrivialityStatus::TrivialWithCertificate);
    CHECK(v.certificate == cert);
    check_sound(alg, v);
    const GaugeCertificate wrong{y, std::nullopt};
    if (!verify_certificate(alg, DiffMatrixAlgebra::trivial(kQx, n), wrong))
      CHECK(decide_trivial(alg, wrong).status == TrivialityStatus::Unknown);
  }
}

TEST_CASE("trivial algebras are trivial") {
  for (BaseRing base : {kQ, kQx})
    for (std::size_t n = 1; n <= 4; ++n) {
      const DiffMatrixAlgebra zero = DiffMatrixAlgebra::trivial(base, n);
      const TrivialityVerdict v = decide_trivial(zero);
      CHECK(v.status == TrivialityStatus::TrivialWithCertificate);
      check_sound(zero, v);
    }
}

TEST_CASE("verdicts are sound on random constant matrices") {
  Random rnd(42);
  for (int k = 0; k < 60; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
    QMatrix z;
    switch (k % 4) {
      case 0: z = rnd.rational_matrix(n, 2); break;
      case 1: z = rnd.nilpotent(n); break;
      case 2: z = rnd.nilpotent(n) + QMatrix::scalar(n, rnd.rational()); break;
      default: z = QMatrix::scalar(n, rnd.rational()); break;
    }
    for (BaseRing base : {kQ, kQx}) {
      const DiffMatrixAlgebra alg(base, lift(z));
      const TrivialityVerdict v = decide_trivial(alg);
      check_sound(alg, v);
      if (base == kQ) CHECK((v.status == TrivialityStatus::TrivialWithCertificate) == z.is_scalar());
      if (base == kQx && k % 4 != 0) CHECK(v.status == TrivialityStatus::TrivialWithCertificate);
    }
  }
}

TEST_CASE("tensor products of trivial algebras are trivial") {
  Random rnd(43);
  for (int k = 0; k < 15; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 2)), m = static_cast<std::size_t>(rnd.integer(1, 2));
    const DiffMatrixAlgebra a(kQx, lift(rnd.nilpotent(n) + QMatrix::scalar(n, rnd.rational())));
    const DiffMatrixAlgebra b(kQx, lift(rnd.nilpotent(m)));
    const TrivialityVerdict va = decide_trivial(a), vb = decide_trivial(b);
    REQUIRE(va.status == TrivialityStatus::TrivialWithCertificate);
    REQUIRE(vb.status == TrivialityStatus::TrivialWithCertificate);
    const DiffMatrixAlgebra t = tensor_alg(a, b);
    const TrivialityVerdict vt = decide_trivial(t);
    CHECK(vt.status == TrivialityStatus::TrivialWithCertificate);
    check_sound(t, vt);
    const GaugeCertificate kc = tensor_certificate(*va.certificate, *vb.certificate);
    CHECK(verify_certificate(t, DiffMatrixAlgebra::trivial(kQx, n * m), kc));
  }
}

TEST_CASE("nilpotent_exp_certificate examples") {
  CHECK(nilpotent_exp_certificate(DiffMatrixAlgebra::trivial(kQx, 2)).y == RFMatrix::identity(2));
  const GaugeCertificate a = nilpotent_exp_certificate(DiffMatrixAlgebra(kQx, e(2, 0, 1)));
  CHECK(a.y == RFMatrix::identity(2) - X * e(2, 0, 1));
  const GaugeCertificate b = nilpotent_exp_certificate(DiffMatrixAlgebra(kQx, RFMatrix::identity(2) + e(2, 0, 1)));
  CHECK(b.y == RFMatrix::identity(2) - X * e(2, 0, 1));
  CHECK(b.scalar_shift == RF(1));
  const GaugeCertificate c = nilpotent_exp_certificate(DiffMatrixAlgebra(kQx, e(3, 0, 1) + e(3, 1, 2)));
  RFMatrix expect = RFMatrix::identity(3) - X * (e(3, 0, 1) + e(3, 1, 2));
  expect(0, 2) = X * X / RF(2);
  CHECK(c.y == expect);
  CHECK_THROWS_AS(nilpotent_exp_certificate(DiffMatrixAlgebra(kQx, diag({1, 0}))), Error);
  CHECK_THROWS_AS(nilpotent_exp_certificate(DiffMatrixAlgebra(kQ, e(2, 0, 1))), Error);
}

TEST_CASE("exponential certificate solves the nilpotent system") {
  Random rnd(44);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 4));
    const QMatrix nil = rnd.nilpotent(n);
    const Rational theta = rnd.rational();
    const DiffMatrixAlgebra alg(kQx, lift(nil + QMatrix::scalar(n, theta)));
    const GaugeCertificate c = nilpotent_exp_certificate(alg);
    const RFMatrix dy = c.y.map([](const RF& f) { return rf_derive(f); });
    CHECK(dy == -(lift(nil) * c.y));
    CHECK(c.scalar_shift.value_or(RF(0)) == RF(theta));
    CHECK(verify_certificate(alg, DiffMatrixAlgebra::trivial(kQx, n), c));
    for (const RF& f : c.y.data()) CHECK(f.den() == poly({1}));
  }
}

TEST_CASE("scalar_obstruction examples") {
  CHECK_FALSE(scalar_obstruction(DiffMatrixAlgebra(kQ, RFMatrix::scalar(2, RF(7)))).has_value());
  const auto a = scalar_obstruction(DiffMatrixAlgebra(kQ, diag({1, 2})));
  REQUIRE(a.has_value());
  CHECK(a->kind == WitnessKind::ScalarTest);
  CHECK(a->left == InvariantValue(std::optional<unsigned>()));
  const auto b = scalar_obstruction(DiffMatrixAlgebra(kQ, e(2, 0, 1)));
  REQUIRE(b.has_value());
  CHECK(b->left == InvariantValue(std::optional<unsigned>(3)));
  CHECK(b->right == InvariantValue(std::optional<unsigned>(1)));
  CHECK(witness_reproduces(DiffMatrixAlgebra(kQ, e(2, 0, 1)), DiffMatrixAlgebra::trivial(kQ, 1), *b));
  CHECK_THROWS_AS(scalar_obstruction(DiffMatrixAlgebra(kQx, e(2, 0, 1))), Error);
}
