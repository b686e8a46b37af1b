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

#include "diffbrauer/diffalg.hpp"

#include <string>

#include "diffbrauer/error.hpp"

namespace diffbrauer {

const char* base_ring_name(BaseRing base) noexcept {
  return base == BaseRing::ConstantField ? "Q" : "Q(x)";
}

RationalFunction base_derive(BaseRing base, const RationalFunction& f) {
  return base == BaseRing::ConstantField ? RationalFunction() : f.derivative();
}

RFMatrix entrywise_derive(BaseRing base, const RFMatrix& y) {
  if (base == BaseRing::ConstantField) return RFMatrix(y.rows(), y.cols());
  return y.map([](const RationalFunction& e) { return e.derivative(); });
}

void require_over_base(BaseRing base, const RFMatrix& m, const char* what) {
  if (base == BaseRing::ConstantField && !constant_part(m))
    fail(ErrorCode::BaseMismatch, std::string(what) + " has non-constant entries but the base is Q");
}

DiffMatrixAlgebra::DiffMatrixAlgebra(BaseRing base, RFMatrix z) : base_(base), z_(std::move(z)) {
  if (!z_.is_square() || z_.rows() == 0) fail(ErrorCode::DimensionMismatch, "derivation matrix must be square and nonempty");
  require_over_base(base_, z_, "derivation matrix");
}

DiffMatrixAlgebra DiffMatrixAlgebra::trivial(BaseRing base, std::size_t n) { return {base, RFMatrix(n, n)}; }

namespace {

void require_element(const DiffMatrixAlgebra& alg, const RFMatrix& y, const char* what) {
  if (y.rows() != alg.n() || y.cols() != alg.n())
    fail(ErrorCode::DimensionMismatch, std::string(what) + " must be " + std::to_string(alg.n()) + "x" + std::to_string(alg.n()));
  require_over_base(alg.base(), y, what);
}

}  // namespace

RFMatrix derive_element(const DiffMatrixAlgebra& alg, const RFMatrix& y) {
  require_element(alg, y, "element");
  return entrywise_derive(alg.base(), y) + alg.z() * y - y * alg.z();
}

std::vector<RationalFunction> module_derive(const DiffModule& mod, const std::vector<RationalFunction>& v) {
  if (!mod.a.is_square() || mod.a.rows() != v.size()) fail(ErrorCode::DimensionMismatch, "vector length must equal the module rank");
  require_over_base(mod.base, mod.a, "module matrix");
  const RFMatrix col(v.size(), 1, v);
  require_over_base(mod.base, col, "vector");
  const RFMatrix out = entrywise_derive(mod.base, col) + mod.a * col;
  return out.data();
}

DiffMatrixAlgebra tensor_alg(const DiffMatrixAlgebra& a, const DiffMatrixAlgebra& b) {
  if (a.base() != b.base()) fail(ErrorCode::BaseMismatch, "tensor factors have different base rings");
#ifdef DIFFBRAUER_MUTATE_TENSOR_SIGN
  return {a.base(), kron(a.z(), RFMatrix::identity(b.n())) - kron(RFMatrix::identity(a.n()), b.z())};
#else
  return {a.base(), kron(a.z(), RFMatrix::identity(b.n())) + kron(RFMatrix::identity(a.n()), b.z())};
#endif
}

DiffMatrixAlgebra gauge_transform(const DiffMatrixAlgebra& alg, const RFMatrix& y) {
  require_element(alg, y, "gauge matrix");
  const RFMatrix yinv = inverse(y);
#ifdef DIFFBRAUER_MUTATE_GAUGE_CONVENTION
  return {alg.base(), yinv * alg.z() * y - yinv * entrywise_derive(alg.base(), y)};
#else
  return {alg.base(), yinv * alg.z() * y + yinv * entrywise_derive(alg.base(), y)};
#endif
}

bool verify_certificate(const DiffMatrixAlgebra& src, const DiffMatrixAlgebra& dst, const GaugeCertificate& cert) {
  if (src.base() != dst.base()) fail(ErrorCode::BaseMismatch, "certificate endpoints have different base rings");
  if (src.n() != dst.n()) fail(ErrorCode::DimensionMismatch, "certificate endpoints have different dimensions");
  RFMatrix target = dst.z();
  if (cert.scalar_shift) {
    const RFMatrix shift = RFMatrix::scalar(src.n(), *cert.scalar_shift);
    require_over_base(src.base(), shift, "scalar shift");
    target += shift;
  }
  return gauge_transform(src, cert.y).z() == target;
}

std::vector<RFMatrix> constants_basis(const DiffMatrixAlgebra& alg, unsigned deg_bound) {
  const std::size_t n = alg.n();
  const unsigned d = alg.base() == BaseRing::ConstantField ? 0 : deg_bound;
  const std::size_t per_entry = d + 1;
  const std::size_t unknowns = n * n * per_entry;

  // Clear denominators of Z: with L = lcm of denominators and P = L·Z
  // polynomial, ∂_Z(Y) = 0 becomes L·Y' + P·Y − Y·P = 0.
  Polynomial l(Rational(1));
  for (const RationalFunction& e : alg.z().data()) l = (l * e.den()) / gcd(l, e.den());
  Matrix<Polynomial> p(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) p(i, j) = alg.z()(i, j).num() * (l / alg.z()(i, j).den());
  const bool has_derivative = alg.base() == BaseRing::RationalFunctionField;

  long max_p = 0;
  for (const Polynomial& e : p.data()) max_p = std::max(max_p, e.degree());
  const std::size_t eq_degree = static_cast<std::size_t>(std::max<long>(max_p, l.degree())) + d + 1;
  const auto var = [&](std::size_t i, std::size_t j, std::size_t k) { return (i * n + j) * per_entry + k; };

  // One equation per (entry (i,j), power of x).
  QMatrix system(n * n * eq_degree, unknowns);
  const auto row = [&](std::size_t i, std::size_t j, std::size_t pw) { return (i * n + j) * eq_degree + pw; };
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < per_entry; ++k) {
        // L · d/dx(x^k) e_ij
        if (has_derivative && k > 0)
          for (std::size_t c = 0; c < l.coeffs().size(); ++c)
            system(row(i, j, c + k - 1), var(i, j, k)) += l.coeffs()[c] * Rational(static_cast<long>(k));
        // (P·Y)_ij = Σ_m P_im Y_mj ;  (Y·P)_ij = Σ_m Y_im P_mj
        for (std::size_t m = 0; m < n; ++m) {
          const Polynomial& pim = p(i, m);
          for (std::size_t c = 0; c < pim.coeffs().size(); ++c)
            system(row(i, j, c + k), var(m, j, k)) += pim.coeffs()[c];
          const Polynomial& pmj = p(m, j);
          for (std::size_t c = 0; c < pmj.coeffs().size(); ++c)
            system(row(i, j, c + k), var(i, m, k)) -= pmj.coeffs()[c];
        }
      }
    }

  std::vector<RFMatrix> basis;
  for (const std::vector<Rational>& v : nullspace(system)) {
    RFMatrix y(n, n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        std::vector<Rational> coeffs(v.begin() + static_cast<long>(var(i, j, 0)),
                                     v.begin() + static_cast<long>(var(i, j, 0) + per_entry));
        y(i, j) = RationalFunction(Polynomial(std::move(coeffs)));
      }
    basis.push_back(std::move(y));
  }
  return basis;
}

GaugeCertificate tensor_certificate(const GaugeCertificate& a, const GaugeCertificate& b) {
  GaugeCertificate out{kron(a.y, b.y), std::nullopt};
  if (a.scalar_shift || b.scalar_shift) {
    const RationalFunction c = a.scalar_shift.value_or(RationalFunction()) + b.scalar_shift.value_or(RationalFunction());
    if (!c.is_zero()) out.scalar_shift = c;
  }
  return out;
}

GaugeCertificate inverse_certificate(const GaugeCertificate& cert) {
  GaugeCertificate out{inverse(cert.y), std::nullopt};
  if (cert.scalar_shift && !cert.scalar_shift->is_zero()) out.scalar_shift = -*cert.scalar_shift;
  return out;
}

GaugeCertificate compose_certificates(const GaugeCertificate& first, const GaugeCertificate& second) {
  GaugeCertificate out{first.y * second.y, std::nullopt};
  const RationalFunction c =
      first.scalar_shift.value_or(RationalFunction()) + second.scalar_shift.value_or(RationalFunction());
  if (!c.is_zero()) out.scalar_shift = c;
  return out;
}

}  // namespace diffbrauer
