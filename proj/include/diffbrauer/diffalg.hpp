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
#include <vector>

#include "diffbrauer/matrix.hpp"
#include "diffbrauer/rational_function.hpp"

namespace diffbrauer {

/// Q with the zero derivation, or Q(x) with d/dx.
enum class BaseRing { ConstantField, RationalFunctionField };

const char* base_ring_name(BaseRing base) noexcept;  // "Q" or "Q(x)"

/// Derivative of a scalar in the given base (always zero over Q).
RationalFunction base_derive(BaseRing base, const RationalFunction& f);
/// Entrywise derivative Y'.
RFMatrix entrywise_derive(BaseRing base, const RFMatrix& y);
/// Throws unless every entry lies in the base (constants for Q).
void require_over_base(BaseRing base, const RFMatrix& m, const char* what);

/// (M_n(R), Z): the matrix algebra with derivation Y ↦ Y' + ZY − YZ.
class DiffMatrixAlgebra {
 public:
  DiffMatrixAlgebra(BaseRing base, RFMatrix z);
  /// (M_n(R), 0).
  static DiffMatrixAlgebra trivial(BaseRing base, std::size_t n);

  BaseRing base() const { return base_; }
  std::size_t n() const { return z_.rows(); }
  const RFMatrix& z() const { return z_; }
  /// Entries of Z all lie in Q.
  bool has_constant_z() const { return constant_part(z_).has_value(); }

  friend bool operator==(const DiffMatrixAlgebra& a, const DiffMatrixAlgebra& b) {
    return a.base_ == b.base_ && a.z_ == b.z_;
  }

 private:
  BaseRing base_;
  RFMatrix z_;
};

/// (R^n, A) with D(v) = v' + A v on column vectors.
struct DiffModule {
  BaseRing base;
  RFMatrix a;
};

/// Invertible Y with optional central shift c: certifies that
/// Y^-1 Z_src Y + Y^-1 Y' = Z_dst + c·I.
struct GaugeCertificate {
  RFMatrix y;
  std::optional<RationalFunction> scalar_shift;

  friend bool operator==(const GaugeCertificate&, const GaugeCertificate&) = default;
};

RFMatrix derive_element(const DiffMatrixAlgebra& alg, const RFMatrix& y);
std::vector<RationalFunction> module_derive(const DiffModule& mod, const std::vector<RationalFunction>& v);
DiffMatrixAlgebra tensor_alg(const DiffMatrixAlgebra& a, const DiffMatrixAlgebra& b);
DiffMatrixAlgebra gauge_transform(const DiffMatrixAlgebra& alg, const RFMatrix& y);
bool verify_certificate(const DiffMatrixAlgebra& src, const DiffMatrixAlgebra& dst, const GaugeCertificate& cert);

/// Q-basis of the constants { Y : ∂_Z(Y) = 0 } with polynomial entries of
/// degree <= deg_bound (degree 0 over the constant base).
std::vector<RFMatrix> constants_basis(const DiffMatrixAlgebra& alg, unsigned deg_bound);

/// Certificate for tensor(src_a, src_b) -> tensor(dst_a, dst_b) built from
/// certificates of the factors: Y = Y_a ⊗ Y_b, shift c_a + c_b.
GaugeCertificate tensor_certificate(const GaugeCertificate& a, const GaugeCertificate& b);
/// Certificate for dst -> src given one for src -> dst.
GaugeCertificate inverse_certificate(const GaugeCertificate& cert);
/// Certificate for the composite src -> mid -> dst.
GaugeCertificate compose_certificates(const GaugeCertificate& first, const GaugeCertificate& second);

}  // namespace diffbrauer
