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

#include "diffbrauer/registry.hpp"

#include <mutex>
#include <numeric>
#include <string>

#include "diffbrauer/error.hpp"
#include "diffbrauer/triviality.hpp"

namespace diffbrauer {

const char* distinction_name(Distinction d) noexcept {
  switch (d) {
    case Distinction::Equivalent: return "Equivalent";
    case Distinction::NotEquivalent: return "NotEquivalent";
    case Distinction::Unknown: return "Unknown";
  }
  return "unknown";
}

DiffMatrixAlgebra amplify(const DiffMatrixAlgebra& alg, std::size_t p) {
  if (p == 1) return alg;
  return tensor_alg(alg, DiffMatrixAlgebra::trivial(alg.base(), p));
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) v = parent[v] = parent[parent[v]];
  return v;
}

// Permutation P with P·e_(a,c,b,d) = e_(a,b,c,d) for index ranges
// a<n, b<p, c<m, d<q, so that P^-1 (X⊗I_p⊗W⊗I_q) P = X⊗W⊗I_p⊗I_q.
RFMatrix middle_swap(std::size_t n, std::size_t p, std::size_t m, std::size_t q) {
  const std::size_t dim = n * p * m * q;
  RFMatrix perm(dim, dim);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < p; ++b)
      for (std::size_t c = 0; c < m; ++c)
        for (std::size_t d = 0; d < q; ++d) {
          const std::size_t x_index = ((a * p + b) * m + c) * q + d;
          const std::size_t t_index = ((a * m + c) * p + b) * q + d;
          perm(x_index, t_index) = RationalFunction(1);
        }
  return perm;
}

bool try_separate(const DiffMatrixAlgebra& a, const DiffMatrixAlgebra& b) {
  if (a.base() != b.base() || !a.has_constant_z() || !b.has_constant_z()) return false;
  return separate(a, b).has_value();
}

}  // namespace

ClassRegistry::ClassRegistry(std::size_t tensor_bound) : tensor_bound_(tensor_bound) {
  if (tensor_bound_ == 0) fail(ErrorCode::InvalidArgument, "tensor bound must be positive");
}

ClassRegistry::ClassRegistry(const ClassRegistry& other) {
  std::shared_lock lock(other.mutex_);
  tensor_bound_ = other.tensor_bound_;
  algebras_ = other.algebras_;
  equivalences_ = other.equivalences_;
  separations_ = other.separations_;
}

ClassRegistry& ClassRegistry::operator=(const ClassRegistry& other) {
  if (this == &other) return *this;
  ClassRegistry copy(other);
  std::unique_lock lock(mutex_);
  tensor_bound_ = copy.tensor_bound_;
  algebras_ = std::move(copy.algebras_);
  equivalences_ = std::move(copy.equivalences_);
  separations_ = std::move(copy.separations_);
  return *this;
}

std::size_t ClassRegistry::size() const {
  std::shared_lock lock(mutex_);
  return algebras_.size();
}

DiffMatrixAlgebra ClassRegistry::algebra(std::size_t i) const {
  std::shared_lock lock(mutex_);
  require_index(i);
  return algebras_[i];
}

std::vector<DiffMatrixAlgebra> ClassRegistry::algebras() const {
  std::shared_lock lock(mutex_);
  return algebras_;
}

std::vector<RegisteredEquivalence> ClassRegistry::equivalences() const {
  std::shared_lock lock(mutex_);
  return equivalences_;
}

std::vector<RegisteredSeparation> ClassRegistry::separations() const {
  std::shared_lock lock(mutex_);
  return separations_;
}

void ClassRegistry::require_index(std::size_t i) const {
  if (i >= algebras_.size()) fail(ErrorCode::InvalidArgument, "registry index " + std::to_string(i) + " out of range");
}

std::size_t ClassRegistry::add_algebra(const DiffMatrixAlgebra& alg) {
  std::unique_lock lock(mutex_);
  return add_algebra_locked(alg);
}

std::size_t ClassRegistry::add_algebra_locked(const DiffMatrixAlgebra& alg) {
  for (std::size_t k = 0; k < algebras_.size(); ++k)
    if (algebras_[k] == alg) return k;
  algebras_.push_back(alg);
  return algebras_.size() - 1;
}

std::vector<std::size_t> ClassRegistry::classes_locked() const {
  std::vector<std::size_t> parent(algebras_.size());
  std::iota(parent.begin(), parent.end(), 0);
  for (const RegisteredEquivalence& e : equivalences_) parent[find_root(parent, e.i)] = find_root(parent, e.j);
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = find_root(parent, k);
  return parent;
}

std::vector<std::size_t> ClassRegistry::classes_with_locked(const RegisteredEquivalence& extra) const {
  std::vector<std::size_t> parent = classes_locked();
  parent[find_root(parent, extra.i)] = find_root(parent, extra.j);
  for (std::size_t k = 0; k < parent.size(); ++k) parent[k] = find_root(parent, k);
  return parent;
}

bool ClassRegistry::separated_locked(const std::vector<std::size_t>& cls, std::size_t ci, std::size_t cj) const {
  for (const RegisteredSeparation& s : separations_) {
    const std::size_t a = cls[s.i], b = cls[s.j];
    if ((a == ci && b == cj) || (a == cj && b == ci)) return true;
  }
  for (std::size_t a = 0; a < algebras_.size(); ++a) {
    if (cls[a] != ci) continue;
    for (std::size_t b = 0; b < algebras_.size(); ++b)
      if (cls[b] == cj && try_separate(algebras_[a], algebras_[b])) return true;
  }
  return false;
}

void ClassRegistry::add_equivalence(const RegisteredEquivalence& eq) {
  std::unique_lock lock(mutex_);
  add_equivalence_locked(eq);
}

void ClassRegistry::add_equivalence_locked(const RegisteredEquivalence& eq) {
  require_index(eq.i);
  require_index(eq.j);
  if (eq.amp_i == 0 || eq.amp_j == 0 || eq.amp_i > tensor_bound_ || eq.amp_j > tensor_bound_)
    fail(ErrorCode::InvalidArgument, "amplification must lie in 1.." + std::to_string(tensor_bound_));
  const DiffMatrixAlgebra& a = algebras_[eq.i];
  const DiffMatrixAlgebra& b = algebras_[eq.j];
  if (a.n() * eq.amp_i != b.n() * eq.amp_j) fail(ErrorCode::DimensionMismatch, "amplified dimensions differ");
  if (!verify_certificate(amplify(a, eq.amp_i), amplify(b, eq.amp_j), eq.certificate))
    fail(ErrorCode::InvalidArgument, "certificate does not verify");
  const std::vector<std::size_t> cls = classes_with_locked(eq);
  for (const RegisteredSeparation& s : separations_)
    if (cls[s.i] == cls[s.j])
      fail(ErrorCode::Integrity, "equivalence would merge a separated pair (" + std::to_string(s.i) + ", " + std::to_string(s.j) + ")");
  const std::size_t c = cls[eq.i];
  for (std::size_t x = 0; x < algebras_.size(); ++x)
    for (std::size_t y = x + 1; y < algebras_.size(); ++y)
      if (cls[x] == c && cls[y] == c && try_separate(algebras_[x], algebras_[y]))
        fail(ErrorCode::Integrity, "equivalence contradicts a separation witness for (" + std::to_string(x) + ", " + std::to_string(y) + ")");
  equivalences_.push_back(eq);
}

bool ClassRegistry::add_separation(std::size_t i, std::size_t j) {
  std::unique_lock lock(mutex_);
  require_index(i);
  require_index(j);
  const auto w = separate(algebras_[i], algebras_[j]);
  if (!w) return false;
  const std::vector<std::size_t> cls = classes_locked();
  if (cls[i] == cls[j]) fail(ErrorCode::Integrity, "separated pair is certified equivalent");
  separations_.push_back({i, j, *w});
  return true;
}

void ClassRegistry::add_separation(const RegisteredSeparation& sep) {
  std::unique_lock lock(mutex_);
  require_index(sep.i);
  require_index(sep.j);
  if (!witness_reproduces(algebras_[sep.i], algebras_[sep.j], sep.witness))
    fail(ErrorCode::InvalidArgument, "separation witness is not reproduced by the invariants");
  const std::vector<std::size_t> cls = classes_locked();
  if (cls[sep.i] == cls[sep.j]) fail(ErrorCode::Integrity, "separated pair is certified equivalent");
  separations_.push_back(sep);
}

std::optional<std::size_t> ClassRegistry::certify_trivial(std::size_t i) {
  std::unique_lock lock(mutex_);
  require_index(i);
  const DiffMatrixAlgebra a = algebras_[i];
  const TrivialityVerdict v = decide_trivial(a);
  if (v.status != TrivialityStatus::TrivialWithCertificate) return std::nullopt;
  const std::size_t unit = add_algebra_locked(DiffMatrixAlgebra::trivial(a.base(), 1));
  if (unit != i) add_equivalence_locked({i, unit, 1, a.n(), *v.certificate});
  return unit;
}

std::optional<RegisteredEquivalence> ClassRegistry::find_edge_locked(std::size_t from, std::size_t to) const {
  if (from == to) return RegisteredEquivalence{from, to, 1, 1, {RFMatrix::identity(algebras_[from].n()), std::nullopt}};
  for (const RegisteredEquivalence& e : equivalences_) {
    if (e.i == from && e.j == to) return e;
    if (e.i == to && e.j == from) return RegisteredEquivalence{from, to, e.amp_j, e.amp_i, inverse_certificate(e.certificate)};
  }
  return std::nullopt;
}

std::pair<std::size_t, std::size_t> ClassRegistry::derive_tensor_equivalence(std::size_t i, std::size_t j, std::size_t i2,
                                                                             std::size_t j2) {
  std::unique_lock lock(mutex_);
  for (std::size_t k : {i, j, i2, j2}) require_index(k);
  const auto e1 = find_edge_locked(i, i2);
  const auto e2 = find_edge_locked(j, j2);
  if (!e1 || !e2) fail(ErrorCode::InvalidArgument, "tensor inheritance needs stored certificates for both factors");
  const DiffMatrixAlgebra ai = algebras_[i], aj = algebras_[j], ai2 = algebras_[i2], aj2 = algebras_[j2];
  const std::size_t t1 = add_algebra_locked(tensor_alg(ai, aj));
  const std::size_t t2 = add_algebra_locked(tensor_alg(ai2, aj2));
  const RFMatrix p_src = middle_swap(ai.n(), e1->amp_i, aj.n(), e2->amp_i);
  const RFMatrix p_dst = middle_swap(ai2.n(), e1->amp_j, aj2.n(), e2->amp_j);
  GaugeCertificate cert = tensor_certificate(e1->certificate, e2->certificate);
  cert.y = inverse(p_src) * cert.y * p_dst;
  if (t1 != t2 || !(cert.y == RFMatrix::identity(cert.y.rows())))
    add_equivalence_locked({t1, t2, e1->amp_i * e2->amp_i, e1->amp_j * e2->amp_j, std::move(cert)});
  return {t1, t2};
}

Distinction ClassRegistry::distinguish(std::size_t i, std::size_t j) const {
  std::shared_lock lock(mutex_);
  require_index(i);
  require_index(j);
  const std::vector<std::size_t> cls = classes_locked();
  const bool equivalent = i == j || cls[i] == cls[j];
  const bool separated = separated_locked(cls, cls[i], cls[j]);
  if (equivalent && separated) fail(ErrorCode::Integrity, "pair is both certified equivalent and separated");
  if (equivalent) return Distinction::Equivalent;
  if (separated) return Distinction::NotEquivalent;
  return Distinction::Unknown;
}

}  // namespace diffbrauer
