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

#include <algorithm>
#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "diffbrauer/error.hpp"
#include "diffbrauer/rational.hpp"

namespace diffbrauer {

/// Dense univariate polynomial over a field F, constant term first.
///
/// F must be constructible from `long`, support field arithmetic and expose
/// `is_zero()`. The coefficient vector never carries a trailing zero, so the
/// zero polynomial is the empty vector and equality is structural.
template <class F>
class UPoly {
 public:
  using coefficient_type = F;

  UPoly() = default;
  UPoly(F constant) {  // NOLINT(google-explicit-constructor)
    if (!constant.is_zero()) coeffs_.push_back(std::move(constant));
  }
  UPoly(std::initializer_list<F> coeffs) : coeffs_(coeffs) { trim(); }
  explicit UPoly(std::vector<F> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

  /// The monomial c·t^k.
  static UPoly monomial(F c, std::size_t k) {
    if (c.is_zero()) return {};
    std::vector<F> v(k + 1, F(0));
    v[k] = std::move(c);
    return UPoly(std::move(v));
  }
  static UPoly variable() { return monomial(F(1), 1); }

  const std::vector<F>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }

  F coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : F(0); }
  F leading() const { return coeffs_.empty() ? F(0) : coeffs_.back(); }
  F constant_term() const { return coeff(0); }

  UPoly monic() const {
    if (is_zero()) return {};
    const F lc = leading();
    std::vector<F> v;
    v.reserve(coeffs_.size());
    for (const F& c : coeffs_) v.push_back(c / lc);
    return UPoly(std::move(v));
  }

  UPoly derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<F> v;
    v.reserve(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) v.push_back(coeffs_[k] * F(static_cast<long>(k)));
    return UPoly(std::move(v));
  }

  template <class T>
  T evaluate(const T& at) const {
    T acc(0);
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + T(*it);
    return acc;
  }
  F operator()(const F& at) const { return evaluate<F>(at); }

  UPoly operator-() const {
    std::vector<F> v;
    v.reserve(coeffs_.size());
    for (const F& c : coeffs_) v.push_back(-c);
    return UPoly(std::move(v));
  }

  UPoly& operator+=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] += o.coeffs_[k];
    trim();
    return *this;
  }
  UPoly& operator-=(const UPoly& o) {
    if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), F(0));
    for (std::size_t k = 0; k < o.coeffs_.size(); ++k) coeffs_[k] -= o.coeffs_[k];
    trim();
    return *this;
  }
  UPoly& operator*=(const UPoly& o) { return *this = *this * o; }

  friend UPoly operator+(UPoly a, const UPoly& b) { return a += b; }
  friend UPoly operator-(UPoly a, const UPoly& b) { return a -= b; }
  friend UPoly operator*(const UPoly& a, const UPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<F> v(a.coeffs_.size() + b.coeffs_.size() - 1, F(0));
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) v[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    return UPoly(std::move(v));
  }
  friend UPoly operator*(const F& s, const UPoly& p) { return UPoly(s) * p; }

  friend bool operator==(const UPoly& a, const UPoly& b) { return a.coeffs_ == b.coeffs_; }

  /// Euclidean division; throws on a zero divisor.
  std::pair<UPoly, UPoly> divmod(const UPoly& divisor) const {
    if (divisor.is_zero()) fail(ErrorCode::InvalidArgument, "polynomial division by zero");
    if (degree() < divisor.degree()) return {UPoly{}, *this};
    std::vector<F> rem = coeffs_;
    std::vector<F> quo(coeffs_.size() - divisor.coeffs_.size() + 1, F(0));
    const F lc = divisor.leading();
    const std::size_t dd = divisor.coeffs_.size() - 1;
    for (std::size_t k = quo.size(); k-- > 0;) {
      F q = rem[k + dd] / lc;
      if (q.is_zero()) continue;
      for (std::size_t j = 0; j <= dd; ++j) rem[k + j] -= q * divisor.coeffs_[j];
      quo[k] = std::move(q);
    }
    rem.resize(dd);
    return {UPoly(std::move(quo)), UPoly(std::move(rem))};
  }
  friend UPoly operator/(const UPoly& a, const UPoly& b) { return a.divmod(b).first; }
  friend UPoly operator%(const UPoly& a, const UPoly& b) { return a.divmod(b).second; }

  UPoly pow(unsigned e) const {
    UPoly result(F(1)), base = *this;
    while (e) {
      if (e & 1U) result *= base;
      e >>= 1U;
      if (e) base *= base;
    }
    return result;
  }

 private:
  void trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
  }

  std::vector<F> coeffs_;
};

/// Monic gcd (zero only when both inputs are zero).
template <class F>
UPoly<F> gcd(UPoly<F> a, UPoly<F> b) {
  while (!b.is_zero()) {
    UPoly<F> r = a % b;
    a = std::move(b);
    b = r.monic();
  }
  return a.monic();
}

/// p / gcd(p, p'), made monic.
template <class F>
UPoly<F> squarefree_part(const UPoly<F>& p) {
  if (p.is_zero()) fail(ErrorCode::InvalidArgument, "squarefree part of the zero polynomial");
  return (p / gcd(p, p.derivative())).monic();
}

/// Resultant via the Euclidean remainder sequence over a field.
template <class F>
F resultant(const UPoly<F>& a, const UPoly<F>& b) {
  if (a.is_zero() || b.is_zero()) return F(0);
  if (b.degree() == 0) {
    F r(1);
    for (long k = 0; k < a.degree(); ++k) r = r * b.leading();
    return r;
  }
  if (a.degree() == 0) {
    F r(1);
    for (long k = 0; k < b.degree(); ++k) r = r * a.leading();
    return r;
  }
  const UPoly<F> rem = a % b;
  if (rem.is_zero()) return F(0);
  F scale(1);
  for (long k = 0; k < a.degree() - rem.degree(); ++k) scale = scale * b.leading();
  if ((a.degree() * b.degree()) % 2 != 0) scale = -scale;
  return scale * resultant(b, rem);
}

using Polynomial = UPoly<Rational>;

/// Human-readable rendering over Q, e.g. "t^2 - 3/2*t + 1".
std::string to_string(const Polynomial& p, const std::string& var = "t");

}  // namespace diffbrauer
