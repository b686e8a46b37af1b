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
#include <string>

#include "diffbrauer/polynomial.hpp"
#include "diffbrauer/rational.hpp"

namespace diffbrauer {

/// Element of Q(x): num/den with gcd(num, den) = 1 and den monic.
class RationalFunction {
 public:
  RationalFunction() : den_(Rational(1)) {}
  RationalFunction(long c) : num_(Rational(c)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(const Rational& c) : num_(c), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial p) : num_(std::move(p)), den_(Rational(1)) {}  // NOLINT
  RationalFunction(Polynomial num, Polynomial den);

  static RationalFunction x();

  const Polynomial& num() const { return num_; }
  const Polynomial& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  bool is_constant() const { return num_.degree() <= 0 && den_.degree() == 0; }
  /// The value when constant, otherwise nullopt.
  std::optional<Rational> constant_value() const;

  /// d/dx by the quotient rule.
  RationalFunction derivative() const;

  RationalFunction operator-() const { return RationalFunction(-num_, den_, Canonical{}); }
  RationalFunction& operator+=(const RationalFunction& o) { return *this = *this + o; }
  RationalFunction& operator-=(const RationalFunction& o) { return *this = *this - o; }
  RationalFunction& operator*=(const RationalFunction& o) { return *this = *this * o; }
  RationalFunction& operator/=(const RationalFunction& o) { return *this = *this / o; }

  friend RationalFunction operator+(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator-(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator*(const RationalFunction& a, const RationalFunction& b);
  friend RationalFunction operator/(const RationalFunction& a, const RationalFunction& b);
  friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  RationalFunction pow(int e) const;
  Rational evaluate(const Rational& at) const;

  /// e.g. "(x^2 + 1)/(x - 2)".
  std::string str() const;

 private:
  struct Canonical {};
  RationalFunction(Polynomial num, Polynomial den, Canonical)
      : num_(std::move(num)), den_(std::move(den)) {}

  Polynomial num_;
  Polynomial den_;
};

inline RationalFunction rf_derive(const RationalFunction& f) { return f.derivative(); }

}  // namespace diffbrauer
