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

#include "diffbrauer/rational_function.hpp"

#include "diffbrauer/error.hpp"

namespace diffbrauer {

RationalFunction::RationalFunction(Polynomial num, Polynomial den) {
  if (den.is_zero()) fail(ErrorCode::InvalidArgument, "rational function with zero denominator");
  if (num.is_zero()) {
    den_ = Polynomial(Rational(1));
    return;
  }
  const Polynomial g = gcd(num, den);
  if (!g.is_constant()) {
    num = num / g;
    den = den / g;
  }
  const Rational lc = den.leading();
  if (!lc.is_one()) {
    num = Polynomial(Rational(1) / lc) * num;
    den = den.monic();
  }
  num_ = std::move(num);
  den_ = std::move(den);
}

RationalFunction RationalFunction::x() { return RationalFunction(Polynomial::variable()); }

std::optional<Rational> RationalFunction::constant_value() const {
  if (!is_constant()) return std::nullopt;
  return num_.constant_term();
}

RationalFunction RationalFunction::derivative() const {
  if (den_.degree() == 0) return RationalFunction(num_.derivative(), den_, Canonical{});
  return RationalFunction(num_.derivative() * den_ - num_ * den_.derivative(), den_ * den_);
}

RationalFunction operator+(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero()) return b;
  if (b.is_zero()) return a;
  if (a.den_ == b.den_) {
    if (a.den_.degree() == 0) return RationalFunction(a.num_ + b.num_, a.den_, RationalFunction::Canonical{});
    return RationalFunction(a.num_ + b.num_, a.den_);
  }
  return RationalFunction(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFunction operator-(const RationalFunction& a, const RationalFunction& b) { return a + (-b); }

RationalFunction operator*(const RationalFunction& a, const RationalFunction& b) {
  if (a.is_zero() || b.is_zero()) return {};
  if (a.den_.degree() == 0 && b.den_.degree() == 0)
    return RationalFunction(a.num_ * b.num_, a.den_, RationalFunction::Canonical{});
  return RationalFunction(a.num_ * b.num_, a.den_ * b.den_);
}

RationalFunction operator/(const RationalFunction& a, const RationalFunction& b) {
  if (b.is_zero()) fail(ErrorCode::InvalidArgument, "division by the zero rational function");
  return RationalFunction(a.num_ * b.den_, a.den_ * b.num_);
}

RationalFunction RationalFunction::pow(int e) const {
  if (e < 0) return RationalFunction(1) / pow(-e);
  return RationalFunction(num_.pow(static_cast<unsigned>(e)), den_.pow(static_cast<unsigned>(e)), Canonical{});
}

Rational RationalFunction::evaluate(const Rational& at) const {
  const Rational d = den_(at);
  if (d.is_zero()) fail(ErrorCode::InvalidArgument, "evaluation at a pole");
  return num_(at) / d;
}

std::string RationalFunction::str() const {
  if (den_.degree() == 0) return to_string(num_, "x");
  const auto wrap = [](const Polynomial& p) {
    const std::string s = to_string(p, "x");
    return p.coeffs().size() > 1 && s.find_first_of("+- ", 1) != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace diffbrauer
