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

#include "diffbrauer/reproduce.hpp"

#include <functional>

#include "diffbrauer/diffalg.hpp"
#include "diffbrauer/error.hpp"
#include "diffbrauer/invariants.hpp"
#include "diffbrauer/monoid.hpp"
#include "diffbrauer/roots.hpp"
#include "diffbrauer/triviality.hpp"

namespace diffbrauer {

namespace {

using RF = RationalFunction;

RFMatrix diag2(long a, long b) { return RFMatrix{{RF(a), RF(0)}, {RF(0), RF(b)}}; }
RFMatrix e12() { return RFMatrix::unit(2, 0, 1); }

std::string set_str(const std::vector<Rational>& v) {
  std::string s = "{";
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? "," : "") + v[k].str();
  return s + "}";
}

ScenarioResult run(std::string name, std::string claim, const std::function<std::string()>& body) {
  ScenarioResult r{std::move(name), std::move(claim), false, {}};
  try {
    r.detail = body();
    r.passed = r.detail.rfind("FAIL", 0) != 0;
  } catch (const std::exception& e) {
    r.detail = std::string("FAIL: exception: ") + e.what();
  }
  return r;
}

}  // namespace

std::vector<ScenarioResult> reproduce_examples() {
  std::vector<ScenarioResult> out;
  const BaseRing q = BaseRing::ConstantField, qx = BaseRing::RationalFunctionField;

  out.push_back(run("eigenvalue_differences", "ad eigenvalues over Q are differences of eigenvalues of Z", [&] {
    // Z = P diag(3, 1, -1) P^-1 with a fixed unimodular P.
    const QMatrix p{{Rational(1), Rational(2), Rational(0)}, {Rational(0), Rational(1), Rational(1)}, {Rational(1), Rational(0), Rational(1)}};
    const QMatrix d{{Rational(3), Rational(0), Rational(0)}, {Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(0), Rational(-1)}};
    const DiffMatrixAlgebra alg(q, lift(p * d * inverse(p)));
    const InvariantReport rep = eig_diff_report(alg);
    std::vector<Rational> expected;
    for (long a : {3, 1, -1})
      for (long b : {3, 1, -1}) expected.emplace_back(a - b);
    std::sort(expected.begin(), expected.end());
    if (rep.root_multiset != expected) return "FAIL: roots " + set_str(rep.root_multiset);
    return "roots " + set_str(rep.root_multiset);
  }));

  out.push_back(run("tensor_eigenvalue_stability", "tensoring with (M_p, 0) keeps the ad eigenvalue set", [&] {
    const DiffMatrixAlgebra a(q, diag2(3, 1));
    const std::vector<Rational> base = e_values(a);
    for (std::size_t p : {2U, 3U}) {
      const DiffMatrixAlgebra t = tensor_alg(a, DiffMatrixAlgebra::trivial(q, p));
      if (e_values(t) != base) return std::string("FAIL: p = ") + std::to_string(p) + " gives " + set_str(e_values(t));
    }
    return "e-values " + set_str(base) + " for p = 1, 2, 3";
  }));

  out.push_back(run("tensor_compatibility", "the tensor derivation is D_A ⊗ 1 + 1 ⊗ D_B", [&] {
    const DiffMatrixAlgebra a(qx, RFMatrix{{RF(1), RF::x()}, {RF(0), RF(2)}});
    const DiffMatrixAlgebra b(qx, RFMatrix{{RF(0), RF(1)}, {RF(3), RF(-1)}});
    const RFMatrix x{{RF::x(), RF(1)}, {RF(2), RF::x() * RF::x()}};
    const RFMatrix w{{RF(1), RF(-1)}, {RF::x(), RF(0)}};
    const RFMatrix lhs = derive_element(tensor_alg(a, b), kron(x, w));
    const RFMatrix rhs = kron(derive_element(a, x), w) + kron(x, derive_element(b, w));
    if (!(lhs == rhs)) return std::string("FAIL: Leibniz rule across the tensor product fails");
    return std::string("Leibniz rule holds on a 4x4 sample");
  }));

  out.push_back(run("scalar_triviality_over_Q", "over Q the trivial class forces Z scalar", [&] {
    const auto v1 = decide_trivial(DiffMatrixAlgebra(q, lift(QMatrix::scalar(3, Rational(5)))));
    const auto v2 = decide_trivial(DiffMatrixAlgebra(q, diag2(1, 2)));
    if (v1.status != TrivialityStatus::TrivialWithCertificate) return std::string("FAIL: 5I not trivial");
    if (v2.status != TrivialityStatus::NontrivialWithWitness) return std::string("FAIL: diag(1,2) not nontrivial");
    return std::string("5I trivial, diag(1,2) nontrivial");
  }));

  out.push_back(run("nilpotency_obstruction", "for Z = e12, ad^2 != 0 and ad^3 = 0; the class over Q is nontrivial", [&] {
    const DiffMatrixAlgebra alg(q, e12());
    const RFMatrix ad = ad_matrix(alg).matrix;
    if ((ad * ad).is_zero() || !(ad * ad * ad).is_zero()) return std::string("FAIL: ad powers");
    const auto rep = eig_diff_report(alg);
    if (rep.nilpotency_index != 3U) return std::string("FAIL: nilpotency index");
    const auto v = decide_trivial(alg);
    if (v.status != TrivialityStatus::NontrivialWithWitness || !v.witness || v.witness->kind != WitnessKind::NilpotencyIndex)
      return std::string("FAIL: expected a nilpotency witness");
    return std::string("nilpotency index 3, nontrivial over Q");
  }));

  out.push_back(run("trivialization_over_Qx", "(M_2(Q(x)), e12) is trivial", [&] {
    const DiffMatrixAlgebra alg(qx, e12());
    const auto v = decide_trivial(alg);
    if (v.status != TrivialityStatus::TrivialWithCertificate) return std::string("FAIL: not trivial");
    const RFMatrix expected = RFMatrix::identity(2) - RF::x() * e12();
    if (!(v.certificate->y == expected)) return std::string("FAIL: unexpected certificate");
    if (!verify_certificate(alg, DiffMatrixAlgebra::trivial(qx, 2), *v.certificate))
      return std::string("FAIL: certificate rejected");
    return std::string("certificate Y = I - x*e12 verified");
  }));

  out.push_back(run("e_values_of_A_lambda", "A(lambda) has nonzero e-values exactly +-lambda", [&] {
    for (long lambda : {1L, 2L})
      for (std::size_t p : {1U, 2U, 3U}) {
        const DiffMatrixAlgebra a0(qx, diag2(1 + lambda, 1));
        const auto ev = e_values(tensor_alg(a0, DiffMatrixAlgebra::trivial(qx, p)));
        const std::vector<Rational> expected{Rational(-lambda), Rational(0), Rational(lambda)};
        if (ev != expected) return "FAIL: lambda = " + std::to_string(lambda) + " gives " + set_str(ev);
      }
    return std::string("{-lambda, 0, lambda} for lambda = 1, 2 and p = 1, 2, 3");
  }));

  out.push_back(run("A0_lambda_separation", "A_0(1) and A_0(2) are distinct classes over Q(x)", [&] {
    const auto w = separate(DiffMatrixAlgebra(qx, diag2(2, 1)), DiffMatrixAlgebra(qx, diag2(3, 1)));
    if (!w || w->kind != WitnessKind::EValueSet) return std::string("FAIL: no e-value witness");
    return "e-values " + set_str(std::get<std::vector<Rational>>(w->left)) + " vs " +
           set_str(std::get<std::vector<Rational>>(w->right));
  }));

  out.push_back(run("scalar_ode_lemma", "y' = c y with nonzero constant c has no nonzero rational solution", [&] {
    for (long c : {1L, -1L, 2L, 7L})
      if (log_derivative_solve(RF(c))) return "FAIL: solution for c = " + std::to_string(c);
    const auto y = log_derivative_solve(RF(Polynomial{Rational(2)}, Polynomial{Rational(0), Rational(1)}));
    if (!y || !(*y == RF(Polynomial{Rational(0), Rational(0), Rational(1)}))) return std::string("FAIL: 2/x");
    return std::string("no solution for c in {1,-1,2,7}; y = x^2 for f = 2/x");
  }));

  out.push_back(run("monoid_quotient", "M/N under m1 n1 = m2 n2; invertible classes via abn in N", [&] {
    const auto m = FiniteCommutativeMonoid::multiplicative_mod(6);
    const Subset n{1, 5};
    const QuotientMonoid qm = quotient(m, n);
    if (qm.classes.size() != 4) return "FAIL: " + std::to_string(qm.classes.size()) + " classes";
    if (quotient_units(m, n) != pullback_units(m, n)) return std::string("FAIL: unit formula mismatch");
    return std::string("(Z/6, x) / {1,5} has 4 classes; unit formula agrees");
  }));

  return out;
}

}  // namespace diffbrauer
