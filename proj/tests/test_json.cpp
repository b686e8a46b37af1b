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

#include <functional>

#include "diffbrauer/json_io.hpp"
#include "diffbrauer/triviality.hpp"
#include "support/oracles.hpp"

using namespace diffbrauer;
using namespace diffbrauer::testing;
namespace jio = diffbrauer::json_io;
using jio::Json;

namespace {

constexpr BaseRing kQ = BaseRing::ConstantField;
constexpr BaseRing kQx = BaseRing::RationalFunctionField;

RFMatrix e(std::size_t n, std::size_t i, std::size_t j) { return RFMatrix::unit(n, i, j); }

// encode, print, parse, decode; returns the decoded value and checks that
// printing it again gives the same bytes
template <class T, class Decode>
T round_trip(const T& value, Decode decode) {
  const std::string text = jio::encode(value).dump(2);
  const T back = decode(jio::parse(text));
  CHECK(jio::encode(back).dump(2) == text);
  return back;
}

ClassRegistry sample_registry() {
  ClassRegistry reg;
  const std::size_t e12_q = reg.add_algebra(DiffMatrixAlgebra(kQ, e(2, 0, 1)));
  const std::size_t zero_q = reg.add_algebra(DiffMatrixAlgebra::trivial(kQ, 2));
  const std::size_t e12_qx = reg.add_algebra(DiffMatrixAlgebra(kQx, e(2, 0, 1)));
  RFMatrix d1(2, 2), d2(2, 2);
  d1(0, 0) = RF(2), d1(1, 1) = RF(1);
  d2(0, 0) = RF(3), d2(1, 1) = RF(1);
  const std::size_t a1 = reg.add_algebra(DiffMatrixAlgebra(kQx, d1));
  const std::size_t a2 = reg.add_algebra(DiffMatrixAlgebra(kQx, d2));
  reg.add_algebra(DiffMatrixAlgebra(kQx, RFMatrix::scalar(2, RF(1) / RF::x())));
  (void)reg.certify_trivial(e12_qx);
  (void)reg.certify_trivial(zero_q);
  REQUIRE(reg.add_separation(e12_q, zero_q));
  REQUIRE(reg.add_separation(a1, a2));
  return reg;
}

void mutate(Json& j, Random& rnd) {
  const std::vector<Json> junk = {nullptr, Json(-1), Json(3.5), Json("zz"), Json("1/0"), Json::array(),
                                  Json::object(), Json(true), Json(99), Json::array({Json("1")})};
  std::vector<Json*> nodes;
  std::function<void(Json&)> walk = [&](Json& n) {
    nodes.push_back(&n);
    if (n.is_structured())
      for (auto& child : n) walk(child);
  };
  walk(j);
  *nodes[static_cast<std::size_t>(rnd.integer(0, static_cast<long>(nodes.size()) - 1))] =
      junk[static_cast<std::size_t>(rnd.integer(0, static_cast<long>(junk.size()) - 1))];
}

template <class Decode>
void fuzz(const Json& valid, Decode decode, unsigned seed) {
  Random rnd(seed);
  for (int k = 0; k < 150; ++k) {
    Json j = valid;
    mutate(j, rnd);
    if (rnd.integer(0, 1)) mutate(j, rnd);
    bool ok = true;
    try {
      (void)decode(j);
    } catch (const Error&) {
    } catch (...) {
      ok = false;
    }
    CHECK(ok);
  }
}

}  // namespace

TEST_CASE("scalar encodings") {
  CHECK(jio::encode(q(-3, 4)) == Json("-3/4"));
  CHECK(jio::encode(RF(q(5))) == Json("5"));
  CHECK(jio::encode(rf({0, 1}, {1, 1})) == Json::parse(R"j({"num":["0","1"],"den":["1","1"]})j"));
  CHECK(jio::encode_fraction(RF(2)) == Json::parse(R"j({"num":["2"],"den":["1"]})j"));
  CHECK(jio::decode_scalar(Json(7)) == RF(7));
  CHECK(jio::decode_scalar(Json("123456789012345678901234567890")).num().leading().num() ==
        mpz_class("123456789012345678901234567890"));
  CHECK(jio::decode_scalar(Json::parse(R"j({"num":["2","2"],"den":["4"]})j")) == rf({1, 1}, {2}));
  CHECK_THROWS_AS(jio::decode_scalar(Json::parse(R"j({"num":["1"],"den":[]})j")), Error);
  CHECK_THROWS_AS(jio::decode_polynomial(Json::parse(R"j(["1","0"])j")), Error);
  CHECK_THROWS_AS(jio::decode_matrix(Json::parse(R"j([["1","2"],["3"]])j")), Error);
  CHECK_THROWS_AS(jio::parse("{\"base\":"), Error);
}

TEST_CASE("algebra and certificate encodings") {
  const DiffMatrixAlgebra alg(kQx, e(2, 0, 1));
  CHECK(jio::encode(alg) == Json::parse(R"j({"base":"Q(x)","n":2,"Z":[["0","1"],["0","0"]]})j"));
  CHECK_THROWS_AS(jio::decode_algebra(Json::parse(R"j({"base":"Q","n":3,"Z":[["0","1"],["0","0"]]})j")), Error);
  CHECK_THROWS_AS(jio::decode_algebra(Json::parse(R"j({"base":"R","n":1,"Z":[["0"]]})j")), Error);
  CHECK_THROWS_AS(jio::decode_algebra(Json::parse(R"j({"base":"Q","n":1,"Z":[[{"num":["0","1"],"den":["1"]}]]})j")), Error);
  const GaugeCertificate c = decide_trivial(alg).certificate.value();
  const Json cj = jio::encode(c);
  CHECK(cj["Y"][0][1] == Json::parse(R"j({"num":["0","-1"],"den":["1"]})j"));
  CHECK_FALSE(cj.contains("c"));
  CHECK(jio::encode(GaugeCertificate{RFMatrix::identity(1), RF(q(1, 2))})["c"] == Json("1/2"));
}

TEST_CASE("values round-trip exactly") {
  Random rnd(51);
  for (int k = 0; k < 40; ++k) {
    const std::size_t n = static_cast<std::size_t>(rnd.integer(1, 3));
    const RFMatrix z = rnd.function_matrix(n, 2);
    const DiffMatrixAlgebra alg(kQx, z);
    CHECK(round_trip(alg, jio::decode_algebra) == alg);
    const DiffMatrixAlgebra alg_q(kQ, lift(rnd.rational_matrix(n)));
    CHECK(round_trip(alg_q, jio::decode_algebra) == alg_q);
    const DiffModule mod{kQx, rnd.function_matrix(n)};
    const DiffModule mod_back = round_trip(mod, jio::decode_module);
    CHECK(mod_back.a == mod.a);
    CHECK(mod_back.base == mod.base);
    const GaugeCertificate cert{rnd.invertible_function_matrix(n), k % 2 ? std::optional<RF>(rnd.function()) : std::nullopt};
    CHECK(round_trip(cert, jio::decode_certificate) == cert);
    const std::vector<RF> v{rnd.function(), rnd.function()};
    CHECK(round_trip(v, jio::decode_vector) == v);
    const Polynomial p = rnd.polynomial(5);
    CHECK(round_trip(p, jio::decode_polynomial) == p);
    const InvariantReport rep = eig_diff_report(k % 3 || n > 2 ? alg_q : alg);
    CHECK(round_trip(rep, jio::decode_report) == rep);
    const TrivialityVerdict verdict = decide_trivial(k % 2 ? alg_q : DiffMatrixAlgebra(kQx, lift(rnd.nilpotent(n))));
    CHECK(round_trip(verdict, jio::decode_verdict) == verdict);
  }
  const DiffMatrixAlgebra rot(kQ, RFMatrix{{RF(0), RF(1)}, {RF(-1), RF(0)}});
  for (const DiffMatrixAlgebra& other : {DiffMatrixAlgebra::trivial(kQ, 2), DiffMatrixAlgebra(kQ, e(2, 0, 1)),
                                         DiffMatrixAlgebra(kQ, RFMatrix{{RF(1), RF(0)}, {RF(0), RF(0)}})}) {
    const auto w = separate(rot, other);
    REQUIRE(w.has_value());
    CHECK(round_trip(*w, jio::decode_witness) == *w);
  }
  const auto m = FiniteCommutativeMonoid::multiplicative_mod(6);
  CHECK(round_trip(m, jio::decode_monoid) == m);
  const Subset s{1, 5};
  CHECK(jio::decode_subset(jio::encode_subset(s)) == s);
  CHECK(jio::decode_subset(Json::parse("[5,1,5]")) == s);
}

TEST_CASE("registry persists and reloads with re-verification") {
  const ClassRegistry reg = sample_registry();
  const std::string text = jio::encode(reg).dump(2);
  const ClassRegistry back = jio::decode_registry(jio::parse(text));
  CHECK(jio::encode(back).dump(2) == text);
  CHECK(back.size() == reg.size());
  for (std::size_t i = 0; i < reg.size(); ++i)
    for (std::size_t j = 0; j < reg.size(); ++j) CHECK(back.distinguish(i, j) == reg.distinguish(i, j));
}

TEST_CASE("tampered registries are rejected") {
  const Json good = jio::encode(sample_registry());
  {
    Json j = good;
    j["equivalences"][0]["certificate"]["Y"][0][1] = "5";
    CHECK_THROWS_AS(jio::decode_registry(j), Error);
  }
  {
    Json j = good;
    j["separations"][0]["witness"]["left"] = 2;
    CHECK_THROWS_AS(jio::decode_registry(j), Error);
  }
  {
    Json j = good;
    j["algebras"].push_back(j["algebras"][0]);
    CHECK_THROWS_AS(jio::decode_registry(j), Error);
  }
  {
    Json j = good;
    j["equivalences"][0]["amp_j"] = 9;
    CHECK_THROWS_AS(jio::decode_registry(j), Error);
  }
}

TEST_CASE("malformed documents raise library errors only") {
  const DiffMatrixAlgebra alg(kQx, RFMatrix{{rf({1}, {0, 1}), RF(2)}, {RF(0), RF(q(1, 3))}});
  fuzz(jio::encode(alg), jio::decode_algebra, 61);
  fuzz(jio::encode(GaugeCertificate{RFMatrix::identity(2), RF(3)}), jio::decode_certificate, 62);
  fuzz(jio::encode(eig_diff_report(alg)), jio::decode_report, 63);
  fuzz(jio::encode(decide_trivial(DiffMatrixAlgebra(kQ, e(2, 0, 1)))), jio::decode_verdict, 64);
  fuzz(jio::encode(FiniteCommutativeMonoid::multiplicative_mod(4)), jio::decode_monoid, 65);
  fuzz(jio::encode(sample_registry()), jio::decode_registry, 66);
  fuzz(jio::encode(DiffModule{kQx, e(2, 0, 1)}), jio::decode_module, 67);
}
