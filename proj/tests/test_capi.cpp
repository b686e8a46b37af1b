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

// Exercises the shared library through its C interface only.

#include "doctest.h"

#include <memory>
#include <string>

#include "diffbrauer/diffbrauer.h"
#include "json.hpp"

using nlohmann::json;

namespace {

struct Out {
  char* p = nullptr;
  ~Out() { dbr_string_free(p); }
  json value() const { return json::parse(p); }
};

struct AlgDeleter {
  void operator()(dbr_algebra* a) const { dbr_algebra_free(a); }
};
using Alg = std::unique_ptr<dbr_algebra, AlgDeleter>;

Alg algebra(const std::string& text) {
  dbr_algebra* a = nullptr;
  REQUIRE_MESSAGE(dbr_algebra_from_json(text.c_str(), &a) == DBR_OK, dbr_last_error());
  return Alg(a);
}

const char* kE12Qx = R"j({"base":"Q(x)","n":2,"Z":[["0","1"],["0","0"]]})j";
const char* kE12Q = R"j({"base":"Q","n":2,"Z":[["0","1"],["0","0"]]})j";
const char* kD21 = R"j({"base":"Q(x)","n":2,"Z":[["2","0"],["0","1"]]})j";
const char* kD31 = R"j({"base":"Q(x)","n":2,"Z":[["3","0"],["0","1"]]})j";

}  // namespace

TEST_CASE("scalar entry points") {
  Out d;
  REQUIRE(dbr_rf_derive(R"j({"num":["0","1"],"den":["1","1"]})j", &d.p) == DBR_OK);
  CHECK(d.value() == json::parse(R"j({"num":["1"],"den":["1","2","1"]})j"));
  Out cp;
  REQUIRE(dbr_char_poly(R"j([["0","1"],["1","1"]])j", &cp.p) == DBR_OK);
  CHECK(cp.value() == json::parse(R"j(["-1","-1","1"])j"));
  Out roots;
  REQUIRE(dbr_rational_roots(R"j(["0","0","-4","0","1"])j", &roots.p) == DBR_OK);
  CHECK(roots.value()["roots"] == json::parse(R"j(["-2","0","0","2"])j"));
  CHECK(roots.value()["splits"] == true);
  Out sq;
  REQUIRE(dbr_squarefree_part(R"j(["0","0","-2","1"])j", &sq.p) == DBR_OK);
  CHECK(sq.value() == json::parse(R"j(["0","-2","1"])j"));
  Out y;
  int found = -1;
  REQUIRE(dbr_solve_log(R"j({"num":["2"],"den":["0","1"]})j", &y.p, &found) == DBR_OK);
  CHECK(found == 1);
  Out none;
  REQUIRE(dbr_solve_log(R"j({"num":["1"],"den":["0","2"]})j", &none.p, &found) == DBR_OK);
  CHECK(found == 0);
}

TEST_CASE("error codes and messages") {
  dbr_algebra* a = nullptr;
  CHECK(dbr_algebra_from_json("{", &a) == DBR_E_PARSE);
  CHECK(a == nullptr);
  CHECK(std::string(dbr_last_error()).size() > 0);
  CHECK(dbr_algebra_from_json(R"j({"base":"Q","n":1,"Z":[["1","2"]]})j", &a) == DBR_E_DIMENSION);
  CHECK(dbr_algebra_from_json(R"j({"base":"Q","n":1,"Z":[[{"num":["0","1"],"den":["1"]}]]})j", &a) == DBR_E_BASE);
  CHECK(dbr_algebra_from_json(nullptr, &a) == DBR_E_INVALID_ARGUMENT);
  const Alg alg = algebra(kE12Qx);
  Out out;
  CHECK(dbr_gauge_transform(alg.get(), R"j([["0","1"],["0","0"]])j", nullptr) == DBR_E_INVALID_ARGUMENT);
  dbr_algebra* g = nullptr;
  CHECK(dbr_gauge_transform(alg.get(), R"j([["0","1"],["0","0"]])j", &g) == DBR_E_SINGULAR);
  CHECK(dbr_e_values(algebra(R"j({"base":"Q(x)","n":1,"Z":[[{"num":["0","1"],"den":["1"]}]]})j").get(), &out.p) ==
        DBR_E_UNSUPPORTED);
  CHECK(dbr_status_name(DBR_OK) == std::string("ok"));
  CHECK(dbr_status_name(DBR_E_INTEGRITY) == std::string("integrity_error"));
}

TEST_CASE("algebra operations") {
  const Alg a = algebra(kD21), b = algebra(kD31), nil = algebra(kE12Qx);
  dbr_algebra* t = nullptr;
  REQUIRE(dbr_tensor(a.get(), b.get(), &t) == DBR_OK);
  const Alg tensor(t);
  CHECK(dbr_algebra_dimension(tensor.get()) == 4);
  Out tj;
  REQUIRE(dbr_algebra_to_json(tensor.get(), &tj.p) == DBR_OK);
  CHECK(tj.value()["Z"][0][0] == "5");
  CHECK(tj.value()["Z"][3][3] == "2");

  Out de;
  REQUIRE(dbr_derive_element(nil.get(), R"j([["0","0"],["1","0"]])j", &de.p) == DBR_OK);
  CHECK(de.value() == json::parse(R"j([["1","0"],["0","-1"]])j"));
  Out md;
  REQUIRE(dbr_module_derive(R"j({"base":"Q(x)","n":2,"A":[["0","1"],["0","0"]]})j", R"j(["0","1"])j", &md.p) == DBR_OK);
  CHECK(md.value() == json::parse(R"j(["1","0"])j"));

  const Alg zero = algebra(R"j({"base":"Q(x)","n":2,"Z":[["0","0"],["0","0"]]})j");
  int accepted = -1;
  REQUIRE(dbr_verify_certificate(nil.get(), zero.get(),
                                 R"j({"Y":[["1",{"num":["0","-1"],"den":["1"]}],["0","1"]]})j", &accepted) == DBR_OK);
  CHECK(accepted == 1);
  REQUIRE(dbr_verify_certificate(nil.get(), zero.get(), R"j({"Y":[["1","0"],["0","1"]]})j", &accepted) == DBR_OK);
  CHECK(accepted == 0);

  Out basis;
  REQUIRE(dbr_constants_basis(nil.get(), 2, &basis.p) == DBR_OK);
  CHECK(basis.value().size() == 4);
  Out ad;
  REQUIRE(dbr_ad_matrix(a.get(), &ad.p) == DBR_OK);
  CHECK(ad.value()["matrix"].size() == 4);
  Out inv;
  REQUIRE(dbr_invariants(b.get(), &inv.p) == DBR_OK);
  CHECK(inv.value()["e_value_set"] == json::parse(R"j(["-2","0","2"])j"));
  Out sep;
  int separated = -1;
  REQUIRE(dbr_separate(a.get(), b.get(), &sep.p, &separated) == DBR_OK);
  CHECK(separated == 1);
  CHECK(sep.value()["kind"] == "EValueSet");
}

TEST_CASE("triviality through the C interface") {
  Out v1;
  dbr_verdict verdict = DBR_UNKNOWN;
  REQUIRE(dbr_decide_trivial(algebra(kE12Q).get(), nullptr, &v1.p, &verdict) == DBR_OK);
  CHECK(verdict == DBR_NONTRIVIAL);
  CHECK(v1.value()["witness"]["kind"] == "NilpotencyIndex");
  Out v2;
  REQUIRE(dbr_decide_trivial(algebra(kE12Qx).get(), nullptr, &v2.p, &verdict) == DBR_OK);
  CHECK(verdict == DBR_TRIVIAL);
  Out cert;
  REQUIRE(dbr_nilpotent_exp_certificate(algebra(kE12Qx).get(), &cert.p) == DBR_OK);
  CHECK(v2.value()["certificate"] == cert.value());
  Out obs;
  int found = -1;
  REQUIRE(dbr_scalar_obstruction(algebra(kE12Q).get(), &obs.p, &found) == DBR_OK);
  CHECK(found == 1);
  Out rot;
  REQUIRE(dbr_decide_trivial(algebra(R"j({"base":"Q(x)","n":2,"Z":[["0","1"],["-1","0"]]})j").get(), nullptr, &rot.p,
                             &verdict) == DBR_OK);
  CHECK(verdict == DBR_UNKNOWN);
}

TEST_CASE("monoids through the C interface") {
  dbr_monoid* m = nullptr;
  REQUIRE(dbr_monoid_from_json(R"j({"size":6,"identity":1,"table":[[0,0,0,0,0,0],[0,1,2,3,4,5],[0,2,4,0,2,4],
    [0,3,0,3,0,3],[0,4,2,0,4,2],[0,5,4,3,2,1]]})j", &m) == DBR_OK);
  Out q;
  REQUIRE(dbr_monoid_quotient(m, "[1,5]", &q.p) == DBR_OK);
  CHECK(q.value()["classes"] == json::parse("[[0],[1,5],[2,4],[3]]"));
  Out u;
  REQUIRE(dbr_monoid_units(m, &u.p) == DBR_OK);
  CHECK(u.value() == json::parse("[1,5]"));
  Out qu;
  int consistent = -1;
  REQUIRE(dbr_monoid_quotient_units(m, "[1,5]", &qu.p, &consistent) == DBR_OK);
  CHECK(consistent == 1);
  Out badq;
  CHECK(dbr_monoid_quotient(m, "[2]", &badq.p) == DBR_E_INVALID_ARGUMENT);
  dbr_monoid_free(m);
  CHECK(dbr_monoid_from_json(R"j({"size":2,"identity":0,"table":[[0,1],[0,1]]})j", &m) == DBR_E_INVALID_ARGUMENT);
}

TEST_CASE("registry through the C interface") {
  dbr_registry* reg = nullptr;
  REQUIRE(dbr_registry_new(4, &reg) == DBR_OK);
  std::size_t i_nil = 0, i_a = 0, i_b = 0, unit = 0;
  REQUIRE(dbr_registry_add_algebra(reg, algebra(kE12Qx).get(), &i_nil) == DBR_OK);
  REQUIRE(dbr_registry_add_algebra(reg, algebra(kD21).get(), &i_a) == DBR_OK);
  REQUIRE(dbr_registry_add_algebra(reg, algebra(kD31).get(), &i_b) == DBR_OK);
  int found = 0;
  REQUIRE(dbr_registry_certify_trivial(reg, i_nil, &unit, &found) == DBR_OK);
  CHECK(found == 1);
  int separated = 0;
  REQUIRE(dbr_registry_add_separation(reg, i_a, i_b, &separated) == DBR_OK);
  CHECK(separated == 1);
  dbr_distinction d = DBR_UNDECIDED;
  REQUIRE(dbr_registry_distinguish(reg, i_nil, unit, &d) == DBR_OK);
  CHECK(d == DBR_EQUIVALENT);
  REQUIRE(dbr_registry_distinguish(reg, i_a, i_b, &d) == DBR_OK);
  CHECK(d == DBR_NOT_EQUIVALENT);
  std::size_t t1 = 0, t2 = 0;
  REQUIRE(dbr_registry_derive_tensor(reg, i_nil, i_a, unit, i_a, &t1, &t2) == DBR_OK);
  CHECK(t2 == i_a);
  CHECK(dbr_registry_add_equivalence(reg, i_a, i_b, 1, 1, R"j({"Y":[["1","0"],["0","1"]]})j") == DBR_E_INVALID_ARGUMENT);
  CHECK(dbr_registry_distinguish(reg, 0, 99, &d) == DBR_E_INVALID_ARGUMENT);

  Out doc;
  REQUIRE(dbr_registry_to_json(reg, &doc.p) == DBR_OK);
  dbr_registry* back = nullptr;
  REQUIRE(dbr_registry_from_json(doc.p, &back) == DBR_OK);
  CHECK(dbr_registry_size(back) == dbr_registry_size(reg));
  Out doc2;
  REQUIRE(dbr_registry_to_json(back, &doc2.p) == DBR_OK);
  CHECK(std::string(doc.p) == std::string(doc2.p));
  dbr_registry_free(back);
  dbr_registry_free(reg);
}

TEST_CASE("reproduction scenarios pass") {
  Out rep;
  int all = 0;
  REQUIRE(dbr_reproduce_examples(&rep.p, &all) == DBR_OK);
  CHECK(all == 1);
  for (const auto& s : rep.value()) CHECK_MESSAGE(s["passed"] == true, s.dump());
}
