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

#include "diffbrauer/diffbrauer.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>

#include "diffbrauer/error.hpp"
#include "diffbrauer/json_io.hpp"
#include "diffbrauer/reproduce.hpp"

struct dbr_algebra {
  diffbrauer::DiffMatrixAlgebra value;
};
struct dbr_monoid {
  diffbrauer::FiniteCommutativeMonoid value;
};
struct dbr_registry {
  diffbrauer::ClassRegistry value;
};

namespace {

using namespace diffbrauer;
using json_io::Json;

thread_local std::string last_error;

dbr_status status_of(ErrorCode code) {
  switch (code) {
    case ErrorCode::Parse: return DBR_E_PARSE;
    case ErrorCode::InvalidArgument: return DBR_E_INVALID_ARGUMENT;
    case ErrorCode::DimensionMismatch: return DBR_E_DIMENSION;
    case ErrorCode::BaseMismatch: return DBR_E_BASE;
    case ErrorCode::Singular: return DBR_E_SINGULAR;
    case ErrorCode::Unsupported: return DBR_E_UNSUPPORTED;
    case ErrorCode::Integrity: return DBR_E_INTEGRITY;
  }
  return DBR_E_INTERNAL;
}

template <class Fn>
dbr_status guarded(Fn&& fn) {
  try {
    fn();
    last_error.clear();
    return DBR_OK;
  } catch (const Error& e) {
    last_error = e.what();
    return status_of(e.code());
  } catch (const Json::exception& e) {
    last_error = std::string("malformed JSON value: ") + e.what();
    return DBR_E_PARSE;
  } catch (const std::bad_alloc&) {
    last_error = "out of memory";
    return DBR_E_INTERNAL;
  } catch (const std::exception& e) {
    last_error = e.what();
    return DBR_E_INTERNAL;
  }
}

void require(const void* p, const char* what) {
  if (p == nullptr) fail(ErrorCode::InvalidArgument, std::string(what) + " is NULL");
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void emit(const Json& j, char** out) {
  require(out, "output pointer");
  *out = dup_string(j.dump());
}

Json parse_arg(const char* text, const char* what) {
  require(text, what);
  return json_io::parse(text);
}

}  // namespace

extern "C" {

const char* dbr_status_name(dbr_status status) {
  switch (status) {
    case DBR_OK: return "ok";
    case DBR_E_PARSE: return error_code_name(ErrorCode::Parse);
    case DBR_E_INVALID_ARGUMENT: return error_code_name(ErrorCode::InvalidArgument);
    case DBR_E_DIMENSION: return error_code_name(ErrorCode::DimensionMismatch);
    case DBR_E_BASE: return error_code_name(ErrorCode::BaseMismatch);
    case DBR_E_SINGULAR: return error_code_name(ErrorCode::Singular);
    case DBR_E_UNSUPPORTED: return error_code_name(ErrorCode::Unsupported);
    case DBR_E_INTEGRITY: return error_code_name(ErrorCode::Integrity);
    case DBR_E_INTERNAL: return "internal_error";
  }
  return "unknown";
}

const char* dbr_last_error(void) { return last_error.c_str(); }

void dbr_string_free(char* s) { std::free(s); }

const char* dbr_version(void) { return "1.0.0"; }

dbr_status dbr_rf_derive(const char* scalar_json, char** out_json) {
  return guarded([&] { emit(json_io::encode(rf_derive(json_io::decode_scalar(parse_arg(scalar_json, "scalar")))), out_json); });
}

dbr_status dbr_char_poly(const char* matrix_json, char** out_json) {
  return guarded([&] {
    const RFMatrix m = json_io::decode_matrix(parse_arg(matrix_json, "matrix"));
    if (const auto mq = constant_part(m)) {
      emit(json_io::encode(char_poly(*mq)), out_json);
      return;
    }
    emit(json_io::encode(char_poly(m)), out_json);
  });
}

dbr_status dbr_rational_roots(const char* poly_json, char** out_json) {
  return guarded([&] { emit(json_io::encode(rational_roots(json_io::decode_polynomial(parse_arg(poly_json, "polynomial")))), out_json); });
}

dbr_status dbr_squarefree_part(const char* poly_json, char** out_json) {
  return guarded([&] {
    emit(json_io::encode(squarefree_part(json_io::decode_polynomial(parse_arg(poly_json, "polynomial")))), out_json);
  });
}

dbr_status dbr_solve_log(const char* scalar_json, char** out_json, int* found) {
  return guarded([&] {
    require(found, "found");
    const auto y = log_derivative_solve(json_io::decode_scalar(parse_arg(scalar_json, "scalar")));
    emit(y ? json_io::encode(*y) : Json(nullptr), out_json);
    *found = y ? 1 : 0;
  });
}

dbr_status dbr_algebra_from_json(const char* json, dbr_algebra** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new dbr_algebra{json_io::decode_algebra(parse_arg(json, "algebra"))};
  });
}

dbr_status dbr_algebra_to_json(const dbr_algebra* alg, char** out_json) {
  return guarded([&] {
    require(alg, "algebra");
    emit(json_io::encode(alg->value), out_json);
  });
}

void dbr_algebra_free(dbr_algebra* alg) { delete alg; }

size_t dbr_algebra_dimension(const dbr_algebra* alg) { return alg ? alg->value.n() : 0; }

dbr_status dbr_derive_element(const dbr_algebra* alg, const char* matrix_json, char** out_json) {
  return guarded([&] {
    require(alg, "algebra");
    emit(json_io::encode(derive_element(alg->value, json_io::decode_matrix(parse_arg(matrix_json, "matrix")))), out_json);
  });
}

dbr_status dbr_module_derive(const char* module_json, const char* vector_json, char** out_json) {
  return guarded([&] {
    const DiffModule mod = json_io::decode_module(parse_arg(module_json, "module"));
    emit(json_io::encode(module_derive(mod, json_io::decode_vector(parse_arg(vector_json, "vector")))), out_json);
  });
}

dbr_status dbr_tensor(const dbr_algebra* a, const dbr_algebra* b, dbr_algebra** out) {
  return guarded([&] {
    require(a, "first algebra");
    require(b, "second algebra");
    require(out, "output pointer");
    *out = new dbr_algebra{tensor_alg(a->value, b->value)};
  });
}

dbr_status dbr_gauge_transform(const dbr_algebra* alg, const char* matrix_json, dbr_algebra** out) {
  return guarded([&] {
    require(alg, "algebra");
    require(out, "output pointer");
    DiffMatrixAlgebra result = gauge_transform(alg->value, json_io::decode_matrix(parse_arg(matrix_json, "matrix")));
    *out = new dbr_algebra{std::move(result)};
  });
}

dbr_status dbr_verify_certificate(const dbr_algebra* src, const dbr_algebra* dst, const char* cert_json, int* accepted) {
  return guarded([&] {
    require(src, "source algebra");
    require(dst, "target algebra");
    require(accepted, "accepted");
    *accepted = verify_certificate(src->value, dst->value, json_io::decode_certificate(parse_arg(cert_json, "certificate"))) ? 1 : 0;
  });
}

dbr_status dbr_constants_basis(const dbr_algebra* alg, unsigned deg_bound, char** out_json) {
  return guarded([&] {
    require(alg, "algebra");
    Json out = Json::array();
    for (const RFMatrix& m : constants_basis(alg->value, deg_bound)) out.push_back(json_io::encode(m));
    emit(out, out_json);
  });
}

dbr_status dbr_ad_matrix(const dbr_algebra* alg, char** out_json) {
  return guarded([&] {
    require(alg, "algebra");
    const AdOperator ad = ad_matrix(alg->value);
    emit(Json{{"n", ad.n}, {"matrix", json_io::encode(ad.matrix)}}, out_json);
  });
}

dbr_status dbr_invariants(const dbr_algebra* alg, char** out_json) {
  return guarded([&] {
    require(alg, "algebra");
    emit(json_io::encode(eig_diff_report(alg->value)), out_json);
  });
}

dbr_status dbr_e_values(const dbr_algebra* alg, char** out_json) {
  return guarded([&] {
    require(alg, "algebra");
    emit(json_io::encode_rationals(e_values(alg->value)), out_json);
  });
}

dbr_status dbr_separate(const dbr_algebra* a, const dbr_algebra* b, char** out_json, int* separated) {
  return guarded([&] {
    require(a, "first algebra");
    require(b, "second algebra");
    require(separated, "separated");
    const auto w = separate(a->value, b->value);
    emit(w ? json_io::encode(*w) : Json(nullptr), out_json);
    *separated = w ? 1 : 0;
  });
}

dbr_status dbr_decide_trivial(const dbr_algebra* alg, const char* cert_json, char** out_json, dbr_verdict* verdict) {
  return guarded([&] {
    require(alg, "algebra");
    require(verdict, "verdict");
    std::optional<GaugeCertificate> cert;
    if (cert_json != nullptr) cert = json_io::decode_certificate(json_io::parse(cert_json));
    const TrivialityVerdict v = decide_trivial(alg->value, cert);
    emit(json_io::encode(v), out_json);
    *verdict = v.status == TrivialityStatus::TrivialWithCertificate ? DBR_TRIVIAL
               : v.status == TrivialityStatus::NontrivialWithWitness ? DBR_NONTRIVIAL
                                                                     : DBR_UNKNOWN;
  });
}

dbr_status dbr_nilpotent_exp_certificate(const dbr_algebra* alg, char** out_json) {
  return guarded([&] {
    require(alg, "algebra");
    emit(json_io::encode(nilpotent_exp_certificate(alg->value)), out_json);
  });
}

dbr_status dbr_scalar_obstruction(const dbr_algebra* alg, char** out_json, int* found) {
  return guarded([&] {
    require(alg, "algebra");
    require(found, "found");
    const auto w = scalar_obstruction(alg->value);
    emit(w ? json_io::encode(*w) : Json(nullptr), out_json);
    *found = w ? 1 : 0;
  });
}

dbr_status dbr_monoid_from_json(const char* json, dbr_monoid** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new dbr_monoid{json_io::decode_monoid(parse_arg(json, "monoid"))};
  });
}

void dbr_monoid_free(dbr_monoid* m) { delete m; }

dbr_status dbr_monoid_quotient(const dbr_monoid* m, const char* subset_json, char** out_json) {
  return guarded([&] {
    require(m, "monoid");
    emit(json_io::encode(quotient(m->value, json_io::decode_subset(parse_arg(subset_json, "submonoid")))), out_json);
  });
}

dbr_status dbr_monoid_units(const dbr_monoid* m, char** out_json) {
  return guarded([&] {
    require(m, "monoid");
    emit(json_io::encode_subset(units(m->value)), out_json);
  });
}

dbr_status dbr_monoid_quotient_units(const dbr_monoid* m, const char* subset_json, char** out_json, int* consistent) {
  return guarded([&] {
    require(m, "monoid");
    require(consistent, "consistent");
    const Subset n = json_io::decode_subset(parse_arg(subset_json, "submonoid"));
    const Subset direct = quotient_units(m->value, n);
    emit(json_io::encode_subset(direct), out_json);
    *consistent = direct == pullback_units(m->value, n) ? 1 : 0;
  });
}

dbr_status dbr_registry_new(size_t tensor_bound, dbr_registry** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new dbr_registry{ClassRegistry(tensor_bound)};
  });
}

dbr_status dbr_registry_from_json(const char* json, dbr_registry** out) {
  return guarded([&] {
    require(out, "output pointer");
    *out = new dbr_registry{json_io::decode_registry(parse_arg(json, "registry"))};
  });
}

dbr_status dbr_registry_to_json(const dbr_registry* reg, char** out_json) {
  return guarded([&] {
    require(reg, "registry");
    emit(json_io::encode(reg->value), out_json);
  });
}

void dbr_registry_free(dbr_registry* reg) { delete reg; }

size_t dbr_registry_size(const dbr_registry* reg) { return reg ? reg->value.size() : 0; }

dbr_status dbr_registry_add_algebra(dbr_registry* reg, const dbr_algebra* alg, size_t* index) {
  return guarded([&] {
    require(reg, "registry");
    require(alg, "algebra");
    require(index, "index");
    *index = reg->value.add_algebra(alg->value);
  });
}

dbr_status dbr_registry_add_equivalence(dbr_registry* reg, size_t i, size_t j, size_t amp_i, size_t amp_j, const char* cert_json) {
  return guarded([&] {
    require(reg, "registry");
    reg->value.add_equivalence({i, j, amp_i, amp_j, json_io::decode_certificate(parse_arg(cert_json, "certificate"))});
  });
}

dbr_status dbr_registry_add_separation(dbr_registry* reg, size_t i, size_t j, int* separated) {
  return guarded([&] {
    require(reg, "registry");
    require(separated, "separated");
    *separated = reg->value.add_separation(i, j) ? 1 : 0;
  });
}

dbr_status dbr_registry_certify_trivial(dbr_registry* reg, size_t i, size_t* unit_index, int* found) {
  return guarded([&] {
    require(reg, "registry");
    require(unit_index, "unit_index");
    require(found, "found");
    const auto unit = reg->value.certify_trivial(i);
    *found = unit ? 1 : 0;
    if (unit) *unit_index = *unit;
  });
}

dbr_status dbr_registry_derive_tensor(dbr_registry* reg, size_t i, size_t j, size_t i2, size_t j2, size_t* t1, size_t* t2) {
  return guarded([&] {
    require(reg, "registry");
    require(t1, "t1");
    require(t2, "t2");
    const auto [a, b] = reg->value.derive_tensor_equivalence(i, j, i2, j2);
    *t1 = a;
    *t2 = b;
  });
}

dbr_status dbr_registry_distinguish(const dbr_registry* reg, size_t i, size_t j, dbr_distinction* out) {
  return guarded([&] {
    require(reg, "registry");
    require(out, "output pointer");
    switch (reg->value.distinguish(i, j)) {
      case Distinction::Equivalent: *out = DBR_EQUIVALENT; break;
      case Distinction::NotEquivalent: *out = DBR_NOT_EQUIVALENT; break;
      case Distinction::Unknown: *out = DBR_UNDECIDED; break;
    }
  });
}

dbr_status dbr_reproduce_examples(char** out_json, int* all_passed) {
  return guarded([&] {
    require(all_passed, "all_passed");
    Json out = Json::array();
    bool ok = true;
    for (const ScenarioResult& r : reproduce_examples()) {
      out.push_back({{"scenario", r.name}, {"claim", r.claim}, {"passed", r.passed}, {"detail", r.detail}});
      ok = ok && r.passed;
    }
    emit(out, out_json);
    *all_passed = ok ? 1 : 0;
  });
}

}  // extern "C"
