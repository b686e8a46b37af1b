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

#include "diffbrauer/json_io.hpp"

#include <string>

#include "diffbrauer/error.hpp"

namespace diffbrauer::json_io {

namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::Parse, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object()) bad(std::string("expected an object with field \"") + key + "\"");
  const auto it = j.find(key);
  if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
  return *it;
}

std::size_t as_index(const Json& j, const char* what) {
  if (!j.is_number_integer() || j.get<long long>() < 0) bad(std::string(what) + " must be a nonnegative integer");
  return j.get<std::size_t>();
}

bool as_bool(const Json& j, const char* what) {
  if (!j.is_boolean()) bad(std::string(what) + " must be true or false");
  return j.get<bool>();
}

Json encode_optional_index(const std::optional<unsigned>& v) { return v ? Json(*v) : Json(nullptr); }

std::optional<unsigned> decode_optional_index(const Json& j) {
  if (j.is_null()) return std::nullopt;
  return static_cast<unsigned>(as_index(j, "nilpotency index"));
}

Json encode_value(WitnessKind kind, const InvariantValue& v) {
  switch (kind) {
    case WitnessKind::EValueSet: return encode_rationals(std::get<std::vector<Rational>>(v));
    case WitnessKind::RootSet: return encode(std::get<RFPoly>(v));
    case WitnessKind::NilpotencyIndex:
    case WitnessKind::ScalarTest: return encode_optional_index(std::get<std::optional<unsigned>>(v));
  }
  return nullptr;
}

RFPoly decode_rf_poly(const Json& j) {
  if (!j.is_array()) bad("polynomial must be an array of coefficients");
  std::vector<RationalFunction> c;
  for (const Json& e : j) c.push_back(decode_scalar(e));
  RFPoly p(std::move(c));
  if (p.coeffs().size() != j.size()) bad("polynomial has a trailing zero coefficient");
  return p;
}

std::vector<Rational> decode_rationals(const Json& j) {
  if (!j.is_array()) bad("expected an array of rationals");
  std::vector<Rational> out;
  for (const Json& e : j) out.push_back(decode_rational(e));
  return out;
}

InvariantValue decode_value(WitnessKind kind, const Json& j) {
  switch (kind) {
    case WitnessKind::EValueSet: return decode_rationals(j);
    case WitnessKind::RootSet: return decode_rf_poly(j);
    case WitnessKind::NilpotencyIndex:
    case WitnessKind::ScalarTest: return decode_optional_index(j);
  }
  bad("unknown witness kind");
}

TrivialityStatus decode_status(const std::string& s) {
  for (auto st : {TrivialityStatus::TrivialWithCertificate, TrivialityStatus::NontrivialWithWitness, TrivialityStatus::Unknown})
    if (s == triviality_status_name(st)) return st;
  bad("unknown triviality status \"" + s + "\"");
}

}  // namespace

Json parse(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const Json::exception& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

Json encode(const Rational& r) { return r.str(); }

Json encode(const Polynomial& p) {
  Json out = Json::array();
  for (const Rational& c : p.coeffs()) out.push_back(encode(c));
  return out;
}

Json encode_fraction(const RationalFunction& f) { return {{"num", encode(f.num())}, {"den", encode(f.den())}}; }

Json encode(const RationalFunction& f) {
  if (const auto c = f.constant_value()) return encode(*c);
  return encode_fraction(f);
}

Json encode(const RFPoly& p) {
  Json out = Json::array();
  for (const RationalFunction& c : p.coeffs()) out.push_back(encode(c));
  return out;
}

Json encode(const RFMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(encode(m(i, j)));
    out.push_back(std::move(row));
  }
  return out;
}

Json encode(const std::vector<RationalFunction>& v) {
  Json out = Json::array();
  for (const RationalFunction& e : v) out.push_back(encode(e));
  return out;
}

Json encode(const DiffMatrixAlgebra& alg) {
  return {{"base", base_ring_name(alg.base())}, {"n", alg.n()}, {"Z", encode(alg.z())}};
}

Json encode(const DiffModule& mod) {
  return {{"base", base_ring_name(mod.base)}, {"n", mod.a.rows()}, {"A", encode(mod.a)}};
}

Json encode(const GaugeCertificate& cert) {
  Json out = {{"Y", encode(cert.y)}};
  if (cert.scalar_shift) out["c"] = encode(*cert.scalar_shift);
  return out;
}

Json encode_rationals(const std::vector<Rational>& values) {
  Json out = Json::array();
  for (const Rational& r : values) out.push_back(encode(r));
  return out;
}

Json encode(const InvariantReport& rep) {
  return {{"ad_char_poly", encode(rep.ad_char_poly)},
          {"ad_squarefree", encode(rep.ad_squarefree)},
          {"root_multiset", encode_rationals(rep.root_multiset)},
          {"splits", rep.splits},
          {"nilpotency_index", encode_optional_index(rep.nilpotency_index)},
          {"e_value_set", rep.e_value_set ? encode_rationals(*rep.e_value_set) : Json(nullptr)},
          {"stable", rep.stable}};
}

Json encode(const SeparationWitness& w) {
  return {{"kind", witness_kind_name(w.kind)}, {"left", encode_value(w.kind, w.left)}, {"right", encode_value(w.kind, w.right)}};
}

Json encode(const TrivialityVerdict& v) {
  return {{"status", triviality_status_name(v.status)},
          {"certificate", v.certificate ? encode(*v.certificate) : Json(nullptr)},
          {"witness", v.witness ? encode(*v.witness) : Json(nullptr)}};
}

Json encode(const RootData& roots) { return {{"roots", encode_rationals(roots.roots)}, {"splits", roots.splits}}; }

Json encode(const FiniteCommutativeMonoid& m) {
  return {{"size", m.size()}, {"identity", m.identity()}, {"table", m.table()}};
}

Json encode_subset(const Subset& s) { return Json(s); }

Json encode(const QuotientMonoid& q) {
  return {{"size", q.classes.size()}, {"classes", q.classes}, {"class_of", q.class_of}, {"table", q.table}, {"identity", q.identity}};
}

Json encode(const ClassRegistry& reg) {
  Json algs = Json::array(), eqs = Json::array(), seps = Json::array();
  for (const DiffMatrixAlgebra& a : reg.algebras()) algs.push_back(encode(a));
  for (const RegisteredEquivalence& e : reg.equivalences())
    eqs.push_back({{"i", e.i}, {"j", e.j}, {"amp_i", e.amp_i}, {"amp_j", e.amp_j}, {"certificate", encode(e.certificate)}});
  for (const RegisteredSeparation& s : reg.separations())
    seps.push_back({{"i", s.i}, {"j", s.j}, {"witness", encode(s.witness)}});
  return {{"tensor_bound", reg.tensor_bound()}, {"algebras", algs}, {"equivalences", eqs}, {"separations", seps}};
}

Rational decode_rational(const Json& j) {
  if (j.is_string()) return Rational::parse(j.get<std::string>());
  if (j.is_number_integer()) return Rational::parse(j.dump());
  bad("rational must be a string \"p/q\" or an integer");
}

Polynomial decode_polynomial(const Json& j) {
  const std::vector<Rational> c = decode_rationals(j);
  if (!c.empty() && c.back().is_zero()) bad("polynomial has a trailing zero coefficient");
  return Polynomial(c);
}

RationalFunction decode_rational_function(const Json& j) {
  const Polynomial den = decode_polynomial(field(j, "den"));
  if (den.is_zero()) bad("rational function has a zero denominator");
  return {decode_polynomial(field(j, "num")), den};
}

RationalFunction decode_scalar(const Json& j) {
  if (j.is_object()) return decode_rational_function(j);
  return RationalFunction(decode_rational(j));
}

RFMatrix decode_matrix(const Json& j) {
  if (!j.is_array() || j.empty()) bad("matrix must be a nonempty array of rows");
  const std::size_t rows = j.size();
  if (!j[0].is_array() || j[0].empty()) bad("matrix rows must be nonempty arrays");
  const std::size_t cols = j[0].size();
  std::vector<RationalFunction> data;
  for (const Json& row : j) {
    if (!row.is_array() || row.size() != cols) bad("matrix rows must all have the same length");
    for (const Json& e : row) data.push_back(decode_scalar(e));
  }
  return RFMatrix(rows, cols, std::move(data));
}

std::vector<RationalFunction> decode_vector(const Json& j) {
  if (!j.is_array()) bad("vector must be an array");
  std::vector<RationalFunction> out;
  for (const Json& e : j) {
    // Accept a column given as [[a],[b]] as well as [a, b].
    if (e.is_array() && e.size() == 1) out.push_back(decode_scalar(e[0]));
    else out.push_back(decode_scalar(e));
  }
  return out;
}

BaseRing decode_base(const Json& j) {
  if (j == "Q") return BaseRing::ConstantField;
  if (j == "Q(x)") return BaseRing::RationalFunctionField;
  bad("base must be \"Q\" or \"Q(x)\"");
}

DiffMatrixAlgebra decode_algebra(const Json& j) {
  const BaseRing base = decode_base(field(j, "base"));
  const std::size_t n = as_index(field(j, "n"), "n");
  RFMatrix z = decode_matrix(field(j, "Z"));
  if (z.rows() != n || z.cols() != n) fail(ErrorCode::DimensionMismatch, "Z must be n x n");
  return {base, std::move(z)};
}

DiffModule decode_module(const Json& j) {
  const BaseRing base = decode_base(field(j, "base"));
  const std::size_t n = as_index(field(j, "n"), "n");
  RFMatrix a = decode_matrix(field(j, "A"));
  if (a.rows() != n || a.cols() != n) fail(ErrorCode::DimensionMismatch, "A must be n x n");
  require_over_base(base, a, "module matrix");
  return {base, std::move(a)};
}

GaugeCertificate decode_certificate(const Json& j) {
  GaugeCertificate cert{decode_matrix(field(j, "Y")), std::nullopt};
  if (j.contains("c") && !j["c"].is_null()) cert.scalar_shift = decode_scalar(j["c"]);
  return cert;
}

InvariantReport decode_report(const Json& j) {
  InvariantReport rep;
  rep.ad_char_poly = decode_rf_poly(field(j, "ad_char_poly"));
  rep.ad_squarefree = decode_rf_poly(field(j, "ad_squarefree"));
  rep.root_multiset = decode_rationals(field(j, "root_multiset"));
  rep.splits = as_bool(field(j, "splits"), "splits");
  rep.nilpotency_index = decode_optional_index(field(j, "nilpotency_index"));
  const Json& ev = field(j, "e_value_set");
  if (!ev.is_null()) rep.e_value_set = decode_rationals(ev);
  rep.stable = as_bool(field(j, "stable"), "stable");
  return rep;
}

SeparationWitness decode_witness(const Json& j) {
  const Json& k = field(j, "kind");
  if (!k.is_string()) bad("witness kind must be a string");
  for (auto kind : {WitnessKind::EValueSet, WitnessKind::RootSet, WitnessKind::NilpotencyIndex, WitnessKind::ScalarTest})
    if (k.get<std::string>() == witness_kind_name(kind))
      return {kind, decode_value(kind, field(j, "left")), decode_value(kind, field(j, "right"))};
  bad("unknown witness kind \"" + k.get<std::string>() + "\"");
}

TrivialityVerdict decode_verdict(const Json& j) {
  const Json& st = field(j, "status");
  if (!st.is_string()) bad("verdict status must be a string");
  TrivialityVerdict v;
  v.status = decode_status(st.get<std::string>());
  if (j.contains("certificate") && !j["certificate"].is_null()) v.certificate = decode_certificate(j["certificate"]);
  if (j.contains("witness") && !j["witness"].is_null()) v.witness = decode_witness(j["witness"]);
  return v;
}

FiniteCommutativeMonoid decode_monoid(const Json& j) {
  const std::size_t size = as_index(field(j, "size"), "size");
  const std::size_t identity = as_index(field(j, "identity"), "identity");
  const Json& t = field(j, "table");
  if (!t.is_array() || t.size() != size) bad("table must have `size` rows");
  std::vector<std::vector<Element>> table;
  for (const Json& row : t) {
    if (!row.is_array() || row.size() != size) bad("table rows must have `size` entries");
    std::vector<Element> r;
    for (const Json& e : row) r.push_back(as_index(e, "table entry"));
    table.push_back(std::move(r));
  }
  return {std::move(table), identity};
}

Subset decode_subset(const Json& j) {
  if (!j.is_array()) bad("submonoid must be an array of element indices");
  Subset s;
  for (const Json& e : j) s.push_back(as_index(e, "element"));
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  return s;
}

ClassRegistry decode_registry(const Json& j) {
  const std::size_t bound = j.contains("tensor_bound") ? as_index(j["tensor_bound"], "tensor_bound") : 4;
  ClassRegistry reg(bound);
  const Json& algs = field(j, "algebras");
  if (!algs.is_array()) bad("algebras must be an array");
  for (const Json& a : algs) {
    const std::size_t expected = reg.size();
    if (reg.add_algebra(decode_algebra(a)) != expected) bad("registry lists the same presentation twice");
  }
  const Json none = Json::array();
  const Json& eqs = j.contains("equivalences") ? j["equivalences"] : none;
  const Json& seps = j.contains("separations") ? j["separations"] : none;
  if (!eqs.is_array() || !seps.is_array()) bad("equivalences and separations must be arrays");
  for (const Json& e : eqs)
    reg.add_equivalence({as_index(field(e, "i"), "i"), as_index(field(e, "j"), "j"),
                         e.contains("amp_i") ? as_index(e["amp_i"], "amp_i") : 1,
                         e.contains("amp_j") ? as_index(e["amp_j"], "amp_j") : 1, decode_certificate(field(e, "certificate"))});
  for (const Json& s : seps)
    reg.add_separation(RegisteredSeparation{as_index(field(s, "i"), "i"), as_index(field(s, "j"), "j"), decode_witness(field(s, "witness"))});
  return reg;
}

}  // namespace diffbrauer::json_io
