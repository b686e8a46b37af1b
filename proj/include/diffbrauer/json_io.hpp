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

#include "json.hpp"

#include "diffbrauer/diffalg.hpp"
#include "diffbrauer/invariants.hpp"
#include "diffbrauer/monoid.hpp"
#include "diffbrauer/registry.hpp"
#include "diffbrauer/roots.hpp"
#include "diffbrauer/triviality.hpp"

/// JSON encodings of every value that crosses the library boundary.
///
/// Scalars are rational strings ("p" or "p/q") when constant and
/// {"num": [...], "den": [...]} otherwise; polynomials are constant-first
/// arrays; matrices are nested row-major arrays. Decoders throw
/// Error(ErrorCode::Parse) on malformed input.
namespace diffbrauer::json_io {

using Json = nlohmann::json;

Json encode(const Rational& r);
Json encode(const Polynomial& p);
Json encode(const RationalFunction& f);  // scalar form
Json encode_fraction(const RationalFunction& f);  // always {"num","den"}
Json encode(const RFPoly& p);
Json encode(const RFMatrix& m);
Json encode(const std::vector<RationalFunction>& v);
Json encode(const DiffMatrixAlgebra& alg);
Json encode(const DiffModule& mod);
Json encode(const GaugeCertificate& cert);
Json encode(const InvariantReport& rep);
Json encode(const SeparationWitness& w);
Json encode(const TrivialityVerdict& v);
Json encode(const RootData& roots);
Json encode(const FiniteCommutativeMonoid& m);
Json encode(const QuotientMonoid& q);
Json encode(const ClassRegistry& reg);
Json encode_rationals(const std::vector<Rational>& values);
Json encode_subset(const Subset& s);

Rational decode_rational(const Json& j);
Polynomial decode_polynomial(const Json& j);
RationalFunction decode_scalar(const Json& j);
RationalFunction decode_rational_function(const Json& j);
RFMatrix decode_matrix(const Json& j);
std::vector<RationalFunction> decode_vector(const Json& j);
BaseRing decode_base(const Json& j);
DiffMatrixAlgebra decode_algebra(const Json& j);
DiffModule decode_module(const Json& j);
GaugeCertificate decode_certificate(const Json& j);
InvariantReport decode_report(const Json& j);
SeparationWitness decode_witness(const Json& j);
TrivialityVerdict decode_verdict(const Json& j);
FiniteCommutativeMonoid decode_monoid(const Json& j);
Subset decode_subset(const Json& j);
/// Rebuilds the registry, re-verifying every certificate and witness.
ClassRegistry decode_registry(const Json& j);

/// Parses text, mapping syntax errors to Error(ErrorCode::Parse).
Json parse(std::string_view text);

}  // namespace diffbrauer::json_io
