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

// diffbrauer command-line front end. Talks to the library only through the
// C interface in diffbrauer.h.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "diffbrauer/diffbrauer.h"

namespace {

using Json = nlohmann::json;

enum Exit : int { kAffirmative = 0, kNegative = 1, kUnknown = 2, kInputError = 3 };

struct Failure {
  std::string code;
  std::string message;
};

void check(dbr_status s) {
  if (s != DBR_OK) throw Failure{dbr_status_name(s), dbr_last_error()};
}

[[noreturn]] void reject(const std::string& code, const std::string& message) { throw Failure{code, message}; }

// Takes ownership of a string returned by the library and parses it.
Json take(char* raw) {
  std::unique_ptr<char, decltype(&dbr_string_free)> guard(raw, dbr_string_free);
  return Json::parse(raw);
}

struct AlgebraDeleter {
  void operator()(dbr_algebra* a) const { dbr_algebra_free(a); }
};
struct MonoidDeleter {
  void operator()(dbr_monoid* m) const { dbr_monoid_free(m); }
};
struct RegistryDeleter {
  void operator()(dbr_registry* r) const { dbr_registry_free(r); }
};
using Algebra = std::unique_ptr<dbr_algebra, AlgebraDeleter>;
using Monoid = std::unique_ptr<dbr_monoid, MonoidDeleter>;
using Registry = std::unique_ptr<dbr_registry, RegistryDeleter>;

// An argument is a file path if such a file exists, "-" for stdin, and
// inline JSON otherwise.
std::string load(const std::string& arg) {
  if (arg == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::error_code ec;
  if (std::filesystem::is_regular_file(arg, ec)) {
    std::ifstream in(arg, std::ios::binary);
    if (!in) reject("parse_error", "cannot read " + arg);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

Algebra algebra(const std::string& arg) {
  dbr_algebra* a = nullptr;
  check(dbr_algebra_from_json(load(arg).c_str(), &a));
  return Algebra(a);
}

Monoid monoid(const std::string& arg) {
  dbr_monoid* m = nullptr;
  check(dbr_monoid_from_json(load(arg).c_str(), &m));
  return Monoid(m);
}

Json algebra_json(const dbr_algebra* a) {
  char* out = nullptr;
  check(dbr_algebra_to_json(a, &out));
  return take(out);
}

Json registry_json(const dbr_registry* r) {
  char* out = nullptr;
  check(dbr_registry_to_json(r, &out));
  return take(out);
}

const char* distinction_name(dbr_distinction d) {
  switch (d) {
    case DBR_EQUIVALENT: return "Equivalent";
    case DBR_NOT_EQUIVALENT: return "NotEquivalent";
    case DBR_UNDECIDED: return "Unknown";
  }
  return "Unknown";
}

std::size_t index_field(const Json& step, const char* key, std::optional<std::size_t> fallback = std::nullopt) {
  if (!step.contains(key)) {
    if (fallback) return *fallback;
    reject("invalid_argument", std::string("missing field \"") + key + "\"");
  }
  const Json& v = step.at(key);
  if (!v.is_number_unsigned()) reject("invalid_argument", std::string("field \"") + key + "\" must be a non-negative integer");
  return v.get<std::size_t>();
}

// Runs a registry session: {"registry"?: doc, "steps": [...]}.
Json run_session(const Json& session, std::size_t tensor_bound) {
  if (!session.is_object()) reject("parse_error", "session must be a JSON object");
  dbr_registry* raw = nullptr;
  if (session.contains("registry"))
    check(dbr_registry_from_json(session.at("registry").dump().c_str(), &raw));
  else
    check(dbr_registry_new(tensor_bound, &raw));
  Registry reg(raw);

  const Json steps = session.value("steps", Json::array());
  if (!steps.is_array()) reject("parse_error", "\"steps\" must be an array");
  Json results = Json::array();
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Json& step = steps[k];
    try {
      if (!step.is_object() || !step.contains("op") || !step.at("op").is_string())
        reject("parse_error", "step needs a string \"op\"");
      const std::string op = step.at("op").get<std::string>();
      Json r{{"op", op}};
      if (op == "add") {
        if (!step.contains("algebra")) reject("invalid_argument", "missing field \"algebra\"");
        dbr_algebra* a = nullptr;
        check(dbr_algebra_from_json(step.at("algebra").dump().c_str(), &a));
        Algebra alg(a);
        std::size_t index = 0;
        check(dbr_registry_add_algebra(reg.get(), alg.get(), &index));
        r["index"] = index;
      } else if (op == "equivalence") {
        if (!step.contains("certificate")) reject("invalid_argument", "missing field \"certificate\"");
        check(dbr_registry_add_equivalence(reg.get(), index_field(step, "i"), index_field(step, "j"),
                                           index_field(step, "amp_i", 1), index_field(step, "amp_j", 1),
                                           step.at("certificate").dump().c_str()));
        r["stored"] = true;
      } else if (op == "separate") {
        int separated = 0;
        check(dbr_registry_add_separation(reg.get(), index_field(step, "i"), index_field(step, "j"), &separated));
        r["separated"] = separated != 0;
      } else if (op == "certify_trivial") {
        std::size_t unit = 0;
        int found = 0;
        check(dbr_registry_certify_trivial(reg.get(), index_field(step, "i"), &unit, &found));
        r["certified"] = found != 0;
        r["unit"] = found ? Json(unit) : Json(nullptr);
      } else if (op == "derive_tensor") {
        std::size_t t1 = 0, t2 = 0;
        check(dbr_registry_derive_tensor(reg.get(), index_field(step, "i"), index_field(step, "j"),
                                         index_field(step, "i2"), index_field(step, "j2"), &t1, &t2));
        r["t1"] = t1;
        r["t2"] = t2;
      } else if (op == "distinguish") {
        dbr_distinction d = DBR_UNDECIDED;
        check(dbr_registry_distinguish(reg.get(), index_field(step, "i"), index_field(step, "j"), &d));
        r["answer"] = distinction_name(d);
      } else {
        reject("invalid_argument", "unknown op \"" + op + "\"");
      }
      results.push_back(std::move(r));
    } catch (Failure& f) {
      f.message = "step " + std::to_string(k) + ": " + f.message;
      throw;
    }
  }
  return {{"results", results}, {"registry", registry_json(reg.get())}};
}

struct Outcome {
  Json doc;
  int exit = kAffirmative;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computations with differential matrix algebras and finite commutative monoids"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(dbr_version()));

  std::string output;
  std::size_t tensor_bound = 4;
  std::optional<unsigned> deg_bound;
  app.add_option("-o,--output", output, "Write the JSON result to this file instead of stdout");
  app.add_option("--tensor-bound", tensor_bound, "Largest matrix amplification used by the registry")
      ->check(CLI::PositiveNumber);

  std::string in1, in2, in3, cert, submonoid;
  bool module = false;
  Outcome result;

  auto* derive = app.add_subcommand("derive", "Apply the derivation to a matrix (or, with --module, to a vector)");
  derive->add_option("algebra", in1, "Algebra (or module) JSON")->required();
  derive->add_option("element", in2, "Matrix (or vector) JSON")->required();
  derive->add_flag("--module", module, "Treat the first input as a module {base, n, A}");

  auto* tensor = app.add_subcommand("tensor", "Tensor product of two algebras");
  tensor->add_option("a", in1)->required();
  tensor->add_option("b", in2)->required();

  auto* gauge = app.add_subcommand("gauge", "Gauge transform Z -> Y^-1 Z Y + Y^-1 Y'");
  gauge->add_option("algebra", in1)->required();
  gauge->add_option("y", in2, "Invertible matrix JSON")->required();

  auto* verify = app.add_subcommand("verify-cert", "Check a gauge certificate between two algebras");
  verify->add_option("source", in1)->required();
  verify->add_option("target", in2)->required();
  verify->add_option("certificate", in3)->required();

  auto* constants = app.add_subcommand("constants", "Basis of polynomial constants up to a degree bound");
  constants->add_option("algebra", in1)->required();
  constants->add_option("--deg-bound", deg_bound, "Entry degree bound (default 2n)");

  auto* invariants = app.add_subcommand("invariants", "Eigenvalue-difference report");
  invariants->add_option("algebra", in1)->required();

  auto* evalues = app.add_subcommand("evalues", "Rational e-values of the adjoint operator");
  evalues->add_option("algebra", in1)->required();

  auto* separate = app.add_subcommand("separate", "Look for an invariant that tells two algebras apart");
  separate->add_option("a", in1)->required();
  separate->add_option("b", in2)->required();

  auto* trivial = app.add_subcommand("trivial", "Decide whether an algebra is gauge-trivial");
  trivial->add_option("algebra", in1)->required();
  trivial->add_option("--cert", cert, "Candidate certificate to check first");

  auto* solve = app.add_subcommand("solve-log", "Find y in Q(x) with y' = f y");
  solve->add_option("f", in1, "Scalar JSON")->required();

  auto* mquot = app.add_subcommand("monoid-quotient", "Quotient M/N of a finite commutative monoid");
  mquot->add_option("monoid", in1)->required();
  mquot->add_option("submonoid", in2, "Sorted index array")->required();

  auto* munits = app.add_subcommand("monoid-units", "Units of M, or of M/N with --submonoid");
  munits->add_option("monoid", in1)->required();
  munits->add_option("--submonoid", submonoid);

  auto* registry = app.add_subcommand("registry", "Run a registry session and print the resulting document");
  registry->add_option("session", in1, "Session JSON {registry?, steps}")->required();

  auto* reproduce = app.add_subcommand("reproduce", "Run the built-in worked examples");

  derive->callback([&] {
    char* out = nullptr;
    if (module) {
      check(dbr_module_derive(load(in1).c_str(), load(in2).c_str(), &out));
    } else {
      Algebra a = algebra(in1);
      check(dbr_derive_element(a.get(), load(in2).c_str(), &out));
    }
    result.doc = take(out);
  });
  tensor->callback([&] {
    Algebra a = algebra(in1), b = algebra(in2);
    dbr_algebra* t = nullptr;
    check(dbr_tensor(a.get(), b.get(), &t));
    result.doc = algebra_json(Algebra(t).get());
  });
  gauge->callback([&] {
    Algebra a = algebra(in1);
    dbr_algebra* g = nullptr;
    check(dbr_gauge_transform(a.get(), load(in2).c_str(), &g));
    result.doc = algebra_json(Algebra(g).get());
  });
  verify->callback([&] {
    Algebra src = algebra(in1), dst = algebra(in2);
    int accepted = 0;
    check(dbr_verify_certificate(src.get(), dst.get(), load(in3).c_str(), &accepted));
    result.doc = {{"accepted", accepted != 0}};
    result.exit = accepted ? kAffirmative : kNegative;
  });
  constants->callback([&] {
    Algebra a = algebra(in1);
    const unsigned bound = deg_bound.value_or(static_cast<unsigned>(2 * dbr_algebra_dimension(a.get())));
    char* out = nullptr;
    check(dbr_constants_basis(a.get(), bound, &out));
    Json basis = take(out);
    result.doc = {{"deg_bound", bound}, {"dimension", basis.size()}, {"basis", std::move(basis)}};
  });
  invariants->callback([&] {
    Algebra a = algebra(in1);
    char* out = nullptr;
    check(dbr_invariants(a.get(), &out));
    result.doc = take(out);
  });
  evalues->callback([&] {
    Algebra a = algebra(in1);
    char* out = nullptr;
    check(dbr_e_values(a.get(), &out));
    result.doc = {{"e_values", take(out)}};
  });
  separate->callback([&] {
    Algebra a = algebra(in1), b = algebra(in2);
    char* out = nullptr;
    int separated = 0;
    check(dbr_separate(a.get(), b.get(), &out, &separated));
    result.doc = {{"witness", take(out)}};
    result.exit = separated ? kAffirmative : kUnknown;
  });
  trivial->callback([&] {
    Algebra a = algebra(in1);
    const std::string c = cert.empty() ? std::string() : load(cert);
    char* out = nullptr;
    dbr_verdict v = DBR_UNKNOWN;
    check(dbr_decide_trivial(a.get(), cert.empty() ? nullptr : c.c_str(), &out, &v));
    result.doc = take(out);
    result.exit = v == DBR_TRIVIAL ? kAffirmative : (v == DBR_NONTRIVIAL ? kNegative : kUnknown);
  });
  solve->callback([&] {
    char* out = nullptr;
    int found = 0;
    check(dbr_solve_log(load(in1).c_str(), &out, &found));
    result.doc = {{"solution", take(out)}};
    result.exit = found ? kAffirmative : kNegative;
  });
  mquot->callback([&] {
    Monoid m = monoid(in1);
    char* out = nullptr;
    check(dbr_monoid_quotient(m.get(), load(in2).c_str(), &out));
    result.doc = take(out);
  });
  munits->callback([&] {
    Monoid m = monoid(in1);
    char* out = nullptr;
    if (submonoid.empty()) {
      check(dbr_monoid_units(m.get(), &out));
      result.doc = {{"units", take(out)}};
      return;
    }
    const std::string n = load(submonoid);
    int consistent = 0;
    check(dbr_monoid_quotient_units(m.get(), n.c_str(), &out, &consistent));
    result.doc = {{"units", take(out)}, {"submonoid", Json::parse(n)}, {"consistent", consistent != 0}};
    result.exit = consistent ? kAffirmative : kNegative;
  });
  registry->callback([&] {
    const std::string text = load(in1);
    Json session;
    try {
      session = Json::parse(text);
    } catch (const Json::exception& e) {
      reject("parse_error", e.what());
    }
    result.doc = run_session(session, tensor_bound);
  });
  reproduce->callback([&] {
    char* out = nullptr;
    int all = 0;
    check(dbr_reproduce_examples(&out, &all));
    result.doc = {{"all_passed", all != 0}, {"scenarios", take(out)}};
    result.exit = all ? kAffirmative : kNegative;
  });

  auto write = [&](const Json& doc) {
    const std::string text = doc.dump(2) + "\n";
    if (output.empty()) {
      std::fwrite(text.data(), 1, text.size(), stdout);
      return true;
    }
    std::ofstream out(output, std::ios::binary | std::ios::trunc);
    out << text;
    return static_cast<bool>(out.flush());
  };
  auto error_exit = [&](const Failure& f) {
    std::fprintf(stderr, "diffbrauer: %s: %s\n", f.code.c_str(), f.message.c_str());
    write(Json{{"error", {{"code", f.code}, {"message", f.message}}}});
    return kInputError;
  };

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    return error_exit({"usage_error", e.what()});
  } catch (const Failure& f) {
    return error_exit(f);
  } catch (const Json::exception& e) {
    return error_exit({"parse_error", e.what()});
  } catch (const std::exception& e) {
    return error_exit({"internal_error", e.what()});
  }
  if (!write(result.doc)) return error_exit({"io_error", "cannot write " + output});
  return result.exit;
}
