#pragma once

/**
 * @file io.hpp
 * @brief JSON instance files and report serialization.
 *
 * Instance schema (complex numbers are [re, im] pairs):
 *
 *   {
 *     "name":   "optional label",
 *     "f_star": {"builtin": "<name>", ...} | {"samples": [[re, im], ...]},
 *     "phi":    {"builtin": "<name>", ...} | {"samples": [[re, im], ...]},
 *     "source": {"builtin": "zero" | "constant" | "example31_g", ...},
 *     "alpha":  [re, im],
 *     "beta":   [re, im],
 *     "params": {"M": 0.01}
 *   }
 *
 * Boundary built-ins: "zero", "constant" (value), "mode" (k, coefficient),
 * "example31_f_star", "example31_phi". Any boundary entry may carry
 * "analytic": true|false; sample arrays must have even length >= 16.
 */

#include <diskschwarz/boundary.hpp>
#include <diskschwarz/core.hpp>
#include <diskschwarz/gallery.hpp>
#include <diskschwarz/instance.hpp>
#include <diskschwarz/quadrature.hpp>
#include <diskschwarz/schwarz.hpp>

#include <json.hpp>

#include <fstream>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace diskschwarz {

using ordered_json = nlohmann::ordered_json;

/// Malformed or inconsistent input document.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

namespace io {

inline ordered_json to_json(complex z) { return ordered_json::array({z.real(), z.imag()}); }

inline complex complex_from_json(const nlohmann::json& j, const std::string& what) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw InputError(what + ": expected [re, im]");
  return {j[0].get<real>(), j[1].get<real>()};
}

inline ordered_json to_json(const QuadratureSpec& spec) {
  return ordered_json{{"n_theta", spec.n_theta},
                      {"n_radial", spec.n_radial},
                      {"fd_step", spec.fd_step},
                      {"boundary_eps", spec.boundary_eps},
                      {"diag_guard", spec.diag_guard}};
}

/// Exactly the report fields; diagnostics as a nested object.
inline ordered_json to_json(const SchwarzReport& r) {
  ordered_json diag = ordered_json::object();
  for (const auto& [k, v] : r.diagnostics) diag[k] = v;
  return ordered_json{{"lhs_re", r.lhs_re},
                      {"lhs_im", r.lhs_im},
                      {"p_norm", r.p_norm},
                      {"g_norm", r.g_norm},
                      {"bound", r.bound},
                      {"margin", r.margin},
                      {"pass", r.pass},
                      {"in_positivity_region", r.in_positivity_region},
                      {"diagnostics", diag}};
}

inline std::optional<real> amplitude(const nlohmann::json& doc) {
  if (!doc.contains("params")) return std::nullopt;
  const auto& p = doc["params"];
  if (!p.is_object()) throw InputError("params: expected an object");
  if (!p.contains("M")) return std::nullopt;
  if (!p["M"].is_number()) throw InputError("params.M: expected a number");
  return p["M"].get<real>();
}

inline real require_amplitude(const std::optional<real>& M, const std::string& who) {
  if (!M) throw InputError(who + " requires params.M");
  ExampleParams{*M}.validate();
  return *M;
}

inline BoundaryFunction boundary_from_json(const nlohmann::json& j, const std::string& field,
                                           const std::optional<real>& M) {
  if (!j.is_object()) throw InputError(field + ": expected an object");
  std::optional<bool> analytic;
  if (j.contains("analytic")) {
    if (!j["analytic"].is_boolean()) throw InputError(field + ".analytic: expected a boolean");
    analytic = j["analytic"].get<bool>();
  }
  BoundaryFunction fn;
  if (j.contains("samples")) {
    const auto& s = j["samples"];
    if (!s.is_array()) throw InputError(field + ".samples: expected an array");
    std::vector<complex> values;
    values.reserve(s.size());
    for (const auto& v : s) values.push_back(complex_from_json(v, field + ".samples[]"));
    if (values.size() < 16 || values.size() % 2 != 0)
      throw InputError(field + ".samples: length must be even and >= 16");
    fn = BoundaryFunction::sampled(std::move(values));
  } else if (j.contains("builtin")) {
    if (!j["builtin"].is_string()) throw InputError(field + ".builtin: expected a string");
    const auto name = j["builtin"].get<std::string>();
    if (name == "zero") {
      fn = BoundaryFunction::zero();
    } else if (name == "constant") {
      if (!j.contains("value")) throw InputError(field + ": constant requires value");
      fn = BoundaryFunction::constant(complex_from_json(j["value"], field + ".value"));
    } else if (name == "mode") {
      if (!j.contains("k") || !j["k"].is_number_integer()) throw InputError(field + ": mode requires integer k");
      const complex coeff = j.contains("coefficient") ? complex_from_json(j["coefficient"], field + ".coefficient")
                                                      : complex{1.0, 0.0};
      fn = BoundaryFunction::mode(j["k"].get<int>(), coeff);
    } else if (name == "example31_f_star") {
      const real m = require_amplitude(M, field);
      fn = BoundaryFunction::builtin(name, [m](real t) { return example31_forms::f_star(m, t); }, true);
    } else if (name == "example31_phi") {
      const real m = require_amplitude(M, field);
      fn = BoundaryFunction::builtin(name, [m](real t) { return example31_forms::phi(m, t); });
    } else {
      throw InputError(field + ": unknown builtin '" + name + "'");
    }
  } else {
    throw InputError(field + ": expected 'builtin' or 'samples'");
  }
  return analytic ? fn.with_analytic(*analytic) : fn;
}

inline SourceField source_from_json(const nlohmann::json& j, const std::optional<real>& M) {
  if (!j.is_object() || !j.contains("builtin") || !j["builtin"].is_string())
    throw InputError("source: expected {\"builtin\": name}");
  const auto name = j["builtin"].get<std::string>();
  if (name == "zero") return SourceField::zero();
  if (name == "constant") {
    if (!j.contains("value")) throw InputError("source: constant requires value");
    return SourceField::constant(complex_from_json(j["value"], "source.value"));
  }
  if (name == "example31_g") {
    const real m = require_amplitude(M, "source");
    return SourceField::builtin(name, [m](complex z) { return example31_forms::source(m, z); },
                                64.0 * std::sqrt(10.0) * m);
  }
  throw InputError("source: unknown builtin '" + name + "'");
}

/// Builds an instance from a parsed document. Instances from files carry no closed forms.
inline ProblemInstance instance_from_json(const nlohmann::json& doc) {
  if (!doc.is_object()) throw InputError("instance: expected a JSON object");
  for (const char* key : {"f_star", "phi", "source", "alpha", "beta"})
    if (!doc.contains(key)) throw InputError(std::string("instance: missing field '") + key + "'");
  const auto M = amplitude(doc);
  ProblemInstance inst;
  inst.name = doc.contains("name") && doc["name"].is_string() ? doc["name"].get<std::string>() : "file";
  inst.f_star = boundary_from_json(doc["f_star"], "f_star", M);
  inst.phi = boundary_from_json(doc["phi"], "phi", M);
  inst.source = source_from_json(doc["source"], M);
  const complex alpha = complex_from_json(doc["alpha"], "alpha");
  inst.beta = complex_from_json(doc["beta"], "beta");
  if (!is_unimodular(alpha) || !is_unimodular(inst.beta))
    throw InputError("instance: alpha and beta must be unimodular");
  inst.alpha = DiskPoint(alpha);
  inst.amplitude_M = M;
  return inst;
}

inline ProblemInstance load_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open instance file '" + path + "'");
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::parse_error& e) {
    throw InputError("malformed JSON in '" + path + "': " + e.what());
  }
  return instance_from_json(doc);
}

}  // namespace io
}  // namespace diskschwarz
