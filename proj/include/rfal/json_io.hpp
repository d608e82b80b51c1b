#pragma once

// JSON forms of degrees, fuzzy sets, closure traces and proofs.
//
//   degree       {"num": N, "den": D}
//   fuzzy set    {"p": {"num":7,"den":10}, ...}
//   proof        {"theory_hash": hex, "steps": [...], "conclusion": {"ante": SET, "cons": SET}}
//
// Integers that do not fit in 64 bits are written as decimal strings; both
// forms are accepted on input.

#include <json.hpp>

#include <stdexcept>
#include <string>

#include "rfal/engine.hpp"
#include "rfal/proofs.hpp"

namespace rfal::json {

using nlohmann::json;

class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline json integer(const mpz_class& z) {
  if (z.fits_ulong_p()) return static_cast<std::uint64_t>(z.get_ui());
  return z.get_str();
}

inline mpz_class read_integer(const json& j) {
  if (j.is_number_unsigned()) return mpz_class(static_cast<unsigned long>(j.get<std::uint64_t>()));
  if (j.is_number_integer()) {
    const auto v = j.get<std::int64_t>();
    if (v < 0) throw FormatError("negative integer in degree");
    return mpz_class(static_cast<unsigned long>(v));
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (!rfal::detail::all_digits(s)) throw FormatError("malformed integer '" + s + "'");
    return mpz_class(s, 10);
  }
  throw FormatError("expected an integer");
}

inline json to_json(const Rational& r) { return {{"num", integer(r.numerator())}, {"den", integer(r.denominator())}}; }

inline Rational rational_from_json(const json& j) {
  if (!j.is_object() || !j.contains("num") || !j.contains("den")) throw FormatError("expected {\"num\":N,\"den\":D}");
  try {
    return Rational(read_integer(j.at("num")), read_integer(j.at("den")));
  } catch (const DegreeError& e) {
    throw FormatError(e.what());
  }
}

inline json to_json(const FuzzySet& s) {
  json out = json::object();
  for (const auto& [v, d] : s) out[v.name()] = to_json(d);
  return out;
}

inline FuzzySet fuzzy_set_from_json(const json& j) {
  if (!j.is_object()) throw FormatError("expected a fuzzy set object");
  FuzzySet out;
  for (const auto& [name, degree] : j.items()) {
    if (!is_identifier(name)) throw FormatError("invalid variable name '" + name + "'");
    out.set(VarId(name), rational_from_json(degree));
  }
  return out;
}

inline json to_json(const Implication& f) { return {{"ante", to_json(f.antecedent)}, {"cons", to_json(f.consequent)}}; }

inline Implication implication_from_json(const json& j) {
  if (!j.is_object() || !j.contains("ante") || !j.contains("cons")) throw FormatError("expected {\"ante\":SET,\"cons\":SET}");
  return {fuzzy_set_from_json(j.at("ante")), fuzzy_set_from_json(j.at("cons"))};
}

/// `{"degree":{...},"iterations":k,"fixpoint":bool}`.
inline json degree_report(const DegreeResult& r) {
  return {{"degree", to_json(r.degree)}, {"iterations", r.trace.iterations()}, {"fixpoint", r.trace.reached_fixpoint}};
}

inline json to_json(const ClosureTrace& t) {
  json steps = json::array();
  for (std::size_t n = 0; n < t.steps.size(); ++n) {
    json fired = json::array();
    for (const auto& f : t.firings[n]) fired.push_back({{"rule", f.rule}, {"degree", to_json(f.degree)}});
    steps.push_back({{"evaluation", to_json(t.steps[n])}, {"firings", std::move(fired)}});
  }
  return {{"start", to_json(t.start)},
          {"steps", std::move(steps)},
          {"iterations", t.iterations()},
          {"productive_steps", t.productive_steps()},
          {"fixpoint", t.reached_fixpoint},
          {"result", to_json(t.result())}};
}

inline json to_json(const Proof& p) {
  json steps = json::array();
  for (const auto& s : p.steps) {
    json step = {{"ante", to_json(s.formula.antecedent)}, {"cons", to_json(s.formula.consequent)}};
    std::visit(
        [&](const auto& just) {
          using J = std::decay_t<decltype(just)>;
          if constexpr (std::is_same_v<J, Axiom>) {
            step["rule"] = "axiom";
          } else if constexpr (std::is_same_v<J, Hypothesis>) {
            step["rule"] = "hyp";
            step["hyp_index"] = just.rule;
          } else if constexpr (std::is_same_v<J, Cut>) {
            step["rule"] = "cut";
            step["premises"] = {just.first, just.second};
          } else {
            step["rule"] = "mul";
            step["premises"] = {just.premise};
            step["scalar"] = to_json(just.scalar);
          }
        },
        s.justification);
    steps.push_back(std::move(step));
  }
  return {{"theory_hash", p.theory_hash}, {"steps", std::move(steps)}, {"conclusion", to_json(p.conclusion)}};
}

inline std::size_t read_index(const json& j) {
  if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<std::int64_t>() >= 0)) {
    throw FormatError("expected a non-negative index");
  }
  return j.get<std::size_t>();
}

inline Proof proof_from_json(const json& j) {
  try {
    Proof p;
    p.theory_hash = j.at("theory_hash").get<std::string>();
    for (const auto& s : j.at("steps")) {
      Implication f = implication_from_json(s);
      const auto rule = s.at("rule").get<std::string>();
      Justification just;
      if (rule == "axiom") {
        just = Axiom{};
      } else if (rule == "hyp") {
        just = Hypothesis{read_index(s.at("hyp_index"))};
      } else if (rule == "cut") {
        const auto& prem = s.at("premises");
        if (!prem.is_array() || prem.size() != 2) throw FormatError("cut needs two premises");
        just = Cut{read_index(prem[0]), read_index(prem[1])};
      } else if (rule == "mul") {
        const auto& prem = s.at("premises");
        if (!prem.is_array() || prem.size() != 1) throw FormatError("mul needs one premise");
        just = Mul{read_index(prem[0]), rational_from_json(s.at("scalar"))};
      } else {
        throw FormatError("unknown rule '" + rule + "'");
      }
      p.steps.push_back({std::move(f), std::move(just)});
    }
    p.conclusion = implication_from_json(j.at("conclusion"));
    return p;
  } catch (const nlohmann::json::exception& e) {
    throw FormatError(std::string("malformed proof: ") + e.what());
  }
}

}  // namespace rfal::json
