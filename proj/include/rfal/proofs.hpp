#pragma once

// Proof certificates over the deduction system
//
//   axioms  A∪B => B
//   (Cut)   from A => B and B∪C => D infer A∪C => D
//   (Mul)   from A => B infer c⊗A => c⊗B
//
// `check_proof` is the trusted kernel: it only knows these three schemes
// plus theory membership. `synthesize_proof` turns a least-model trace into
// such a proof, expanding derived rules into primitive steps.

#include <openssl/evp.h>

#include <array>
#include <cstdio>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "rfal/engine.hpp"
#include "rfal/fuzzy_set.hpp"
#include "rfal/logic.hpp"

namespace rfal {

struct Axiom {
  friend bool operator==(const Axiom&, const Axiom&) = default;
};
struct Hypothesis {
  std::size_t rule;
  friend bool operator==(const Hypothesis&, const Hypothesis&) = default;
};
struct Cut {
  std::size_t first;   // A => B
  std::size_t second;  // B∪C => D
  friend bool operator==(const Cut&, const Cut&) = default;
};
struct Mul {
  std::size_t premise;
  Rational scalar;
  friend bool operator==(const Mul&, const Mul&) = default;
};

using Justification = std::variant<Axiom, Hypothesis, Cut, Mul>;

struct ProofStep {
  Implication formula;
  Justification justification;

  friend bool operator==(const ProofStep&, const ProofStep&) = default;
};

struct Proof {
  std::string theory_hash;
  std::vector<ProofStep> steps;
  Implication conclusion;

  friend bool operator==(const Proof&, const Proof&) = default;
};

/// Lowercase hex SHA-256 of `serialize_theory(theory)`.
inline std::string theory_hash(const Theory& theory) {
  const std::string text = serialize_theory(theory);
  std::array<unsigned char, EVP_MAX_MD_SIZE> digest{};
  unsigned int length = 0;
  if (EVP_Digest(text.data(), text.size(), digest.data(), &length, EVP_sha256(), nullptr) != 1) {
    throw std::runtime_error("SHA-256 computation failed");
  }
  std::string hex;
  hex.reserve(2 * length);
  for (unsigned int i = 0; i < length; ++i) {
    char buf[3];
    std::snprintf(buf, sizeof buf, "%02x", digest[i]);
    hex += buf;
  }
  return hex;
}

// ---------------------------------------------------------------------------
// Checking

enum class RejectReason { none, bad_axiom, not_in_theory, bad_cut, bad_mul, bad_index, hash_mismatch, bad_conclusion };

inline std::string_view reason_code(RejectReason r) {
  switch (r) {
    case RejectReason::none: return "OK";
    case RejectReason::bad_axiom: return "BAD_AXIOM";
    case RejectReason::not_in_theory: return "NOT_IN_THEORY";
    case RejectReason::bad_cut: return "BAD_CUT";
    case RejectReason::bad_mul: return "BAD_MUL";
    case RejectReason::bad_index: return "BAD_INDEX";
    case RejectReason::hash_mismatch: return "HASH_MISMATCH";
    case RejectReason::bad_conclusion: return "BAD_CONCLUSION";
  }
  return "UNKNOWN";
}

struct Verdict {
  RejectReason reason = RejectReason::none;
  std::optional<std::size_t> step;  // first failing step, if any
  std::string detail;

  bool accepted() const { return reason == RejectReason::none; }
};

/// Whether `step` follows from `first` = A => B and `second` = J => D by
/// (Cut), i.e. whether some C satisfies B∪C = J and A∪C = antecedent(step),
/// with consequent(step) = D. Decided pointwise: where J(u) > B(u) the
/// value C(u) is forced to J(u); where J(u) = B(u) any C(u) <= J(u) works.
inline bool is_cut_instance(const Implication& first, const Implication& second, const Implication& step) {
  if (step.consequent != second.consequent) return false;
  const FuzzySet& a = first.antecedent;
  const FuzzySet& b = first.consequent;
  const FuzzySet& j = second.antecedent;
  const FuzzySet& s = step.antecedent;
  auto check = [&](VarId u) {
    const Rational ju = j[u];
    const Rational bu = b[u];
    const Rational au = a[u];
    const Rational su = s[u];
    if (ju < bu) return false;
    if (ju > bu) return su == join(au, ju);
    return au <= su && su <= join(au, ju);
  };
  for (const auto* set : {&a, &b, &j, &s}) {
    for (const auto& e : *set) {
      if (!check(e.first)) return false;
    }
  }
  return true;
}

inline Verdict check_proof(Algebra alg, const Theory& theory, const Proof& proof) {
  if (proof.theory_hash != theory_hash(theory)) {
    return {RejectReason::hash_mismatch, std::nullopt, "proof was issued for a different theory"};
  }
  if (proof.steps.empty()) return {RejectReason::bad_conclusion, std::nullopt, "proof has no steps"};

  const auto& steps = proof.steps;
  for (std::size_t k = 0; k < steps.size(); ++k) {
    const Implication& f = steps[k].formula;
    auto reject = [k](RejectReason r, std::string detail) { return Verdict{r, k, std::move(detail)}; };
    const Verdict verdict = std::visit(
        [&](const auto& just) -> Verdict {
          using J = std::decay_t<decltype(just)>;
          if constexpr (std::is_same_v<J, Axiom>) {
            if (!is_contained(f.consequent, f.antecedent)) return reject(RejectReason::bad_axiom, "consequent not contained in antecedent");
          } else if constexpr (std::is_same_v<J, Hypothesis>) {
            if (just.rule >= theory.rules.size()) return reject(RejectReason::not_in_theory, "rule index out of range");
            if (theory.rules[just.rule] != f) return reject(RejectReason::not_in_theory, "formula differs from theory rule");
          } else if constexpr (std::is_same_v<J, Cut>) {
            if (just.first >= k || just.second >= k) return reject(RejectReason::bad_index, "premise does not precede step");
            if (!is_cut_instance(steps[just.first].formula, steps[just.second].formula, f)) {
              return reject(RejectReason::bad_cut, "not an instance of (Cut)");
            }
          } else {
            if (just.premise >= k) return reject(RejectReason::bad_index, "premise does not precede step");
            const Implication& p = steps[just.premise].formula;
            if (f.antecedent != scalar_multiple(alg, just.scalar, p.antecedent) ||
                f.consequent != scalar_multiple(alg, just.scalar, p.consequent)) {
              return reject(RejectReason::bad_mul, "not the " + just.scalar.to_string() + "-multiple of its premise");
            }
          }
          return {};
        },
        steps[k].justification);
    if (!verdict.accepted()) return verdict;
  }
  if (steps.back().formula != proof.conclusion) {
    return {RejectReason::bad_conclusion, steps.size() - 1, "last step differs from stated conclusion"};
  }
  return {};
}

// ---------------------------------------------------------------------------
// Synthesis

class ProofBuilder {
 public:
  std::size_t add(Implication formula, Justification just) {
    steps_.push_back({std::move(formula), std::move(just)});
    return steps_.size() - 1;
  }

  std::size_t axiom(FuzzySet ante, FuzzySet cons) { return add({std::move(ante), std::move(cons)}, Axiom{}); }

  // (Cut) with the conclusion computed from the smallest admissible C.
  std::size_t cut(std::size_t first, std::size_t second, const FuzzySet& c) {
    Implication f{set_union(formula(first).antecedent, c), formula(second).consequent};
    return add(std::move(f), Cut{first, second});
  }

  std::size_t mul(Algebra alg, std::size_t premise, const Rational& scalar) {
    const Implication& p = formula(premise);
    Implication f{scalar_multiple(alg, scalar, p.antecedent), scalar_multiple(alg, scalar, p.consequent)};
    return add(std::move(f), Mul{premise, scalar});
  }

  /// Additivity: from E => F (step `f`) and E => G (step `g`) derive
  /// E => F∪G with two axioms and three cuts.
  std::size_t additivity(std::size_t f, std::size_t g) {
    const FuzzySet e = formula(f).antecedent;
    const FuzzySet ef = set_union(e, formula(f).consequent);
    const FuzzySet fg = set_union(formula(f).consequent, formula(g).consequent);
    const std::size_t a1 = axiom(ef, ef);                          // F∪E => E∪F
    const std::size_t c1 = cut(f, a1, e);                          // E => E∪F
    const std::size_t a2 = axiom(set_union(ef, fg), fg);           // G∪E∪F => F∪G
    const std::size_t c2 = cut(g, a2, ef);                         // E∪F => F∪G
    return cut(c1, c2, FuzzySet{});                                // E => F∪G
  }

  const Implication& formula(std::size_t i) const { return steps_.at(i).formula; }
  std::vector<ProofStep> take() && { return std::move(steps_); }

 private:
  std::vector<ProofStep> steps_;
};

/// Builds a proof of A => c⊗B, c = S(B, A*), from a fixpoint trace started
/// at A. Each productive round n extends a proof of A => A^n to one of
/// A => A^(n+1) by firing the rules recorded in the trace.
inline Proof synthesize_proof(Algebra alg, const Theory& theory, const Implication& query, const ClosureTrace& trace) {
  if (!trace.reached_fixpoint) throw std::invalid_argument("cannot certify a trace that did not reach a fixpoint");
  if (trace.start != query.antecedent) throw std::invalid_argument("trace does not start at the query antecedent");

  const FuzzySet& a = query.antecedent;
  const Rational c = subsethood(alg, query.consequent, trace.result());
  const FuzzySet target = scalar_multiple(alg, c, query.consequent);

  ProofBuilder pb;
  if (trace.productive_steps() == 0) {
    pb.axiom(a, target);
  } else {
    std::size_t current = pb.axiom(a, a);  // A => A^0
    const FuzzySet* prev = &trace.start;
    for (std::size_t n = 0; n < trace.steps.size(); ++n) {
      const FuzzySet& next = trace.steps[n];
      if (next == *prev) break;
      const std::size_t to_prev = current;  // A => A^n
      FuzzySet acc = *prev;
      for (const Firing& fire : trace.firings[n]) {
        const Implication& rule = theory.rules.at(fire.rule);
        const FuzzySet gained = scalar_multiple(alg, fire.degree, rule.consequent);
        if (is_contained(gained, acc)) continue;
        const std::size_t hyp = pb.add(rule, Hypothesis{fire.rule});
        const std::size_t scaled = pb.mul(alg, hyp, fire.degree);                  // s⊗E => s⊗F
        const std::size_t into = pb.axiom(*prev, pb.formula(scaled).antecedent);    // A^n => s⊗E
        const std::size_t step = pb.cut(into, scaled, FuzzySet{});                 // A^n => s⊗F
        const std::size_t fired = pb.cut(to_prev, step, FuzzySet{});               // A => s⊗F
        current = pb.additivity(current, fired);
        acc = set_union(acc, gained);
      }
      if (acc != next) throw std::logic_error("trace firings do not reproduce the recorded step");
      prev = &next;
    }
    const std::size_t last = pb.axiom(trace.result(), target);  // A* => c⊗B
    pb.cut(current, last, FuzzySet{});
  }

  Proof proof;
  proof.theory_hash = theory_hash(theory);
  proof.steps = std::move(pb).take();
  proof.conclusion = proof.steps.back().formula;
  return proof;
}

}  // namespace rfal
