#pragma once

// Least models of finite theories and provability degrees computed from
// them: |A => B| = S(B, A*) where A* is the least model containing A.

#include <cstddef>
#include <stdexcept>
#include <vector>

#include "rfal/algebra.hpp"
#include "rfal/fuzzy_set.hpp"
#include "rfal/logic.hpp"

namespace rfal {

struct EngineLimits {
  std::size_t max_iterations = 10'000;

  explicit EngineLimits(std::size_t max_iter = 10'000) : max_iterations(max_iter) {
    if (max_iter == 0) throw std::invalid_argument("max_iterations must be positive");
  }
};

struct Firing {
  std::size_t rule;
  Rational degree;  // S(antecedent, e^n)

  friend bool operator==(const Firing&, const Firing&) = default;
};

/// Record of the chain e^0 ⊆ e^1 ⊆ ... produced by `least_model`.
///
/// `steps[n]` is e^(n+1) and `firings[n]` lists the rules that fired with a
/// nonzero degree against e^n. When `reached_fixpoint` is set, the last step
/// repeats its predecessor (or the start, if there is only one step).
struct ClosureTrace {
  Evaluation start;
  std::vector<Evaluation> steps;
  std::vector<std::vector<Firing>> firings;
  bool reached_fixpoint = false;

  std::size_t iterations() const { return steps.size(); }

  /// Number of steps that strictly enlarged the evaluation.
  std::size_t productive_steps() const {
    std::size_t n = 0;
    const Evaluation* prev = &start;
    for (const auto& s : steps) {
      if (s != *prev) ++n;
      prev = &s;
    }
    return n;
  }

  const Evaluation& result() const { return steps.empty() ? start : steps.back(); }
};

namespace detail {

inline Evaluation closure_step_logged(Algebra alg, const Theory& theory, const Evaluation& e,
                                      std::vector<Firing>* log) {
  Evaluation next = e;
  for (std::size_t i = 0; i < theory.rules.size(); ++i) {
    const auto& rule = theory.rules[i];
    Rational fire = subsethood(alg, rule.antecedent, e);
    if (fire.is_zero()) continue;
    for (const auto& [v, d] : rule.consequent) next.raise(v, tnorm(alg, fire, d));
    if (log) log->push_back({i, std::move(fire)});
  }
  return next;
}

}  // namespace detail

/// e ∪ ⋃{ S(A,e) ⊗ B : A => B in theory }, all rules read the same e.
inline Evaluation closure_step(Algebra alg, const Theory& theory, const Evaluation& e) {
  return detail::closure_step_logged(alg, theory, e, nullptr);
}

/// Iterates `closure_step` from `e` until two consecutive evaluations are
/// equal or the iteration cap is spent. A capped trace is still a sound
/// lower approximation of the least model.
inline ClosureTrace least_model(Algebra alg, const Theory& theory, const Evaluation& e,
                                const EngineLimits& limits = EngineLimits{}) {
  ClosureTrace trace;
  trace.start = e;
  const Evaluation* current = &trace.start;
  while (trace.steps.size() < limits.max_iterations) {
    std::vector<Firing> log;
    Evaluation next = detail::closure_step_logged(alg, theory, *current, &log);
    const bool stationary = next == *current;
    trace.steps.push_back(std::move(next));
    trace.firings.push_back(std::move(log));
    current = &trace.steps.back();
    if (stationary) {
      trace.reached_fixpoint = true;
      break;
    }
  }
  return trace;
}

struct DegreeResult {
  Rational degree;
  ClosureTrace trace;

  // Set when the cap was hit: `degree` is then only a lower bound.
  bool lower_bound_only() const { return !trace.reached_fixpoint; }
};

/// |A => B| computed as S(B, A*) on the least model A* containing A.
inline DegreeResult provability_degree(Algebra alg, const Theory& theory, const Implication& query,
                                       const EngineLimits& limits = EngineLimits{}) {
  ClosureTrace trace = least_model(alg, theory, query.antecedent, limits);
  Rational degree = subsethood(alg, query.consequent, trace.result());
  return {std::move(degree), std::move(trace)};
}

enum class Decision { provable, not_provable, undecided };

/// Whether theory ⊢ A => B, i.e. B ⊆ A*. `undecided` is only returned when
/// the cap was hit before a fixpoint (possible under Gödel or a tiny cap).
inline Decision decide_provable(Algebra alg, const Theory& theory, const Implication& query,
                                const EngineLimits& limits = EngineLimits{}) {
  ClosureTrace trace = least_model(alg, theory, query.antecedent, limits);
  if (is_contained(query.consequent, trace.result())) return Decision::provable;
  return trace.reached_fixpoint ? Decision::not_provable : Decision::undecided;
}

}  // namespace rfal
