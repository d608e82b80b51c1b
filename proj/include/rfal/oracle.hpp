#pragma once

// Semantic ground truth that does not go through the deduction system:
// brute-force entailment degrees over a finite Łukasiewicz grid, seeded
// model sampling, and empirical closure-operator law checks.

#include <cstdint>
#include <limits>
#include <optional>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "rfal/engine.hpp"
#include "rfal/logic.hpp"

namespace rfal {

/// Seeded generator with a fixed algorithm: std::mt19937_64 (bit-exact by
/// the standard) plus rejection sampling for bounded draws, so sequences are
/// identical on every platform.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform integer in [0, n).
  std::uint64_t below(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("Rng::below(0)");
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t limit = max - (max % n + 1) % n;
    std::uint64_t x;
    do {
      x = engine_();
    } while (x > limit);
    return x % n;
  }

  bool coin() { return below(2) == 1; }

  /// A rational j/d with d uniform in [1, max_den] and j uniform in [0, d].
  Rational degree(std::uint64_t max_den) {
    const std::uint64_t d = 1 + below(max_den);
    return Rational(below(d + 1), d);
  }

  /// j/k with j uniform in [0, k].
  Rational grid_degree(std::uint64_t k) { return Rational(below(k + 1), k); }

 private:
  std::mt19937_64 engine_;
};

class OracleError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct GridSpec {
  std::uint64_t denominator = 1;
  std::vector<VarId> variables;
};

struct GridOptions {
  double budget = 1e8;  // maximum number of evaluations enumerated
  // Fast mode: stop as soon as the running minimum reaches this value.
  std::optional<Rational> floor_hint;
};

inline bool on_grid(const Rational& r, std::uint64_t k) {
  mpz_class scaled = r.numerator() * static_cast<unsigned long>(k);
  return mpz_divisible_p(scaled.get_mpz_t(), r.denominator().get_mpz_t()) != 0;
}

/// Minimum of ||query||_e over all models e of the theory whose values lie
/// in {0, 1/k, ..., 1} on `spec.variables` (0 elsewhere). For Łukasiewicz
/// theories and queries on the grid this is the exact entailment degree,
/// because the least model containing the antecedent is itself on the grid.
inline Rational semantic_degree_grid(const Theory& theory, const Implication& query, const GridSpec& spec,
                                     const GridOptions& options = {}) {
  const Algebra alg = Algebra::lukasiewicz();
  if (theory.algebra != alg) throw OracleError("grid oracle is exact only for the lukasiewicz algebra");
  if (spec.denominator == 0) throw OracleError("grid denominator must be positive");
  const std::uint64_t k = spec.denominator;

  auto check_set = [&](const FuzzySet& s) {
    for (const auto& [v, d] : s) {
      if (!on_grid(d, k)) throw OracleError("degree " + d.to_string() + " of " + v.name() + " is not on the 1/" + std::to_string(k) + " grid");
    }
  };
  for (const auto& r : theory.rules) {
    check_set(r.antecedent);
    check_set(r.consequent);
  }
  check_set(query.antecedent);
  check_set(query.consequent);

  const std::set<VarId> declared(spec.variables.begin(), spec.variables.end());
  std::vector<VarId> needed = theory.variables();
  for (const auto* s : {&query.antecedent, &query.consequent}) {
    for (const auto& e : *s) needed.push_back(e.first);
  }
  for (VarId v : needed) {
    if (!declared.contains(v)) throw OracleError("variable " + v.name() + " missing from grid specification");
  }
  const std::vector<VarId> vars(declared.begin(), declared.end());

  double size = 1;
  for (std::size_t i = 0; i < vars.size(); ++i) size *= static_cast<double>(k + 1);
  if (size > options.budget) throw OracleError("grid of " + std::to_string(size) + " evaluations exceeds budget");

  std::vector<Rational> levels;
  for (std::uint64_t j = 0; j <= k; ++j) levels.emplace_back(j, k);

  // Lexicographic odometer over canonical variable order, last variable fastest.
  std::vector<std::size_t> digits(vars.size(), 0);
  Rational best = Rational::one();
  while (true) {
    Evaluation e;
    for (std::size_t i = 0; i < vars.size(); ++i) e.set(vars[i], levels[digits[i]]);
    if (is_model(alg, theory, e)) {
      Rational d = truth_degree(alg, query, e);
      if (d < best) best = std::move(d);
      if (options.floor_hint && best <= *options.floor_hint) break;
    }
    std::size_t i = vars.size();
    while (i > 0 && digits[i - 1] == k) digits[--i] = 0;
    if (i == 0) break;
    ++digits[i - 1];
  }
  return best;
}

// ---------------------------------------------------------------------------

inline std::vector<VarId> universe_of(const Theory& theory, const Evaluation& base) {
  std::set<VarId> vars;
  for (VarId v : theory.variables()) vars.insert(v);
  for (const auto& e : base) vars.insert(e.first);
  return {vars.begin(), vars.end()};
}

// Random rational superset of `base` over `universe`.
inline Evaluation random_superset(Rng& rng, const Evaluation& base, const std::vector<VarId>& universe,
                                  std::uint64_t max_den = 12) {
  Evaluation e = base;
  for (VarId v : universe) {
    if (rng.coin()) e.raise(v, rng.degree(max_den));
  }
  return e;
}

struct ModelSample {
  std::vector<Evaluation> models;
  std::size_t skipped = 0;  // samples whose closure hit the iteration cap
};

/// `count` models of the theory containing `base`, each the least model of
/// a random superset of `base`. Deterministic in `seed`.
inline ModelSample sample_models(Algebra alg, const Theory& theory, const Evaluation& base, std::size_t count,
                                 std::uint64_t seed, const EngineLimits& limits = EngineLimits{}) {
  Rng rng(seed);
  const auto universe = universe_of(theory, base);
  ModelSample out;
  out.models.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    ClosureTrace trace = least_model(alg, theory, random_superset(rng, base, universe), limits);
    if (!trace.reached_fixpoint) {
      ++out.skipped;
      continue;
    }
    out.models.push_back(trace.result());
  }
  return out;
}

struct LawViolation {
  std::string law;  // "extensivity", "monotony", "idempotency", "termination"
  Evaluation first;
  Evaluation second;
  std::string detail;
};

struct ClosureLawReport {
  std::size_t samples = 0;
  std::vector<LawViolation> violations;

  bool ok() const { return violations.empty(); }
};

/// Checks that e ↦ least model of the theory containing e is extensive,
/// graded-monotone and idempotent on `samples` random pairs (e1, e2).
inline ClosureLawReport check_closure_laws(Algebra alg, const Theory& theory, std::size_t samples, std::uint64_t seed,
                                           const EngineLimits& limits = EngineLimits{}) {
  if (!alg.pavelka_complete()) throw OracleError("closure-law checks require the lukasiewicz or product algebra");
  Rng rng(seed);
  const auto universe = universe_of(theory, {});
  ClosureLawReport report;

  auto close = [&](const Evaluation& e, LawViolation& err) -> std::optional<Evaluation> {
    ClosureTrace t = least_model(alg, theory, e, limits);
    if (!t.reached_fixpoint) {
      err.law = "termination";
      err.detail = "iteration cap reached";
      return std::nullopt;
    }
    return t.result();
  };

  for (std::size_t i = 0; i < samples; ++i) {
    const Evaluation e1 = random_superset(rng, {}, universe);
    Evaluation e2;
    if (rng.coin()) {
      e2 = random_superset(rng, {}, universe);
    } else {
      // Nearby pair: perturb a few coordinates of e1 so S(e1,e2) is often high.
      e2 = e1;
      for (VarId v : universe) {
        if (rng.below(3) == 0) e2.set(v, rng.degree(12));
      }
    }
    ++report.samples;

    LawViolation err{"", e1, e2, ""};
    auto c1 = close(e1, err);
    auto c2 = c1 ? close(e2, err) : std::nullopt;
    if (!c1 || !c2) {
      report.violations.push_back(err);
      continue;
    }
    if (!is_contained(e1, *c1) || !is_contained(e2, *c2)) {
      report.violations.push_back({"extensivity", e1, e2, "e is not contained in its closure"});
    }
    const Rational lhs = subsethood(alg, e1, e2);
    const Rational rhs = subsethood(alg, *c1, *c2);
    if (lhs > rhs) {
      report.violations.push_back({"monotony", e1, e2, "S(e1,e2)=" + lhs.to_string() + " > S(C(e1),C(e2))=" + rhs.to_string()});
    }
    ClosureTrace again = least_model(alg, theory, *c1, limits);
    if (!again.reached_fixpoint || again.result() != *c1) {
      report.violations.push_back({"idempotency", e1, e2, "C(C(e1)) differs from C(e1)"});
    }
  }
  return report;
}

}  // namespace rfal
