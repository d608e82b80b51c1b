#pragma once

// Over the standard Gödel algebra provability degrees can fall short of
// entailment degrees. The theory
//
//   { {} => {p:a} : a rational, a < 1/2 }  ∪  { {p:1/2} => {q:1} }
//
// forces e(p) >= 1/2, hence e(q) = 1, in every model, so {} => {q:1} is
// entailed to degree 1. Each finite part only proves it to a degree below
// 1/2. The demo computes that degree on the truncations
//
//   Σ_k = { {} => {p: 1/2 - 1/(2k)},  {p:1/2} => {q:1} },   k >= 2.

#include <stdexcept>
#include <string_view>
#include <vector>

#include "rfal/engine.hpp"

namespace rfal {

inline constexpr std::string_view goedel_gap_caption =
    "Goedel algebra: every finite truncation proves {} => {q:1} only to a degree below 1/2, "
    "while the full infinite theory entails it to degree 1; provability and entailment degrees differ.";

inline Theory goedel_truncation(std::uint64_t k) {
  if (k < 2) throw std::invalid_argument("truncation index must be at least 2");
  // 1/2 - 1/(2k) = (k-1)/(2k)
  Theory t;
  t.algebra = Algebra::goedel();
  t.rules.push_back({FuzzySet{}, FuzzySet{{"p", Rational(k - 1, 2 * k)}}});
  t.rules.push_back({FuzzySet{{"p", Rational(1, 2)}}, FuzzySet{{"q", Rational::one()}}});
  return t;
}

struct GoedelRow {
  std::uint64_t k;
  Rational degree;
  bool fixpoint;
};

inline std::vector<GoedelRow> goedel_gap_rows(std::uint64_t k_max, const EngineLimits& limits = EngineLimits{}) {
  if (k_max < 2) throw std::invalid_argument("k_max must be at least 2");
  const Implication query{FuzzySet{}, FuzzySet{{"q", Rational::one()}}};
  std::vector<GoedelRow> rows;
  for (std::uint64_t k = 2; k <= k_max; ++k) {
    const Theory t = goedel_truncation(k);
    DegreeResult r = provability_degree(t.algebra, t, query, limits);
    rows.push_back({k, std::move(r.degree), r.trace.reached_fixpoint});
  }
  return rows;
}

}  // namespace rfal
