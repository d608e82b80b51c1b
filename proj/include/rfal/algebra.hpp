#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "rfal/rational.hpp"

namespace rfal {

enum class AlgebraKind { lukasiewicz, product, goedel };

/// One of the standard residuated lattices on [0,1] restricted to rationals.
struct Algebra {
  AlgebraKind kind = AlgebraKind::lukasiewicz;

  static constexpr Algebra lukasiewicz() { return {AlgebraKind::lukasiewicz}; }
  static constexpr Algebra product() { return {AlgebraKind::product}; }
  static constexpr Algebra goedel() { return {AlgebraKind::goedel}; }

  // Provability degrees coincide with entailment degrees only for Ł and Π;
  // least-model iteration is also guaranteed to stop only for these two.
  constexpr bool pavelka_complete() const { return kind != AlgebraKind::goedel; }

  friend constexpr bool operator==(Algebra, Algebra) = default;
};

inline std::string_view algebra_name(Algebra alg) {
  switch (alg.kind) {
    case AlgebraKind::lukasiewicz: return "lukasiewicz";
    case AlgebraKind::product: return "product";
    case AlgebraKind::goedel: return "goedel";
  }
  return "lukasiewicz";
}

inline std::optional<Algebra> algebra_from_name(std::string_view name) {
  if (name == "lukasiewicz") return Algebra::lukasiewicz();
  if (name == "product") return Algebra::product();
  if (name == "goedel") return Algebra::goedel();
  return std::nullopt;
}

inline const Rational& meet(const Rational& a, const Rational& b) { return b < a ? b : a; }
inline const Rational& join(const Rational& a, const Rational& b) { return a < b ? b : a; }

/// Multiplication (t-norm) of the algebra.
inline Rational tnorm(Algebra alg, const Rational& a, const Rational& b) {
  switch (alg.kind) {
    case AlgebraKind::lukasiewicz: {
      mpq_class s = a.value() + b.value() - 1;
      if (sgn(s) <= 0) return Rational::zero();
      return Rational::from_value(std::move(s));
    }
    case AlgebraKind::product:
      return Rational::from_value(a.value() * b.value());
    case AlgebraKind::goedel:
      return meet(a, b);
  }
  return Rational::zero();
}

/// Residuum adjoint to `tnorm`: the largest c with tnorm(a, c) <= b.
inline Rational residuum(Algebra alg, const Rational& a, const Rational& b) {
  if (a <= b) return Rational::one();
  switch (alg.kind) {
    case AlgebraKind::lukasiewicz:
      return Rational::from_value(1 - a.value() + b.value());
    case AlgebraKind::product:
      return Rational::from_value(b.value() / a.value());
    case AlgebraKind::goedel:
      return b;
  }
  return Rational::one();
}

}  // namespace rfal
