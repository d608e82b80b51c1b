#pragma once

// Exact truth degrees from the rational unit interval [0,1]_Q.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rfal {

// Raised when a value leaves [0,1] or a fraction has a zero denominator.
class DegreeError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Raised for malformed degree literals.
class DegreeSyntaxError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// A rational number in [0,1], always kept in lowest terms.
///
/// Instances are immutable; every constructor validates the range, so any
/// Rational that exists is a legal truth degree. Arithmetic that may leave
/// the unit interval (e.g. `a + b - 1`) is done on `mpq_class` by the
/// algebra code and wrapped back through `from_value`.
class Rational {
 public:
  Rational() = default;

  Rational(std::uint64_t num, std::uint64_t den) {
    if (den == 0) throw DegreeError("zero denominator");
    value_ = mpq_class(mpz_class(static_cast<unsigned long>(num)), mpz_class(static_cast<unsigned long>(den)));
    value_.canonicalize();
    check_range();
  }

  Rational(const mpz_class& num, const mpz_class& den) {
    if (den == 0) throw DegreeError("zero denominator");
    value_ = mpq_class(num, den);
    value_.canonicalize();
    check_range();
  }

  static Rational from_value(mpq_class v) {
    Rational r;
    r.value_ = std::move(v);
    r.value_.canonicalize();
    r.check_range();
    return r;
  }

  static const Rational& zero() {
    static const Rational z;
    return z;
  }
  static const Rational& one() {
    static const Rational o(1, 1);
    return o;
  }

  /// Parses `num/den`, a plain integer, or a decimal literal such as `0.75`
  /// (read exactly as 75/100). Surrounding whitespace is not accepted.
  static Rational parse(std::string_view text);

  const mpq_class& value() const { return value_; }
  mpz_class numerator() const { return value_.get_num(); }
  mpz_class denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_one() const { return value_ == 1; }

  /// `0`, `1`, or `num/den`.
  std::string to_string() const {
    if (value_.get_den() == 1) return value_.get_num().get_str();
    return value_.get_num().get_str() + "/" + value_.get_den().get_str();
  }

  /// Decimal expansion; a repeating block is written in parentheses, e.g.
  /// `0.(3)` for 1/3. Expansions longer than `max_digits` fractional digits
  /// are cut off and end in `...`.
  std::string to_decimal(std::size_t max_digits = 60) const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    if (c < 0) return std::strong_ordering::less;
    if (c > 0) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }

 private:
  void check_range() const {
    if (sgn(value_) < 0 || value_ > 1) {
      throw DegreeError("degree out of range: " + value_.get_str());
    }
  }

  mpq_class value_{0};
};

inline std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

namespace detail {

inline bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

}  // namespace detail

inline Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    const auto num = text.substr(0, slash);
    const auto den = text.substr(slash + 1);
    if (!detail::all_digits(num) || !detail::all_digits(den)) {
      throw DegreeSyntaxError("malformed fraction '" + std::string(text) + "'");
    }
    mpz_class d(std::string(den), 10);
    if (d == 0) throw DegreeError("zero denominator in '" + std::string(text) + "'");
    return Rational(mpz_class(std::string(num), 10), d);
  }
  const auto dot = text.find('.');
  if (dot != std::string_view::npos) {
    const auto whole = text.substr(0, dot);
    const auto frac = text.substr(dot + 1);
    if ((!whole.empty() && !detail::all_digits(whole)) || !detail::all_digits(frac)) {
      throw DegreeSyntaxError("malformed decimal '" + std::string(text) + "'");
    }
    std::string digits = std::string(whole) + std::string(frac);
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
    return Rational(mpz_class(digits, 10), den);
  }
  if (!detail::all_digits(text)) {
    throw DegreeSyntaxError("malformed degree '" + std::string(text) + "'");
  }
  return Rational(mpz_class(std::string(text), 10), mpz_class(1));
}

inline std::string Rational::to_decimal(std::size_t max_digits) const {
  const mpz_class num = value_.get_num();
  const mpz_class den = value_.get_den();
  mpz_class whole = num / den;
  mpz_class rem = num % den;
  std::string out = whole.get_str();
  if (rem == 0) return out;
  out += '.';
  std::string digits;
  std::map<mpz_class, std::size_t> seen;
  while (rem != 0) {
    if (auto it = seen.find(rem); it != seen.end()) {
      return out + digits.substr(0, it->second) + "(" + digits.substr(it->second) + ")";
    }
    if (digits.size() == max_digits) return out + digits + "...";
    seen.emplace(rem, digits.size());
    rem *= 10;
    mpz_class d = rem / den;
    digits += static_cast<char>('0' + d.get_ui());
    rem %= den;
  }
  return out + digits;
}

}  // namespace rfal
