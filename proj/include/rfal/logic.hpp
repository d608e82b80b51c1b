#pragma once

// Rational fuzzy attribute implications A => B, theories, their truth
// semantics, and the line-oriented theory file format:
//
//   # comment
//   algebra lukasiewicz|product|goedel
//   {p:1, q:0.5} => {r:3/4}
//   ({p:1} => {q:1}) @ 3/4        graded rule, read as {p:1} => 3/4⊗{q:1}

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "rfal/algebra.hpp"
#include "rfal/fuzzy_set.hpp"
#include "rfal/rational.hpp"

namespace rfal {

struct Implication {
  FuzzySet antecedent;
  FuzzySet consequent;

  std::string to_string() const { return antecedent.to_string() + " => " + consequent.to_string(); }

  friend bool operator==(const Implication&, const Implication&) = default;
};

inline std::ostream& operator<<(std::ostream& os, const Implication& f) { return os << f.to_string(); }

/// Evaluations are finite rational fuzzy sets; unlisted variables are 0.
using Evaluation = FuzzySet;

struct Theory {
  Algebra algebra;
  std::vector<Implication> rules;
  std::optional<std::string> name;  // metadata only; not serialized

  /// Every variable with a nonzero degree in some rule, in canonical order.
  std::vector<VarId> variables() const {
    std::set<VarId> vars;
    for (const auto& r : rules) {
      for (const auto& e : r.antecedent) vars.insert(e.first);
      for (const auto& e : r.consequent) vars.insert(e.first);
    }
    return {vars.begin(), vars.end()};
  }

  friend bool operator==(const Theory& a, const Theory& b) {
    return a.algebra == b.algebra && a.rules == b.rules;
  }
};

/// ||A => B||_e = S(A,e) → S(B,e).
inline Rational truth_degree(Algebra alg, const Implication& f, const Evaluation& e) {
  return residuum(alg, subsethood(alg, f.antecedent, e), subsethood(alg, f.consequent, e));
}

inline bool is_model(Algebra alg, const Theory& theory, const Evaluation& e) {
  for (const auto& rule : theory.rules) {
    if (subsethood(alg, rule.antecedent, e) > subsethood(alg, rule.consequent, e)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Parsing

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + message),
        line_(line),
        column_(column),
        message_(message) {}

  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }
  const std::string& message() const { return message_; }

 private:
  std::size_t line_;
  std::size_t column_;
  std::string message_;
};

struct ParseOptions {
  // Replaces the file's `algebra` header (graded rules are desugared under it).
  std::optional<Algebra> algebra_override;
};

namespace detail {

class Cursor {
 public:
  explicit Cursor(std::string_view text) : text_(text) {}

  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  std::size_t line() const { return line_; }
  std::size_t column() const { return pos_ - line_start_ + 1; }

  void advance() {
    if (at_end()) return;
    if (text_[pos_] == '\n') {
      ++line_;
      line_start_ = pos_ + 1;
    }
    ++pos_;
  }

  // Skips spaces, tabs, carriage returns and comments, but not newlines.
  void skip_inline_space() {
    while (!at_end()) {
      const char c = peek();
      if (c == ' ' || c == '\t' || c == '\r') {
        advance();
      } else if (c == '#') {
        while (!at_end() && peek() != '\n') advance();
      } else {
        break;
      }
    }
  }

  [[noreturn]] void fail(const std::string& message) const { throw ParseError(line_, column(), message); }

  void expect(char c) {
    skip_inline_space();
    if (peek() != c) {
      fail(std::string("expected '") + c + "'" + (at_end() || peek() == '\n' ? " before end of line" : std::string(", found '") + peek() + "'"));
    }
    advance();
  }

  void expect_arrow() {
    skip_inline_space();
    if (peek() != '=') fail("expected '=>'");
    advance();
    if (peek() != '>') fail("expected '=>'");
    advance();
  }

  std::string_view take_while(auto pred) {
    const std::size_t start = pos_;
    while (!at_end() && pred(peek())) advance();
    return text_.substr(start, pos_ - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t line_start_ = 0;
};

inline bool ident_char(char c) {
  return c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9');
}

inline Rational parse_degree(Cursor& in) {
  in.skip_inline_space();
  const std::size_t line = in.line();
  const std::size_t column = in.column();
  auto token = in.take_while([](char c) { return (c >= '0' && c <= '9') || c == '.' || c == '/' || c == '-' || c == '+'; });
  if (token.empty()) throw ParseError(line, column, "expected a degree");
  try {
    return Rational::parse(token);
  } catch (const DegreeSyntaxError& e) {
    if (!token.empty() && token.front() == '-') throw ParseError(line, column, "degree out of range");
    throw ParseError(line, column, e.what());
  } catch (const DegreeError& e) {
    if (std::string_view(e.what()).find("denominator") != std::string_view::npos) {
      throw ParseError(line, column, e.what());
    }
    throw ParseError(line, column, "degree out of range");
  }
}

inline FuzzySet parse_set(Cursor& in) {
  in.expect('{');
  FuzzySet out;
  std::set<VarId> seen;
  in.skip_inline_space();
  if (in.peek() == '}') {
    in.advance();
    return out;
  }
  while (true) {
    in.skip_inline_space();
    const std::size_t line = in.line();
    const std::size_t column = in.column();
    auto name = in.take_while(ident_char);
    if (!is_identifier(name)) throw ParseError(line, column, "expected a variable name");
    VarId v(name);
    if (!seen.insert(v).second) throw ParseError(line, column, "duplicate variable '" + std::string(name) + "'");
    in.expect(':');
    out.set(v, parse_degree(in));
    in.skip_inline_space();
    if (in.peek() == ',') {
      in.advance();
      continue;
    }
    in.expect('}');
    return out;
  }
}

inline void expect_line_end(Cursor& in) {
  in.skip_inline_space();
  if (!in.at_end() && in.peek() != '\n') in.fail(std::string("unexpected '") + in.peek() + "'");
}

// Parses `SET => SET` or `(SET => SET) @ DEGREE`.
inline Implication parse_rule(Cursor& in, Algebra alg) {
  in.skip_inline_space();
  if (in.peek() == '(') {
    in.advance();
    FuzzySet a = parse_set(in);
    in.expect_arrow();
    FuzzySet b = parse_set(in);
    in.expect(')');
    in.expect('@');
    Rational d = parse_degree(in);
    return {std::move(a), scalar_multiple(alg, d, b)};
  }
  FuzzySet a = parse_set(in);
  in.expect_arrow();
  FuzzySet b = parse_set(in);
  return {std::move(a), std::move(b)};
}

}  // namespace detail

inline Theory parse_theory(std::string_view text, const ParseOptions& options = {}) {
  detail::Cursor in(text);
  Theory theory;
  bool have_header = false;
  while (!in.at_end()) {
    in.skip_inline_space();
    if (in.at_end()) break;
    if (in.peek() == '\n') {
      in.advance();
      continue;
    }
    if (in.peek() == 'a') {
      const std::size_t line = in.line();
      const std::size_t column = in.column();
      auto word = in.take_while(detail::ident_char);
      if (word != "algebra") throw ParseError(line, column, "unknown directive '" + std::string(word) + "'");
      if (have_header) throw ParseError(line, column, "duplicate algebra header");
      if (!theory.rules.empty()) throw ParseError(line, column, "algebra header must precede all rules");
      in.skip_inline_space();
      const std::size_t name_column = in.column();
      auto name = in.take_while(detail::ident_char);
      auto alg = algebra_from_name(name);
      if (!alg) throw ParseError(line, name_column, "unknown algebra '" + std::string(name) + "'");
      theory.algebra = options.algebra_override.value_or(*alg);
      have_header = true;
    } else {
      if (!have_header && options.algebra_override) theory.algebra = *options.algebra_override;
      theory.rules.push_back(detail::parse_rule(in, theory.algebra));
    }
    detail::expect_line_end(in);
  }
  if (options.algebra_override) theory.algebra = *options.algebra_override;
  return theory;
}

/// Parses a standalone `SET => SET` (queries on the command line).
inline Implication parse_implication(std::string_view text) {
  detail::Cursor in(text);
  FuzzySet a = detail::parse_set(in);
  in.expect_arrow();
  FuzzySet b = detail::parse_set(in);
  in.skip_inline_space();
  if (!in.at_end()) in.fail(std::string("unexpected '") + in.peek() + "'");
  return {std::move(a), std::move(b)};
}

/// Parses a standalone `{p:1, ...}` (evaluations on the command line).
inline FuzzySet parse_fuzzy_set(std::string_view text) {
  detail::Cursor in(text);
  FuzzySet s = detail::parse_set(in);
  in.skip_inline_space();
  if (!in.at_end()) in.fail(std::string("unexpected '") + in.peek() + "'");
  return s;
}

/// Canonical text: header line, then one plain rule per line.
inline std::string serialize_theory(const Theory& theory) {
  std::string out = "algebra " + std::string(algebra_name(theory.algebra)) + "\n";
  for (const auto& rule : theory.rules) out += rule.to_string() + "\n";
  return out;
}

}  // namespace rfal
