#pragma once

#include <algorithm>
#include <deque>
#include <functional>
#include <initializer_list>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rfal/algebra.hpp"
#include "rfal/rational.hpp"

namespace rfal {

inline bool is_identifier(std::string_view s) {
  if (s.empty()) return false;
  auto head = [](char c) { return c == '_' || (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  if (!head(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return head(c) || (c >= '0' && c <= '9'); });
}

namespace detail {

// Process-wide, append-only pool; the deque keeps element addresses stable.
class NamePool {
 public:
  static NamePool& instance() {
    static NamePool pool;
    return pool;
  }

  const std::string* intern(std::string_view name) {
    std::lock_guard lock(mutex_);
    if (auto it = index_.find(std::string(name)); it != index_.end()) return it->second;
    const std::string* stored = &names_.emplace_back(name);
    index_.emplace(*stored, stored);
    return stored;
  }

 private:
  std::mutex mutex_;
  std::deque<std::string> names_;
  std::unordered_map<std::string, const std::string*> index_;
};

}  // namespace detail

/// Interned propositional variable. Equality is pointer comparison; ordering
/// is lexicographic on the name so that iteration order is canonical.
class VarId {
 public:
  explicit VarId(std::string_view name) {
    if (!is_identifier(name)) throw std::invalid_argument("invalid variable name '" + std::string(name) + "'");
    name_ = detail::NamePool::instance().intern(name);
  }

  const std::string& name() const { return *name_; }

  friend bool operator==(VarId a, VarId b) { return a.name_ == b.name_; }
  friend std::strong_ordering operator<=>(VarId a, VarId b) {
    if (a.name_ == b.name_) return std::strong_ordering::equal;
    return *a.name_ <=> *b.name_;
  }

 private:
  const std::string* name_;
};

/// Finite rational fuzzy set over variables. Entries are kept sorted by
/// variable and degree-0 entries are never stored.
class FuzzySet {
 public:
  using Entry = std::pair<VarId, Rational>;

  FuzzySet() = default;

  FuzzySet(std::initializer_list<std::pair<std::string_view, Rational>> init) {
    for (const auto& [name, degree] : init) {
      VarId v(name);
      if (contains_var(v)) throw std::invalid_argument("duplicate variable '" + std::string(name) + "'");
      set(v, degree);
    }
  }

  Rational operator[](VarId v) const {
    auto it = find(v);
    return it != entries_.end() && it->first == v ? it->second : Rational::zero();
  }

  bool contains_var(VarId v) const {
    auto it = find(v);
    return it != entries_.end() && it->first == v;
  }

  /// Sets the degree of `v`; a zero degree removes the entry.
  void set(VarId v, Rational degree) {
    auto it = find(v);
    const bool present = it != entries_.end() && it->first == v;
    if (degree.is_zero()) {
      if (present) entries_.erase(it);
    } else if (present) {
      it->second = std::move(degree);
    } else {
      entries_.emplace(it, v, std::move(degree));
    }
  }

  /// Raises the degree of `v` to at least `degree`.
  void raise(VarId v, const Rational& degree) {
    if (degree.is_zero()) return;
    auto it = find(v);
    if (it != entries_.end() && it->first == v) {
      if (it->second < degree) it->second = degree;
    } else {
      entries_.emplace(it, v, degree);
    }
  }

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }

  std::vector<VarId> support() const {
    std::vector<VarId> out;
    out.reserve(entries_.size());
    for (const auto& e : entries_) out.push_back(e.first);
    return out;
  }

  /// `{p:7/10, q:1}`; the empty set prints as `{}`.
  std::string to_string() const {
    std::string out = "{";
    for (std::size_t i = 0; i < entries_.size(); ++i) {
      if (i) out += ", ";
      out += entries_[i].first.name() + ":" + entries_[i].second.to_string();
    }
    return out + "}";
  }

  friend bool operator==(const FuzzySet&, const FuzzySet&) = default;

 private:
  std::vector<Entry>::iterator find(VarId v) {
    return std::lower_bound(entries_.begin(), entries_.end(), v,
                            [](const Entry& e, VarId key) { return e.first < key; });
  }
  std::vector<Entry>::const_iterator find(VarId v) const {
    return std::lower_bound(entries_.begin(), entries_.end(), v,
                            [](const Entry& e, VarId key) { return e.first < key; });
  }

  std::vector<Entry> entries_;
};

inline std::ostream& operator<<(std::ostream& os, const FuzzySet& s) { return os << s.to_string(); }

/// Pointwise maximum. The union of no sets is the empty set.
inline FuzzySet set_union(std::span<const FuzzySet> sets) {
  FuzzySet out;
  for (const auto& s : sets) {
    for (const auto& [v, d] : s) out.raise(v, d);
  }
  return out;
}

inline FuzzySet set_union(const FuzzySet& a, const FuzzySet& b) {
  FuzzySet out = a;
  for (const auto& [v, d] : b) out.raise(v, d);
  return out;
}

/// Pointwise minimum of a nonempty collection.
inline FuzzySet set_intersection(std::span<const FuzzySet> sets) {
  if (sets.empty()) throw std::invalid_argument("intersection of an empty collection is not finite");
  FuzzySet out = sets.front();
  for (const auto& s : sets.subspan(1)) {
    FuzzySet next;
    for (const auto& [v, d] : out) next.set(v, meet(d, s[v]));
    out = std::move(next);
  }
  return out;
}

inline FuzzySet set_intersection(const FuzzySet& a, const FuzzySet& b) {
  const FuzzySet both[] = {a, b};
  return set_intersection(both);
}

/// c-multiple: u -> c ⊗ A(u).
inline FuzzySet scalar_multiple(Algebra alg, const Rational& c, const FuzzySet& a) {
  FuzzySet out;
  for (const auto& [v, d] : a) out.set(v, tnorm(alg, c, d));
  return out;
}

/// c-shift: u -> c → A(u), evaluated on every variable of `universe` and of
/// the support of A. Outside that set the value is c → 0, which is left
/// implicit.
inline FuzzySet scalar_shift(Algebra alg, const Rational& c, const FuzzySet& a, std::span<const VarId> universe) {
  FuzzySet out;
  for (const auto& [v, d] : a) out.set(v, residuum(alg, c, d));
  for (VarId v : universe) {
    if (!a.contains_var(v)) out.set(v, residuum(alg, c, Rational::zero()));
  }
  return out;
}

/// Graded subsethood S(A,B): the infimum over supp(A) of A(u) → B(u).
inline Rational subsethood(Algebra alg, const FuzzySet& a, const FuzzySet& b) {
  Rational result = Rational::one();
  for (const auto& [v, d] : a) {
    const Rational& bv = b[v];
    if (d <= bv) continue;
    Rational r = residuum(alg, d, bv);
    if (r < result) result = std::move(r);
    if (result.is_zero()) break;
  }
  return result;
}

/// A ⊆ B pointwise.
inline bool is_contained(const FuzzySet& a, const FuzzySet& b) {
  return std::all_of(a.begin(), a.end(), [&](const FuzzySet::Entry& e) { return e.second <= b[e.first]; });
}

}  // namespace rfal
