#pragma once

// Ascending integer sequences with multiset semantics.

#include <algorithm>
#include <compare>
#include <cstddef>
#include <initializer_list>
#include <iterator>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include "pnb/error.hpp"

namespace pnb {

/// A finite ascending list of integers. Two sequences are equal iff they
/// hold the same multiset of entries.
class IntSeq {
 public:
  using value_type = long;
  using const_iterator = std::vector<long>::const_iterator;

  IntSeq() = default;
  IntSeq(std::initializer_list<long> xs) : v_(xs) { std::sort(v_.begin(), v_.end()); }
  explicit IntSeq(std::vector<long> xs) : v_(std::move(xs)) { std::sort(v_.begin(), v_.end()); }

  /// `count` copies of `value`.
  static IntSeq repeat(long value, std::size_t count) {
    IntSeq s;
    s.v_.assign(count, value);
    return s;
  }

  std::size_t size() const noexcept { return v_.size(); }
  bool empty() const noexcept { return v_.empty(); }
  long operator[](std::size_t i) const { return v_[i]; }
  long front() const { return v_.front(); }
  long back() const { return v_.back(); }
  const_iterator begin() const noexcept { return v_.begin(); }
  const_iterator end() const noexcept { return v_.end(); }
  std::span<const long> entries() const noexcept { return v_; }
  const std::vector<long>& vec() const noexcept { return v_; }

  /// Number of occurrences of t.
  std::size_t multiplicity(long t) const {
    auto [lo, hi] = std::equal_range(v_.begin(), v_.end(), t);
    return static_cast<std::size_t>(hi - lo);
  }

  /// Number of entries <= t.
  std::size_t count_at_most(long t) const {
    return static_cast<std::size_t>(std::upper_bound(v_.begin(), v_.end(), t) - v_.begin());
  }
  /// Number of entries < t.
  std::size_t count_below(long t) const {
    return static_cast<std::size_t>(std::lower_bound(v_.begin(), v_.end(), t) - v_.begin());
  }

  long sum() const {
    long s = 0;
    for (long x : v_) s += x;
    return s;
  }

  /// Distinct values, ascending.
  std::vector<long> support() const {
    std::vector<long> out;
    std::unique_copy(v_.begin(), v_.end(), std::back_inserter(out));
    return out;
  }

  friend bool operator==(const IntSeq&, const IntSeq&) = default;
  friend auto operator<=>(const IntSeq& x, const IntSeq& y) { return x.v_ <=> y.v_; }

 private:
  std::vector<long> v_;
};

/// Multiset union with multiplicities added.
inline IntSeq seq_sum(const IntSeq& x, const IntSeq& y) {
  std::vector<long> out;
  out.reserve(x.size() + y.size());
  std::merge(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return IntSeq(std::move(out));
}

inline bool is_sub_multiset(const IntSeq& y, const IntSeq& x) {
  return std::includes(x.begin(), x.end(), y.begin(), y.end());
}

/// x minus y as multisets; throws NotSubMultiset unless y is contained in x.
inline IntSeq seq_diff(const IntSeq& x, const IntSeq& y) {
  if (!is_sub_multiset(y, x)) throw Error(ErrorCode::NotSubMultiset, "second sequence is not contained in the first");
  std::vector<long> out;
  std::set_difference(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return IntSeq(std::move(out));
}

/// Pointwise minimum of multiplicities.
inline IntSeq seq_min(const IntSeq& x, const IntSeq& y) {
  std::vector<long> out;
  std::set_intersection(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return IntSeq(std::move(out));
}

/// Pointwise maximum of multiplicities.
inline IntSeq seq_max(const IntSeq& x, const IntSeq& y) {
  std::vector<long> out;
  std::set_union(x.begin(), x.end(), y.begin(), y.end(), std::back_inserter(out));
  return IntSeq(std::move(out));
}

/// Compact caret form, e.g. (-1^5,0,2).
inline std::string to_caret_string(const IntSeq& s) {
  std::string out = "(";
  bool first = true;
  for (long t : s.support()) {
    if (!first) out += ",";
    first = false;
    out += std::to_string(t);
    if (auto k = s.multiplicity(t); k > 1) out += "^" + std::to_string(k);
  }
  return out + ")";
}

/// Plain comma list without parentheses, e.g. -1,-1,0.
inline std::string to_comma_list(const IntSeq& s) {
  std::string out;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(s[i]);
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const IntSeq& s) { return os << to_caret_string(s); }

}  // namespace pnb
