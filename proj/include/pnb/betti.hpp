#pragma once

// Betti pairs (a, b) of a two-term resolution
//   0 -> (+) O(-a_i) -> (+) O(-b_i) -> E -> 0
// on P^n, their numeric invariants, the generalization order, and bounded
// enumeration of the admissible ones.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "pnb/error.hpp"
#include "pnb/seq.hpp"

namespace pnb {

class BettiPair {
 public:
  /// Requires n >= 1 and length(b) > length(a).
  BettiPair(int n, IntSeq a, IntSeq b) : n_(n), a_(std::move(a)), b_(std::move(b)) {
    if (n_ < 1) throw Error(ErrorCode::InvalidPair, "ambient dimension must be at least 1");
    if (a_.empty() && b_.empty()) throw Error(ErrorCode::EmptyPair, "both sequences are empty");
    if (b_.size() <= a_.size()) throw Error(ErrorCode::InvalidPair, "b must be strictly longer than a");
  }

  int n() const noexcept { return n_; }
  const IntSeq& a() const noexcept { return a_; }
  const IntSeq& b() const noexcept { return b_; }
  std::size_t l() const noexcept { return a_.size(); }
  std::size_t r() const noexcept { return b_.size() - a_.size(); }

  /// (a + c, b + c).
  BettiPair plus(const IntSeq& c) const { return {n_, seq_sum(a_, c), seq_sum(b_, c)}; }

  friend bool operator==(const BettiPair&, const BettiPair&) = default;
  friend auto operator<=>(const BettiPair& x, const BettiPair& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    if (auto c = x.a_ <=> y.a_; c != 0) return c;
    return x.b_ <=> y.b_;
  }

 private:
  int n_;
  IntSeq a_;
  IntSeq b_;
};

inline std::ostream& operator<<(std::ostream& os, const BettiPair& p) {
  return os << "n=" << p.n() << " a=" << p.a() << " b=" << p.b();
}

/// a is empty, or r >= n and a_i > b_{n+i} for every i.
inline bool is_admissible(const BettiPair& p) {
  if (p.a().empty()) return true;
  if (p.r() < static_cast<std::size_t>(p.n())) return false;
  const auto n = static_cast<std::size_t>(p.n());
  for (std::size_t i = 0; i < p.l(); ++i)
    if (p.a()[i] <= p.b()[i + n]) return false;
  return true;
}

inline long c1(const BettiPair& p) { return p.a().sum() - p.b().sum(); }

/// max(b_last, a_last - 1); b_last when a is empty.
inline long regularity(const BettiPair& p) {
  if (p.a().empty()) return p.b().back();
  return std::max(p.b().back(), p.a().back() - 1);
}

/// Number of entries a and b have in common, counted with multiplicity.
inline long grading_q(const BettiPair& p) { return static_cast<long>(seq_min(p.a(), p.b()).size()); }

/// The unique c with q = p + c, if any.
inline std::optional<IntSeq> generalizes(const BettiPair& p, const BettiPair& q) {
  if (p.n() != q.n()) return std::nullopt;
  if (!is_sub_multiset(p.a(), q.a()) || !is_sub_multiset(p.b(), q.b())) return std::nullopt;
  IntSeq c = seq_diff(q.a(), p.a());
  if (seq_diff(q.b(), p.b()) != c) return std::nullopt;
  return c;
}

namespace detail {

// Admissible pairs with fixed l >= 1, rank r, first Chern class c1 and
// entries of b in [lo, d], entries of a in [b_{n+i} + 1, d + 1].
class AdmissibleSearch {
 public:
  AdmissibleSearch(int n, std::size_t l, std::size_t r, long c1, long d, std::vector<BettiPair>& out)
      : n_(n), l_(l), r_(r), c1_(c1), d_(d), out_(out) {}

  void run(long lo) {
    b_.clear();
    walk_b(lo, 0);
  }

 private:
  // sum(a) = c1 + sum(b) with l_ entries each <= d + 1.
  long max_b_sum() const { return static_cast<long>(l_) * (d_ + 1) - c1_; }

  void walk_b(long from, long sum) {
    const std::size_t len = l_ + r_;
    const std::size_t placed = b_.size();
    if (placed == static_cast<std::size_t>(n_)) {
      // sum(a_i - b_{n+i}) >= l forces b_1 + ... + b_n >= l - c1 - (r - n) d.
      long head = 0;
      for (std::size_t i = 0; i < placed; ++i) head += b_[i];
      if (head < static_cast<long>(l_) - c1_ - static_cast<long>(r_ - n_) * d_) return;
    }
    if (placed == len) {
      finish_b(sum);
      return;
    }
    const long remaining = static_cast<long>(len - placed);
    for (long v = from; v <= d_; ++v) {
      if (sum + remaining * v > max_b_sum()) break;
      b_.push_back(v);
      walk_b(v, sum + v);
      b_.pop_back();
    }
  }

  void finish_b(long b_sum) {
    const long target = c1_ + b_sum;
    a_.clear();
    walk_a(b_.front(), target);
  }

  void walk_a(long from, long rest) {
    const std::size_t i = a_.size();
    if (i == l_) {
      if (rest == 0) out_.emplace_back(n_, IntSeq(a_), IntSeq(b_));
      return;
    }
    const long low = std::max(from, b_[i + static_cast<std::size_t>(n_)] + 1);
    const long left = static_cast<long>(l_ - i);
    for (long v = low; v <= d_ + 1; ++v) {
      if (left * v > rest) break;
      if (rest - v > (left - 1) * (d_ + 1)) continue;
      a_.push_back(v);
      walk_a(v, rest - v);
      a_.pop_back();
    }
  }

  int n_;
  std::size_t l_, r_;
  long c1_, d_;
  std::vector<BettiPair>& out_;
  std::vector<long> b_, a_;
};

inline void split_pairs(int n, std::size_t r, long c1, long d, std::vector<long>& b, long from, long rest,
                        std::vector<BettiPair>& out) {
  if (b.size() == r) {
    if (rest == 0) out.emplace_back(n, IntSeq{}, IntSeq(b));
    return;
  }
  const long left = static_cast<long>(r - b.size());
  for (long v = from; v <= d; ++v) {
    if (left * v > rest) break;
    if (rest - v > (left - 1) * d) continue;
    b.push_back(v);
    split_pairs(n, r, c1, d, b, v, rest - v, out);
    b.pop_back();
  }
}

}  // namespace detail

/// All admissible pairs on P^n of rank r, first Chern class c1 and
/// regularity <= d, sorted. Every entry of b is <= d and every entry of a is
/// <= d + 1; with l >= 1 one has l <= c1 + r d and
/// b_1 >= l - c1 - (r - 1) d, which bounds the search.
inline std::vector<BettiPair> enumerate_admissible(int n, long r, long c1, long d) {
  if (n < 1 || r < 1) throw Error(ErrorCode::InvalidPair, "enumeration needs n >= 1 and r >= 1");
  const auto rank = static_cast<std::size_t>(r);
  std::vector<BettiPair> out;

  std::vector<long> b;
  detail::split_pairs(n, rank, c1, d, b, -c1 - (r - 1) * d, -c1, out);

  if (r >= n) {
    const long max_l = c1 + r * d;
    for (long l = 1; l <= max_l; ++l) {
      detail::AdmissibleSearch search(n, static_cast<std::size_t>(l), rank, c1, d, out);
      search.run(l - c1 - (r - 1) * d);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace pnb
