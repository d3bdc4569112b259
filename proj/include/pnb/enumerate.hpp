#pragma once

#include <algorithm>
#include <cstddef>
#include <map>
#include <vector>

#include "pnb/betti.hpp"
#include "pnb/error.hpp"
#include "pnb/hilbert.hpp"
#include "pnb/seq.hpp"

namespace pnb {

namespace detail {

// Suffix generator: a bundle sequence minus its head is again a bundle
// sequence of the same rank, so sequences of degree D are heads prepended to
// sequences of degree D - head. Results are memoized per remaining degree.
class BundleSeqGenerator {
 public:
  BundleSeqGenerator(int n, long r) : n_(n), r_(r) {}

  const std::vector<std::vector<long>>& of_degree(long degree) {
    if (auto it = memo_.find(degree); it != memo_.end()) return it->second;
    std::vector<std::vector<long>> out;
    if (degree == r_) out.push_back({r_});
    for (long head = 1; head <= degree - r_; ++head) {
      for (const auto& tail : of_degree(degree - head)) {
        const long next = tail.front();
        if (tail.size() == 1 && head == r_) continue;
        if (next < head && next < n_) continue;
        std::vector<long> seq;
        seq.reserve(tail.size() + 1);
        seq.push_back(head);
        seq.insert(seq.end(), tail.begin(), tail.end());
        out.push_back(std::move(seq));
      }
    }
    return memo_.emplace(degree, std::move(out)).first->second;
  }

 private:
  int n_;
  long r_;
  std::map<long, std::vector<std::vector<long>>> memo_;
};

}  // namespace detail

/// All bundle sequences on P^n of rank r and degree D, sorted.
inline std::vector<BundleSeq> bundle_sequences(int n, long r, long degree) {
  if (n < 1 || r < 1) throw Error(ErrorCode::InvalidBundleSequence, "need n >= 1 and r >= 1");
  std::vector<BundleSeq> out;
  if (degree < r) return out;
  detail::BundleSeqGenerator gen(n, r);
  for (const auto& v : gen.of_degree(degree)) out.emplace_back(n, v);
  std::sort(out.begin(), out.end());
  return out;
}

/// Normalized Hilbert functions of rank r whose minimal Betti pair has
/// regularity <= d. Degrees run up to r (d + 2) because a normalized bundle
/// has regularity >= ceil(deg B / r) - 2.
inline std::vector<HilbertFn> bundle_sequences_by_reg(int n, long r, long d) {
  std::vector<HilbertFn> out;
  for (long degree = r; degree <= r * (d + 2); ++degree) {
    for (auto& seq : bundle_sequences(n, r, degree)) {
      HilbertFn h = normalize(HilbertFn(0, std::move(seq))).h;
      if (regularity(minimal_betti(h)) <= d) out.push_back(std::move(h));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

/// The largest c such that minimal_betti(h) + c is admissible with regularity
/// <= d; every other such c is a sub-multiset of it.
inline IntSeq max_difference(const HilbertFn& h, long d) {
  const BettiPair base = minimal_betti(h);
  if (regularity(base) > d) throw Error(ErrorCode::RegularityTooSmall, "minimal Betti pair already exceeds the regularity bound");
  std::vector<long> c;
  // Adding t < b_1 puts t first in a with nothing below it in b except
  // copies of t, so only t in [b_1, d] can occur.
  for (long t = base.b().front(); t <= d; ++t) {
    std::size_t k = 0;
    while (true) {
      const BettiPair next = base.plus(IntSeq::repeat(t, k + 1));
      if (!is_admissible(next) || regularity(next) > d) break;
      ++k;
    }
    c.insert(c.end(), k, t);
  }
  return IntSeq(std::move(c));
}

}  // namespace pnb
