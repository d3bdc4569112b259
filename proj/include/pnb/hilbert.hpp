#pragma once

// Hilbert functions of bundles with vanishing intermediate cohomology, stored
// through their bundle sequence: the finitely many values of the n-th
// difference between its 0-tail on the left and its r-tail on the right.

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "pnb/betti.hpp"
#include "pnb/error.hpp"
#include "pnb/seq.hpp"

namespace pnb {

using BigInt = boost::multiprecision::cpp_int;

/// Positive integers B_1..B_m with B_m = r, B_{m-1} != r, and every descent
/// B_{i+1} < B_i landing at B_{i+1} >= n.
class BundleSeq {
 public:
  BundleSeq(int n, std::vector<long> values) : n_(n), v_(std::move(values)) {
    if (n_ < 1) throw Error(ErrorCode::InvalidBundleSequence, "ambient dimension must be at least 1");
    if (!valid(n_, v_)) throw Error(ErrorCode::InvalidBundleSequence, "not a bundle sequence");
  }

  static bool valid(int n, std::span<const long> v) {
    if (v.empty()) return false;
    for (long x : v)
      if (x <= 0) return false;
    const long r = v.back();
    if (v.size() >= 2 && v[v.size() - 2] == r) return false;
    for (std::size_t i = 0; i + 1 < v.size(); ++i)
      if (v[i + 1] < v[i] && v[i + 1] < n) return false;
    return true;
  }

  int n() const noexcept { return n_; }
  long rank() const { return v_.back(); }
  std::size_t length() const noexcept { return v_.size(); }
  long degree() const {
    long s = 0;
    for (long x : v_) s += x;
    return s;
  }
  const std::vector<long>& values() const noexcept { return v_; }

  friend bool operator==(const BundleSeq&, const BundleSeq&) = default;
  friend auto operator<=>(const BundleSeq& x, const BundleSeq& y) {
    if (auto c = x.n_ <=> y.n_; c != 0) return c;
    return x.v_ <=> y.v_;
  }

 private:
  int n_;
  std::vector<long> v_;
};

inline std::string to_caret_string(const BundleSeq& seq) {
  std::string out = "(";
  const auto& v = seq.values();
  for (std::size_t i = 0; i < v.size();) {
    std::size_t j = i;
    while (j < v.size() && v[j] == v[i]) ++j;
    if (i) out += ",";
    out += std::to_string(v[i]);
    if (j - i > 1) out += "^" + std::to_string(j - i);
    i = j;
  }
  return out + ")";
}

inline std::ostream& operator<<(std::ostream& os, const BundleSeq& s) { return os << to_caret_string(s); }

/// A Hilbert function H, determined by its bundle sequence placed at the
/// anchor s0 = least t with d^n H(t) != 0.
class HilbertFn {
 public:
  HilbertFn(long s0, BundleSeq seq) : s0_(s0), seq_(std::move(seq)) {}
  HilbertFn(int n, long s0, std::vector<long> values) : HilbertFn(s0, BundleSeq(n, std::move(values))) {}

  int n() const noexcept { return seq_.n(); }
  long s0() const noexcept { return s0_; }
  /// Last t with d^n H(t) != r.
  long s1() const noexcept { return s0_ + static_cast<long>(seq_.length()) - 2; }
  long rank() const { return seq_.rank(); }
  const BundleSeq& seq() const noexcept { return seq_; }
  const std::vector<long>& values() const noexcept { return seq_.values(); }

  /// d^n H(t).
  long delta_n(long t) const {
    if (t < s0_) return 0;
    const auto i = static_cast<std::size_t>(t - s0_);
    return i < seq_.length() ? seq_.values()[i] : seq_.rank();
  }

  HilbertFn shifted(long k) const { return {s0_ + k, seq_}; }

  friend bool operator==(const HilbertFn&, const HilbertFn&) = default;
  friend auto operator<=>(const HilbertFn& x, const HilbertFn& y) {
    if (auto c = x.seq_ <=> y.seq_; c != 0) return c;
    return x.s0_ <=> y.s0_;
  }

 private:
  long s0_;
  BundleSeq seq_;
};

inline std::ostream& operator<<(std::ostream& os, const HilbertFn& h) {
  return os << "n=" << h.n() << " s0=" << h.s0() << " B=" << h.seq();
}

/// Binomial coefficient C(m, k) for k >= 0, zero when m < k.
inline BigInt binomial(long m, long k) {
  if (k < 0 || m < k) return 0;
  BigInt out = 1;
  for (long i = 1; i <= k; ++i) {
    out *= (m - k + i);
    out /= i;
  }
  return out;
}

/// H(t), by n-fold prefix summation of d^n H:
///   H(t) = sum_{u <= t} C(t - u + n - 1, n - 1) d^n H(u).
inline BigInt eval_H(const HilbertFn& h, long t) {
  BigInt total = 0;
  const long n = h.n();
  for (long u = h.s0(); u <= t; ++u) total += binomial(t - u + n - 1, n - 1) * h.delta_n(u);
  return total;
}

/// H(t) = sum_i C(t - b_i + n, n) - sum_i C(t - a_i + n, n).
inline BigInt eval_H(const BettiPair& p, long t) {
  BigInt total = 0;
  for (long b : p.b()) total += binomial(t - b + p.n(), p.n());
  for (long a : p.a()) total -= binomial(t - a + p.n(), p.n());
  return total;
}

/// A finite window of d^n H: zero before `start`, values[i] at start + i, and
/// the last value repeated forever after.
struct DeltaProfile {
  int n;
  long start;
  std::vector<long> values;
};

/// d^n H eventually 0 on the left and a positive constant r on the right,
/// and every descent lands at a value >= n.
inline bool is_valid_hilbert(const DeltaProfile& prof) {
  if (prof.n < 1 || prof.values.empty()) return false;
  if (prof.values.back() < 1) return false;
  long prev = 0;
  for (long v : prof.values) {
    if (v < prev && v < prof.n) return false;
    prev = v;
  }
  return true;
}

/// Trims the zero head and constant tail of a valid profile.
inline HilbertFn hilbert_from_profile(const DeltaProfile& prof) {
  if (!is_valid_hilbert(prof)) throw Error(ErrorCode::InvalidHilbert, "profile violates the Hilbert function conditions");
  const auto& v = prof.values;
  std::size_t first = 0;
  while (v[first] == 0) ++first;
  const long r = v.back();
  std::size_t last = v.size() - 1;
  while (last > first && v[last - 1] == r) --last;
  return HilbertFn(prof.n, prof.start + static_cast<long>(first),
                   std::vector<long>(v.begin() + static_cast<long>(first), v.begin() + static_cast<long>(last) + 1));
}

/// Hilbert function of any bundle with Betti numbers p, read off from
/// d^{n+1} H(t) = mu(b, t) - mu(a, t).
inline HilbertFn hilbert_of_betti(const BettiPair& p) {
  if (!is_admissible(p)) throw Error(ErrorCode::NotAdmissible, "Betti pair is not admissible");
  const long lo = p.b().front();
  const long hi = p.a().empty() ? p.b().back() : std::max(p.a().back(), p.b().back());
  DeltaProfile prof{p.n(), lo, {}};
  for (long t = lo; t <= hi; ++t)
    prof.values.push_back(static_cast<long>(p.b().count_at_most(t)) - static_cast<long>(p.a().count_at_most(t)));
  return hilbert_from_profile(prof);
}

/// The unique pair with no common entries and Hilbert function h: b takes the
/// upward jumps of d^n H, a the downward ones.
inline BettiPair minimal_betti(const HilbertFn& h) {
  std::vector<long> alpha, beta;
  const long end = h.s0() + static_cast<long>(h.seq().length());
  for (long t = h.s0(); t < end; ++t) {
    const long jump = h.delta_n(t) - h.delta_n(t - 1);
    for (long k = 0; k < jump; ++k) beta.push_back(t);
    for (long k = 0; k < -jump; ++k) alpha.push_back(t);
  }
  return {h.n(), IntSeq(std::move(alpha)), IntSeq(std::move(beta))};
}

/// c1 of the Hilbert function: deg B - (s1 + 2) r.
inline long c1(const HilbertFn& h) { return h.seq().degree() - (h.s1() + 2) * h.rank(); }

inline long ceil_div(long x, long y) {
  long q = x / y;
  if ((x % y != 0) && ((x < 0) == (y < 0))) ++q;
  return q;
}

struct Normalized {
  HilbertFn h;
  long twist;  // k: the result is h twisted by O(-k)
};

/// Twists so that -r < c1 <= 0.
inline Normalized normalize(const HilbertFn& h) {
  const long k = ceil_div(c1(h), h.rank());
  return {h.shifted(k), k};
}

}  // namespace pnb
