#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <unordered_map>
#include <vector>

#include "pnb/error.hpp"
#include "pnb/poly.hpp"

namespace pnb {

/// Dense row-major matrix of polynomials over one ring.
class PolyMatrix {
 public:
  PolyMatrix(std::size_t rows, std::size_t cols, std::size_t nvars, std::uint32_t p)
      : rows_(rows), cols_(cols), nvars_(nvars), p_(p), e_(rows * cols, Poly(nvars, p)) {}

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t modulus() const noexcept { return p_; }

  const Poly& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }
  Poly& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }

  void set(std::size_t i, std::size_t j, Poly f) {
    if (f.nvars() != nvars_ || f.modulus() != p_) throw Error(ErrorCode::ModulusMismatch, "entry lives in a different ring");
    e_[i * cols_ + j] = std::move(f);
  }

  PolyMatrix without(std::size_t row, std::size_t col) const {
    PolyMatrix out(rows_ - 1, cols_ - 1, nvars_, p_);
    for (std::size_t i = 0, oi = 0; i < rows_; ++i) {
      if (i == row) continue;
      for (std::size_t j = 0, oj = 0; j < cols_; ++j) {
        if (j == col) continue;
        out(oi, oj++) = (*this)(i, j);
      }
      ++oi;
    }
    return out;
  }

  friend bool operator==(const PolyMatrix&, const PolyMatrix&) = default;

 private:
  std::size_t rows_, cols_, nvars_;
  std::uint32_t p_;
  std::vector<Poly> e_;
};

namespace detail {

// Determinant of the rows in `mask` against the last popcount(mask) columns,
// expanded along the first of those columns; shared subminors are memoized.
class MinorExpander {
 public:
  explicit MinorExpander(const PolyMatrix& m) : m_(m) {}

  const Poly& det(std::uint64_t mask) {
    if (auto it = memo_.find(mask); it != memo_.end()) return it->second;
    const auto k = static_cast<std::size_t>(std::popcount(mask));
    Poly out(m_.nvars(), m_.modulus());
    if (k == 0) {
      out = Poly::constant(m_.nvars(), m_.modulus(), 1);
    } else {
      const std::size_t col = m_.cols() - k;
      std::size_t pos = 0;
      for (std::size_t i = 0; i < m_.rows(); ++i) {
        if (!(mask >> i & 1)) continue;
        const Poly& entry = m_(i, col);
        if (!entry.is_zero()) {
          const Poly& sub = det(mask & ~(std::uint64_t{1} << i));
          if (!sub.is_zero()) {
            const Poly prod = entry * sub;
            out = pos % 2 == 0 ? out + prod : out - prod;
          }
        }
        ++pos;
      }
    }
    return memo_.emplace(mask, std::move(out)).first->second;
  }

 private:
  const PolyMatrix& m_;
  std::unordered_map<std::uint64_t, Poly> memo_;
};

}  // namespace detail

/// All l x l minors of a matrix with l columns, one per l-subset of rows in
/// lexicographic order.
inline std::vector<Poly> maximal_minors(const PolyMatrix& m, std::size_t l) {
  if (m.cols() != l || m.rows() < l) throw Error(ErrorCode::ShapeError, "need exactly l columns and at least l rows");
  if (m.rows() > 64) throw Error(ErrorCode::ShapeError, "at most 64 rows supported");
  detail::MinorExpander expander(m);
  std::vector<Poly> out;
  std::vector<std::size_t> pick(l);
  for (std::size_t i = 0; i < l; ++i) pick[i] = i;
  while (true) {
    std::uint64_t mask = 0;
    for (auto i : pick) mask |= std::uint64_t{1} << i;
    out.push_back(expander.det(mask));
    // next combination
    std::size_t k = l;
    while (k > 0 && pick[k - 1] == m.rows() - l + k - 1) --k;
    if (k == 0) break;
    ++pick[k - 1];
    for (std::size_t j = k; j < l; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace pnb
