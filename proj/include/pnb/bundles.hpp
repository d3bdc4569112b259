#pragma once

// Presentation matrices of bundles: constructions, verification through the
// ideal of maximal minors, minimization, and deformation families.

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "pnb/betti.hpp"
#include "pnb/error.hpp"
#include "pnb/groebner.hpp"
#include "pnb/matrix.hpp"
#include "pnb/poly.hpp"
#include "pnb/seq.hpp"

namespace pnb {

/// A map (+) O(-a_j) -> (+) O(-b_i) on P^n: row i belongs to b_i, column j to
/// a_j, and entry (i, j) is zero or a form of degree a_j - b_i.
class PresMatrix {
 public:
  PresMatrix(BettiPair pair, std::uint32_t p)
      : pair_(std::move(pair)), m_(pair_.b().size(), pair_.a().size(), static_cast<std::size_t>(pair_.n()) + 1, p) {}
  PresMatrix(BettiPair pair, PolyMatrix m) : pair_(std::move(pair)), m_(std::move(m)) {
    if (m_.rows() != pair_.b().size() || m_.cols() != pair_.a().size())
      throw Error(ErrorCode::ShapeError, "matrix shape does not match the Betti pair");
    if (m_.nvars() != static_cast<std::size_t>(pair_.n()) + 1)
      throw Error(ErrorCode::ShapeError, "matrix ring must have n + 1 variables");
  }

  const BettiPair& pair() const noexcept { return pair_; }
  const PolyMatrix& matrix() const noexcept { return m_; }
  std::uint32_t modulus() const noexcept { return m_.modulus(); }
  std::size_t nvars() const noexcept { return m_.nvars(); }
  std::size_t rows() const noexcept { return m_.rows(); }
  std::size_t cols() const noexcept { return m_.cols(); }
  const Poly& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

  long entry_degree(std::size_t i, std::size_t j) const { return pair_.a()[j] - pair_.b()[i]; }

  void set(std::size_t i, std::size_t j, Poly f) { m_.set(i, j, std::move(f)); }

  /// Every nonzero entry is homogeneous of degree a_j - b_i.
  bool respects_degrees() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j) {
        const Poly& f = m_(i, j);
        if (f.is_zero()) continue;
        if (f.homogeneous_degree() != entry_degree(i, j)) return false;
      }
    return true;
  }

  /// No entry is a nonzero constant.
  bool is_minimal() const {
    for (std::size_t i = 0; i < rows(); ++i)
      for (std::size_t j = 0; j < cols(); ++j)
        if (m_(i, j).is_unit()) return false;
    return true;
  }

  friend bool operator==(const PresMatrix&, const PresMatrix&) = default;

 private:
  BettiPair pair_;
  PolyMatrix m_;
};

/// Staircase matrix with x_j^{a_i - b_{i+j}} at (i + j, i) for j = 0..n.
inline PresMatrix explicit_matrix(const BettiPair& pair, std::uint32_t p = kDefaultPrime) {
  if (pair.a().empty()) throw Error(ErrorCode::EmptyA, "explicit construction needs a nonempty a");
  if (!is_admissible(pair)) throw Error(ErrorCode::NotAdmissible, "Betti pair is not admissible");
  PresMatrix out(pair, p);
  const auto n = static_cast<std::size_t>(pair.n());
  for (std::size_t i = 0; i < pair.l(); ++i)
    for (std::size_t j = 0; j <= n; ++j) {
      const long e = pair.a()[i] - pair.b()[i + j];
      out.set(i + j, i, Poly::var(n + 1, p, j, static_cast<int>(e)));
    }
  return out;
}

/// Minimal map with uniformly random forms in every position of positive degree.
inline PresMatrix random_matrix(const BettiPair& pair, std::uint32_t p, std::uint64_t seed) {
  if (!is_admissible(pair)) throw Error(ErrorCode::NotAdmissible, "Betti pair is not admissible");
  PresMatrix out(pair, p);
  std::mt19937_64 rng(seed);
  for (std::size_t i = 0; i < out.rows(); ++i)
    for (std::size_t j = 0; j < out.cols(); ++j)
      if (const long deg = out.entry_degree(i, j); deg > 0) out.set(i, j, random_form(out.nvars(), p, deg, rng));
  return out;
}

inline Ideal minor_ideal(const PresMatrix& m) {
  return Ideal(m.nvars(), m.modulus(), maximal_minors(m.matrix(), m.cols()));
}

/// The cokernel is a bundle of rank r iff the maximal minors generate the
/// unit ideal or an m-primary ideal.
inline bool verify_bundle(const PresMatrix& m) {
  if (m.cols() == 0) return true;
  return is_m_primary_or_unit(minor_ideal(m));
}

struct Minimized {
  BettiPair pair;
  PresMatrix matrix;
};

/// Splits off trivial summands O(-c) -> O(-c) one unit entry at a time.
inline Minimized minimize_presentation(const PresMatrix& m) {
  if (!verify_bundle(m)) throw Error(ErrorCode::NotABundle, "cokernel is not a bundle");
  PresMatrix cur = m;
  while (true) {
    std::optional<std::pair<std::size_t, std::size_t>> pivot;
    for (std::size_t i = 0; i < cur.rows() && !pivot; ++i)
      for (std::size_t j = 0; j < cur.cols() && !pivot; ++j)
        if (cur(i, j).is_unit()) pivot = {i, j};
    if (!pivot) break;
    const auto [pi, pj] = *pivot;
    const std::uint32_t p = cur.modulus();
    const std::uint32_t inv = mod_inv(cur(pi, pj).lead().c, p);
    PolyMatrix mat = cur.matrix();
    for (std::size_t i = 0; i < mat.rows(); ++i) {
      if (i == pi || mat(i, pj).is_zero()) continue;
      const Poly factor = mat(i, pj).scaled(inv);
      for (std::size_t j = 0; j < mat.cols(); ++j)
        if (!mat(pi, j).is_zero()) mat(i, j) = mat(i, j) - factor * mat(pi, j);
    }
    const long value = cur.pair().a()[pj];
    BettiPair smaller(cur.pair().n(), seq_diff(cur.pair().a(), IntSeq{value}), seq_diff(cur.pair().b(), IntSeq{value}));
    cur = PresMatrix(std::move(smaller), mat.without(pi, pj));
  }
  return {cur.pair(), cur};
}

struct SplitBound {
  long low;
  long high;
};

/// n <= rank of the part without line bundle summands <= max{j : a_l > b_{l+j}}.
inline SplitBound split_bound(const BettiPair& pair) {
  if (pair.a().empty()) throw Error(ErrorCode::EmptyA, "split bound needs a nonempty a");
  if (!is_admissible(pair)) throw Error(ErrorCode::NotAdmissible, "Betti pair is not admissible");
  long high = 0;
  const long a_last = pair.a().back();
  for (std::size_t j = 1; j <= pair.r(); ++j)
    if (a_last > pair.b()[pair.l() + j - 1]) high = static_cast<long>(j);
  return {pair.n(), high};
}

using Rational = boost::rational<long>;

enum class SemistabilityConvention {
  SignCorrected,  // b_1 >= -mu
  AsDisplayed,    // b_1 >= mu
};

struct SlopeReport {
  Rational slope;
  std::optional<bool> semistable;  // only decided for rank n with nonempty a
};

inline SlopeReport slope_and_rank_n_semistability(const BettiPair& pair,
                                                  SemistabilityConvention conv = SemistabilityConvention::SignCorrected) {
  if (!is_admissible(pair)) throw Error(ErrorCode::NotAdmissible, "Betti pair is not admissible");
  const Rational mu(c1(pair), static_cast<long>(pair.r()));
  SlopeReport out{mu, std::nullopt};
  if (pair.r() == static_cast<std::size_t>(pair.n()) && !pair.a().empty()) {
    const Rational b1(pair.b().front());
    out.semistable = conv == SemistabilityConvention::SignCorrected ? b1 >= -mu : b1 >= mu;
  }
  return out;
}

/// dim of the degree-t part of the cokernel module: dim L(b)_t minus the rank
/// of the degree-t map L(a)_t -> L(b)_t, by Gaussian elimination over F_p.
inline long cokernel_dimension(const PresMatrix& m, long t) {
  const std::size_t nv = m.nvars();
  const std::uint32_t p = m.modulus();
  const auto& a = m.pair().a();
  const auto& b = m.pair().b();

  // Coordinates of L(b)_t: (row, monomial of degree t - b_i).
  std::vector<std::map<std::vector<int>, std::size_t>> index(b.size());
  std::size_t dim_target = 0;
  auto key = [nv](const Monomial& mono) {
    std::vector<int> k(nv);
    for (std::size_t v = 0; v < nv; ++v) k[v] = mono[v];
    return k;
  };
  for (std::size_t i = 0; i < b.size(); ++i)
    for (const auto& mono : monomials_of_degree(nv, t - b[i])) index[i].emplace(key(mono), dim_target++);

  std::vector<std::vector<std::uint32_t>> rows;
  for (std::size_t j = 0; j < a.size(); ++j) {
    for (const auto& mono : monomials_of_degree(nv, t - a[j])) {
      std::vector<std::uint32_t> v(dim_target, 0);
      for (std::size_t i = 0; i < b.size(); ++i) {
        for (const auto& term : m(i, j).terms()) {
          const Monomial prod = term.m * mono;
          auto it = index[i].find(key(prod));
          if (it == index[i].end()) throw Error(ErrorCode::ShapeError, "entry degree does not match its twists");
          v[it->second] = mod_add(v[it->second], term.c, p);
        }
      }
      rows.push_back(std::move(v));
    }
  }

  std::size_t rank = 0;
  for (std::size_t col = 0; col < dim_target && rank < rows.size(); ++col) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][col] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::uint32_t inv = mod_inv(rows[rank][col], p);
    for (std::size_t r2 = rank + 1; r2 < rows.size(); ++r2) {
      if (rows[r2][col] == 0) continue;
      const std::uint32_t f = mod_mul(rows[r2][col], inv, p);
      for (std::size_t c = col; c < dim_target; ++c)
        rows[r2][c] = mod_sub(rows[r2][c], mod_mul(f, rows[rank][c], p), p);
    }
    ++rank;
  }
  return static_cast<long>(dim_target) - static_cast<long>(rank);
}

/// splitmix64 step, used to derive independent seeds.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (stream + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Phi_t = psi + t * (phi (+) identity on L(c)), where psi presents a bundle
/// with the larger pair and phi one with the smaller pair.
class DeformationFamily {
 public:
  DeformationFamily(PresMatrix psi, PresMatrix embedded) : psi_(std::move(psi)), embedded_(std::move(embedded)) {}

  const PresMatrix& special() const noexcept { return psi_; }
  const PresMatrix& direction() const noexcept { return embedded_; }

  PresMatrix at(std::uint64_t t) const {
    const std::uint32_t p = psi_.modulus();
    const auto scale = static_cast<std::uint32_t>(t % p);
    PresMatrix out = psi_;
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j)
        if (!embedded_(i, j).is_zero()) out.set(i, j, psi_(i, j) + embedded_(i, j).scaled(scale));
    return out;
  }

 private:
  PresMatrix psi_;
  PresMatrix embedded_;
};

namespace detail {

// For each position of `big`, the index it takes in `small`, or nullopt for
// the extra copies that make up the witness c.
inline std::vector<std::optional<std::size_t>> embed_positions(const IntSeq& small, const IntSeq& big) {
  std::vector<std::optional<std::size_t>> out(big.size());
  std::size_t s = 0;
  for (std::size_t k = 0; k < big.size(); ++k) {
    if (s < small.size() && small[s] == big[k]) out[k] = s++;
  }
  return out;
}

}  // namespace detail

inline DeformationFamily deform_family(const BettiPair& small, const BettiPair& big, std::uint32_t p, std::uint64_t seed) {
  auto witness = generalizes(small, big);
  if (!witness) throw Error(ErrorCode::NotGeneralization, "first pair is not a generalization of the second");
  if (!is_admissible(big) || !is_admissible(small)) throw Error(ErrorCode::NotAdmissible, "both pairs must be admissible");

  PresMatrix psi = random_matrix(big, p, derive_seed(seed, 0));
  PresMatrix phi = random_matrix(small, p, derive_seed(seed, 1));

  const auto rows = detail::embed_positions(small.b(), big.b());
  const auto cols = detail::embed_positions(small.a(), big.a());
  PresMatrix embedded(big, p);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (rows[i] && cols[j]) embedded.set(i, j, phi(*rows[i], *cols[j]));

  // Identity on L(c): pair the k-th extra copy of a value in b with the k-th
  // extra copy of the same value in a.
  std::map<long, std::vector<std::size_t>> extra_rows;
  for (std::size_t i = 0; i < rows.size(); ++i)
    if (!rows[i]) extra_rows[big.b()[i]].push_back(i);
  std::map<long, std::size_t> used;
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j]) continue;
    const long v = big.a()[j];
    embedded.set(extra_rows.at(v).at(used[v]++), j, Poly::constant(embedded.nvars(), p, 1));
  }
  return {std::move(psi), std::move(embedded)};
}

}  // namespace pnb
