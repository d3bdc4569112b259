#pragma once

// Buchberger's algorithm (degrevlex, normal selection strategy, Gebauer-Moller
// pair criteria), normal forms and the unit-or-m-primary decision.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "pnb/error.hpp"
#include "pnb/poly.hpp"

namespace pnb {

namespace detail {

inline Poly reduce_by(const Poly& f, std::span<const Poly* const> basis) {
  const auto p = f.modulus();
  std::vector<Term> done;
  std::vector<Term> h = f.terms();
  std::size_t pos = 0;
  while (pos < h.size()) {
    const Term lt = h[pos];
    const Poly* divisor = nullptr;
    for (const Poly* g : basis) {
      if (g->lead_monomial().divides(lt.m)) {
        divisor = g;
        break;
      }
    }
    if (!divisor) {
      done.push_back(lt);
      ++pos;
      continue;
    }
    const std::uint32_t c = mod_mul(lt.c, mod_inv(divisor->lead().c, p), p);
    h = Poly::sub_scaled(std::span<const Term>(h).subspan(pos), c, quotient(lt.m, divisor->lead_monomial()),
                         divisor->terms(), p);
    pos = 0;
  }
  return Poly::from_sorted(f.nvars(), p, std::move(done));
}

}  // namespace detail

/// Full reduction of f by `basis`: no term of the result is divisible by a
/// leading monomial of `basis`.
inline Poly reduce(const Poly& f, const std::vector<Poly>& basis) {
  std::vector<const Poly*> ptrs;
  for (const auto& g : basis) {
    f.check_same(g);
    if (!g.is_zero()) ptrs.push_back(&g);
  }
  return detail::reduce_by(f, ptrs);
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

struct BuchbergerResult {
  std::vector<Poly> basis;
  bool complete;
};

// Runs Buchberger on the nonzero generators. With `stop_when_zero_dim`, returns
// early (complete = false) once the leading monomials found so far contain a
// pure power of every variable or a constant; every such leading monomial
// belongs to the initial ideal, so that already settles zero-dimensionality.
class Buchberger {
 public:
  Buchberger(std::size_t nvars, std::uint32_t p, bool stop_when_zero_dim)
      : nvars_(nvars), p_(p), stop_(stop_when_zero_dim) {}

  BuchbergerResult run(const std::vector<Poly>& gens) {
    for (const auto& g : gens) {
      Poly h = detail::reduce_by(g, active_ptrs()).monic();
      if (!h.is_zero() && insert(std::move(h))) return finish(false);
    }
    while (!pairs_.empty()) {
      auto best = std::min_element(pairs_.begin(), pairs_.end(), [](const CriticalPair& x, const CriticalPair& y) {
        return grevlex_cmp(x.lcm, y.lcm) < 0;
      });
      const CriticalPair pair = *best;
      pairs_.erase(best);
      Poly h = detail::reduce_by(spoly(polys_[pair.i], polys_[pair.j], pair.lcm), active_ptrs()).monic();
      if (!h.is_zero() && insert(std::move(h))) return finish(false);
    }
    return finish(true);
  }

 private:
  static Poly spoly(const Poly& f, const Poly& g, const Monomial& l) {
    // f and g are monic
    return f.times_term(1, quotient(l, f.lead_monomial())).minus_term_times(1, quotient(l, g.lead_monomial()), g);
  }

  std::vector<const Poly*> active_ptrs() const {
    std::vector<const Poly*> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(&polys_[k]);
    return out;
  }

  std::vector<Poly> active_polys() const {
    std::vector<Poly> out;
    for (std::size_t k = 0; k < polys_.size(); ++k)
      if (active_[k]) out.push_back(polys_[k]);
    return out;
  }

  // Gebauer-Moller update; returns true when the early-exit condition holds.
  bool insert(Poly h) {
    const std::size_t hi = polys_.size();
    const Monomial hm = h.lead_monomial();
    polys_.push_back(std::move(h));
    active_.push_back(true);
    if (hm.degree() == 0) {
      unit_ = true;
      return true;
    }

    std::vector<CriticalPair> candidates;
    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k]) candidates.push_back({k, hi, lcm(polys_[k].lead_monomial(), hm)});

    // Chain criterion among the new pairs: drop (h, g) when another new pair's
    // lcm divides its lcm, unless g and h have coprime leading monomials.
    std::vector<CriticalPair> kept;
    while (!candidates.empty()) {
      const CriticalPair cp = candidates.back();
      candidates.pop_back();
      const auto divides_cp = [&](const CriticalPair& o) { return o.lcm.divides(cp.lcm); };
      if (coprime(polys_[cp.i].lead_monomial(), hm) ||
          (std::none_of(candidates.begin(), candidates.end(), divides_cp) &&
           std::none_of(kept.begin(), kept.end(), divides_cp)))
        kept.push_back(cp);
    }

    // Old pairs whose lcm is strictly divisible through the new leading monomial.
    std::vector<CriticalPair> next;
    for (const auto& cp : pairs_) {
      const bool drop = hm.divides(cp.lcm) && !(lcm(polys_[cp.i].lead_monomial(), hm) == cp.lcm) &&
                        !(lcm(polys_[cp.j].lead_monomial(), hm) == cp.lcm);
      if (!drop) next.push_back(cp);
    }
    // Product criterion.
    for (const auto& cp : kept)
      if (!coprime(polys_[cp.i].lead_monomial(), hm)) next.push_back(cp);
    pairs_ = std::move(next);

    for (std::size_t k = 0; k < hi; ++k)
      if (active_[k] && hm.divides(polys_[k].lead_monomial())) active_[k] = false;

    if (!stop_) return false;
    std::vector<bool> seen(nvars_, false);
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (!active_[k]) continue;
      if (auto v = polys_[k].lead_monomial().pure_power_var()) seen[*v] = true;
    }
    return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
  }

  BuchbergerResult finish(bool complete) {
    if (unit_) return {{Poly::constant(nvars_, p_, 1)}, true};
    std::vector<Poly> basis = active_polys();
    if (complete) basis = interreduce(std::move(basis));
    return {std::move(basis), complete};
  }

  static std::vector<Poly> interreduce(std::vector<Poly> g) {
    std::vector<Poly> out;
    for (std::size_t k = 0; k < g.size(); ++k) {
      std::vector<Poly> others;
      for (std::size_t m = 0; m < g.size(); ++m)
        if (m != k) others.push_back(g[m]);
      // Leading terms are pairwise non-divisible, so the leading term survives.
      const Term lt = g[k].lead();
      Poly tail = g[k].minus_term_times(1, Monomial(), Poly::monomial(g[k].nvars(), g[k].modulus(), lt.m, lt.c));
      Poly reduced_tail = reduce(tail, others);
      out.push_back((reduced_tail + Poly::monomial(g[k].nvars(), g[k].modulus(), lt.m, lt.c)).monic());
    }
    std::sort(out.begin(), out.end(), [](const Poly& x, const Poly& y) {
      return grevlex_cmp(x.lead_monomial(), y.lead_monomial()) < 0;
    });
    return out;
  }

  std::size_t nvars_;
  std::uint32_t p_;
  bool stop_;
  bool unit_ = false;
  std::vector<Poly> polys_;
  std::vector<bool> active_;
  std::vector<CriticalPair> pairs_;
};

}  // namespace detail

/// An ideal of F_p[x0..], with an optional cached reduced Groebner basis.
class Ideal {
 public:
  Ideal(std::size_t nvars, std::uint32_t p) : nvars_(nvars), p_(p) {}
  Ideal(std::size_t nvars, std::uint32_t p, std::vector<Poly> gens) : nvars_(nvars), p_(p), gens_(std::move(gens)) {
    for (const auto& g : gens_)
      if (g.nvars() != nvars_ || g.modulus() != p_) throw Error(ErrorCode::ModulusMismatch, "generator lives in a different ring");
  }

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t modulus() const noexcept { return p_; }
  const std::vector<Poly>& generators() const noexcept { return gens_; }
  bool has_groebner() const noexcept { return gb_.has_value(); }
  /// Reduced, monic, sorted by ascending leading monomial. Requires has_groebner().
  const std::vector<Poly>& groebner_basis() const { return gb_.value(); }

  void set_groebner(std::vector<Poly> gb) { gb_ = std::move(gb); }

 private:
  std::size_t nvars_;
  std::uint32_t p_;
  std::vector<Poly> gens_;
  std::optional<std::vector<Poly>> gb_;
};

inline Ideal groebner(Ideal ideal) {
  if (ideal.has_groebner()) return ideal;
  detail::Buchberger bb(ideal.nvars(), ideal.modulus(), false);
  auto result = bb.run(ideal.generators());
  ideal.set_groebner(std::move(result.basis));
  return ideal;
}

/// Unique remainder of f modulo the ideal.
inline Poly normal_form(const Poly& f, const Ideal& ideal) {
  if (f.nvars() != ideal.nvars() || f.modulus() != ideal.modulus())
    throw Error(ErrorCode::ModulusMismatch, "polynomial and ideal live in different rings");
  if (ideal.has_groebner()) return reduce(f, ideal.groebner_basis());
  return reduce(f, groebner(ideal).groebner_basis());
}

namespace detail {

inline bool leading_terms_zero_dimensional(const std::vector<Poly>& basis, std::size_t nvars) {
  std::vector<bool> seen(nvars, false);
  for (const auto& g : basis) {
    if (g.is_unit()) return true;
    if (auto v = g.lead_monomial().pure_power_var()) seen[*v] = true;
  }
  return std::all_of(seen.begin(), seen.end(), [](bool b) { return b; });
}

}  // namespace detail

/// For homogeneous generators: true iff the ideal is the unit ideal or its
/// radical is (x0, ..., xn), i.e. its initial ideal contains a pure power of
/// every variable.
inline bool is_m_primary_or_unit(const Ideal& ideal) {
  for (const auto& g : ideal.generators())
    if (!g.is_homogeneous()) throw Error(ErrorCode::NotHomogeneous, "generators must be homogeneous");
  if (ideal.has_groebner()) return detail::leading_terms_zero_dimensional(ideal.groebner_basis(), ideal.nvars());
  detail::Buchberger bb(ideal.nvars(), ideal.modulus(), true);
  auto result = bb.run(ideal.generators());
  return detail::leading_terms_zero_dimensional(result.basis, ideal.nvars());
}

}  // namespace pnb
