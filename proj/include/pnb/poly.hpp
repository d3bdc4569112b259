#pragma once

// Sparse multivariate polynomials over a prime field F_p in the variables
// x0..x{nvars-1}, terms kept in descending graded reverse lexicographic order.

#include <algorithm>
#include <array>
#include <cctype>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <optional>
#include <ostream>
#include <random>
#include <span>
#include <initializer_list>
#include <string>
#include <string_view>
#include <vector>

#include "pnb/error.hpp"

namespace pnb {

inline constexpr std::size_t kMaxVars = 12;
inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Arithmetic in F_p, p < 2^31.
inline std::uint32_t mod_mul(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  return static_cast<std::uint32_t>(static_cast<std::uint64_t>(a) * b % p);
}
inline std::uint32_t mod_add(std::uint32_t a, std::uint32_t b, std::uint32_t p) {
  std::uint32_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint32_t mod_sub(std::uint32_t a, std::uint32_t b, std::uint32_t p) { return a >= b ? a - b : a + p - b; }
inline std::uint32_t mod_pow(std::uint32_t a, std::uint64_t e, std::uint32_t p) {
  std::uint32_t r = 1 % p;
  while (e) {
    if (e & 1) r = mod_mul(r, a, p);
    a = mod_mul(a, a, p);
    e >>= 1;
  }
  return r;
}
inline std::uint32_t mod_inv(std::uint32_t a, std::uint32_t p) { return mod_pow(a, p - 2, p); }
inline std::uint32_t mod_from_signed(long long v, std::uint32_t p) {
  long long r = v % static_cast<long long>(p);
  return static_cast<std::uint32_t>(r < 0 ? r + p : r);
}

class Monomial {
 public:
  Monomial() { e_.fill(0); }
  explicit Monomial(std::initializer_list<int> exps) {
    e_.fill(0);
    if (exps.size() > kMaxVars) throw Error(ErrorCode::ShapeError, "too many variables");
    std::size_t i = 0;
    for (int x : exps) set(i++, x);
  }

  static Monomial var(std::size_t i, int power = 1) {
    Monomial m;
    m.set(i, power);
    return m;
  }

  int operator[](std::size_t i) const { return e_[i]; }
  long degree() const noexcept { return deg_; }

  void set(std::size_t i, int value) {
    if (i >= kMaxVars) throw Error(ErrorCode::ShapeError, "variable index out of range");
    if (value < 0) throw Error(ErrorCode::InvalidArgument, "negative exponent");
    deg_ += static_cast<long>(value) - e_[i];
    e_[i] = value;
  }

  friend Monomial operator*(const Monomial& x, const Monomial& y) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      const long s = static_cast<long>(x.e_[i]) + y.e_[i];
      if (s > std::numeric_limits<int>::max()) throw Error(ErrorCode::ExponentOverflow, "exponent overflow");
      m.e_[i] = static_cast<int>(s);
    }
    m.deg_ = x.deg_ + y.deg_;
    return m;
  }

  bool divides(const Monomial& y) const {
    if (deg_ > y.deg_) return false;
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (e_[i] > y.e_[i]) return false;
    return true;
  }

  /// y / x, assuming x divides y.
  friend Monomial quotient(const Monomial& y, const Monomial& x) {
    Monomial m;
    for (std::size_t i = 0; i < kMaxVars; ++i) m.e_[i] = y.e_[i] - x.e_[i];
    m.deg_ = y.deg_ - x.deg_;
    return m;
  }

  friend Monomial lcm(const Monomial& x, const Monomial& y) {
    Monomial m;
    m.deg_ = 0;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      m.e_[i] = std::max(x.e_[i], y.e_[i]);
      m.deg_ += m.e_[i];
    }
    return m;
  }

  friend bool coprime(const Monomial& x, const Monomial& y) {
    for (std::size_t i = 0; i < kMaxVars; ++i)
      if (x.e_[i] && y.e_[i]) return false;
    return true;
  }

  /// Index of the only variable occurring, if this is a pure power of positive degree.
  std::optional<std::size_t> pure_power_var() const {
    std::optional<std::size_t> var;
    for (std::size_t i = 0; i < kMaxVars; ++i) {
      if (!e_[i]) continue;
      if (var) return std::nullopt;
      var = i;
    }
    return var;
  }

  friend bool operator==(const Monomial& x, const Monomial& y) { return x.e_ == y.e_; }

  /// Degree reverse lexicographic comparison: -1, 0, 1.
  friend int grevlex_cmp(const Monomial& x, const Monomial& y) {
    if (x.deg_ != y.deg_) return x.deg_ < y.deg_ ? -1 : 1;
    for (std::size_t i = kMaxVars; i-- > 0;) {
      if (x.e_[i] != y.e_[i]) return x.e_[i] > y.e_[i] ? -1 : 1;
    }
    return 0;
  }

 private:
  std::array<int, kMaxVars> e_;
  long deg_ = 0;
};

struct Term {
  Monomial m;
  std::uint32_t c;
  friend bool operator==(const Term&, const Term&) = default;
};

class Poly {
 public:
  Poly(std::size_t nvars, std::uint32_t p) : nvars_(nvars), p_(p) {
    if (nvars == 0 || nvars > kMaxVars) throw Error(ErrorCode::ShapeError, "number of variables must be in 1.." + std::to_string(kMaxVars));
    if (p < 2 || p >= (1u << 31) || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "modulus must be a prime below 2^31");
  }

  static Poly constant(std::size_t nvars, std::uint32_t p, long long c) {
    Poly f(nvars, p);
    if (auto v = mod_from_signed(c, p)) f.t_.push_back({Monomial(), v});
    return f;
  }
  static Poly monomial(std::size_t nvars, std::uint32_t p, const Monomial& m, long long c = 1) {
    Poly f(nvars, p);
    f.check_vars(m);
    if (auto v = mod_from_signed(c, p)) f.t_.push_back({m, v});
    return f;
  }
  static Poly var(std::size_t nvars, std::uint32_t p, std::size_t i, int power = 1) {
    if (i >= nvars) throw Error(ErrorCode::ShapeError, "variable index out of range");
    return monomial(nvars, p, Monomial::var(i, power));
  }

  /// Builds from arbitrary terms: sorts, merges duplicates, drops zeros.
  static Poly from_terms(std::size_t nvars, std::uint32_t p, std::vector<Term> terms) {
    Poly f(nvars, p);
    for (auto& t : terms) {
      f.check_vars(t.m);
      t.c %= p;
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return grevlex_cmp(x.m, y.m) > 0; });
    for (auto& t : terms) {
      if (!f.t_.empty() && f.t_.back().m == t.m)
        f.t_.back().c = mod_add(f.t_.back().c, t.c, p);
      else
        f.t_.push_back(t);
      if (f.t_.back().c == 0) f.t_.pop_back();
    }
    return f;
  }

  std::size_t nvars() const noexcept { return nvars_; }
  std::uint32_t modulus() const noexcept { return p_; }
  bool is_zero() const noexcept { return t_.empty(); }
  std::size_t size() const noexcept { return t_.size(); }
  const std::vector<Term>& terms() const noexcept { return t_; }
  const Term& lead() const { return t_.front(); }
  const Monomial& lead_monomial() const { return t_.front().m; }

  /// Nonzero constant.
  bool is_unit() const { return t_.size() == 1 && t_[0].m.degree() == 0; }

  /// Common total degree of all terms; nullopt for zero or inhomogeneous.
  std::optional<long> homogeneous_degree() const {
    if (t_.empty()) return std::nullopt;
    const long d = t_.front().m.degree();
    for (const auto& t : t_)
      if (t.m.degree() != d) return std::nullopt;
    return d;
  }
  bool is_homogeneous() const { return is_zero() || homogeneous_degree().has_value(); }

  Poly monic() const {
    if (is_zero()) return *this;
    Poly f = scaled(mod_inv(lead().c, p_));
    return f;
  }

  Poly scaled(std::uint32_t c) const {
    Poly f(nvars_, p_, Raw{});
    if (c % p_ == 0) return f;
    f.t_ = t_;
    for (auto& t : f.t_) t.c = mod_mul(t.c, c, p_);
    return f;
  }

  /// this * c * m
  Poly times_term(std::uint32_t c, const Monomial& m) const {
    Poly f(nvars_, p_, Raw{});
    if (c % p_ == 0) return f;
    f.t_.reserve(t_.size());
    for (const auto& t : t_) f.t_.push_back({t.m * m, mod_mul(t.c, c, p_)});
    return f;
  }

  /// this - c * m * g, in one merge pass.
  Poly minus_term_times(std::uint32_t c, const Monomial& m, const Poly& g) const {
    check_same(g);
    Poly out(nvars_, p_, Raw{});
    out.t_ = sub_scaled(t_, c, m, g.t_, p_);
    return out;
  }

  /// f - c * m * g on sorted term lists.
  static std::vector<Term> sub_scaled(std::span<const Term> f, std::uint32_t c, const Monomial& m,
                                      std::span<const Term> g, std::uint32_t p) {
    std::vector<Term> out;
    out.reserve(f.size() + g.size());
    const std::uint32_t neg = c ? p - c : 0;
    auto i = f.begin();
    auto j = g.begin();
    while (i != f.end() || j != g.end()) {
      if (j == g.end()) {
        out.push_back(*i++);
        continue;
      }
      const Monomial gm = j->m * m;
      const int cmp = i == f.end() ? -1 : grevlex_cmp(i->m, gm);
      if (cmp > 0) {
        out.push_back(*i++);
      } else if (cmp < 0) {
        if (auto v = mod_mul(j->c, neg, p)) out.push_back({gm, v});
        ++j;
      } else {
        if (auto v = mod_add(i->c, mod_mul(j->c, neg, p), p)) out.push_back({gm, v});
        ++i;
        ++j;
      }
    }
    return out;
  }

  /// Trusts `terms` to be sorted descending with nonzero coefficients < p.
  static Poly from_sorted(std::size_t nvars, std::uint32_t p, std::vector<Term> terms) {
    Poly f(nvars, p, Raw{});
    f.t_ = std::move(terms);
    return f;
  }

  friend Poly operator+(const Poly& f, const Poly& g) { return f.minus_term_times(f.p_ - 1, Monomial(), g); }
  friend Poly operator-(const Poly& f, const Poly& g) { return f.minus_term_times(1, Monomial(), g); }
  friend Poly operator-(const Poly& f) { return f.scaled(f.p_ - 1); }
  friend Poly operator*(const Poly& f, const Poly& g) {
    f.check_same(g);
    Poly out(f.nvars_, f.p_, Raw{});
    for (const auto& t : g.t_) out = out.minus_term_times(f.p_ - t.c, t.m, f);
    return out;
  }

  Poly pow(unsigned e) const {
    Poly r = constant(nvars_, p_, 1);
    for (unsigned i = 0; i < e; ++i) r = r * *this;
    return r;
  }

  friend bool operator==(const Poly& f, const Poly& g) { return f.nvars_ == g.nvars_ && f.p_ == g.p_ && f.t_ == g.t_; }

  void check_same(const Poly& g) const {
    if (p_ != g.p_ || nvars_ != g.nvars_) throw Error(ErrorCode::ModulusMismatch, "polynomials live in different rings");
  }

 private:
  struct Raw {};
  Poly(std::size_t nvars, std::uint32_t p, Raw) : nvars_(nvars), p_(p) {}

  void check_vars(const Monomial& m) const {
    for (std::size_t i = nvars_; i < kMaxVars; ++i)
      if (m[i]) throw Error(ErrorCode::ShapeError, "monomial uses a variable outside the ring");
  }

  std::size_t nvars_;
  std::uint32_t p_;
  std::vector<Term> t_;
};

/// Sum of terms `c*x0^e0*...`, coefficients as integers in [0, p).
inline std::string to_string(const Poly& f) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : f.terms()) {
    if (!out.empty()) out += " + ";
    std::string mono;
    for (std::size_t i = 0; i < f.nvars(); ++i) {
      if (!t.m[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (t.m[i] > 1) mono += "^" + std::to_string(t.m[i]);
    }
    if (mono.empty())
      out += std::to_string(t.c);
    else if (t.c == 1)
      out += mono;
    else
      out += std::to_string(t.c) + "*" + mono;
  }
  return out;
}

inline std::ostream& operator<<(std::ostream& os, const Poly& f) { return os << to_string(f); }

namespace detail {

class PolyParser {
 public:
  PolyParser(std::string_view text, std::size_t nvars, std::uint32_t p) : s_(text), nvars_(nvars), p_(p) {}

  Poly parse() {
    std::vector<Term> terms;
    skip_ws();
    if (pos_ == s_.size()) fail("empty polynomial");
    bool first = true;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) break;
      bool negative = false;
      if (s_[pos_] == '+' || s_[pos_] == '-') {
        negative = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        fail("expected '+' or '-'");
      }
      first = false;
      terms.push_back(term(negative));
    }
    return Poly::from_terms(nvars_, p_, std::move(terms));
  }

 private:
  Term term(bool negative) {
    std::uint32_t c = 1;
    Monomial m;
    while (true) {
      skip_ws();
      if (pos_ == s_.size()) fail("unexpected end of input");
      if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        c = mod_mul(c, static_cast<std::uint32_t>(number() % p_), p_);
      } else if (s_[pos_] == 'x') {
        ++pos_;
        const auto idx = number();
        if (idx >= nvars_) fail("variable index out of range");
        long e = 1;
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '^') {
          ++pos_;
          skip_ws();
          e = static_cast<long>(number());
          if (e > std::numeric_limits<int>::max()) fail("exponent too large");
        }
        const auto i = static_cast<std::size_t>(idx);
        const long total = static_cast<long>(m[i]) + e;
        if (total > std::numeric_limits<int>::max()) fail("exponent too large");
        m.set(i, static_cast<int>(total));
      } else {
        fail(std::string("unexpected character '") + s_[pos_] + "'");
      }
      skip_ws();
      if (pos_ < s_.size() && s_[pos_] == '*') {
        ++pos_;
        continue;
      }
      break;
    }
    if (negative) c = c ? p_ - c : 0;
    return {m, c};
  }

  std::uint64_t number() {
    skip_ws();
    if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected a number");
    std::uint64_t v = 0;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
      v = v * 10 + static_cast<std::uint64_t>(s_[pos_] - '0');
      if (v > (1ull << 40)) fail("number too large");
      ++pos_;
    }
    return v;
  }

  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" + std::string(s_) + "'");
  }

  std::string_view s_;
  std::size_t nvars_;
  std::uint32_t p_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Poly parse_poly(std::string_view text, std::size_t nvars, std::uint32_t p) {
  return detail::PolyParser(text, nvars, p).parse();
}

/// All monomials of total degree `degree` in `nvars` variables, descending.
inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, long degree) {
  std::vector<Monomial> out;
  if (degree < 0) return out;
  Monomial m;
  auto rec = [&](auto&& self, std::size_t i, long left) -> void {
    if (i + 1 == nvars) {
      m.set(i, static_cast<int>(left));
      out.push_back(m);
      m.set(i, 0);
      return;
    }
    for (long e = left; e >= 0; --e) {
      m.set(i, static_cast<int>(e));
      self(self, i + 1, left - e);
    }
    m.set(i, 0);
  };
  rec(rec, 0, degree);
  std::sort(out.begin(), out.end(), [](const Monomial& x, const Monomial& y) { return grevlex_cmp(x, y) > 0; });
  return out;
}

/// Form of the given degree whose coefficients are drawn uniformly from F_p,
/// zero included.
inline Poly random_form(std::size_t nvars, std::uint32_t p, long degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (const auto& m : monomials_of_degree(nvars, degree)) {
    const auto c = static_cast<std::uint32_t>(rng() % p);
    if (c) terms.push_back({m, c});
  }
  return Poly::from_terms(nvars, p, std::move(terms));
}

}  // namespace pnb
