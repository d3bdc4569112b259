#pragma once

// Text and JSON encodings shared by the CLI and the tests.

#include <charconv>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnb/betti.hpp"
#include "pnb/bundles.hpp"
#include "pnb/error.hpp"
#include "pnb/hilbert.hpp"
#include "pnb/poly.hpp"
#include "pnb/seq.hpp"

namespace pnb {

namespace detail {

inline long parse_long(std::string_view s, std::string_view context) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  long v = 0;
  const char* first = s.data();
  if (!s.empty() && s.front() == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size())
    throw Error(ErrorCode::ParseError, "bad integer '" + std::string(s) + "' in '" + std::string(context) + "'");
  return v;
}

}  // namespace detail

/// Comma list in input order with caret shorthand: "1^5,4" -> 1,1,1,1,1,4.
/// Parentheses are ignored and the empty string is the empty list.
inline std::vector<long> parse_caret_list(std::string_view text) {
  std::string cleaned;
  for (char ch : text)
    if (ch != '(' && ch != ')' && ch != ' ') cleaned += ch;
  std::vector<long> out;
  if (cleaned.empty()) return out;
  std::string_view rest = cleaned;
  while (true) {
    const auto comma = rest.find(',');
    const std::string_view item = rest.substr(0, comma);
    const auto caret = item.find('^');
    if (caret == std::string_view::npos) {
      out.push_back(detail::parse_long(item, text));
    } else {
      const long value = detail::parse_long(item.substr(0, caret), text);
      const long count = detail::parse_long(item.substr(caret + 1), text);
      if (count < 0 || count > 100000) throw Error(ErrorCode::ParseError, "bad repeat count in '" + std::string(text) + "'");
      out.insert(out.end(), static_cast<std::size_t>(count), value);
    }
    if (comma == std::string_view::npos) break;
    rest.remove_prefix(comma + 1);
  }
  return out;
}

inline IntSeq parse_seq(std::string_view text) { return IntSeq(parse_caret_list(text)); }

inline nlohmann::json to_json(const IntSeq& s) { return s.vec(); }

inline nlohmann::json to_json(const BettiPair& p) { return {{"n", p.n()}, {"a", p.a().vec()}, {"b", p.b().vec()}}; }

inline nlohmann::json to_json(const HilbertFn& h) { return {{"n", h.n()}, {"s0", h.s0()}, {"B", h.values()}}; }

inline IntSeq seq_from_json(const nlohmann::json& j) {
  if (!j.is_array()) throw Error(ErrorCode::ParseError, "sequence must be a JSON array");
  std::vector<long> v;
  for (const auto& x : j) {
    if (!x.is_number_integer()) throw Error(ErrorCode::ParseError, "sequence entries must be integers");
    v.push_back(x.get<long>());
  }
  return IntSeq(std::move(v));
}

inline BettiPair betti_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("a") || !j.contains("b"))
    throw Error(ErrorCode::ParseError, "Betti pair needs n, a and b");
  return {j.at("n").get<int>(), seq_from_json(j.at("a")), seq_from_json(j.at("b"))};
}

inline HilbertFn hilbert_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("s0") || !j.contains("B"))
    throw Error(ErrorCode::ParseError, "Hilbert function needs n, s0 and B");
  return {j.at("n").get<int>(), j.at("s0").get<long>(), j.at("B").get<std::vector<long>>()};
}

/// { "n", "p", "a", "b", "entries": [[poly, ...], ...] }, one inner array per row.
inline nlohmann::json to_json(const PresMatrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_string(m(i, j)));
    rows.push_back(std::move(row));
  }
  return {{"n", m.pair().n()},
          {"p", m.modulus()},
          {"a", m.pair().a().vec()},
          {"b", m.pair().b().vec()},
          {"entries", std::move(rows)}};
}

/// Rows in the file follow b as listed; they are reordered to match the
/// ascending b (and columns to ascending a).
inline PresMatrix matrix_from_json(const nlohmann::json& j) {
  for (const char* key : {"n", "p", "a", "b", "entries"})
    if (!j.contains(key)) throw Error(ErrorCode::ParseError, std::string("matrix JSON is missing '") + key + "'");
  const int n = j.at("n").get<int>();
  const auto p = j.at("p").get<std::uint32_t>();
  const auto a_raw = j.at("a").get<std::vector<long>>();
  const auto b_raw = j.at("b").get<std::vector<long>>();
  const auto& entries = j.at("entries");
  if (!entries.is_array() || entries.size() != b_raw.size())
    throw Error(ErrorCode::ShapeError, "entries must have one row per entry of b");

  std::vector<std::size_t> row_order(b_raw.size()), col_order(a_raw.size());
  for (std::size_t i = 0; i < row_order.size(); ++i) row_order[i] = i;
  for (std::size_t i = 0; i < col_order.size(); ++i) col_order[i] = i;
  std::stable_sort(row_order.begin(), row_order.end(), [&](auto x, auto y) { return b_raw[x] < b_raw[y]; });
  std::stable_sort(col_order.begin(), col_order.end(), [&](auto x, auto y) { return a_raw[x] < a_raw[y]; });

  BettiPair pair(n, IntSeq(a_raw), IntSeq(b_raw));
  if (p < 2 || !is_prime(p)) throw Error(ErrorCode::InvalidArgument, "p must be prime");
  PresMatrix out(pair, p);
  for (std::size_t i = 0; i < row_order.size(); ++i) {
    const auto& row = entries.at(row_order[i]);
    if (!row.is_array() || row.size() != a_raw.size()) throw Error(ErrorCode::ShapeError, "each row needs one entry per entry of a");
    for (std::size_t k = 0; k < col_order.size(); ++k) {
      const auto& cell = row.at(col_order[k]);
      std::string text = cell.is_string() ? cell.get<std::string>() : cell.dump();
      out.set(i, k, parse_poly(text, static_cast<std::size_t>(n) + 1, p));
    }
  }
  if (!out.respects_degrees()) throw Error(ErrorCode::ShapeError, "entry degrees do not match a_j - b_i");
  return out;
}

}  // namespace pnb
