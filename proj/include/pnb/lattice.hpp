#pragma once

// The finite graded lattice of Betti pairs with a fixed Hilbert function and
// regularity <= d. Each node is stored as its difference c from the minimal
// pair; the nodes are exactly the sub-multisets of c_max.

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "pnb/betti.hpp"
#include "pnb/enumerate.hpp"
#include "pnb/error.hpp"
#include "pnb/hilbert.hpp"
#include "pnb/seq.hpp"

namespace pnb {

struct HasseEdge {
  std::size_t from;  // generalization
  std::size_t to;    // specialization, one more common entry
  long added;
  friend bool operator==(const HasseEdge&, const HasseEdge&) = default;
};

class BettiLattice {
 public:
  static BettiLattice build(const HilbertFn& h, long d) {
    IntSeq cmax = max_difference(h, d);
    return BettiLattice(h, d, minimal_betti(h), std::move(cmax));
  }

  const HilbertFn& hilbert() const noexcept { return h_; }
  long max_reg() const noexcept { return d_; }
  const BettiPair& base() const noexcept { return base_; }
  const IntSeq& cmax() const noexcept { return cmax_; }
  /// Sorted lexicographically.
  const std::vector<IntSeq>& nodes() const noexcept { return nodes_; }
  std::size_t size() const noexcept { return nodes_.size(); }

  bool contains(const IntSeq& c) const { return is_sub_multiset(c, cmax_); }

  std::size_t index_of(const IntSeq& c) const {
    auto it = std::lower_bound(nodes_.begin(), nodes_.end(), c);
    if (it == nodes_.end() || *it != c) throw Error(ErrorCode::NotSubMultiset, "not a node of this lattice");
    return static_cast<std::size_t>(it - nodes_.begin());
  }

  BettiPair pair_of(const IntSeq& c) const { return base_.plus(c); }
  static long grade(const IntSeq& c) { return static_cast<long>(c.size()); }

  IntSeq meet(const IntSeq& x, const IntSeq& y) const { return seq_min(x, y); }
  IntSeq join(const IntSeq& x, const IntSeq& y) const { return seq_max(x, y); }

  /// Node counts per grade 0..|c_max|.
  std::vector<std::size_t> grade_sizes() const {
    std::vector<std::size_t> sizes(cmax_.size() + 1, 0);
    for (const auto& c : nodes_) ++sizes[c.size()];
    return sizes;
  }

  /// Cover relations c -> c + t.
  std::vector<HasseEdge> hasse() const {
    std::vector<HasseEdge> edges;
    const auto values = cmax_.support();
    for (std::size_t i = 0; i < nodes_.size(); ++i) {
      for (long t : values) {
        if (nodes_[i].multiplicity(t) < cmax_.multiplicity(t))
          edges.push_back({i, index_of(seq_sum(nodes_[i], IntSeq{t})), t});
      }
    }
    return edges;
  }

  /// Indices of all nodes above c: the strata whose closures lie inside the
  /// closure of the stratum of c.
  std::vector<std::size_t> up_set(const IntSeq& c) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < nodes_.size(); ++i)
      if (is_sub_multiset(c, nodes_[i])) out.push_back(i);
    return out;
  }

 private:
  BettiLattice(HilbertFn h, long d, BettiPair base, IntSeq cmax)
      : h_(std::move(h)), d_(d), base_(std::move(base)), cmax_(std::move(cmax)) {
    const auto values = cmax_.support();
    std::vector<long> current;
    enumerate_nodes(values, 0, current);
    std::sort(nodes_.begin(), nodes_.end());
  }

  void enumerate_nodes(const std::vector<long>& values, std::size_t i, std::vector<long>& current) {
    if (i == values.size()) {
      nodes_.emplace_back(current);
      return;
    }
    const std::size_t mult = cmax_.multiplicity(values[i]);
    for (std::size_t k = 0; k <= mult; ++k) {
      enumerate_nodes(values, i + 1, current);
      current.push_back(values[i]);
    }
    current.resize(current.size() - mult - 1);
  }

  HilbertFn h_;
  long d_;
  BettiPair base_;
  IntSeq cmax_;
  std::vector<IntSeq> nodes_;
};

inline nlohmann::json lattice_to_json(const BettiLattice& l) {
  using nlohmann::json;
  json nodes = json::array();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& c = l.nodes()[i];
    const BettiPair p = l.pair_of(c);
    nodes.push_back({{"id", i},
                     {"c", c.vec()},
                     {"a", p.a().vec()},
                     {"b", p.b().vec()},
                     {"grade", BettiLattice::grade(c)},
                     {"regularity", regularity(p)},
                     {"closure_contains", l.up_set(c)}});
  }
  json edges = json::array();
  for (const auto& e : l.hasse()) edges.push_back({{"from", e.from}, {"to", e.to}, {"added", e.added}});
  return {{"n", l.hilbert().n()},
          {"s0", l.hilbert().s0()},
          {"B", l.hilbert().values()},
          {"max_reg", l.max_reg()},
          {"base", {{"n", l.base().n()}, {"a", l.base().a().vec()}, {"b", l.base().b().vec()}}},
          {"cmax", l.cmax().vec()},
          {"grade_sizes", l.grade_sizes()},
          {"nodes", std::move(nodes)},
          {"edges", std::move(edges)}};
}

/// Graphviz digraph. Edges run from a pair to its specializations; the
/// closed strata are ordered the other way, which each node's tooltip spells
/// out as the list of strata its closure contains.
inline std::string lattice_to_dot(const BettiLattice& l) {
  std::ostringstream os;
  os << "digraph betti_lattice {\n";
  os << "  // edges: generalization -> specialization; closed strata are ordered dually\n";
  os << "  rankdir=BT;\n  node [shape=box];\n";
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& c = l.nodes()[i];
    const BettiPair p = l.pair_of(c);
    os << "  n" << i << " [label=\"c=" << to_caret_string(c) << "\\na=" << to_caret_string(p.a())
       << "\\nb=" << to_caret_string(p.b()) << "\\nq=" << BettiLattice::grade(c) << " reg=" << regularity(p)
       << "\", tooltip=\"closure contains:";
    for (auto j : l.up_set(c)) os << " n" << j;
    os << "\"];\n";
  }
  for (const auto& e : l.hasse()) os << "  n" << e.from << " -> n" << e.to << " [label=\"+" << e.added << "\"];\n";
  os << "}\n";
  return os.str();
}

inline std::string export_lattice(const BettiLattice& l, std::string_view format) {
  if (format == "dot") return lattice_to_dot(l);
  if (format == "json") return lattice_to_json(l).dump(2) + "\n";
  throw Error(ErrorCode::UnknownFormat, "unknown lattice export format '" + std::string(format) + "'");
}

}  // namespace pnb
