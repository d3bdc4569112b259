#include <gtest/gtest.h>

#include <optional>
#include <random>
#include <regex>

#include "oracles.hpp"
#include "pnb/lattice.hpp"

using namespace pnb;

namespace {

BettiLattice example_lattice() { return BettiLattice::build(HilbertFn(3, -1, {5, 4}), 2); }

std::size_t count_matches(const std::string& text, const std::regex& re) {
  return static_cast<std::size_t>(std::distance(std::sregex_iterator(text.begin(), text.end(), re), std::sregex_iterator()));
}

}  // namespace

TEST(LatticeTest, ExampleStructure) {
  const auto l = example_lattice();
  EXPECT_EQ(l.base(), BettiPair(3, {0}, IntSeq::repeat(-1, 5)));
  EXPECT_EQ(l.cmax(), (IntSeq{0, 1, 2}));
  EXPECT_EQ(l.size(), 8u);
  EXPECT_EQ(l.grade_sizes(), (std::vector<std::size_t>{1, 3, 3, 1}));
  EXPECT_EQ(l.hasse().size(), 12u);
  EXPECT_EQ(regularity(l.pair_of(l.cmax())), 2);
  EXPECT_EQ(grading_q(l.pair_of(l.cmax())), 3);
}

TEST(LatticeTest, BooleanCubeTables) {
  // On the cube of subsets of {0,1,2}, meet is intersection and join is union.
  const auto l = example_lattice();
  for (unsigned x = 0; x < 8; ++x)
    for (unsigned y = 0; y < 8; ++y) {
      auto subset = [](unsigned mask) {
        std::vector<long> v;
        for (long t = 0; t < 3; ++t)
          if (mask >> t & 1) v.push_back(t);
        return IntSeq(v);
      };
      EXPECT_EQ(l.meet(subset(x), subset(y)), subset(x & y));
      EXPECT_EQ(l.join(subset(x), subset(y)), subset(x | y));
    }
  EXPECT_EQ(l.meet({0, 1}, {1, 2}), (IntSeq{1}));
  EXPECT_EQ(l.join({0, 1}, {1, 2}), (IntSeq{0, 1, 2}));
  EXPECT_EQ(l.meet({0, 2}, {}), IntSeq{});
  EXPECT_EQ(l.join({0, 2}, {0, 2}), (IntSeq{0, 2}));
}

TEST(LatticeTest, SplitAndSingleton) {
  const HilbertFn split(3, 0, {4});
  for (long d = 0; d <= 2; ++d) {
    const auto l = BettiLattice::build(split, d);
    const auto slow = oracle::brute_max_difference(l.base(), d, -1, l.cmax().size() + 1);
    EXPECT_EQ(l.cmax(), slow.cmax);
    EXPECT_EQ(l.size(), slow.count);
  }
  const auto single = BettiLattice::build(HilbertFn(3, -1, {5, 4}), -1);
  EXPECT_EQ(single.size(), 1u);
  EXPECT_TRUE(single.hasse().empty());
  const std::string dot = lattice_to_dot(single);
  EXPECT_EQ(count_matches(dot, std::regex(R"(\n  n\d+ \[)")), 1u);
}

TEST(LatticeTest, ChainFromRepeatedValue) {
  // Find a lattice whose cmax is (v, v) and check it is a 3-element chain.
  std::optional<BettiLattice> chain;
  for (int n = 1; n <= 3 && !chain; ++n)
    for (long r = 1; r <= 5 && !chain; ++r)
      for (long D = r; D <= 14 && !chain; ++D)
        for (const auto& v : oracle::brute_bundle_sequences(n, r, D)) {
          const HilbertFn h = normalize(HilbertFn(n, 0, v)).h;
          const long reg = regularity(minimal_betti(h));
          for (long d = reg; d <= reg + 4 && !chain; ++d) {
            auto l = BettiLattice::build(h, d);
            if (l.cmax().size() == 2 && l.cmax()[0] == l.cmax()[1]) chain = std::move(l);
          }
          if (chain) break;
        }
  ASSERT_TRUE(chain);
  EXPECT_EQ(chain->size(), 3u);
  EXPECT_EQ(chain->hasse().size(), 2u);
  EXPECT_EQ(chain->grade_sizes(), (std::vector<std::size_t>{1, 1, 1}));
}

TEST(LatticeTest, NodeCountMatchesSubsetOracle) {
  std::size_t checked = 0;
  for (int n = 1; n <= 3; ++n)
    for (long r = 1; r <= 5; ++r)
      for (long D = r; D <= 10; ++D)
        for (const auto& v : oracle::brute_bundle_sequences(n, r, D))
          for (long extra = 0; extra <= 3; ++extra) {
      const HilbertFn h = normalize(HilbertFn(n, 0, v)).h;
      const long d = regularity(minimal_betti(h)) + extra;
      const auto l = BettiLattice::build(h, d);
      const auto slow = oracle::brute_max_difference(l.base(), d, l.base().b().front() - 1, l.cmax().size());
      EXPECT_EQ(l.size(), slow.count) << h;
      std::size_t edges = 0;
      for (const auto& c : l.nodes()) {
        for (long t : l.cmax().support()) edges += c.multiplicity(t) < l.cmax().multiplicity(t);
      }
      EXPECT_EQ(l.hasse().size(), edges);
      ++checked;
    }
  EXPECT_GT(checked, 500u);
}

TEST(LatticeTest, UpSetDuality) {
  const auto l = example_lattice();
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto up = l.up_set(l.nodes()[i]);
    for (std::size_t j = 0; j < l.size(); ++j) {
      const bool above = std::find(up.begin(), up.end(), j) != up.end();
      EXPECT_EQ(above, is_sub_multiset(l.nodes()[i], l.nodes()[j]));
      EXPECT_EQ(above, generalizes(l.pair_of(l.nodes()[i]), l.pair_of(l.nodes()[j])).has_value());
    }
  }
}

TEST(LatticeTest, ExportCounts) {
  const auto l = example_lattice();
  const std::string dot = lattice_to_dot(l);
  EXPECT_EQ(count_matches(dot, std::regex(R"(\n  n\d+ \[)")), 8u);
  EXPECT_EQ(count_matches(dot, std::regex(R"(\n  n\d+ -> n\d+)")), 12u);
  EXPECT_EQ(dot, export_lattice(l, "dot"));
  const auto j = lattice_to_json(l);
  EXPECT_EQ(j["nodes"].size(), 8u);
  EXPECT_EQ(j["edges"].size(), 12u);
  EXPECT_THROW(export_lattice(l, "svg"), Error);
}

TEST(LatticeTest, JsonRoundTrip) {
  const auto l = example_lattice();
  const auto j = nlohmann::json::parse(export_lattice(l, "json"));
  const HilbertFn h(j["n"].get<int>(), j["s0"].get<long>(), j["B"].get<std::vector<long>>());
  const auto again = BettiLattice::build(h, j["max_reg"].get<long>());
  EXPECT_EQ(again.nodes(), l.nodes());
  ASSERT_EQ(j["nodes"].size(), l.size());
  for (std::size_t i = 0; i < l.size(); ++i) {
    const auto& node = j["nodes"][i];
    const BettiPair p(3, IntSeq(node["a"].get<std::vector<long>>()), IntSeq(node["b"].get<std::vector<long>>()));
    EXPECT_EQ(p, l.pair_of(l.nodes()[i]));
    EXPECT_EQ(IntSeq(node["c"].get<std::vector<long>>()), l.nodes()[i]);
  }
  EXPECT_EQ(export_lattice(l, "json"), export_lattice(again, "json"));
}
