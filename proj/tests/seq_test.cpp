#include <gtest/gtest.h>

#include <random>

#include "pnb/io.hpp"
#include "pnb/seq.hpp"

using namespace pnb;

TEST(SeqTest, SumExamples) {
  EXPECT_EQ(seq_sum({0}, {0, 1, 2}), (IntSeq{0, 0, 1, 2}));
  EXPECT_EQ(seq_sum({}, {5, 4}), (IntSeq{4, 5}));
  EXPECT_EQ(seq_sum({1, 3}, {2, 2}), (IntSeq{1, 2, 2, 3}));
}

TEST(SeqTest, DiffExamples) {
  EXPECT_EQ(seq_diff({0, 0, 1, 2}, {0}), (IntSeq{0, 1, 2}));
  EXPECT_EQ(seq_diff({4, 5}, {4, 5}), IntSeq{});
  try {
    seq_diff({1, 2}, {3});
    FAIL() << "expected NotSubMultiset";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::NotSubMultiset);
  }
}

TEST(SeqTest, MinMaxExamples) {
  EXPECT_EQ(seq_min({0, 1}, {1, 2}), (IntSeq{1}));
  EXPECT_EQ(seq_max({0, 1}, {1, 2}), (IntSeq{0, 1, 2}));
  const IntSeq x{3, 3, 7};
  EXPECT_EQ(seq_min(x, x), x);
  EXPECT_EQ(seq_min({0, 0}, {0}), (IntSeq{0}));
  EXPECT_EQ(seq_max({0, 0}, {0}), (IntSeq{0, 0}));
}

TEST(SeqTest, CaretFormatting) {
  EXPECT_EQ(to_caret_string(IntSeq{-1, -1, -1, -1, -1, 0}), "(-1^5,0)");
  EXPECT_EQ(to_caret_string(IntSeq{}), "()");
  EXPECT_EQ(to_comma_list(IntSeq{0, 0, 1}), "0,0,1");
}

TEST(SeqTest, CaretParsing) {
  EXPECT_EQ(parse_caret_list("1^5,4"), (std::vector<long>{1, 1, 1, 1, 1, 4}));
  EXPECT_EQ(parse_caret_list("(-1^2, 3)"), (std::vector<long>{-1, -1, 3}));
  EXPECT_TRUE(parse_caret_list("").empty());
  EXPECT_EQ(parse_seq("4,1^2"), (IntSeq{1, 1, 4}));
  EXPECT_THROW(parse_caret_list("1,,2"), Error);
  EXPECT_THROW(parse_caret_list("a"), Error);
}

namespace {

IntSeq random_seq(std::mt19937_64& rng) {
  std::vector<long> v(rng() % 6);
  for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
  return IntSeq(std::move(v));
}

long count_of(const IntSeq& s, long v) { return static_cast<long>(std::count(s.begin(), s.end(), v)); }

}  // namespace

TEST(SeqTest, MultiplicityLaws) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 2000; ++trial) {
    const IntSeq x = random_seq(rng), y = random_seq(rng);
    const IntSeq s = seq_sum(x, y), lo = seq_min(x, y), hi = seq_max(x, y);
    for (long v = -2; v <= 2; ++v) {
      EXPECT_EQ(count_of(s, v), count_of(x, v) + count_of(y, v));
      EXPECT_EQ(count_of(lo, v), std::min(count_of(x, v), count_of(y, v)));
      EXPECT_EQ(count_of(hi, v), std::max(count_of(x, v), count_of(y, v)));
    }
    EXPECT_EQ(seq_diff(s, y), x);
    EXPECT_TRUE(is_sub_multiset(lo, x));
    EXPECT_TRUE(is_sub_multiset(x, hi));
    EXPECT_EQ(lo.size() + hi.size(), x.size() + y.size());
    EXPECT_EQ(parse_seq(to_caret_string(x)), x);
  }
}
