#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "fsdsq/lce.hpp"
#include "naive_oracle.hpp"

using fsdsq::Word;

TEST(Lce, SmallWord) {
  const auto w = Word::parse("abaababaab");
  const fsdsq::LceTable t(w);
  EXPECT_EQ(t.size(), 10u);
  EXPECT_EQ(t.lce(0, 3), 3u);
  EXPECT_EQ(t.lce(0, 5), 5u);
  EXPECT_EQ(t.lce(2, 2), 8u);
  EXPECT_EQ(t.lce(1, 0), 0u);
  EXPECT_EQ(t.lce(4, 10), 0u);
}

TEST(Lce, EmptyWordIsRejected) {
  EXPECT_THROW(fsdsq::build_lce(Word{}), fsdsq::UsageError);
}

TEST(LceProperty, MatchesNaiveOnRandomWords) {
  std::mt19937 rng(20261019);
  for (int round = 0; round < 300; ++round) {
    const std::size_t n = 1 + rng() % 60;
    const std::size_t k = 1 + rng() % 4;
    std::string text;
    for (std::size_t i = 0; i < n; ++i) text += static_cast<char>('a' + rng() % k);
    const fsdsq::LceTable t(Word::parse(text));

    const auto& sa = t.suffix_array();
    ASSERT_EQ(sa.size(), n);
    for (std::size_t r = 1; r < n; ++r) {
      ASSERT_LT(text.substr(sa[r - 1]), text.substr(sa[r])) << text;
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        ASSERT_EQ(t.lce(i, j), naive::lce(text, i, j)) << text << ' ' << i << ' ' << j;
      }
    }
  }
}
