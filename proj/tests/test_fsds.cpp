#include <gtest/gtest.h>

#include "fsdsq/fsds.hpp"
#include "golden.hpp"

using fsdsq::Word;

namespace {

struct Expected {
  std::size_t position, sq, SQ;
  const char* x1;
  const char* x2;
  std::size_t p1, p2, threshold;
};

void expect_factorizations(const std::string& text, const std::vector<Expected>& expected) {
  const auto fs = fsdsq::find_fs_double_squares(Word::parse(text));
  ASSERT_EQ(fs.size(), expected.size()) << text;
  for (std::size_t i = 0; i < fs.size(); ++i) {
    const auto& e = expected[i];
    const auto& f = fs[i].factorization;
    EXPECT_EQ(fs[i].position, e.position);
    EXPECT_EQ(fs[i].short_root_len, e.sq);
    EXPECT_EQ(fs[i].long_root_len, e.SQ);
    EXPECT_EQ(f.x1.str(), e.x1);
    EXPECT_EQ(f.x2.str(), e.x2);
    EXPECT_EQ(f.p1, e.p1);
    EXPECT_EQ(f.p2, e.p2);
    EXPECT_EQ(fsdsq::epsilon_threshold(f), e.threshold);
  }
}

fsdsq::FsDoubleSquare at(const std::vector<fsdsq::FsDoubleSquare>& fs, std::size_t pos) {
  for (const auto& f : fs) {
    if (f.position == pos) return f;
  }
  throw std::logic_error("no FS-double square at " + std::to_string(pos));
}

}  // namespace

TEST(Factorization, SmallestDoubleSquare) {
  expect_factorizations(golden::kSmallest, {{1, 3, 5, "a", "b", 1, 1, 0}});
}

TEST(Factorization, EqualExample) {
  expect_factorizations(golden::kEqual,
                        {{1, 5, 8, "ab", "a", 1, 1, 1}, {2, 5, 8, "ba", "a", 1, 1, 0}});
}

TEST(Factorization, UnequalExamples) {
  expect_factorizations(golden::kW1, {{1, 4, 7, "a", "ab", 1, 1, 1},
                                      {2, 16, 30, "ab", "aaabaabaaabb", 1, 1, 1}});
  expect_factorizations(golden::kW2, {{1, 4, 7, "a", "ab", 1, 1, 1},
                                      {2, 30, 44, "ab", "aaabaabaaabb", 2, 1, 15}});
}

TEST(Factorization, Reconstruction) {
  const auto f = fsdsq::canonical_factorization(Word::parse("abaab"), Word::parse("abaababa"));
  EXPECT_EQ(f.short_root().str(), "abaab");
  EXPECT_EQ(f.long_root().str(), "abaababa");
  EXPECT_EQ(f.period().str(), "aba");

  const auto g = fsdsq::canonical_factorization(Word::parse("abababa"),
                                                Word::parse("abababaab"));
  EXPECT_EQ(g.x1.str(), "a");
  EXPECT_EQ(g.x2.str(), "b");
  EXPECT_EQ(g.p1, 3u);
  EXPECT_EQ(g.p2, 1u);
}

TEST(Factorization, RejectsMalformedRoots) {
  using fsdsq::canonical_factorization;
  EXPECT_THROW(canonical_factorization(Word::parse("ab"), Word::parse("ba")), fsdsq::UsageError);
  EXPECT_THROW(canonical_factorization(Word::parse("ab"), Word::parse("abab")),
               fsdsq::UsageError);
  EXPECT_THROW(canonical_factorization(Word::parse("aba"), Word::parse("abb")),
               fsdsq::UsageError);
  EXPECT_THROW(canonical_factorization(Word::parse("aa"), Word::parse("aaa")), fsdsq::UsageError);
}

TEST(Factorization, NoDoubleSquares) {
  EXPECT_TRUE(fsdsq::find_fs_double_squares(Word::parse("abcabc")).empty());
  EXPECT_TRUE(fsdsq::find_fs_double_squares(Word::parse("a")).empty());
}

TEST(Mate, AdjacentEqualIsAlpha) {
  const Word w = Word::parse(golden::kEqual);
  const auto fs = fsdsq::find_fs_double_squares(w);
  const auto v = fsdsq::classify_mate(w, fs[0], fs[1]);
  EXPECT_EQ(v.label, fsdsq::MateLabel::Alpha);
  EXPECT_EQ(v.epsilon_threshold, 1u);
  EXPECT_FALSE(v.beyond_threshold);
  EXPECT_EQ(fsdsq::to_string(v.label), "alpha");
}

TEST(Mate, AdjacentUnequalIsDelta) {
  for (const auto* text : {&golden::kW1, &golden::kW2}) {
    const Word w = Word::parse(*text);
    const auto fs = fsdsq::find_fs_double_squares(w);
    const auto v = fsdsq::classify_mate(w, fs[0], fs[1]);
    EXPECT_EQ(v.label, fsdsq::MateLabel::Delta);
    EXPECT_FALSE(v.via_nontrivial_prefix);
  }
}

// lcp(x1x2, x2x1) = 0 puts the threshold at 0; the prefix rule still wins.
TEST(Mate, DeltaWithZeroThreshold) {
  const Word w = Word::parse("abaababaabbbbaababaabbbaababaabbbbaababaabb");
  const auto fs = fsdsq::find_fs_double_squares(w);
  const auto v = fsdsq::classify_mate(w, at(fs, 1), at(fs, 2));
  EXPECT_EQ(v.label, fsdsq::MateLabel::Delta);
  EXPECT_EQ(v.epsilon_threshold, 0u);
  EXPECT_TRUE(v.beyond_threshold);
}

TEST(Mate, DistantPairIsEpsilon) {
  const Word w = Word::parse("abbababbabbababba");
  const auto fs = fsdsq::find_fs_double_squares(w);
  const auto v = fsdsq::classify_mate(w, at(fs, 1), at(fs, 8));
  EXPECT_EQ(v.label, fsdsq::MateLabel::Epsilon);
  EXPECT_TRUE(v.beyond_threshold);
}

// Equal long roots with a shorter short root: none of the five labels apply.
TEST(Mate, UncoveredPairIsReportedAsFinding) {
  const Word w = Word::parse("abababaababababaabab");
  const auto fs = fsdsq::find_fs_double_squares(w);
  try {
    fsdsq::classify_mate(w, at(fs, 1), at(fs, 3));
    FAIL() << "expected a finding";
  } catch (const fsdsq::Finding& f) {
    EXPECT_EQ(f.property(), "mate");
    EXPECT_EQ(f.word(), w.str());
  }
}

TEST(Mate, OrderIsChecked) {
  const Word w = Word::parse(golden::kEqual);
  const auto fs = fsdsq::find_fs_double_squares(w);
  EXPECT_THROW(fsdsq::classify_mate(w, fs[1], fs[0]), fsdsq::UsageError);
  EXPECT_THROW(fsdsq::classify_mate(w, fs[0], fs[0]), fsdsq::UsageError);
}
