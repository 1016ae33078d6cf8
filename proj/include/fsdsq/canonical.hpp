#pragma once

#include <cstddef>
#include <vector>

#include "fsdsq/word.hpp"

namespace fsdsq {

/// Renames letters in order of first occurrence: the first letter becomes
/// 0, each new letter the smallest unused code.
Word canonicalize(const Word& w);

bool is_canonical(const Word& w);

/// Lexicographically ordered enumeration of the canonical words of one
/// length over at most `alphabet_size` letters, optionally restricted to
/// those extending a fixed canonical prefix.
class CanonicalWords {
 public:
  CanonicalWords(std::size_t length, std::size_t alphabet_size, Word prefix = {});

  /// False once the enumeration is exhausted.
  bool valid() const noexcept { return valid_; }
  const Word& current() const noexcept { return current_; }
  void next();

 private:
  std::size_t length_;
  std::size_t alphabet_size_;
  std::size_t fixed_;
  std::vector<Symbol> symbols_;
  std::vector<std::size_t> used_;  // used_[i] = distinct letters in [0, i)
  Word current_;
  bool valid_ = true;

  void fill_from(std::size_t pos);
};

/// Number of canonical words of the given length (sum of Stirling numbers of
/// the second kind); a double because it is only used for cost estimates.
double count_canonical_words(std::size_t length, std::size_t alphabet_size);

}  // namespace fsdsq
