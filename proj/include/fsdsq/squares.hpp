#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "fsdsq/lce.hpp"
#include "fsdsq/word.hpp"

namespace fsdsq {

/// One occurrence of a square: w[start .. start + 2 root_len - 1] (1-based).
struct SquareOccurrence {
  std::size_t start = 0;
  std::size_t root_len = 0;

  friend bool operator==(const SquareOccurrence&, const SquareOccurrence&) = default;
  friend auto operator<=>(const SquareOccurrence&, const SquareOccurrence&) = default;
};

/// A maximal block of consecutive positions with s_i = 2 (1-based start).
struct Run {
  std::size_t start = 0;
  std::size_t length = 0;

  friend bool operator==(const Run&, const Run&) = default;
};

struct CensusReport {
  Word word;
  /// s[i - 1] = number of distinct squares whose last occurrence starts at i.
  std::vector<std::uint32_t> s;
  /// Root lengths of those squares at each position, ascending.
  std::vector<std::vector<std::uint32_t>> rightmost_roots;
  std::size_t distinct_square_count = 0;
  std::vector<Run> runs_of_two;
  Run longest_run;

  std::uint32_t max_s() const noexcept;
  std::size_t length() const noexcept { return word.size(); }
};

std::vector<SquareOccurrence> enumerate_squares(const Word& w);
std::vector<SquareOccurrence> enumerate_squares(const Word& w, const LceTable& lce);

/// Square value -> 1-based start of its last occurrence.
std::map<Word, std::size_t> rightmost_map(const Word& w);

CensusReport s_sequence(const Word& w);

/// Leftmost longest run of s_i = 2; {0, 0} if there is none.
Run longest_run_of_twos(const CensusReport& report);

/// Number of consecutive positions with s_i = 2 beginning at `start` (1-based).
std::size_t run_length_from(const CensusReport& report, std::size_t start);

/// index<TAB>letter<TAB>s_i with a header row, one line per position.
std::string render_census_tsv(const CensusReport& report);

}  // namespace fsdsq
