#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "fsdsq/generators.hpp"
#include "fsdsq/word.hpp"

namespace fsdsq {

/// Names of the per-word property checks a sweep can run.
const std::vector<std::string>& known_properties();

struct SweepConfig {
  std::size_t alphabet_size = 2;
  std::size_t max_len = 10;
  /// Empty selects every known property.
  std::set<std::string> properties;
  std::optional<std::filesystem::path> checkpoint_path;
  std::size_t jobs = 1;
  /// Length of the canonical prefixes that partition the work; 0 = automatic.
  std::size_t prefix_len = 0;
  bool override_ceiling = false;
  /// Stop after this many newly completed blocks (simulates an interrupted
  /// run); the report is then marked incomplete.
  std::optional<std::size_t> stop_after_blocks;
};

/// Exact aggregates over all canonical words of one length.
struct LengthStats {
  std::uint64_t words = 0;
  std::uint64_t max_distinct = 0;
  std::uint32_t max_s = 0;
  std::uint64_t max_T = 0;
  Word max_T_witness;  // lexicographically smallest word attaining max_T
  std::uint64_t fs_positions = 0;   // positions with s_i = 2
  std::uint64_t factorized = 0;     // of those, with a verified factorization
  std::uint64_t twofs_equal = 0;
  std::uint64_t twofs_unequal = 0;
  std::map<std::string, std::uint64_t> mates;  // k = 2 mate labels
  std::uint64_t equal_blocks = 0;              // >= 2 equal-length FS squares in a row
  std::uint64_t location_bound_exceeded = 0;
  std::uint64_t location_bound_attained = 0;
  std::uint64_t extension_bound_exceeded = 0;  // measured - 1 > extension ceiling
  std::uint64_t extension_bound_attained = 0;

  void merge(const LengthStats& other);
  friend bool operator==(const LengthStats&, const LengthStats&) = default;
};

struct SweepFinding {
  std::string property;
  std::string word;
  std::string detail;

  friend bool operator==(const SweepFinding&, const SweepFinding&) = default;
  friend auto operator<=>(const SweepFinding&, const SweepFinding&) = default;
};

/// Aggregates over a set of blocks; merging is associative and commutative.
struct PartialReport {
  std::map<std::size_t, LengthStats> per_length;
  std::vector<SweepFinding> findings;

  void merge(const PartialReport& other);
  friend bool operator==(const PartialReport&, const PartialReport&) = default;
};

struct SweepReport {
  SweepConfig config;
  std::size_t prefix_len = 0;
  std::size_t blocks_total = 0;
  std::size_t blocks_done = 0;
  bool complete = false;
  PartialReport totals;
  double elapsed_seconds = 0.0;

  /// Smallest length at which each run length T first occurs, with witness.
  std::map<std::uint64_t, std::pair<std::size_t, Word>> min_length_per_T() const;
};

/// Estimated work of a sweep: sum over lengths of (canonical words) * n^2.
double sweep_cost(std::size_t alphabet_size, std::size_t max_len);

/// Default ceiling: the cost of a binary sweep to length 18, or of a ternary
/// sweep to length 12 for three letters. The FSDSQ_COST_CEILING environment
/// variable replaces it for every alphabet.
double cost_ceiling(std::size_t alphabet_size = 2);

/// Censuses every canonical word of length 1..max_len and checks the
/// selected properties. Throws UsageError for an invalid config or a cost
/// above the ceiling without override, std::runtime_error on checkpoint I/O.
SweepReport exhaustive_verify(const SweepConfig& config);

/// Checks one word against the selected properties, accumulating into
/// `stats` and `findings`.
void verify_word(const Word& w, const std::set<std::string>& properties,
                 LengthStats& stats, std::vector<SweepFinding>& findings);

struct Minimal2Fs {
  std::optional<std::size_t> length;
  Word witness;
};

/// Smallest n <= cap having a word with s_i = s_{i+1} = 2 for some i, and the
/// lexicographically smallest canonical such word.
Minimal2Fs minimal_2fs_length(std::size_t alphabet_size, std::size_t cap,
                              bool override_ceiling = false);

struct ExtremalRow {
  std::size_t n = 0;
  std::uint64_t max_T = 0;
  Ratio best_ratio{0};
  Word witness;
};

struct ExtremalTable {
  std::vector<ExtremalRow> rows;
  std::vector<SweepFinding> findings;  // lengths with 7 T >= n
};

ExtremalTable extremal_ratio(std::size_t alphabet_size, std::size_t max_len,
                             std::size_t jobs = 1, bool override_ceiling = false);

}  // namespace fsdsq
