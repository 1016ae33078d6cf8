#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/rational.hpp>

#include "fsdsq/squares.hpp"
#include "fsdsq/word.hpp"

namespace fsdsq {

using Ratio = boost::rational<std::int64_t>;

enum class StepKind { Equal, Unequal };
enum class UnequalVariant { Short, Long };

std::string_view to_string(StepKind kind) noexcept;
std::string_view to_string(UnequalVariant variant) noexcept;

struct ConstructionStep {
  StepKind kind = StepKind::Equal;
  Word appended;            // letters added after the previous word
  std::size_t frontier = 0; // 1-based position of the last FS-double square
  std::string method;       // "prefix", "template", "search"
};

/// A word together with its census-verified longest run of 2's. Construction
/// metadata in `steps` is informational; T always comes from the census.
struct RunReport {
  Word word;
  Run longest_run;
  Ratio ratio{0};
  std::vector<ConstructionStep> steps;
  /// Reportable findings (bound violations); empty when everything held.
  std::vector<std::string> findings;

  std::size_t T() const noexcept { return longest_run.length; }
  std::size_t n() const noexcept { return word.size(); }
  bool bound_holds() const noexcept { return 7 * T() < n() || T() == 0; }
};

/// The last FS-double square of the run of 2's that ends the word: its
/// square SQ^2 is a suffix of the word.
struct Frontier {
  std::size_t run_start = 0;  // 1-based
  std::size_t position = 0;   // 1-based
};

/// Locates the frontier, or throws UsageError if no FS-double square's
/// square is a suffix of the word.
Frontier locate_frontier(const CensusReport& report);

RunReport ratio_report(const Word& w);

/// Appends prefix letters of the frontier square one at a time while the
/// run of 2's keeps growing. The seed must itself be SQ^2 of an FS-double
/// square at position 1. Throws UsageError when lcp(x1x2, x2x1) = 0.
RunReport extend_equal_run(const Word& seed);

/// Same, for an arbitrary word whose run of 2's ends in a suffix square.
RunReport extend_equal_at_frontier(const Word& w);

struct UnequalOptions {
  UnequalVariant variant = UnequalVariant::Short;
  std::size_t alphabet_size = 2;
  /// Longest appended string tried by the fallback search.
  std::size_t search_budget = 12;
};

/// Adds an unequal 2FS square after the frontier. Tries the template
/// c (V m V)^2 first (V = frontier square minus its first letter c, plus a
/// letter b != c; m a prefix of V, or V followed by one, for the long
/// variant), then a breadth-first search over appended strings.
RunReport extend_unequal(const Word& w, const UnequalOptions& options = {});

/// Lexicographically smallest canonical word that is SQ^2 for an FS-double
/// square at position 1, optionally with lcp(x1x2, x2x1) > 0.
Word smallest_fs_double_square(std::size_t alphabet_size, bool with_shared_prefix);

/// A word whose verified longest run of 2's is at least `target`.
RunReport build_run(std::size_t target, std::size_t alphabet_size = 2);

}  // namespace fsdsq
