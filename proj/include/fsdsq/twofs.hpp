#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fsdsq/fsds.hpp"

namespace fsdsq {

enum class TwoFsKind { Equal, Unequal };

std::string_view to_string(TwoFsKind kind) noexcept;

struct Check {
  std::string name;
  bool pass = false;

  friend bool operator==(const Check&, const Check&) = default;
};

/// Two FS-double squares at adjacent positions.
struct TwoFsClassification {
  std::size_t position = 0;  // 1-based start of `first`
  TwoFsKind kind = TwoFsKind::Equal;
  FsDoubleSquare first;
  FsDoubleSquare second;
  /// Length-ordering case number, 1-11 infeasible, 12 equal, 13 unequal.
  int ordering_case = 0;
  std::optional<MateVerdict> mate;
  std::vector<Check> checks;

  bool all_checks_pass() const noexcept;
};

/// Case number of the ordering of (|sq1|, |SQ1|, |sq2|, |SQ2|) in the
/// 13-row feasibility tables, or 0 when it matches none of them.
int ordering_case(std::size_t sq1, std::size_t SQ1, std::size_t sq2, std::size_t SQ2);

/// Human-readable condition of a case, e.g. "|sq1| < |SQ1| < |sq2| < |SQ2|".
std::string_view ordering_case_condition(int case_number) noexcept;

/// Every adjacent pair of FS-double-square positions, classified and checked.
/// Throws Finding("twofs_shape", ...) for an ordering other than cases 12/13.
std::vector<TwoFsClassification> find_2fs(const CensusReport& report,
                                          const std::vector<FsDoubleSquare>& fs);
std::vector<TwoFsClassification> find_2fs(const Word& w);

std::vector<Check> check_equal_2fs(const Word& w, const TwoFsClassification& c);
std::vector<Check> check_unequal_2fs(const Word& w, const TwoFsClassification& c);

/// Length of a block of consecutive equal-length FS-double squares set
/// against the two known ceilings on it.
struct EqualRunBounds {
  std::size_t position = 0;
  std::size_t measured = 0;       // number of locations in the block
  std::size_t location_bound = 0; // min(lcp + 1, |x1|) or lcp + 1
  std::size_t extension_bound = 0;// min(lcp, |x1| - 1) or lcp
};

/// One entry per maximal block of consecutive FS-double squares whose long
/// roots have equal length (blocks of a single location included).
std::vector<EqualRunBounds> equal_run_bounds(const std::vector<FsDoubleSquare>& fs);

}  // namespace fsdsq
