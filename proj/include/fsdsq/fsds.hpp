#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "fsdsq/squares.hpp"
#include "fsdsq/word.hpp"

namespace fsdsq {

/// sq = (x1 x2)^p1 x1 and SQ = (x1 x2)^p1 x1 (x1 x2)^p2 with x1 x2 primitive,
/// x1 and x2 non-empty and p1 >= p2 >= 1.
struct Factorization {
  Word x1;
  Word x2;
  std::size_t p1 = 0;
  std::size_t p2 = 0;

  Word period() const { return x1 + x2; }
  Word short_root() const { return period().pow(p1) + x1; }
  Word long_root() const { return short_root() + period().pow(p2); }

  friend bool operator==(const Factorization&, const Factorization&) = default;
};

/// The two rightmost squares sq^2 and SQ^2 starting at one position.
struct FsDoubleSquare {
  std::size_t position = 0;  // 1-based
  std::size_t short_root_len = 0;
  std::size_t long_root_len = 0;
  Factorization factorization;

  friend bool operator==(const FsDoubleSquare&, const FsDoubleSquare&) = default;
};

enum class MateLabel { Alpha, Beta, Gamma, Delta, Epsilon };

std::string_view to_string(MateLabel label) noexcept;

struct MateVerdict {
  MateLabel label = MateLabel::Alpha;
  /// Set when Delta was decided by the "non-trivial prefix" condition, whose
  /// reading (proper and non-empty) is an interpretation.
  bool via_nontrivial_prefix = false;
  /// Offset threshold (p1 - 1)|x1 x2| + lcp(x1 x2, x2 x1) of the first square.
  std::size_t epsilon_threshold = 0;
  /// Offset between the two positions exceeds epsilon_threshold.
  bool beyond_threshold = false;
};

/// Recovers (x1, x2, p1, p2) from the two roots. `sq` must be a proper prefix
/// of `SQ` with |sq| < |SQ| < 2|sq|. Throws UsageError when the roots do not
/// have the two-squares shape.
Factorization canonical_factorization(const Word& sq, const Word& SQ);

/// One entry per position with s_i = 2, in increasing position order.
/// Throws Finding if such a position has more than two rightmost squares or
/// its roots fail any structural invariant.
std::vector<FsDoubleSquare> find_fs_double_squares(const CensusReport& report);
std::vector<FsDoubleSquare> find_fs_double_squares(const Word& w);

/// Offset beyond which a pair that no length or prefix rule covers is an
/// epsilon mate.
std::size_t epsilon_threshold(const Factorization& f);

/// Labels `second` relative to `first`; both must come from `w` and
/// second.position > first.position. Alpha..Delta are tested first by their
/// length and prefix rules; a pair none of them covers is Epsilon when it
/// starts beyond the threshold. Throws Finding otherwise.
MateVerdict classify_mate(const Word& w, const FsDoubleSquare& first,
                          const FsDoubleSquare& second);

}  // namespace fsdsq
