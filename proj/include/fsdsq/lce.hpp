#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "fsdsq/word.hpp"

namespace fsdsq {

/// Longest-common-extension oracle over one word.
///
/// Built from a suffix array, its Kasai LCP array and a sparse table for
/// range minimum queries: O(n log n) construction, O(1) per query, exact.
/// Indices are 0-based; lce(i, j) is the length of the longest common prefix
/// of the suffixes starting at i and j, and lce(i, i) = n - i.
class LceTable {
 public:
  LceTable() = default;
  explicit LceTable(const Word& w);

  std::size_t lce(std::size_t i, std::size_t j) const;
  std::size_t size() const noexcept { return n_; }

  const std::vector<std::uint32_t>& suffix_array() const noexcept {
    return sa_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> rank_;
  // sparse_[k][i] = min(lcp_[i .. i + 2^k)); level 0 is the LCP array, where
  // lcp_[r] is the LCP of suffixes sa_[r - 1] and sa_[r].
  std::vector<std::vector<std::uint32_t>> sparse_;
};

LceTable build_lce(const Word& w);

}  // namespace fsdsq
