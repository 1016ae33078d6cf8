#include "fsdsq/lce.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <stdexcept>

namespace fsdsq {

namespace {

// Prefix doubling: sorts suffixes by their first 2^k symbols for growing k.
std::vector<std::uint32_t> build_suffix_array(const Word& w) {
  const std::size_t n = w.size();
  std::vector<std::uint32_t> sa(n);
  std::vector<std::uint32_t> rank(n);
  std::vector<std::uint32_t> tmp(n);
  std::iota(sa.begin(), sa.end(), 0u);
  for (std::size_t i = 0; i < n; ++i) rank[i] = w[i];

  for (std::size_t k = 1;; k <<= 1) {
    auto key = [&](std::uint32_t i) {
      // +1 so that "past the end" sorts before every real symbol rank.
      const std::uint32_t second = i + k < n ? rank[i + k] + 1 : 0;
      return std::pair{rank[i], second};
    };
    std::sort(sa.begin(), sa.end(),
              [&](std::uint32_t a, std::uint32_t b) { return key(a) < key(b); });
    tmp[sa[0]] = 0;
    for (std::size_t r = 1; r < n; ++r) {
      tmp[sa[r]] = tmp[sa[r - 1]] + (key(sa[r - 1]) < key(sa[r]) ? 1 : 0);
    }
    rank.swap(tmp);
    if (rank[sa[n - 1]] == n - 1 || k >= n) break;
  }
  return sa;
}

}  // namespace

LceTable::LceTable(const Word& w) : n_(w.size()) {
  if (n_ == 0) return;
  sa_ = build_suffix_array(w);
  rank_.assign(n_, 0);
  for (std::size_t r = 0; r < n_; ++r) rank_[sa_[r]] = static_cast<std::uint32_t>(r);

  // Kasai.
  std::vector<std::uint32_t> lcp(n_, 0);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    const std::size_t r = rank_[i];
    if (r == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa_[r - 1];
    while (i + h < n_ && j + h < n_ && w[i + h] == w[j + h]) ++h;
    lcp[r] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }

  const std::size_t levels = std::bit_width(n_);
  sparse_.reserve(levels);
  sparse_.push_back(std::move(lcp));
  for (std::size_t k = 1; k < levels; ++k) {
    const auto& prev = sparse_.back();
    const std::size_t half = std::size_t{1} << (k - 1);
    const std::size_t len = n_ - (std::size_t{1} << k) + 1;
    std::vector<std::uint32_t> cur(len);
    for (std::size_t i = 0; i < len; ++i) {
      cur[i] = std::min(prev[i], prev[i + half]);
    }
    sparse_.push_back(std::move(cur));
  }
}

std::size_t LceTable::lce(std::size_t i, std::size_t j) const {
  if (i >= n_ || j >= n_) {
    if (i > n_ || j > n_) throw std::out_of_range("lce index out of range");
    return 0;
  }
  if (i == j) return n_ - i;
  std::size_t lo = rank_[i];
  std::size_t hi = rank_[j];
  if (lo > hi) std::swap(lo, hi);
  // min of lcp[lo + 1 .. hi]
  ++lo;
  const std::size_t k = std::bit_width(hi - lo + 1) - 1;
  return std::min(sparse_[k][lo], sparse_[k][hi + 1 - (std::size_t{1} << k)]);
}

LceTable build_lce(const Word& w) {
  if (w.empty()) throw UsageError("cannot build an LCE table for the empty word");
  return LceTable(w);
}

}  // namespace fsdsq
