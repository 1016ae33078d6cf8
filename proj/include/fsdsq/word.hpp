#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fsdsq/errors.hpp"

namespace fsdsq {

using Symbol = std::uint8_t;

/// Letters usable in the textual encoding ('a' = 0 ... 'z' = 25).
inline constexpr std::size_t kTextAlphabet = 26;

/// A finite word over an indexed alphabet. Indexing is 0-based internally;
/// everything reported to the outside world uses 1-based positions.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {}

  /// Parses lowercase letters. Throws UsageError on any other character.
  static Word parse(std::string_view text);

  /// Textual form; throws UsageError if a symbol has no letter.
  std::string str() const;

  std::size_t size() const noexcept { return symbols_.size(); }
  bool empty() const noexcept { return symbols_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return symbols_[i]; }
  std::span<const Symbol> symbols() const noexcept { return symbols_; }

  /// Smallest alphabet containing every symbol (max code + 1; 0 if empty).
  std::size_t alphabet_size() const noexcept;

  Word substr(std::size_t pos, std::size_t len) const;
  Word prefix(std::size_t len) const { return substr(0, len); }
  Word suffix(std::size_t len) const { return substr(size() - len, len); }

  void push_back(Symbol s) { symbols_.push_back(s); }
  Word& operator+=(const Word& other);
  friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

  /// this^k (empty for k = 0).
  Word pow(std::size_t k) const;

  friend bool operator==(const Word&, const Word&) = default;
  friend auto operator<=>(const Word&, const Word&) = default;

 private:
  std::vector<Symbol> symbols_;
};

struct PrimitiveRoot {
  Word root;
  std::size_t exponent = 0;
};

bool is_primitive(const Word& w);
PrimitiveRoot primitive_root(const Word& w);
bool are_conjugate(const Word& u, const Word& v);
std::size_t lcp(const Word& u, const Word& v);

}  // namespace fsdsq
