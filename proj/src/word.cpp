#include "fsdsq/word.hpp"

#include <algorithm>

namespace fsdsq {

Word Word::parse(std::string_view text) {
  std::vector<Symbol> out;
  out.reserve(text.size());
  for (char c : text) {
    if (c < 'a' || c > 'z') {
      throw UsageError("invalid character '" + std::string(1, c) +
                       "' in word (expected lowercase letters a-z)");
    }
    out.push_back(static_cast<Symbol>(c - 'a'));
  }
  return Word(std::move(out));
}

std::string Word::str() const {
  std::string out;
  out.reserve(size());
  for (Symbol s : symbols_) {
    if (s >= kTextAlphabet) {
      throw UsageError("symbol code " + std::to_string(s) +
                       " has no textual letter");
    }
    out.push_back(static_cast<char>('a' + s));
  }
  return out;
}

std::size_t Word::alphabet_size() const noexcept {
  if (symbols_.empty()) return 0;
  return static_cast<std::size_t>(
             *std::max_element(symbols_.begin(), symbols_.end())) +
         1;
}

Word Word::substr(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos) {
    throw std::out_of_range("Word::substr out of range");
  }
  return Word(std::vector<Symbol>(symbols_.begin() + pos,
                                  symbols_.begin() + pos + len));
}

Word& Word::operator+=(const Word& other) {
  symbols_.insert(symbols_.end(), other.symbols_.begin(),
                  other.symbols_.end());
  return *this;
}

Word Word::pow(std::size_t k) const {
  std::vector<Symbol> out;
  out.reserve(size() * k);
  for (std::size_t i = 0; i < k; ++i) {
    out.insert(out.end(), symbols_.begin(), symbols_.end());
  }
  return Word(std::move(out));
}

namespace {

// Smallest d dividing |w| with w = (w[0..d))^(|w|/d).
std::size_t smallest_root_length(const Word& w) {
  const std::size_t n = w.size();
  const auto s = w.symbols();
  for (std::size_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    if (std::equal(s.begin() + d, s.end(), s.begin())) return d;
  }
  return n;
}

}  // namespace

bool is_primitive(const Word& w) {
  if (w.empty()) throw UsageError("empty word has no primitivity");
  return smallest_root_length(w) == w.size();
}

PrimitiveRoot primitive_root(const Word& w) {
  if (w.empty()) throw UsageError("empty word has no primitive root");
  const std::size_t d = smallest_root_length(w);
  return {w.prefix(d), w.size() / d};
}

bool are_conjugate(const Word& u, const Word& v) {
  if (u.size() != v.size()) return false;
  if (u.empty()) return true;
  const Word uu = u + u;
  const auto hay = uu.symbols();
  const auto needle = v.symbols();
  return std::search(hay.begin(), hay.end(), needle.begin(), needle.end()) !=
         hay.end();
}

std::size_t lcp(const Word& u, const Word& v) {
  const auto a = u.symbols();
  const auto b = v.symbols();
  const std::size_t m = std::min(a.size(), b.size());
  return static_cast<std::size_t>(
      std::mismatch(a.begin(), a.begin() + m, b.begin()).first - a.begin());
}

}  // namespace fsdsq
