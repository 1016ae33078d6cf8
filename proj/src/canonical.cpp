#include "fsdsq/canonical.hpp"

#include <algorithm>

namespace fsdsq {

Word canonicalize(const Word& w) {
  std::vector<int> rename(256, -1);
  std::vector<Symbol> out;
  out.reserve(w.size());
  int next = 0;
  for (Symbol s : w.symbols()) {
    if (rename[s] < 0) rename[s] = next++;
    out.push_back(static_cast<Symbol>(rename[s]));
  }
  return Word(std::move(out));
}

bool is_canonical(const Word& w) { return canonicalize(w) == w; }

CanonicalWords::CanonicalWords(std::size_t length, std::size_t alphabet_size, Word prefix)
    : length_(length), alphabet_size_(alphabet_size), fixed_(prefix.size()) {
  if (prefix.size() > length || !is_canonical(prefix) ||
      prefix.alphabet_size() > alphabet_size || (length > 0 && alphabet_size == 0)) {
    valid_ = false;
    return;
  }
  symbols_.assign(prefix.symbols().begin(), prefix.symbols().end());
  symbols_.resize(length, 0);
  used_.assign(length + 1, 0);
  for (std::size_t i = 0; i < fixed_; ++i) {
    used_[i + 1] = std::max<std::size_t>(used_[i], symbols_[i] + 1u);
  }
  fill_from(fixed_);
}

void CanonicalWords::fill_from(std::size_t pos) {
  for (std::size_t i = pos; i < length_; ++i) {
    if (i > pos) symbols_[i] = 0;
    used_[i + 1] = std::max<std::size_t>(used_[i], symbols_[i] + 1u);
  }
  current_ = Word(symbols_);
}

void CanonicalWords::next() {
  if (!valid_) return;
  for (std::size_t pos = length_; pos-- > fixed_;) {
    const std::size_t limit = std::min(alphabet_size_ - 1, used_[pos]);
    if (symbols_[pos] < limit) {
      ++symbols_[pos];
      fill_from(pos);
      return;
    }
  }
  valid_ = false;
}

double count_canonical_words(std::size_t length, std::size_t alphabet_size) {
  if (length == 0) return 1.0;
  // stirling[j] = S(n, j) for the current n.
  std::vector<double> stirling(alphabet_size + 1, 0.0);
  stirling[0] = 1.0;
  for (std::size_t n = 1; n <= length; ++n) {
    for (std::size_t j = std::min(n, alphabet_size); j >= 1; --j) {
      stirling[j] = static_cast<double>(j) * stirling[j] + stirling[j - 1];
    }
    stirling[0] = 0.0;
  }
  double total = 0.0;
  for (std::size_t j = 1; j <= alphabet_size; ++j) total += stirling[j];
  return total;
}

}  // namespace fsdsq
