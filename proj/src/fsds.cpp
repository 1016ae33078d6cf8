#include "fsdsq/fsds.hpp"

#include <algorithm>
#include <string>

namespace fsdsq {

std::string_view to_string(MateLabel label) noexcept {
  switch (label) {
    case MateLabel::Alpha: return "alpha";
    case MateLabel::Beta: return "beta";
    case MateLabel::Gamma: return "gamma";
    case MateLabel::Delta: return "delta";
    case MateLabel::Epsilon: return "epsilon";
  }
  return "?";
}

namespace {

bool starts_with(const Word& w, const Word& prefix) {
  return prefix.size() <= w.size() && lcp(w, prefix) == prefix.size();
}

}  // namespace

Factorization canonical_factorization(const Word& sq, const Word& SQ) {
  if (sq.empty() || sq.size() >= SQ.size() || !starts_with(SQ, sq)) {
    throw UsageError("short root must be a proper prefix of the long root");
  }
  if (SQ.size() >= 2 * sq.size()) {
    throw UsageError("roots are not balanced (|SQ| >= 2|sq|)");
  }
  const std::size_t d = SQ.size() - sq.size();
  const auto [period, p2] = primitive_root(SQ.suffix(d));
  const std::size_t x1_len = sq.size() % period.size();
  if (x1_len == 0) throw UsageError("no two-squares factorization");

  Factorization f;
  f.x1 = sq.prefix(x1_len);
  f.x2 = period.substr(x1_len, period.size() - x1_len);
  f.p1 = (sq.size() - x1_len) / period.size();
  f.p2 = p2;
  if (f.short_root() != sq || f.long_root() != SQ) {
    throw UsageError("not an FS-double square shape");
  }
  return f;
}

std::vector<FsDoubleSquare> find_fs_double_squares(const CensusReport& report) {
  std::vector<FsDoubleSquare> out;
  const Word& w = report.word;
  const std::string text = w.alphabet_size() <= kTextAlphabet ? w.str() : "";
  for (std::size_t i = 0; i < report.s.size(); ++i) {
    if (report.s[i] > 2) {
      throw Finding("s_i<=2", text,
                    std::to_string(report.s[i]) + " rightmost squares at position " +
                        std::to_string(i + 1));
    }
    if (report.s[i] != 2) continue;
    const auto& roots = report.rightmost_roots[i];
    const Word sq = w.substr(i, roots[0]);
    const Word SQ = w.substr(i, roots[1]);
    FsDoubleSquare fs{i + 1, roots[0], roots[1], {}};
    const std::string where = "position " + std::to_string(i + 1);
    try {
      fs.factorization = canonical_factorization(sq, SQ);
    } catch (const UsageError& e) {
      throw Finding("factorization", text, where + ": " + e.what());
    }
    const auto& f = fs.factorization;
    if (!(f.p1 >= f.p2 && f.p2 >= 1)) {
      throw Finding("factorization", text, where + ": p1 >= p2 >= 1 violated");
    }
    if (!is_primitive(f.period())) {
      throw Finding("factorization", text, where + ": x1x2 not primitive");
    }
    if (!is_primitive(SQ)) {
      throw Finding("primitivity", text, where + ": SQ not primitive");
    }
    if (f.p1 > 1 && !is_primitive(sq)) {
      throw Finding("primitivity", text, where + ": sq not primitive with p1 > 1");
    }
    out.push_back(std::move(fs));
  }
  return out;
}

std::vector<FsDoubleSquare> find_fs_double_squares(const Word& w) {
  return find_fs_double_squares(s_sequence(w));
}

std::size_t epsilon_threshold(const Factorization& f) {
  const Word period = f.period();
  return (f.p1 - 1) * period.size() + lcp(period, f.x2 + f.x1);
}

namespace {

// s . x2 x1 (x1 x2)^(p1 + p2 - 1) x1 is a prefix of sq_k for a suffix s of x1.
bool delta_suffix_condition(const Factorization& f, const Word& sq_k) {
  const Word tail = f.x2 + f.x1 + f.period().pow(f.p1 + f.p2 - 1) + f.x1;
  for (std::size_t len = 0; len <= f.x1.size(); ++len) {
    if (starts_with(sq_k, f.x1.suffix(len) + tail)) return true;
  }
  return false;
}

// s (x1 x2)^i x1 (x1 x2)^(p1 + p2 - 1) x1 is a proper non-empty prefix of sq_k
// for a suffix s of x1 x2 and some i >= 1.
bool delta_power_condition(const Factorization& f, const Word& sq_k) {
  const Word period = f.period();
  const Word tail = f.x1 + period.pow(f.p1 + f.p2 - 1) + f.x1;
  for (std::size_t len = 0; len <= period.size(); ++len) {
    Word candidate = period.suffix(len) + period + tail;
    for (std::size_t i = 1; candidate.size() < sq_k.size(); ++i) {
      if (starts_with(sq_k, candidate)) return true;
      candidate = period.suffix(len) + period.pow(i + 1) + tail;
    }
  }
  return false;
}

}  // namespace

MateVerdict classify_mate(const Word& w, const FsDoubleSquare& first,
                          const FsDoubleSquare& second) {
  if (second.position <= first.position) {
    throw UsageError("mate must start after the first FS-double square");
  }
  const auto& f = first.factorization;
  MateVerdict verdict;
  verdict.epsilon_threshold = epsilon_threshold(f);
  const std::size_t offset = second.position - first.position;
  verdict.beyond_threshold = offset > verdict.epsilon_threshold;

  const std::size_t sq1 = first.short_root_len, SQ1 = first.long_root_len;
  const std::size_t sqk = second.short_root_len, SQk = second.long_root_len;
  if (SQ1 == SQk && sq1 == sqk) {
    verdict.label = MateLabel::Alpha;
    return verdict;
  }
  if (sq1 < sqk && SQ1 == SQk) {
    verdict.label = MateLabel::Beta;
    return verdict;
  }
  if (offset < f.p1 * f.period().size() && sqk == SQ1) {
    verdict.label = MateLabel::Gamma;
    return verdict;
  }
  if (sqk > SQ1) {
    const Word sq_k = w.substr(second.position - 1, sqk);
    if (delta_suffix_condition(f, sq_k)) {
      verdict.label = MateLabel::Delta;
      return verdict;
    }
    if (delta_power_condition(f, sq_k)) {
      verdict.label = MateLabel::Delta;
      verdict.via_nontrivial_prefix = true;
      return verdict;
    }
  }
  // The start threshold only decides pairs that no length/prefix rule
  // covers; with lcp(x1x2, x2x1) = 0 it is 0 and would otherwise swallow
  // adjacent delta mates.
  if (verdict.beyond_threshold) {
    verdict.label = MateLabel::Epsilon;
    return verdict;
  }
  throw Finding("mate", w.str(),
                "unclassifiable pair at positions " + std::to_string(first.position) +
                    " and " + std::to_string(second.position));
}

}  // namespace fsdsq
