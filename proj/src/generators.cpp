#include "fsdsq/generators.hpp"

#include <algorithm>

#include "fsdsq/canonical.hpp"
#include "fsdsq/fsds.hpp"
#include "fsdsq/twofs.hpp"

namespace fsdsq {

std::string_view to_string(StepKind kind) noexcept {
  return kind == StepKind::Equal ? "equal" : "unequal";
}

std::string_view to_string(UnequalVariant variant) noexcept {
  return variant == UnequalVariant::Short ? "short" : "long";
}

Frontier locate_frontier(const CensusReport& report) {
  const std::size_t n = report.s.size();
  for (std::size_t i = n; i >= 1; --i) {
    if (report.s[i - 1] != 2) continue;
    const std::size_t long_root = report.rightmost_roots[i - 1].back();
    if (i - 1 + 2 * long_root != n) continue;
    std::size_t start = i;
    while (start > 1 && report.s[start - 2] == 2) --start;
    return {start, i};
  }
  throw UsageError("word does not end with the square of an FS-double square");
}

RunReport ratio_report(const Word& w) {
  const auto census = s_sequence(w);
  RunReport report;
  report.word = w;
  report.longest_run = census.longest_run;
  if (!w.empty()) {
    report.ratio = Ratio(static_cast<std::int64_t>(report.T()),
                         static_cast<std::int64_t>(w.size()));
  }
  if (!report.bound_holds()) {
    report.findings.push_back("7T >= n with T = " + std::to_string(report.T()) +
                              ", n = " + std::to_string(w.size()));
  }
  return report;
}

namespace {

FsDoubleSquare fs_at(const CensusReport& census, std::size_t position) {
  for (auto& fs : find_fs_double_squares(census)) {
    if (fs.position == position) return fs;
  }
  throw UsageError("no FS-double square at position " + std::to_string(position));
}

std::size_t shared_prefix(const Factorization& f) {
  return lcp(f.period(), f.x2 + f.x1);
}

RunReport finish(const Word& w, std::vector<ConstructionStep> steps,
                 std::vector<std::string> findings) {
  RunReport report = ratio_report(w);
  report.steps = std::move(steps);
  report.findings.insert(report.findings.begin(), findings.begin(), findings.end());
  return report;
}

}  // namespace

RunReport extend_equal_at_frontier(const Word& w) {
  const auto census = s_sequence(w);
  const Frontier fr = locate_frontier(census);
  const auto fs = fs_at(census, fr.position);
  const auto& f = fs.factorization;
  const std::size_t shared = shared_prefix(f);
  if (shared == 0) {
    throw UsageError("no equal extension: lcp(x1x2, x2x1) = 0");
  }

  const Word square = w.substr(fr.position - 1, w.size() - fr.position + 1);
  const std::size_t base = fr.position - fr.run_start + 1;
  std::size_t achieved = 0;
  for (std::size_t j = 1; j < square.size(); ++j) {
    const auto next = s_sequence(w + square.prefix(j));
    if (run_length_from(next, fr.run_start) < base + j) break;
    achieved = j;
  }

  std::vector<ConstructionStep> steps;
  std::vector<std::string> findings;
  if (achieved > 0) {
    steps.push_back({StepKind::Equal, square.prefix(achieved), fr.position + achieved,
                     "prefix"});
  }
  const std::size_t ceiling = f.p1 == f.p2 ? std::min(shared, f.x1.size() - 1) : shared;
  if (achieved > ceiling) {
    findings.push_back("equal extension of " + std::to_string(achieved) +
                       " exceeds ceiling " + std::to_string(ceiling));
  }
  return finish(w + square.prefix(achieved), std::move(steps), std::move(findings));
}

RunReport extend_equal_run(const Word& seed) {
  const auto census = s_sequence(seed);
  if (census.s.empty() || census.s[0] != 2 ||
      2 * census.rightmost_roots[0].back() != seed.size()) {
    throw UsageError("seed must be SQ^2 of an FS-double square at position 1");
  }
  return extend_equal_at_frontier(seed);
}

RunReport extend_unequal(const Word& w, const UnequalOptions& options) {
  const std::size_t alphabet = std::max(options.alphabet_size, w.alphabet_size());
  if (alphabet < 2) {
    throw UsageError("unequal extension needs an alphabet of at least two letters");
  }
  const auto census = s_sequence(w);
  const Frontier fr = locate_frontier(census);
  const std::size_t pos = fr.position;
  const std::size_t needed = pos - fr.run_start + 2;

  auto accepted = [&](const Word& candidate) {
    const auto next = s_sequence(candidate);
    if (run_length_from(next, fr.run_start) < needed) return false;
    const auto& first = next.rightmost_roots[pos - 1];
    const auto& second = next.rightmost_roots[pos];
    return first.back() < second.front();
  };

  const Symbol c = w[pos - 1];
  const Symbol b = c == 0 ? 1 : 0;
  Word V = w.substr(pos, w.size() - pos);
  V.push_back(b);

  std::string method;
  Word result;
  for (std::size_t len = 1; len < V.size() && method.empty(); ++len) {
    const Word middle = options.variant == UnequalVariant::Short ? V.prefix(len)
                                                                 : V + V.prefix(len);
    const Word candidate = w.prefix(pos) + (V + middle + V).pow(2);
    if (accepted(candidate)) {
      method = "template";
      result = candidate;
    }
  }

  // Breadth-first over appended strings, shortest first, then lexicographic.
  for (std::size_t len = 1; len <= options.search_budget && method.empty(); ++len) {
    std::vector<Symbol> tail(len, 0);
    while (true) {
      const Word candidate = w + Word(tail);
      if (accepted(candidate)) {
        method = "search";
        result = candidate;
        break;
      }
      std::size_t k = len;
      while (k > 0 && tail[k - 1] + 1u == alphabet) tail[--k] = 0;
      if (k == 0) break;
      ++tail[k - 1];
    }
  }
  if (method.empty()) {
    throw Finding("unequal_extension", w.str(),
                  "no unequal extension found within budget " +
                      std::to_string(options.search_budget));
  }

  const auto after = s_sequence(result);
  std::vector<std::string> findings;
  const std::size_t SQ1 = after.rightmost_roots[pos - 1].back();
  const std::size_t SQ2 = after.rightmost_roots[pos].back();
  if (SQ2 <= 2 * SQ1) {
    findings.push_back("|SQ2| = " + std::to_string(SQ2) + " <= 2|SQ1| = " +
                       std::to_string(2 * SQ1));
  }
  std::vector<ConstructionStep> steps{{StepKind::Unequal,
                                       result.suffix(result.size() - w.size()), pos + 1,
                                       method}};
  return finish(result, std::move(steps), std::move(findings));
}

Word smallest_fs_double_square(std::size_t alphabet_size, bool with_shared_prefix) {
  constexpr std::size_t kMaxLength = 40;
  for (std::size_t n = 2; n <= kMaxLength; n += 2) {
    for (CanonicalWords it(n, alphabet_size); it.valid(); it.next()) {
      const Word& w = it.current();
      const auto census = s_sequence(w);
      if (census.s[0] != 2 || 2 * census.rightmost_roots[0].back() != n) continue;
      if (with_shared_prefix && shared_prefix(fs_at(census, 1).factorization) == 0) {
        continue;
      }
      return w;
    }
  }
  throw UsageError("no FS-double square over " + std::to_string(alphabet_size) +
                   " letters up to length " + std::to_string(kMaxLength));
}

RunReport build_run(std::size_t target, std::size_t alphabet_size) {
  if (target == 0) throw UsageError("target must be positive");
  Word w = smallest_fs_double_square(alphabet_size, target > 1);
  std::vector<ConstructionStep> steps;
  std::vector<std::string> findings;
  RunReport current = ratio_report(w);

  auto absorb = [&](RunReport&& step) {
    w = step.word;
    steps.insert(steps.end(), step.steps.begin(), step.steps.end());
    findings.insert(findings.end(), step.findings.begin(), step.findings.end());
    current = std::move(step);
  };

  while (current.T() < target) {
    const auto census = s_sequence(w);
    const Frontier fr = locate_frontier(census);
    if (shared_prefix(fs_at(census, fr.position).factorization) > 0) {
      absorb(extend_equal_at_frontier(w));
      if (current.T() >= target) break;
    }
    UnequalOptions options;
    options.alphabet_size = alphabet_size;
    absorb(extend_unequal(w, options));
  }

  // Per-step ratio findings are superseded by the final word's.
  std::erase_if(findings, [](const std::string& f) { return f.starts_with("7T >= n"); });
  return finish(w, std::move(steps), std::move(findings));
}

}  // namespace fsdsq
