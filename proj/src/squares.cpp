#include "fsdsq/squares.hpp"

#include <algorithm>
#include <sstream>

namespace fsdsq {

std::uint32_t CensusReport::max_s() const noexcept {
  return s.empty() ? 0 : *std::max_element(s.begin(), s.end());
}

std::vector<SquareOccurrence> enumerate_squares(const Word& w,
                                                const LceTable& lce) {
  std::vector<SquareOccurrence> out;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t p = 1; i + 2 * p <= n; ++p) {
      if (lce.lce(i, i + p) >= p) out.push_back({i + 1, p});
    }
  }
  return out;
}

std::vector<SquareOccurrence> enumerate_squares(const Word& w) {
  if (w.empty()) return {};
  return enumerate_squares(w, LceTable(w));
}

namespace {

// reach[i] = longest factor starting at i that occurs again further right,
// i.e. max over j > i of lce(i, j).
std::vector<std::size_t> later_reach(const LceTable& lce) {
  const std::size_t n = lce.size();
  std::vector<std::size_t> reach(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    std::size_t best = 0;
    for (std::size_t j = i + 1; j < n && best < n - j; ++j) {
      best = std::max(best, lce.lce(i, j));
    }
    reach[i] = best;
  }
  return reach;
}

}  // namespace

std::map<Word, std::size_t> rightmost_map(const Word& w) {
  std::map<Word, std::size_t> out;
  if (w.empty()) return out;
  const LceTable lce(w);
  const auto reach = later_reach(lce);
  for (const auto& occ : enumerate_squares(w, lce)) {
    if (2 * occ.root_len > reach[occ.start - 1]) {
      out.emplace(w.substr(occ.start - 1, 2 * occ.root_len), occ.start);
    }
  }
  return out;
}

CensusReport s_sequence(const Word& w) {
  CensusReport report;
  report.word = w;
  const std::size_t n = w.size();
  report.s.assign(n, 0);
  report.rightmost_roots.assign(n, {});
  if (n == 0) return report;

  const LceTable lce(w);
  const auto reach = later_reach(lce);
  // An occurrence is the last one of its value iff the value does not
  // reappear to the right, i.e. iff its length exceeds reach[i]. Each
  // distinct square therefore contributes exactly once.
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t min_root = reach[i] / 2 + 1;
    for (std::size_t p = min_root; i + 2 * p <= n; ++p) {
      if (lce.lce(i, i + p) >= p) {
        ++report.s[i];
        report.rightmost_roots[i].push_back(static_cast<std::uint32_t>(p));
      }
    }
    report.distinct_square_count += report.s[i];
  }

  for (std::size_t i = 0; i < n;) {
    if (report.s[i] != 2) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < n && report.s[j] == 2) ++j;
    report.runs_of_two.push_back({i + 1, j - i});
    i = j;
  }
  report.longest_run = longest_run_of_twos(report);
  return report;
}

Run longest_run_of_twos(const CensusReport& report) {
  Run best;
  const auto& s = report.s;
  for (std::size_t i = 0; i < s.size();) {
    if (s[i] != 2) {
      ++i;
      continue;
    }
    std::size_t j = i;
    while (j < s.size() && s[j] == 2) ++j;
    if (j - i > best.length) best = {i + 1, j - i};
    i = j;
  }
  return best;
}

std::size_t run_length_from(const CensusReport& report, std::size_t start) {
  std::size_t k = 0;
  while (start + k - 1 < report.s.size() && report.s[start + k - 1] == 2) ++k;
  return k;
}

std::string render_census_tsv(const CensusReport& report) {
  std::ostringstream out;
  out << "index\tletter\ts_i\n";
  const std::string text = report.word.str();
  for (std::size_t i = 0; i < report.s.size(); ++i) {
    out << (i + 1) << '\t' << text[i] << '\t' << report.s[i] << '\n';
  }
  return out.str();
}

}  // namespace fsdsq
