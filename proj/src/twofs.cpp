#include "fsdsq/twofs.hpp"

#include <algorithm>
#include <array>
#include <functional>

namespace fsdsq {

std::string_view to_string(TwoFsKind kind) noexcept {
  return kind == TwoFsKind::Equal ? "equal" : "unequal";
}

bool TwoFsClassification::all_checks_pass() const noexcept {
  return std::all_of(checks.begin(), checks.end(),
                     [](const Check& c) { return c.pass; });
}

namespace {

struct OrderingRow {
  std::string_view condition;
  bool (*matches)(std::size_t s1, std::size_t S1, std::size_t s2, std::size_t S2);
};

// Rows 1-11 are the infeasible orderings, 12 and 13 the feasible ones.
constexpr std::array<OrderingRow, 13> kOrderings{{
    {"|sq1| < |sq2| < |SQ1| = |SQ2|",
     [](auto s1, auto S1, auto s2, auto S2) { return s1 < s2 && s2 < S1 && S1 == S2; }},
    {"|sq2| < |sq1| < |SQ1| = |SQ2|",
     [](auto s1, auto S1, auto s2, auto S2) { return s2 < s1 && s1 < S1 && S1 == S2; }},
    {"|sq1| = |sq2| < |SQ1| < |SQ2|",
     [](auto s1, auto S1, auto s2, auto S2) { return s1 == s2 && s2 < S1 && S1 < S2; }},
    {"|sq1| = |sq2| < |SQ2| < |SQ1|",
     [](auto s1, auto S1, auto s2, auto S2) { return s1 == s2 && s2 < S2 && S2 < S1; }},
    {"|sq2| < |sq1| = |SQ2| < |SQ1|",
     [](auto s1, auto S1, auto s2, auto S2) { return s2 < s1 && s1 == S2 && S2 < S1; }},
    {"|sq2| < |sq1| < |SQ2| < |SQ1|",
     [](auto s1, auto S1, auto s2, auto S2) { return s2 < s1 && s1 < S2 && S2 < S1; }},
    {"|sq2| < |SQ2| < |sq1| < |SQ1|",
     [](auto s1, auto S1, auto s2, auto S2) { return s2 < S2 && S2 < s1 && s1 < S1; }},
    {"|sq2| < |sq1| < |SQ1| < |SQ2|",
     [](auto s1, auto S1, auto s2, auto S2) { return s2 < s1 && s1 < S1 && S1 < S2; }},
    {"|sq1| < |sq2| < |SQ2| < |SQ1|",
     [](auto s1, auto S1, auto s2, auto S2) { return s1 < s2 && s2 < S2 && S2 < S1; }},
    {"|sq1| < |SQ1| = |sq2| < |SQ2|",
     [](auto s1, auto S1, auto s2, auto S2) { return s1 < S1 && S1 == s2 && s2 < S2; }},
    {"|sq1| < |sq2| < |SQ1| < |SQ2|",
     [](auto s1, auto S1, auto s2, auto S2) { return s1 < s2 && s2 < S1 && S1 < S2; }},
    {"|sq1| = |sq2| < |SQ1| = |SQ2|",
     [](auto s1, auto S1, auto s2, auto S2) { return s1 == s2 && s2 < S1 && S1 == S2; }},
    {"|sq1| < |SQ1| < |sq2| < |SQ2|",
     [](auto s1, auto S1, auto s2, auto S2) { return s1 < S1 && S1 < s2 && s2 < S2; }},
}};

constexpr int kEqualCase = 12;
constexpr int kUnequalCase = 13;

}  // namespace

int ordering_case(std::size_t sq1, std::size_t SQ1, std::size_t sq2, std::size_t SQ2) {
  for (std::size_t i = 0; i < kOrderings.size(); ++i) {
    if (kOrderings[i].matches(sq1, SQ1, sq2, SQ2)) return static_cast<int>(i) + 1;
  }
  return 0;
}

std::string_view ordering_case_condition(int case_number) noexcept {
  if (case_number < 1 || case_number > static_cast<int>(kOrderings.size())) {
    return "unlisted ordering";
  }
  return kOrderings[static_cast<std::size_t>(case_number) - 1].condition;
}

std::vector<Check> check_equal_2fs(const Word& w, const TwoFsClassification& c) {
  if (c.kind != TwoFsKind::Equal) {
    throw UsageError("check_equal_2fs needs an equal 2FS square");
  }
  const auto& a = c.first;
  const auto& b = c.second;
  const Word SQ1 = w.substr(a.position - 1, a.long_root_len);
  const Word SQ2 = w.substr(b.position - 1, b.long_root_len);
  const Word sq1 = w.substr(a.position - 1, a.short_root_len);
  const Word sq2 = w.substr(b.position - 1, b.short_root_len);
  const Word letter = w.substr(a.position - 1, 1);

  auto shifted = [&](const Word& u, const Word& v) {
    return u + letter == letter + v && u + u + letter == letter + v + v;
  };
  const auto& f = a.factorization;
  return {
      {"SQ_squares_conjugate", are_conjugate(SQ1 + SQ1, SQ2 + SQ2)},
      {"sq_squares_conjugate", are_conjugate(sq1 + sq1, sq2 + sq2)},
      {"shift_relation", shifted(SQ1, SQ2) && shifted(sq1, sq2)},
      {"lcp_x1_x2_nonempty", lcp(f.x1, f.x2) > 0},
  };
}

std::vector<Check> check_unequal_2fs(const Word&, const TwoFsClassification& c) {
  if (c.kind != TwoFsKind::Unequal) {
    throw UsageError("check_unequal_2fs needs an unequal 2FS square");
  }
  const auto& a = c.first;
  const auto& b = c.second;
  const auto& f = a.factorization;
  const std::size_t period1 = f.period().size();
  const std::size_t period2 = b.factorization.period().size();
  return {
      {"sq2_length_bound",
       b.short_root_len >= a.long_root_len + a.short_root_len + (f.p2 - 1) * period1},
      {"period_grows", period2 > period1},
      {"SQ_more_than_doubles", b.long_root_len > 2 * a.long_root_len},
      {"sq2_exceeds_SQ1_plus_sq1", b.short_root_len > a.long_root_len + a.short_root_len},
  };
}

std::vector<TwoFsClassification> find_2fs(const CensusReport& report,
                                          const std::vector<FsDoubleSquare>& fs) {
  std::vector<TwoFsClassification> out;
  const Word& w = report.word;
  for (std::size_t k = 0; k + 1 < fs.size(); ++k) {
    if (fs[k + 1].position != fs[k].position + 1) continue;
    TwoFsClassification c;
    c.position = fs[k].position;
    c.first = fs[k];
    c.second = fs[k + 1];
    const std::size_t s1 = c.first.short_root_len, S1 = c.first.long_root_len;
    const std::size_t s2 = c.second.short_root_len, S2 = c.second.long_root_len;
    c.ordering_case = ordering_case(s1, S1, s2, S2);
    if (c.ordering_case != kEqualCase && c.ordering_case != kUnequalCase) {
      throw Finding("twofs_shape", w.str(),
                    "forbidden 2FS shape at position " + std::to_string(c.position) +
                        ": case " + std::to_string(c.ordering_case) + " (" +
                        std::string(ordering_case_condition(c.ordering_case)) +
                        ") with lengths " + std::to_string(s1) + ", " +
                        std::to_string(S1) + ", " + std::to_string(s2) + ", " +
                        std::to_string(S2));
    }
    c.kind = c.ordering_case == kEqualCase ? TwoFsKind::Equal : TwoFsKind::Unequal;

    c.checks.push_back({"equal_iff", (s1 == s2) == (S1 == S2)});
    c.checks.push_back(
        {"SQ2_ends_after_SQ1", c.second.position + 2 * S2 > c.first.position + 2 * S1});
    try {
      c.mate = classify_mate(w, c.first, c.second);
    } catch (const Finding&) {
      c.mate.reset();
    }
    c.checks.push_back({"mate_alpha_or_delta",
                        c.mate && (c.mate->label == MateLabel::Alpha ||
                                   c.mate->label == MateLabel::Delta)});
    const auto specific = c.kind == TwoFsKind::Equal ? check_equal_2fs(w, c)
                                                     : check_unequal_2fs(w, c);
    c.checks.insert(c.checks.end(), specific.begin(), specific.end());
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<TwoFsClassification> find_2fs(const Word& w) {
  const auto report = s_sequence(w);
  return find_2fs(report, find_fs_double_squares(report));
}

std::vector<EqualRunBounds> equal_run_bounds(const std::vector<FsDoubleSquare>& fs) {
  std::vector<EqualRunBounds> out;
  for (std::size_t k = 0; k < fs.size();) {
    std::size_t end = k + 1;
    while (end < fs.size() && fs[end].position == fs[end - 1].position + 1 &&
           fs[end].long_root_len == fs[k].long_root_len) {
      ++end;
    }
    const auto& f = fs[k].factorization;
    const std::size_t shared = lcp(f.period(), f.x2 + f.x1);
    EqualRunBounds b;
    b.position = fs[k].position;
    b.measured = end - k;
    if (f.p1 == f.p2) {
      b.location_bound = std::min(shared + 1, f.x1.size());
      b.extension_bound = std::min(shared, f.x1.size() - 1);
    } else {
      b.location_bound = shared + 1;
      b.extension_bound = shared;
    }
    out.push_back(b);
    k = end;
  }
  return out;
}

}  // namespace fsdsq
