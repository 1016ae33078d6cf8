#include "fsdsq/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <fstream>
#include <mutex>
#include <sstream>
#include <thread>

#include "fsdsq/canonical.hpp"
#include "fsdsq/fsds.hpp"
#include "fsdsq/json.hpp"
#include "fsdsq/squares.hpp"
#include "fsdsq/twofs.hpp"

namespace fsdsq {

const std::vector<std::string>& known_properties() {
  static const std::vector<std::string> names{
      "s_le_2",        "distinct_lt_2n", "factorization", "twofs_shape",  "equal_checks",
      "unequal_checks", "sq2_ends_after",        "mate_alpha_or_delta", "run_bound",
  };
  return names;
}

void LengthStats::merge(const LengthStats& o) {
  words += o.words;
  max_distinct = std::max(max_distinct, o.max_distinct);
  max_s = std::max(max_s, o.max_s);
  if (o.max_T > max_T || (o.max_T == max_T && o.words > 0 &&
                          (max_T_witness.empty() || o.max_T_witness < max_T_witness))) {
    max_T = o.max_T;
    max_T_witness = o.max_T_witness;
  }
  fs_positions += o.fs_positions;
  factorized += o.factorized;
  twofs_equal += o.twofs_equal;
  twofs_unequal += o.twofs_unequal;
  for (const auto& [label, count] : o.mates) mates[label] += count;
  equal_blocks += o.equal_blocks;
  location_bound_exceeded += o.location_bound_exceeded;
  location_bound_attained += o.location_bound_attained;
  extension_bound_exceeded += o.extension_bound_exceeded;
  extension_bound_attained += o.extension_bound_attained;
}

void PartialReport::merge(const PartialReport& other) {
  for (const auto& [n, stats] : other.per_length) per_length[n].merge(stats);
  findings.insert(findings.end(), other.findings.begin(), other.findings.end());
  std::sort(findings.begin(), findings.end());
}

std::map<std::uint64_t, std::pair<std::size_t, Word>> SweepReport::min_length_per_T()
    const {
  std::map<std::uint64_t, std::pair<std::size_t, Word>> out;
  for (const auto& [n, stats] : totals.per_length) {
    if (stats.words > 0 && !out.contains(stats.max_T)) {
      out.emplace(stats.max_T, std::pair{n, stats.max_T_witness});
    }
  }
  return out;
}

double sweep_cost(std::size_t alphabet_size, std::size_t max_len) {
  double total = 0.0;
  for (std::size_t n = 1; n <= max_len; ++n) {
    total += count_canonical_words(n, alphabet_size) * static_cast<double>(n * n);
  }
  return total;
}

double cost_ceiling(std::size_t alphabet_size) {
  if (const char* env = std::getenv("FSDSQ_COST_CEILING")) {
    char* end = nullptr;
    const double value = std::strtod(env, &end);
    if (end != env && value > 0) return value;
  }
  return alphabet_size == 3 ? sweep_cost(3, 12) : sweep_cost(2, 18);
}

namespace {

bool wants(const std::set<std::string>& props, const char* name) {
  return props.empty() || props.contains(name);
}

std::string check_property(const std::string& check) {
  if (check == "equal_iff") return "twofs_shape";
  if (check == "SQ2_ends_after_SQ1") return "sq2_ends_after";
  if (check == "mate_alpha_or_delta") return "mate_alpha_or_delta";
  if (check == "SQ_squares_conjugate" || check == "sq_squares_conjugate" ||
      check == "shift_relation" || check == "lcp_x1_x2_nonempty") {
    return "equal_checks";
  }
  return "unequal_checks";
}

}  // namespace

void verify_word(const Word& w, const std::set<std::string>& props, LengthStats& stats,
                 std::vector<SweepFinding>& findings) {
  const auto census = s_sequence(w);
  const std::string text = w.str();
  const std::size_t n = w.size();
  ++stats.words;
  stats.max_distinct = std::max<std::uint64_t>(stats.max_distinct,
                                                census.distinct_square_count);
  stats.max_s = std::max(stats.max_s, census.max_s());
  const std::uint64_t T = census.longest_run.length;
  if (T > stats.max_T || stats.words == 1 ||
      (T == stats.max_T && w < stats.max_T_witness)) {
    stats.max_T = T;
    stats.max_T_witness = w;
  }

  if (wants(props, "s_le_2") && census.max_s() > 2) {
    findings.push_back({"s_le_2", text, "max s_i = " + std::to_string(census.max_s())});
  }
  if (wants(props, "distinct_lt_2n") && census.distinct_square_count >= 2 * n && n > 0) {
    findings.push_back({"distinct_lt_2n", text,
                        std::to_string(census.distinct_square_count) + " distinct squares"});
  }
  if (wants(props, "run_bound") && T > 0 && 7 * T >= n) {
    findings.push_back({"run_bound", text, "T = " + std::to_string(T)});
  }

  for (auto v : census.s) stats.fs_positions += v == 2 ? 1 : 0;
  std::vector<FsDoubleSquare> fs;
  try {
    fs = find_fs_double_squares(census);
  } catch (const Finding& f) {
    if (wants(props, "factorization") || wants(props, f.property().c_str())) {
      findings.push_back({f.property(), text, f.detail()});
    }
    return;
  }
  stats.factorized += fs.size();

  for (const auto& block : equal_run_bounds(fs)) {
    if (block.measured < 2) continue;
    ++stats.equal_blocks;
    stats.location_bound_exceeded += block.measured > block.location_bound ? 1 : 0;
    stats.location_bound_attained += block.measured == block.location_bound ? 1 : 0;
    stats.extension_bound_exceeded += block.measured - 1 > block.extension_bound ? 1 : 0;
    stats.extension_bound_attained += block.measured - 1 == block.extension_bound ? 1 : 0;
  }

  std::vector<TwoFsClassification> pairs;
  try {
    pairs = find_2fs(census, fs);
  } catch (const Finding& f) {
    if (wants(props, "twofs_shape")) findings.push_back({f.property(), text, f.detail()});
    return;
  }
  for (const auto& c : pairs) {
    (c.kind == TwoFsKind::Equal ? stats.twofs_equal : stats.twofs_unequal) += 1;
    ++stats.mates[c.mate ? std::string(to_string(c.mate->label)) : "unclassifiable"];
    for (const auto& check : c.checks) {
      const std::string prop = check_property(check.name);
      if (!check.pass && wants(props, prop.c_str())) {
        findings.push_back(
            {prop, text, check.name + " failed at position " + std::to_string(c.position)});
      }
    }
  }
}

namespace {

std::size_t choose_prefix_len(const SweepConfig& config) {
  if (config.prefix_len > 0) return std::min(config.prefix_len, config.max_len);
  std::size_t p = 1;
  while (p < config.max_len && count_canonical_words(p, config.alphabet_size) < 64) ++p;
  return p;
}

std::vector<Word> block_prefixes(std::size_t prefix_len, std::size_t alphabet_size) {
  std::vector<Word> out;
  for (CanonicalWords it(prefix_len, alphabet_size); it.valid(); it.next()) {
    out.push_back(it.current());
  }
  return out;
}

std::string join(const std::set<std::string>& names) {
  std::string out;
  for (const auto& name : names) out += (out.empty() ? "" : ",") + name;
  return out;
}

std::string checkpoint_header(const SweepConfig& config, std::size_t prefix_len,
                              const std::set<std::string>& props) {
  std::ostringstream out;
  out << "fsdsq-checkpoint v1 alphabet_size=" << config.alphabet_size
      << " max_len=" << config.max_len << " prefix_len=" << prefix_len
      << " properties=" << join(props);
  return out.str();
}

std::map<std::size_t, PartialReport> load_checkpoint(const std::filesystem::path& path,
                                                     const std::string& header) {
  std::map<std::size_t, PartialReport> done;
  std::ifstream in(path);
  if (!in) return done;
  std::string line;
  if (!std::getline(in, line)) return done;
  if (line != header) {
    throw UsageError("checkpoint " + path.string() +
                     " belongs to a different sweep configuration");
  }
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::istringstream fields(line);
    std::string tag;
    std::size_t id = 0;
    fields >> tag >> id;
    std::string payload;
    std::getline(fields, payload);
    if (tag != "block" || !fields.eof()) {
      throw std::runtime_error("malformed checkpoint line in " + path.string());
    }
    done[id] = partial_report_from_json(payload);
  }
  return done;
}

void write_checkpoint(const std::filesystem::path& path, const std::string& header,
                      const std::map<std::size_t, PartialReport>& done) {
  std::filesystem::path tmp = path;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
    out << header << '\n';
    for (const auto& [id, partial] : done) {
      out << "block " << id << ' ' << partial_report_to_json(partial) << '\n';
    }
    if (!out) throw std::runtime_error("cannot write checkpoint " + tmp.string());
  }
  std::filesystem::rename(tmp, path);
}

}  // namespace

SweepReport exhaustive_verify(const SweepConfig& config) {
  if (config.alphabet_size < 1 || config.max_len < 1) {
    throw UsageError("alphabet size and max length must be positive");
  }
  if (config.alphabet_size > kTextAlphabet) {
    throw UsageError("alphabet size above 26 is not supported by the sweep");
  }
  for (const auto& p : config.properties) {
    const auto& known = known_properties();
    if (std::find(known.begin(), known.end(), p) == known.end()) {
      throw UsageError("unknown property '" + p + "'");
    }
  }
  if (!config.override_ceiling &&
      sweep_cost(config.alphabet_size, config.max_len) > cost_ceiling(config.alphabet_size)) {
    throw UsageError("sweep exceeds the cost ceiling; pass the override flag to run it");
  }

  const auto start = std::chrono::steady_clock::now();
  const std::set<std::string> props =
      config.properties.empty()
          ? std::set<std::string>(known_properties().begin(), known_properties().end())
          : config.properties;

  SweepReport report;
  report.config = config;
  report.config.properties = props;
  report.prefix_len = choose_prefix_len(config);
  const auto prefixes = block_prefixes(report.prefix_len, config.alphabet_size);
  report.blocks_total = prefixes.size() + 1;
  const std::string header = checkpoint_header(config, report.prefix_len, props);

  std::map<std::size_t, PartialReport> done;
  if (config.checkpoint_path) done = load_checkpoint(*config.checkpoint_path, header);

  std::vector<std::size_t> pending;
  for (std::size_t id = 0; id < report.blocks_total; ++id) {
    if (!done.contains(id)) pending.push_back(id);
  }

  auto run_block = [&](std::size_t id) {
    PartialReport partial;
    auto visit = [&](const Word& w) {
      verify_word(w, props, partial.per_length[w.size()], partial.findings);
    };
    if (id == 0) {
      for (std::size_t n = 1; n < report.prefix_len; ++n) {
        for (CanonicalWords it(n, config.alphabet_size); it.valid(); it.next()) {
          visit(it.current());
        }
      }
    } else {
      for (std::size_t n = report.prefix_len; n <= config.max_len; ++n) {
        for (CanonicalWords it(n, config.alphabet_size, prefixes[id - 1]); it.valid();
             it.next()) {
          visit(it.current());
        }
      }
    }
    std::sort(partial.findings.begin(), partial.findings.end());
    return partial;
  };

  std::mutex mutex;
  std::atomic<std::size_t> cursor{0};
  std::size_t newly_done = 0;
  std::exception_ptr failure;
  const std::size_t limit = config.stop_after_blocks.value_or(pending.size());

  auto worker = [&] {
    while (true) {
      std::size_t slot = 0;
      {
        std::lock_guard lock(mutex);
        if (failure || newly_done >= limit) return;
        slot = cursor.fetch_add(1);
        if (slot >= pending.size() || slot >= limit) return;
      }
      try {
        PartialReport partial = run_block(pending[slot]);
        std::lock_guard lock(mutex);
        done[pending[slot]] = std::move(partial);
        ++newly_done;
        if (config.checkpoint_path) write_checkpoint(*config.checkpoint_path, header, done);
      } catch (...) {
        std::lock_guard lock(mutex);
        failure = std::current_exception();
        return;
      }
    }
  };

  const std::size_t jobs = std::max<std::size_t>(1, config.jobs);
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::thread> threads;
    for (std::size_t j = 0; j < jobs; ++j) threads.emplace_back(worker);
    for (auto& t : threads) t.join();
  }
  if (failure) std::rethrow_exception(failure);

  for (const auto& [id, partial] : done) report.totals.merge(partial);
  report.blocks_done = done.size();
  report.complete = report.blocks_done == report.blocks_total;
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

Minimal2Fs minimal_2fs_length(std::size_t alphabet_size, std::size_t cap,
                              bool override_ceiling) {
  if (!override_ceiling && sweep_cost(alphabet_size, cap) > cost_ceiling(alphabet_size)) {
    throw UsageError("search exceeds the cost ceiling; pass the override flag to run it");
  }
  for (std::size_t n = 2; n <= cap; ++n) {
    for (CanonicalWords it(n, alphabet_size); it.valid(); it.next()) {
      const auto census = s_sequence(it.current());
      for (std::size_t i = 0; i + 1 < n; ++i) {
        if (census.s[i] == 2 && census.s[i + 1] == 2) return {n, it.current()};
      }
    }
  }
  return {};
}

ExtremalTable extremal_ratio(std::size_t alphabet_size, std::size_t max_len,
                             std::size_t jobs, bool override_ceiling) {
  SweepConfig config;
  config.alphabet_size = alphabet_size;
  config.max_len = max_len;
  config.properties = {"run_bound"};
  config.jobs = jobs;
  config.override_ceiling = override_ceiling;
  const auto report = exhaustive_verify(config);

  ExtremalTable table;
  for (const auto& [n, stats] : report.totals.per_length) {
    ExtremalRow row;
    row.n = n;
    row.max_T = stats.max_T;
    row.best_ratio = Ratio(static_cast<std::int64_t>(stats.max_T), static_cast<std::int64_t>(n));
    row.witness = stats.max_T_witness;
    table.rows.push_back(std::move(row));
  }
  table.findings = report.totals.findings;
  return table;
}

}  // namespace fsdsq
