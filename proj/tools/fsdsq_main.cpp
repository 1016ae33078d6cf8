#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "fsdsq/canonical.hpp"
#include "fsdsq/fsds.hpp"
#include "fsdsq/generators.hpp"
#include "fsdsq/json.hpp"
#include "fsdsq/search.hpp"
#include "fsdsq/squares.hpp"
#include "fsdsq/twofs.hpp"

namespace {

using namespace fsdsq;
using nlohmann::json;

constexpr int kExitClean = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFinding = 2;

struct Record {
  std::string property;
  std::string word;
  std::string detail;
};

void print_findings_plain(const std::vector<Record>& records) {
  for (const auto& r : records) {
    std::cout << "finding\t" << r.property << '\t' << r.word << '\t' << r.detail << '\n';
  }
}

json findings_json(const std::vector<Record>& records) {
  json out = json::array();
  for (const auto& r : records) {
    out.push_back({{"property", r.property}, {"word", r.word}, {"detail", r.detail}});
  }
  return out;
}

Word read_word(const std::string& positional, const std::string& file) {
  if (!positional.empty() && !file.empty()) {
    throw UsageError("give either a word or --file, not both");
  }
  std::string text = positional;
  if (!file.empty()) {
    std::ifstream in(file);
    if (!in) throw UsageError("cannot read " + file);
    std::ostringstream buf;
    buf << in.rdbuf();
    text.clear();
    for (char ch : buf.str()) {
      if (!std::isspace(static_cast<unsigned char>(ch))) text += ch;
    }
  }
  if (text.empty()) throw UsageError("no word given");
  return Word::parse(text);
}

// census ------------------------------------------------------------------

int run_census(const Word& w, const std::string& format) {
  const auto report = s_sequence(w);
  if (format == "json") {
    std::cout << to_json(report).dump(2) << '\n';
  } else if (format == "tsv") {
    std::cout << render_census_tsv(report);
  } else {
    const std::string text = w.str();
    for (std::size_t i = 0; i < report.s.size(); ++i) {
      std::cout << i + 1 << ' ' << text[i] << ' ' << report.s[i] << '\n';
    }
    std::cout << "distinct squares: " << report.distinct_square_count << '\n'
              << "max s_i: " << report.max_s() << '\n'
              << "longest run of 2s: " << report.longest_run.length;
    if (report.longest_run.length > 0) std::cout << " from " << report.longest_run.start;
    std::cout << '\n';
  }
  return kExitClean;
}

// analyze -----------------------------------------------------------------

std::string describe(const FsDoubleSquare& fs) {
  const auto& f = fs.factorization;
  std::ostringstream out;
  out << "position " << fs.position << ": |sq| = " << fs.short_root_len
      << ", |SQ| = " << fs.long_root_len << ", x1 = " << f.x1.str() << ", x2 = " << f.x2.str()
      << ", p1 = " << f.p1 << ", p2 = " << f.p2;
  return out.str();
}

int run_analyze(const Word& w, const std::string& format) {
  const auto census = s_sequence(w);
  const std::string text = w.str();
  std::vector<Record> findings;
  std::vector<FsDoubleSquare> fs;
  std::vector<TwoFsClassification> pairs;
  try {
    fs = find_fs_double_squares(census);
    pairs = find_2fs(census, fs);
  } catch (const Finding& f) {
    findings.push_back({f.property(), f.word(), f.detail()});
  }
  for (const auto& c : pairs) {
    for (const auto& check : c.checks) {
      if (!check.pass) {
        findings.push_back({check.name, text, "failed at position " + std::to_string(c.position)});
      }
    }
  }

  if (format == "json") {
    json out = {{"schema_version", kSchemaVersion}, {"word", text}, {"n", w.size()}};
    out["fs_double_squares"] = json::array();
    for (const auto& f : fs) out["fs_double_squares"].push_back(to_json(f));
    out["twofs"] = json::array();
    for (const auto& c : pairs) out["twofs"].push_back(to_json(c));
    out["findings"] = findings_json(findings);
    std::cout << out.dump(2) << '\n';
  } else {
    std::cout << "word: " << text << "\nn: " << w.size() << '\n'
              << "FS-double squares: " << fs.size() << '\n';
    for (const auto& f : fs) std::cout << "  " << describe(f) << '\n';
    std::cout << "2FS squares: " << pairs.size() << '\n';
    for (const auto& c : pairs) {
      std::cout << "  position " << c.position << ": " << to_string(c.kind) << " (case "
                << c.ordering_case << "), mate "
                << (c.mate ? std::string(to_string(c.mate->label)) : "unclassifiable") << '\n';
      for (const auto& check : c.checks) {
        std::cout << "    " << check.name << ": " << (check.pass ? "pass" : "FAIL") << '\n';
      }
    }
    print_findings_plain(findings);
  }
  return findings.empty() ? kExitClean : kExitFinding;
}

// generate ----------------------------------------------------------------

struct GenerateArgs {
  std::string kind = "run";
  std::size_t target = 2;
  std::string seed;
  std::string variant = "short";
  std::size_t alphabet_size = 2;
  std::size_t budget = 12;
};

int run_generate(const GenerateArgs& args, const std::string& format) {
  RunReport report;
  try {
    if (args.kind == "run") {
      report = build_run(args.target, args.alphabet_size);
    } else {
      const Word seed = args.seed.empty()
                            ? smallest_fs_double_square(args.alphabet_size, true)
                            : Word::parse(args.seed);
      if (args.kind == "equal") {
        report = extend_equal_run(seed);
      } else {
        UnequalOptions options;
        options.variant =
            args.variant == "long" ? UnequalVariant::Long : UnequalVariant::Short;
        options.alphabet_size = args.alphabet_size;
        options.search_budget = args.budget;
        report = extend_unequal(seed, options);
      }
    }
  } catch (const Finding& f) {
    const std::vector<Record> records{{f.property(), f.word(), f.detail()}};
    if (format == "json") {
      std::cout << json{{"schema_version", kSchemaVersion}, {"findings", findings_json(records)}}
                       .dump(2)
                << '\n';
    } else {
      print_findings_plain(records);
    }
    return kExitFinding;
  }

  if (format == "json") {
    std::cout << to_json(report).dump(2) << '\n';
  } else {
    std::cout << report.word.str() << '\n'
              << "n: " << report.n() << "\nT: " << report.T() << '\n'
              << "ratio: " << report.ratio.numerator() << '/' << report.ratio.denominator()
              << '\n';
    for (const auto& step : report.steps) {
      std::cout << "step " << to_string(step.kind) << " at " << step.frontier << " via "
                << step.method << ": +" << step.appended.str() << '\n';
    }
    for (const auto& f : report.findings) {
      std::cout << "finding\tgenerator\t" << report.word.str() << '\t' << f << '\n';
    }
  }
  return report.findings.empty() ? kExitClean : kExitFinding;
}

// verify ------------------------------------------------------------------

int run_verify(const SweepConfig& config, const std::string& format, bool deterministic) {
  const auto report = exhaustive_verify(config);
  if (format == "json") {
    std::cout << to_json(report, !deterministic).dump(2) << '\n';
  } else {
    std::cout << "n\twords\tmax_distinct\tmax_s\tmax_T\tfs_positions\tequal_2fs\tunequal_2fs\n";
    for (const auto& [n, s] : report.totals.per_length) {
      std::cout << n << '\t' << s.words << '\t' << s.max_distinct << '\t' << s.max_s << '\t'
                << s.max_T << '\t' << s.fs_positions << '\t' << s.twofs_equal << '\t'
                << s.twofs_unequal << '\n';
    }
    std::cout << "blocks: " << report.blocks_done << '/' << report.blocks_total
              << (report.complete ? "" : " (incomplete)") << '\n';
    if (!deterministic) std::cout << "elapsed: " << report.elapsed_seconds << " s\n";
    for (const auto& f : report.totals.findings) {
      std::cout << "finding\t" << f.property << '\t' << f.word << '\t' << f.detail << '\n';
    }
  }
  return report.totals.findings.empty() ? kExitClean : kExitFinding;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distinct squares, FS-double squares and runs of s_i = 2"};
  app.require_subcommand(1);

  std::string word;
  std::string file;
  std::string format = "plain";
  const std::vector<std::string> formats{"plain", "json", "tsv"};

  auto* census = app.add_subcommand("census", "s_i sequence of a word");
  census->add_option("word", word, "word over a-z");
  census->add_option("-f,--file", file, "read the word from a file");
  census->add_option("--format", format)->check(CLI::IsMember(formats));

  auto* analyze = app.add_subcommand("analyze", "FS-double squares, 2FS squares and mates");
  analyze->add_option("word", word, "word over a-z");
  analyze->add_option("-f,--file", file, "read the word from a file");
  analyze->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "build words with long runs of 2s");
  generate->add_option("--kind", gen.kind)->check(CLI::IsMember({"equal", "unequal", "run"}));
  generate->add_option("--target", gen.target, "run length for --kind run")
      ->check(CLI::PositiveNumber);
  generate->add_option("--seed", gen.seed, "starting word for equal/unequal");
  generate->add_option("--variant", gen.variant)->check(CLI::IsMember({"short", "long"}));
  generate->add_option("--alphabet-size", gen.alphabet_size)->check(CLI::Range(2, 26));
  generate->add_option("--budget", gen.budget, "longest suffix tried by the fallback search");
  generate->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  SweepConfig sweep;
  std::vector<std::string> properties;
  std::string checkpoint;
  std::size_t stop_after = 0;
  bool deterministic = false;
  auto* verify = app.add_subcommand("verify", "exhaustive sweep over canonical words");
  verify->add_option("--alphabet-size", sweep.alphabet_size)->check(CLI::Range(1, 26));
  verify->add_option("--max-len", sweep.max_len)->check(CLI::PositiveNumber);
  verify->add_option("--property", properties, "restrict to these checks (repeatable)")
      ->check(CLI::IsMember(known_properties()));
  verify->add_option("--checkpoint", checkpoint, "resume from / record to this file");
  verify->add_option("--jobs", sweep.jobs)->check(CLI::PositiveNumber);
  verify->add_option("--prefix-len", sweep.prefix_len, "block prefix length, 0 = automatic");
  verify->add_option("--stop-after", stop_after, "stop after this many blocks")
      ->check(CLI::PositiveNumber);
  verify->add_flag("--override-ceiling", sweep.override_ceiling);
  verify->add_flag("--deterministic", deterministic, "omit timing from the report");
  verify->add_option("--format", format)->check(CLI::IsMember({"plain", "json"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (census->parsed()) return run_census(read_word(word, file), format);
    if (analyze->parsed()) return run_analyze(read_word(word, file), format);
    if (generate->parsed()) return run_generate(gen, format);
    sweep.properties.insert(properties.begin(), properties.end());
    if (!checkpoint.empty()) sweep.checkpoint_path = checkpoint;
    if (stop_after > 0) sweep.stop_after_blocks = stop_after;
    return run_verify(sweep, format, deterministic);
  } catch (const Finding& f) {
    std::cout << "finding\t" << f.property() << '\t' << f.word() << '\t' << f.detail() << '\n';
    return kExitFinding;
  } catch (const std::exception& e) {
    std::cerr << "fsdsq: " << e.what() << '\n';
    return kExitUsage;
  }
}
