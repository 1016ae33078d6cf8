#include "fsdsq/json.hpp"

#include <stdexcept>

namespace fsdsq {

using nlohmann::json;

namespace {

json ratio_json(const Ratio& r) { return {{"num", r.numerator()}, {"den", r.denominator()}}; }

json findings_json(const std::vector<SweepFinding>& findings) {
  json out = json::array();
  for (const auto& f : findings) {
    out.push_back({{"property", f.property}, {"word", f.word}, {"detail", f.detail}});
  }
  return out;
}

LengthStats stats_from_json(const json& j) {
  LengthStats s;
  s.words = j.at("words");
  s.max_distinct = j.at("max_distinct");
  s.max_s = j.at("max_s");
  s.max_T = j.at("max_T");
  s.max_T_witness = Word::parse(j.at("max_T_witness").get<std::string>());
  s.fs_positions = j.at("fs_positions");
  s.factorized = j.at("factorized");
  s.twofs_equal = j.at("twofs_equal");
  s.twofs_unequal = j.at("twofs_unequal");
  s.mates = j.at("mates").get<std::map<std::string, std::uint64_t>>();
  s.equal_blocks = j.at("equal_blocks");
  s.location_bound_exceeded = j.at("location_bound_exceeded");
  s.location_bound_attained = j.at("location_bound_attained");
  s.extension_bound_exceeded = j.at("extension_bound_exceeded");
  s.extension_bound_attained = j.at("extension_bound_attained");
  return s;
}

json partial_json(const PartialReport& partial) {
  json lengths = json::object();
  for (const auto& [n, stats] : partial.per_length) lengths[std::to_string(n)] = to_json(stats);
  return {{"per_length", lengths}, {"findings", findings_json(partial.findings)}};
}

}  // namespace

json to_json(const CensusReport& report) {
  json runs = json::array();
  for (const auto& r : report.runs_of_two) runs.push_back({{"start", r.start}, {"length", r.length}});
  return {
      {"schema_version", kSchemaVersion},
      {"word", report.word.str()},
      {"n", report.length()},
      {"s", report.s},
      {"rightmost_roots", report.rightmost_roots},
      {"distinct_squares", report.distinct_square_count},
      {"runs_of_two", runs},
      {"T", report.longest_run.length},
      {"longest_run", {{"start", report.longest_run.start}, {"length", report.longest_run.length}}},
  };
}

json to_json(const FsDoubleSquare& fs) {
  const auto& f = fs.factorization;
  return {{"position", fs.position}, {"sq_len", fs.short_root_len},
          {"SQ_len", fs.long_root_len}, {"x1", f.x1.str()},
          {"x2", f.x2.str()},         {"p1", f.p1},
          {"p2", f.p2},               {"epsilon_threshold", epsilon_threshold(f)}};
}

json to_json(const MateVerdict& mate) {
  return {{"label", to_string(mate.label)},
          {"via_nontrivial_prefix", mate.via_nontrivial_prefix},
          {"epsilon_threshold", mate.epsilon_threshold},
          {"beyond_threshold", mate.beyond_threshold}};
}

json to_json(const TwoFsClassification& c) {
  json checks = json::array();
  for (const auto& check : c.checks) checks.push_back({{"name", check.name}, {"pass", check.pass}});
  return {{"position", c.position},
          {"kind", to_string(c.kind)},
          {"case", c.ordering_case},
          {"first", to_json(c.first)},
          {"second", to_json(c.second)},
          {"mate", c.mate ? to_json(*c.mate) : json(nullptr)},
          {"checks", checks}};
}

json to_json(const RunReport& report) {
  json steps = json::array();
  for (const auto& s : report.steps) {
    steps.push_back({{"kind", to_string(s.kind)},
                     {"appended", s.appended.str()},
                     {"frontier", s.frontier},
                     {"method", s.method}});
  }
  return {{"schema_version", kSchemaVersion},
          {"word", report.word.str()},
          {"n", report.n()},
          {"T", report.T()},
          {"run_start", report.longest_run.start},
          {"ratio", ratio_json(report.ratio)},
          {"bound_holds", report.bound_holds()},
          {"steps", steps},
          {"findings", report.findings}};
}

json to_json(const LengthStats& s) {
  return {{"words", s.words},
          {"max_distinct", s.max_distinct},
          {"max_s", s.max_s},
          {"max_T", s.max_T},
          {"max_T_witness", s.max_T_witness.str()},
          {"fs_positions", s.fs_positions},
          {"factorized", s.factorized},
          {"twofs_equal", s.twofs_equal},
          {"twofs_unequal", s.twofs_unequal},
          {"mates", s.mates},
          {"equal_blocks", s.equal_blocks},
          {"location_bound_exceeded", s.location_bound_exceeded},
          {"location_bound_attained", s.location_bound_attained},
          {"extension_bound_exceeded", s.extension_bound_exceeded},
          {"extension_bound_attained", s.extension_bound_attained}};
}

json to_json(const SweepReport& report, bool with_timing) {
  json lengths = json::array();
  for (const auto& [n, stats] : report.totals.per_length) {
    json row = to_json(stats);
    row["n"] = n;
    lengths.push_back(std::move(row));
  }
  json min_T = json::array();
  for (const auto& [T, entry] : report.min_length_per_T()) {
    min_T.push_back({{"T", T}, {"n", entry.first}, {"witness", entry.second.str()}});
  }
  json out = {{"schema_version", kSchemaVersion},
              {"alphabet_size", report.config.alphabet_size},
              {"max_len", report.config.max_len},
              {"properties", report.config.properties},
              {"prefix_len", report.prefix_len},
              {"blocks_total", report.blocks_total},
              {"blocks_done", report.blocks_done},
              {"complete", report.complete},
              {"per_length", lengths},
              {"min_length_per_T", min_T},
              {"findings", findings_json(report.totals.findings)}};
  if (with_timing) out["elapsed_seconds"] = report.elapsed_seconds;
  return out;
}

std::string partial_report_to_json(const PartialReport& partial) {
  return partial_json(partial).dump();
}

PartialReport partial_report_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    PartialReport partial;
    for (const auto& [key, value] : j.at("per_length").items()) {
      partial.per_length[std::stoul(key)] = stats_from_json(value);
    }
    for (const auto& f : j.at("findings")) {
      partial.findings.push_back({f.at("property"), f.at("word"), f.at("detail")});
    }
    return partial;
  } catch (const json::exception& e) {
    throw std::runtime_error(std::string("malformed checkpoint block: ") + e.what());
  }
}

}  // namespace fsdsq
