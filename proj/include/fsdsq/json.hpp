#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "fsdsq/fsds.hpp"
#include "fsdsq/generators.hpp"
#include "fsdsq/search.hpp"
#include "fsdsq/squares.hpp"
#include "fsdsq/twofs.hpp"

namespace fsdsq {

/// Bumped whenever a field is renamed or removed.
inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const CensusReport& report);
nlohmann::json to_json(const FsDoubleSquare& fs);
nlohmann::json to_json(const MateVerdict& mate);
nlohmann::json to_json(const TwoFsClassification& c);
nlohmann::json to_json(const RunReport& report);
nlohmann::json to_json(const LengthStats& stats);
/// `with_timing` = false drops the wall-clock field so equal sweeps print
/// byte-identical reports.
nlohmann::json to_json(const SweepReport& report, bool with_timing = true);

/// Compact single-line form used inside checkpoint files.
std::string partial_report_to_json(const PartialReport& partial);
/// Throws std::runtime_error on malformed input.
PartialReport partial_report_from_json(const std::string& text);

}  // namespace fsdsq
