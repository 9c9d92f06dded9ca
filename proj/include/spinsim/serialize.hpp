#pragma once

#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinsim/cqd.hpp"
#include "spinsim/run_config.hpp"
#include "spinsim/verification.hpp"

namespace spinsim {

/// Shortest representation that round-trips the double exactly.
std::string format_double(double v);

/// Trajectory CSV: header "t,<state columns>,norm_dev,purity_dev" with
/// complex state entries flattened into _re/_im column pairs.
std::string trajectory_csv(const TrajectoryRecord& traj);

nlohmann::ordered_json field_json(const FieldSpec& field);
nlohmann::ordered_json run_summary_json(const RunConfig& cfg, const TrajectoryRecord& traj);
nlohmann::ordered_json reports_json(const std::vector<CheckReport>& reports);
nlohmann::ordered_json ensemble_json(const EnsembleSummary& summary);

std::string render_json(const nlohmann::ordered_json& doc);

/// Writes content to path via a temp file + rename, so concurrent readers
/// never see a partial file.
void write_text_atomic(const std::string& path, const std::string& content);

}  // namespace spinsim
