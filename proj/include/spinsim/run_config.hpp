#pragma once

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "spinsim/dynamics.hpp"

namespace spinsim {

/// Anything wrong with a configuration document; maps to exit code 2.
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Command { simulate, compare, collapse, verify };

/// One batch run: laws, field, physical parameters, initial angles, grid,
/// output destination, seed and ensemble size. Unknown config keys are hard
/// errors at every nesting level.
struct RunConfig {
    std::vector<Law> laws;
    FieldSpec field = FieldSpec::constant({0.0, 0.0, 1.0});
    PhysicalParams params{};
    BlochAngles initial{std::numbers::pi / 2.0, 0.0};
    double t_end = 0.0;
    double dt = 0.0;
    bool renorm = false;
    std::uint64_t seed = 0;
    std::uint64_t ensemble = 0;
    double theta_e = std::numbers::pi / 2.0;
    std::string out;
    std::string format = "csv";
};

RunConfig parse_run_config(const nlohmann::json& doc, Command cmd);

/// Reads and parses a config file; file and JSON errors become ConfigError.
RunConfig load_run_config(const std::string& path, Command cmd);

}  // namespace spinsim
