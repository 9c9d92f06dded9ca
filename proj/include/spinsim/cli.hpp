#pragma once

#include <string>

#include "spinsim/run_config.hpp"

namespace spinsim::cli {

// Exit codes: 0 success, 1 check/assertion failure, 2 configuration error.
inline constexpr int exit_ok = 0;
inline constexpr int exit_check_failure = 1;
inline constexpr int exit_config_error = 2;

int cmd_simulate(const RunConfig& cfg);
int cmd_compare(const RunConfig& cfg);
int cmd_collapse(const RunConfig& cfg);
int cmd_verify(const std::string& filter, const std::string& out);

/// Full argv entry point: parses `spinform simulate|compare|collapse|verify`
/// plus --config/--out/--seed/--filter and runs the command.
int dispatch(int argc, const char* const* argv);

}  // namespace spinsim::cli
