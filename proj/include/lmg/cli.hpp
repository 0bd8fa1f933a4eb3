#pragma once

#include <string>
#include <vector>

#include "lmg/sweep.hpp"

namespace lmg {

struct CliParse {
    RunConfig config;
    int exit_code = -1;    // >= 0 when parsing already decided the outcome (help, usage error)
    std::string message;
};

// Builds the effective RunConfig from command-line arguments (program name
// excluded): subcommand picks the mode, --config loads a key-value file, and
// explicitly passed flags override the file. Throws ConfigError for invalid
// values; usage errors and --help are reported through CliParse.
CliParse parse_command_line(const std::vector<std::string>& args);

}  // namespace lmg
