#ifndef TIGHTFRAME_CLI_HPP
#define TIGHTFRAME_CLI_HPP

#include <string>
#include <vector>

namespace tightframe {

// Exit codes: 0 success, 1 verdict-negative, 2 input error, 3 guard/budget.
struct CliResult {
    int exit_code = 0;
    std::string out;  // machine JSON for stdout
    std::string err;  // human tables for stderr
};

// Runs one subcommand; args exclude the program name.
CliResult run_command(const std::vector<std::string>& args);

int cli_main(int argc, char** argv);

} // namespace tightframe

#endif
