#ifndef FPS_TOOLS_CLI_HPP
#define FPS_TOOLS_CLI_HPP

#include <ostream>
#include <string>
#include <vector>

#include <fps/error.hpp>

namespace fps::cli
{

// Exit codes of the fps tool.
enum exit_code : int {
    ok = 0,
    io_failure = 1,
    precondition_failure = 2,
    composition_failure = 3,
};

int exit_code_for(error_kind kind) noexcept;

// Runs the tool on args (args[0] is the program name), writing results to out
// and diagnostics to err. Never throws.
int run(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

} // namespace fps::cli

#endif
