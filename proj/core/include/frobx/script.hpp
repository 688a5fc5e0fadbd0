#pragma once

#include <string>

namespace frobx {

// Outcome of one batch script: the rendered report plus the process exit
// status (0 success, 1 refusal of an unverified precondition, 2 parse or
// resource error).
struct RunResult {
    int exit_code = 0;
    std::string output;
};

// Executes a declaration block followed by exactly one command.  Output is
// deterministic for fixed input; json switches the report to the JSON shape.
RunResult run_script(const std::string& text, bool json);

}  // namespace frobx
