#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "frobx/script.hpp"

namespace {

constexpr const char* kUsage =
    R"(usage: frobx [--json] [script-file]

Runs one batch script (from the file, or stdin when absent or "-") and prints
the report.  Exit status: 0 success, 1 refusal, 2 parse or resource error.

Script lines: declarations followed by exactly one command.
  ring p=<prime> vars=<csv> [order=lex|grevlex]
  quotient <poly csv> [noequidim]
  ideal <name> = <poly csv>
  sop <poly csv>
  module [name=<id>] cyclic-tower ideal=(<csv>) [constant]
  module [name=<id>] finite summands=(<csv>),... [frobenius|zero|units=<csv>]

  frobpow <ideal> e=<n>
  frobclosure <ideal> [bound=<n>]          (default 3)
  grann module=<m> elem=<polys> [comp=<n>] [bound=<n>]
  lattice module=<m> [bound=<n>] [pool=<csv>]
  hsl module=<m>
  tc elem=<poly> j=<n> [bound=<n>] [mode=chain|test:<c>,<w0>]
  enescu samples=<csv> [bound=<n>]
  ga4 b=<primes> U=<indices> [module=<m>] [bound=<n>] [pool=<csv>]
)";

}  // namespace

int main(int argc, char** argv) {
    bool json = false;
    std::string path;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if (arg == "--json") {
            json = true;
        } else if (arg == "--help" || arg == "-h") {
            std::cout << kUsage;
            return 0;
        } else if (!path.empty()) {
            std::cerr << "frobx: one script at a time\n" << kUsage;
            return 2;
        } else {
            path = arg;
        }
    }

    std::string script;
    if (path.empty() || path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        script = ss.str();
    } else {
        std::ifstream in(path);
        if (!in) {
            std::cerr << "frobx: cannot open " << path << "\n";
            return 2;
        }
        std::ostringstream ss;
        ss << in.rdbuf();
        script = ss.str();
    }

    frobx::RunResult result = frobx::run_script(script, json);
    std::cout << result.output;
    return result.exit_code;
}
