#pragma once

#include <ostream>
#include <string>
#include <vector>

namespace hopfbloch::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitCheckFailed = 1,
    kExitParse = 2,
    kExitDomain = 3,
    kExitUnknownGate = 4,
};

/// Runs one command line. args excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace hopfbloch::cli
