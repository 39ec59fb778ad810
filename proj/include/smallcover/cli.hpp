#pragma once

#include <iosfwd>
#include <span>
#include <string>

#include "smallcover/series.hpp"

namespace smallcover::cli {

enum ExitCode : int { kSuccess = 0, kVerificationFailed = 1, kUsageError = 2 };

struct Hooks {
    // Sequence values used by `verify`; tests replace them to exercise failures.
    SequenceSource source;
};

// Runs the command line `args` (args[0] is the program name).
int run(std::span<const std::string> args, std::ostream& out, std::ostream& err,
        const Hooks& hooks = {});

} // namespace smallcover::cli
