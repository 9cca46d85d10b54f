/**
 * @file cli.hpp
 * @brief Entry point of the `logimg` command-line tool
 *
 * Exit codes: 0 success, 1 failed verification, 2 bad arguments,
 * 3 I/O or format failure, 4 enhancement undefined for the input
 * (singular system or zero mean norm).
 */
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace logimg {

enum ExitCode : int {
    kExitOk = 0,
    kExitVerifyFailed = 1,
    kExitUsage = 2,
    kExitIo = 3,
    kExitUndefined = 4,
};

/// `args` excludes the program name.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace logimg
