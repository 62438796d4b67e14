#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace morbit {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
    double seconds = 0.0;
};

/* The ten acceptance checks with their sizes, tolerances and time budgets
 * baked in.  When cli_path is nonempty the parser check also drives that
 * executable to confirm exit code 2 and the reported byte offset on
 * malformed input; otherwise it checks the library-level errors only. */
std::vector<CheckResult> run_acceptance_suite(std::uint64_t seed,
                                              const std::string& cli_path = {});

}  // namespace morbit
