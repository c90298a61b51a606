#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace qaw {

enum class VerifyLevel { quick, full };

struct CheckResult {
    int criterion = 0;
    std::string name;
    bool pass = false;
    std::string detail;  // measured value(s) and bound(s)
    double seconds = 0.0;
};

// Run the machine-checkable verification suite. `only_criterion` = 0 runs
// everything at the given level; otherwise the single criterion runs at full
// depth. One line per check is printed to `log`. Returns the results;
// pass/fail aggregation is up to the caller.
std::vector<CheckResult> run_verification(VerifyLevel level, std::ostream& log,
                                          int only_criterion = 0,
                                          const std::string& scratch_dir = "");

}  // namespace qaw
