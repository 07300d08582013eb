#pragma once

#include <string>
#include <vector>

namespace lossyspdc {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0;      // measured deviation
    double tolerance = 0;
};

// Fast oracle self-checks behind the `validate` command.
std::vector<CheckResult> run_oracle_suite();

}  // namespace lossyspdc
