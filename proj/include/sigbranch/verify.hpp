#pragma once

#include "sigbranch/io.hpp"

#include <string>
#include <vector>

namespace sigbranch {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyOptions {
    std::string data_dir;  // golden tables location
    bool extended = false;
    long dim_cap = HWModule::kDefaultDimCap;
    long budget = 2000000;
    int threads = 1;
};

// Golden-table verification of one worked rule: ids g2-a2, b3-g2, f4-b4,
// bn-dn (runs n = 2 and 3), an-an1 (runs n = 2 and 3).
std::vector<CheckResult> verify_rule(const std::string& id, const VerifyOptions& opt);

// reorders computed generators into the golden order; throws if the sets differ
std::vector<GenEntry> align_to_golden(const std::vector<GenEntry>& computed,
                                      const GoldenData& golden);

}  // namespace sigbranch
