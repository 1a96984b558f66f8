#pragma once

#include <string>
#include <vector>

namespace mzeta {

struct CriterionResult {
    std::string name;
    bool pass = false;
    std::string detail;  // one-line summary or first failure
};

// Runs the full verification suite over the bundled data directory.
// Every check is exact; nothing is tuned at run time.
std::vector<CriterionResult> run_acceptance(const std::string& data_dir);

bool all_pass(const std::vector<CriterionResult>& results);

}  // namespace mzeta
