#pragma once

// The acceptance suite: ten exact cross-checks at desk scale, shared by the
// acceptance test and the CLI selftest command.

#include <string>
#include <vector>

namespace tamellc {

struct CriterionResult {
    int id = 0;
    std::string name;
    bool pass = false;
    int64_t cases = 0;
    std::string detail;  // first failure, or a short summary
    double seconds = 0;
};

CriterionResult run_criterion(int id, unsigned threads = 0);
std::vector<CriterionResult> run_acceptance(unsigned threads = 0);
std::string format_result(const CriterionResult& r);

}  // namespace tamellc
