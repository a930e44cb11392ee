#pragma once

#include <string>
#include <vector>

namespace bendix::acceptance {

struct CriterionResult {
    int index = 0;
    std::string name;
    bool passed = false;
    std::string details;
    double seconds = 0.0;
};

/// Runs one numbered criterion (1..10).
CriterionResult run_criterion(int index);

/// Runs the whole suite in order.
std::vector<CriterionResult> run_all();

/// Thread cap honored by the parallel criteria: min(hardware,
/// BENDIX_THREADS) when the environment variable is set.
int thread_cap();

}  // namespace bendix::acceptance
