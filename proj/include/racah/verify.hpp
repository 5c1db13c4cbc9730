#pragma once

#include <string>
#include <vector>

namespace racah {

struct CheckResult {
    std::string name;
    long cases = 0;
    std::vector<std::string> failures;
    bool passed() const { return failures.empty(); }
};

// Exhaustive exact invariant suite over every admissible tuple with n <= n_max.
// The brute-force oracle and the q-side are capped at n <= 8.
std::vector<CheckResult> run_verification(long n_max, unsigned workers);

}  // namespace racah
