#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace socle {

struct VerifyOptions {
    int size = 6;         // partition size bound (lr, gt, infinity)
    int pq = 5;           // bound on p and q (identity, t-branch)
    int samples = 200;    // random samples (lr associativity, semiring laws)
    unsigned seed = 20261018;
};

struct SuiteReport {
    std::string suite;
    std::size_t checks = 0;
    std::vector<std::string> failures;
    double seconds = 0;
    bool passed() const { return failures.empty() && checks > 0; }
};

std::vector<std::string> suiteNames();
// Throws std::invalid_argument for an unknown suite.
SuiteReport runSuite(const std::string& name, const VerifyOptions& options = {});

}  // namespace socle
