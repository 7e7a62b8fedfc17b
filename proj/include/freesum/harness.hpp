#ifndef FREESUM_HARNESS_HPP
#define FREESUM_HARNESS_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace freesum {

struct SuiteResult {
    std::string name;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::vector<std::string> failures;  // first few failure messages
};

struct HarnessOptions {
    std::size_t trials = 10;
    std::uint64_t seed = 0;
    // Test hook: corrupts the free-sum volume inside the product-formula
    // check so the harness must report a failure.
    bool inject_fault = false;
};

struct HarnessSummary {
    std::uint64_t seed = 0;
    std::size_t trials = 0;
    std::vector<SuiteResult> suites;
    double seconds = 0;

    bool ok() const;
};

// Runs every module's invariant suite over `trials` random instances. Trial t
// of suite s uses derive_seed(derive_seed(seed, t), s), so results do not
// depend on execution order.
HarnessSummary run_selftest(const HarnessOptions& options);

}  // namespace freesum

#endif  // FREESUM_HARNESS_HPP
