#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace polyfock {

struct SuiteConfig {
    int degree = 12;       // adjoint/operator checks
    int kernel_terms = 60; // kernel-sum truncation
    std::uint64_t seed = 20240817ull;
    std::map<std::string, double> tolerance_overrides;

    void validate() const; // throws std::invalid_argument
};

struct CheckResult {
    std::string name; // stable slug, also the tolerance-override key
    int criterion = 0; // acceptance criterion this check belongs to (1..14)
    int degree = 0;
    double max_residual = 0.0;
    double tolerance = 0.0;
    bool passed = false;
    // One check (prop-kernel-formula-monotone) asserts a property that is
    // false in exact arithmetic; it runs at full strength and is reported,
    // but marked so callers can separate it from regressions.
    bool expected_fail = false;
    std::string note;
};

// Runs every registered identity check in a small work pool (checks are
// pure and independent); results come back in registration order.
std::vector<CheckResult> run_suite(const SuiteConfig& config = {});

// Names of all registered checks, in order.
std::vector<std::string> suite_check_names();

} // namespace polyfock
