// Acceptance runner: executes the full identity suite and prints one
// PASS/FAIL line per criterion, with per-check detail underneath.
//
// One registered check (prop-kernel-formula-monotone) asserts per-step
// monotonicity of the finite-order kernel-sum residuals. That property is
// false: the partial sums oscillate around their limit because the Laguerre
// factors alternate in sign, so the check is marked expected-fail in the
// registry and reported here at full strength. The default exit code counts
// only unexpected failures; --strict counts everything.
//
// Usage: acceptance [--strict] [--only NAME]
#include <cstdio>
#include <cstring>
#include <map>
#include <string>
#include <vector>

#include "polyfock/suite.hpp"

namespace {

const char* criterion_label(int c) {
    switch (c) {
        case 1: return "finite-order kernel sum vs G*K";
        case 2: return "dual evaluation of the order-n kernels";
        case 3: return "orthonormal bases (SF and SH)";
        case 4: return "adjoint pairings";
        case 5: return "derivative/multiplication commutator";
        case 6: return "coefficient transform: isometry, quadrature, factorization";
        case 7: return "position/creation conjugations";
        case 8: return "Berezin transform identities";
        case 9: return "backward-shift eigenfunctions";
        case 10: return "one-point decomposition identities";
        case 11: return "interpolation feasibility and kernel positivity";
        case 12: return "matrix square-root factor and the multiplier counterexample";
        case 13: return "bidisk inner function and its kernel";
        case 14: return "derivative reproducing";
        default: return "supplementary module invariants";
    }
}

} // namespace

int main(int argc, char** argv) {
    bool strict = false;
    std::string only;
    for (int i = 1; i < argc; ++i) {
        if (std::strcmp(argv[i], "--strict") == 0) strict = true;
        else if (std::strcmp(argv[i], "--only") == 0 && i + 1 < argc) only = argv[++i];
        else {
            std::fprintf(stderr, "usage: acceptance [--strict] [--only NAME]\n");
            return 2;
        }
    }

    polyfock::SuiteConfig cfg;
    std::vector<polyfock::CheckResult> results;
    try {
        results = polyfock::run_suite(cfg);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "suite failed to run: %s\n", e.what());
        return 2;
    }

    if (!only.empty()) {
        int failures = 0;
        bool found = false;
        for (const auto& r : results) {
            if (r.name != only) continue;
            found = true;
            std::printf("[%s] %-36s residual %.3e  tol %.1e\n",
                        r.passed ? "PASS" : "FAIL", r.name.c_str(), r.max_residual,
                        r.tolerance);
            if (!r.passed && (strict || !r.expected_fail)) ++failures;
        }
        if (!found) {
            std::fprintf(stderr, "no check named '%s'\n", only.c_str());
            return 2;
        }
        return failures == 0 ? 0 : 1;
    }

    std::map<int, std::vector<const polyfock::CheckResult*>> by_criterion;
    for (const auto& r : results) by_criterion[r.criterion].push_back(&r);

    int unexpected = 0, expected = 0;
    for (const auto& [criterion, checks] : by_criterion) {
        bool all_pass = true;
        for (const auto* r : checks) all_pass = all_pass && r->passed;
        if (criterion == 0)
            std::printf("%s  supplementary: %s\n", all_pass ? "[PASS]" : "[FAIL]",
                        criterion_label(0));
        else
            std::printf("%s  criterion %2d: %s\n", all_pass ? "[PASS]" : "[FAIL]",
                        criterion, criterion_label(criterion));
        for (const auto* r : checks) {
            std::printf("        %-38s %s  residual %.3e  (tol %.1e, degree %d)\n",
                        r->name.c_str(), r->passed ? "ok  " : "FAIL", r->max_residual,
                        r->tolerance, r->degree);
            if (!r->passed) {
                if (r->expected_fail) {
                    ++expected;
                    std::printf("        ^ documented: %s\n", r->note.c_str());
                } else {
                    ++unexpected;
                }
            }
        }
    }

    std::printf("\n%zu checks; %d unexpected failure(s); %d documented expected failure(s)\n",
                results.size(), unexpected, expected);
    if (strict) return (unexpected + expected) == 0 ? 0 : 1;
    return unexpected == 0 ? 0 : 1;
}
