#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qrng/state_algebra.hpp"

namespace qrng {

struct VerifySuiteResult {
    std::string name;
    std::size_t checks = 0;
    std::size_t failures = 0;
    double worst = 0.0;  // largest deviation / violation seen
};

struct VerifyOptions {
    uint64_t seed = 20240801;
    int n_states = 200;
    // Self-test hook: a nonzero offset corrupts one formula inside the harness
    // comparisons; a healthy harness must then report failures.
    double fault_offset = 0.0;
};

// Runs the oracle-equivalence, Schmidt-frame, bound-ordering and convexity
// suites over randomized inputs.
std::vector<VerifySuiteResult> run_verification(const VerifyOptions& options);

bool all_passed(const std::vector<VerifySuiteResult>& results);

// Number of random direction pairs whose (kappa, beta) fall outside the
// constraint ellipse of the state (alpha from the sampled user direction).
// The OpenMP and serial variants count identically.
std::size_t membership_violations(const TwoQubitState& state, std::size_t n_pairs, uint64_t seed);
std::size_t membership_violations_serial(const TwoQubitState& state, std::size_t n_pairs,
                                         uint64_t seed);

}  // namespace qrng
