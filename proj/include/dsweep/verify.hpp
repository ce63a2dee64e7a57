#pragma once

#include <string>
#include <vector>

#include "dsweep/config.hpp"

namespace dsweep {

struct CheckResult {
    std::string name;
    bool pass = false;
    double value = 0.0;      // measured quantity
    double threshold = 0.0;  // pass bound on value
    std::string detail;
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    bool all_pass() const;
    std::string to_json() const;
};

/// Run the invariant suite: Fourier coefficients against an independent
/// quadrature, the ideal refocusing identity on random tuples, Euler
/// round-trips, chirp step-refinement convergence, adiabaticity ratios of
/// the standard sweeps, the amplitude limit of composed sequences, Bloch
/// norms, and duration accounting under both refocus policies.
VerifyReport run_verification(const RunConfig& cfg);

}  // namespace dsweep
