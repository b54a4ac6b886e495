// Property suites behind `dlb verify` and the acceptance harness.
// Each property reports the worst observed residual, its tolerance, and a
// pass flag; suites are deterministic for a fixed seed.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dlb/cochain.hpp"
#include "dlb/oracle.hpp"

namespace dlb {

struct PropertyResult {
    std::string name;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

struct SuiteResult {
    std::string suite;
    std::vector<PropertyResult> properties;

    bool all_pass() const;
};

/// Calculus identities: nilpotency, Leibniz, two-path codifferential,
/// compact-support adjointness, star structure, Laplacian stencil,
/// Green-formula boundary sums.
SuiteResult run_calculus_suite(int n, std::uint64_t seed, int samples);

/// Spectral facts: Rayleigh range/positivity/self-adjointness on random
/// forms, norm estimate against the dense closed form at n=2, monotone
/// exhaustion toward 8, the 8*||a||^2 bound, and the 1-form decomposition
/// identity.
SuiteResult run_spectral_suite(int n, std::uint64_t seed, int samples);

/// Resolvent/Green machinery: root containment, separable-family residuals,
/// kernel symmetry and translation invariance, cross-oracle agreement,
/// stencil inversion of the solve column, and the oracle fixed point.
SuiteResult run_green_suite(Complex lambda, std::uint64_t seed, const OracleConfig& config);

/// Serialize with fixed field order and 17-significant-digit floats.
std::string suites_to_json(const std::vector<SuiteResult>& suites);

}  // namespace dlb
