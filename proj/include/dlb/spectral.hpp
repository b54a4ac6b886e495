// Desk-scale verification of the spectral facts: operator norm 8,
// self-adjointness, positivity, spectrum enclosed in [0, 8].
#pragma once

#include <cstdint>

#include "dlb/cochain.hpp"

namespace dlb {

struct SpectralEstimate {
    double estimate = 0.0;       // operator-norm estimate (converged Rayleigh quotient)
    int iterations = 0;
    double final_increment = 0.0;  // last Rayleigh-quotient change
};

struct OperatorReport {
    double max_abs_residual = 0.0;
    GridIndex location_of_max;
    int component_of_max = 0;
    double min_rayleigh_quotient = 0.0;
};

/// Re((-Delta^c a, a)) / (a, a). Throws on the zero form; throws if the
/// imaginary part of the numerator exceeds 1e-12 * (a, a).
double rayleigh_quotient(const Cochain& form);

/// Power iteration for the top eigenvalue of the Dirichlet truncation of
/// -Delta^c on the window of half-width n. Start vector is the checkerboard
/// (-1)^{k+s} in every component (maximal overlap with the top mode; the
/// all-ones vector is near-orthogonal to it). Deterministic.
/// Non-convergence is reported through final_increment > tol, not thrown.
SpectralEstimate operator_norm_estimate(int degree, int n, int max_iter, double tol);

/// Random nonzero forms of every degree: asserts strictly positive real
/// Rayleigh quotients with negligible imaginary part; reports the minimum.
OperatorReport positivity_check(int samples, int n, std::uint64_t seed);

}  // namespace dlb
