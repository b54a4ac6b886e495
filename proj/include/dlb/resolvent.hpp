// Resolvent machinery for -Delta^c on 0-forms: the lambda <-> mu transform,
// the decaying root of p^2 - 2*mu*p + 1 = 0, separable solutions of the
// eigenvalue recurrence, the closed-form Green kernel, and resolvent
// application by kernel summation.
#pragma once

#include <functional>

#include "dlb/cochain.hpp"

namespace dlb {

struct ResolventContext {
    Complex lambda;
    Complex mu;                 // 1 - lambda/4
    Complex r_mu;               // -sqrt(mu^2 - 1), principal branch
    Complex p;                  // root of p^2 - 2*mu*p + 1 with |p| < 1
    double dist_to_spectrum;    // distance from lambda to [0, 8]
    bool root_swapped;          // true if mu + r_mu had modulus > 1 and the
                                // reciprocal root was taken instead
};

/// Distance from lambda to the segment [0, 8] on the real axis.
double distance_to_spectrum(Complex lambda);

/// Throws std::domain_error for lambda within 1e-12 of [0, 8].
ResolventContext make_context(Complex lambda);

/// phi_k^{+/-}(mu) = (mu +/- R(mu))^k, by repeated multiplication
/// (reciprocal-root multiplication for negative k).
Complex phi_solution(int k, int sign, const ResolventContext& ctx);

/// Residual of the recurrence 1/4*(phi_{k+1,s}+phi_{k,s+1}+phi_{k-1,s}+phi_{k,s-1})
/// = mu*phi_{k,s} for the separable family phi_k^{sign_k} * phi_s^{sign_s}.
Complex homogeneous_residual(int k, int s, const ResolventContext& ctx, int sign_k, int sign_s);

/// Scale of the five recurrence terms at (k,s); residuals are judged
/// relative to this.
double homogeneous_scale(int k, int s, const ResolventContext& ctx, int sign_k, int sign_s);

/// The closed-form kernel component G_{k,s,m,n}(lambda): prefactor
/// -1/(4R) times the decaying root raised to a case-dependent exponent
///   |k+1-m| + |s+1-n|  when (k=m, s>n) or (k>m, s=n),
///   |k-1-m| + |s-1-n|  when (k=m, s<n) or (k<m, s=n),
///   |k-m|   + |s-n|    otherwise.
/// When the root was swapped, R is read as p - mu so the kernel decays for
/// every lambda off the spectrum.
Complex green_component(int k, int s, int m, int n, const ResolventContext& ctx);

/// 1-form kernels: the (u, v) components decouple and each satisfies the
/// scalar recurrence, so the kernel is componentwise identical.
Complex green_for_1form(int component, int k, int s, int m, int n, const ResolventContext& ctx);
Complex green_for_2form(int k, int s, int m, int n, const ResolventContext& ctx);

/// Residual grid of the defining identity for the closed-form kernel with
/// source fixed at (0,0): residual(k,s) = 4*mu*G(k,s) - sum of the four
/// neighbor values - delta_{k,s}^{0,0}. Data only, no verdict.
struct StencilResidualGrid {
    int w = 0;
    std::vector<Complex> residual;   // (2w+1)^2 entries, k outer, s inner
    std::vector<double> scale;       // |4 mu G| + sum |G neighbors| per point
    double max_abs = 0.0;

    Complex at(int k, int s) const;
    double scale_at(int k, int s) const;
};

StencilResidualGrid stencil_residual(const ResolventContext& ctx, int w);

/// Kernel callback: value of G_{k,s,m,n}.
using KernelFn = std::function<Complex(int k, int s, int m, int n)>;

/// (-Delta^c - lambda)^{-1} phi by kernel summation over the support of phi.
/// The output window is expanded shell by shell until a new shell contributes
/// less than 1e-12 of the largest coefficient (geometric decay guarantees
/// termination off the spectrum).
Cochain resolvent_apply(const Cochain& phi, const ResolventContext& ctx, const KernelFn& kernel);

/// Same with the closed-form kernel.
Cochain resolvent_apply(const Cochain& phi, const ResolventContext& ctx);

/// Kernel backed by a single truncated-lattice solve column (translation
/// invariant; offsets beyond the solve window read as zero). Declared here,
/// implemented by the oracle layer.
}  // namespace dlb
