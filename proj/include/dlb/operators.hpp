// The lattice calculus: coboundary, cup product, Hodge star and inverse,
// codifferential, Laplace-Beltrami stencil, and Green-formula boundary terms.
//
// Difference operators return a form on a window enlarged by 1 so that no
// in-support information is truncated; callers may crop.
#pragma once

#include "dlb/cochain.hpp"

namespace dlb {

/// d^c. Degree r -> r+1; the 2-form case yields a structural zero.
Cochain coboundary(const Cochain& form);

/// Cup product; total degree must be <= 2. Structural zeros propagate.
Cochain cup(const Cochain& a, const Cochain& b);

/// Hodge star, degree r -> 2-r. Basis action:
///   *x^{k,s} = Omega^{k,s},  *e1^{k,s} = e2^{k+1,s},
///   *e2^{k,s} = -e1^{k,s+1}, *Omega^{k,s} = x^{k+1,s+1}.
Cochain star(const Cochain& form);

/// Inverse of star: star(star_inverse(a)) == a coefficient for coefficient.
Cochain star_inverse(const Cochain& form);

/// delta^c via the explicit backward-difference formulas. Degree r -> r-1;
/// the 0-form case yields a structural zero.
Cochain codifferential(const Cochain& form);

/// delta^c via the compositional route (-1)^r star^{-1} d^c star, r the
/// input degree. Kept as a second algebraic path for cross-checking.
Cochain codifferential_compositional(const Cochain& form);

/// -Delta^c: componentwise 4*c[k,s] - c[k+1,s] - c[k,s+1] - c[k-1,s] - c[k,s-1].
Cochain laplacian(const Cochain& form);

/// (d^c a, b)_N - (a, delta^c b)_N for a of degree r, b of degree r+1.
Complex greens_formula_residual(const Cochain& a, const Cochain& b, int n);

/// The explicit boundary sums of the r=0 Green formula: two single-index sums
/// over the k and s edges of the window, at truncation half-width n.
/// Independent of the operator implementations; used as an oracle against
/// greens_formula_residual.
Complex greens_boundary_sum_0form(const Cochain& phi, const Cochain& omega, int n);

/// Restrict a form to a smaller (or equal) window, dropping outside values.
Cochain crop(const Cochain& form, Window target);

/// ca*a + cb*b on the union window. Structural zeros enter as zero forms.
Cochain lincomb(Complex ca, const Cochain& a, Complex cb, const Cochain& b);

/// max over components and the union window of |a - b|.
double max_abs_diff(const Cochain& a, const Cochain& b);

}  // namespace dlb
