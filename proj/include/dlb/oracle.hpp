// Two independent ground-truth computations of the resolvent kernel:
// a sparse solve on a Dirichlet-truncated window and a trapezoid-rule
// Fourier integral on the torus, plus the comparison harness against the
// closed-form kernel.
#pragma once

#include <iosfwd>
#include <string>

#include "dlb/cochain.hpp"
#include "dlb/resolvent.hpp"

namespace dlb {

struct OracleConfig {
    int n_trunc = 64;            // half-width of the truncation window
    int quadrature_points = 64;  // per axis, starting resolution
    double solver_tol = 1e-12;
    int max_solver_iter = 10000;
};

/// Solve (-Delta^c - lambda) u = delta^{site} on the window with zero
/// exterior (Dirichlet truncation), by sparse LU. The window is doubled
/// (up to a cap) until the edge values are below 1e-10 * |u(site)|.
Cochain truncated_resolvent_solve(GridIndex site, const ResolventContext& ctx,
                                  const OracleConfig& config);

/// G(a,b;lambda) = (2 pi)^{-2} * integral over [-pi,pi]^2 of
/// e^{i(a theta + b phi)} / (4 - 2 cos theta - 2 cos phi - lambda).
/// Periodic trapezoid rule, doubling the per-axis point count until
/// successive values differ by less than 1e-10.
Complex fourier_green(int a, int b, Complex lambda, const OracleConfig& config);

struct OffsetRecord {
    int k = 0, s = 0;
    Complex closed_form;
    Complex solve;
    Complex fourier;
    Complex residual;  // stencil identity residual of the closed form
    bool agree = false;
};

struct ResidualReport {
    Complex lambda;
    int w = 0;
    double tol = 0.0;
    OracleConfig config;
    bool oracles_valid = false;  // mutual solve/fourier agreement within 1e-8
    double max_abs = 0.0;        // max |residual| over the grid
    std::vector<OffsetRecord> records;  // k outer, s inner, (2w+1)^2 entries
};

/// Tabulates closed form, truncated solve and Fourier values at every offset
/// |k|,|s| <= w from a source at the origin, the stencil residual of the
/// closed form, and an agreement mask (closed form vs both oracles within
/// tol, relative). oracles_valid is false if the two oracles disagree
/// beyond 1e-8 anywhere.
ResidualReport compare_kernels(const ResolventContext& ctx, int w, double tol,
                               const OracleConfig& config);

/// Kernel callback backed by one truncated solve column at the origin;
/// translation invariant, zero beyond the solve window.
KernelFn solve_column_kernel(const ResolventContext& ctx, const OracleConfig& config);

/// Fixed-field-order JSON with every floating value printed to 17
/// significant digits; byte-deterministic for a fixed report.
void write_report(const ResidualReport& report, std::ostream& out);
std::string report_to_string(const ResidualReport& report);

/// Flat CSV: one "k,s,|residual|,agree" row per offset, no header,
/// (2w+1)^2 rows.
void write_report_csv(const ResidualReport& report, std::ostream& out);

}  // namespace dlb
