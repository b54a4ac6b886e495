#include "dlb/verify.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "dlb/operators.hpp"
#include "dlb/spectral.hpp"

namespace dlb {

bool SuiteResult::all_pass() const {
    for (const auto& p : properties)
        if (!p.pass) return false;
    return true;
}

namespace {

PropertyResult prop(std::string name, double residual, double tolerance) {
    return PropertyResult{std::move(name), residual, tolerance, residual <= tolerance};
}

double rel_diff(const Cochain& a, const Cochain& b, double scale) {
    return max_abs_diff(a, b) / scale;
}

/// Deterministic sample of lambdas off the spectrum: real below 0, real
/// above 8, and complex with |Im| >= 0.1.
std::vector<Complex> sample_lambdas(int count, std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<Complex> out;
    out.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        switch (i % 3) {
            case 0:
                out.emplace_back(-0.05 - 12.0 * unit(rng), 0.0);
                break;
            case 1:
                out.emplace_back(8.05 + 12.0 * unit(rng), 0.0);
                break;
            default: {
                double im = 0.1 + 6.0 * unit(rng);
                if (unit(rng) < 0.5) im = -im;
                out.emplace_back(-6.0 + 20.0 * unit(rng), im);
                break;
            }
        }
    }
    return out;
}

}  // namespace

SuiteResult run_calculus_suite(int n, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    SuiteResult suite{"calculus", {}};
    Window w(n);
    Window inner(std::max(0, n - 2));

    // d^c after d^c vanishes
    double dd = 0.0;
    for (int i = 0; i < samples; ++i) {
        for (int degree = 0; degree <= 1; ++degree) {
            Cochain a = random_cochain(degree, w, rng);
            Cochain dda = coboundary(coboundary(a));
            double na = norm(a);
            dd = std::max(dd, norm(dda) / (na > 0.0 ? na : 1.0));
        }
    }
    suite.properties.push_back(prop("dd_zero", dd, 1e-14));

    // Leibniz rule for the degree pairs whose coboundaries stay in the complex
    double leibniz = 0.0;
    for (int i = 0; i < samples; ++i) {
        for (auto [ra, rb] : {std::pair{0, 0}, std::pair{0, 1}, std::pair{1, 0}}) {
            Cochain a = random_cochain(ra, w, rng);
            Cochain b = random_cochain(rb, w, rng);
            Cochain lhs = coboundary(cup(a, b));
            Complex sign = (ra % 2 == 0) ? Complex(1.0, 0.0) : Complex(-1.0, 0.0);
            Cochain rhs = lincomb(Complex(1.0, 0.0), cup(coboundary(a), b), sign,
                                  cup(a, coboundary(b)));
            leibniz = std::max(leibniz, rel_diff(lhs, rhs, norm(a) * norm(b) + 1.0));
        }
    }
    suite.properties.push_back(prop("leibniz_rule", leibniz, 1e-13));

    // explicit-formula delta^c against (-1)^r star^{-1} d^c star
    double two_path = 0.0;
    for (int i = 0; i < samples; ++i) {
        for (int degree = 1; degree <= 2; ++degree) {
            Cochain a = random_cochain(degree, w, rng);
            two_path = std::max(two_path,
                                rel_diff(codifferential(a), codifferential_compositional(a),
                                         norm(a) + 1.0));
        }
    }
    suite.properties.push_back(prop("two_path_codifferential", two_path, 1e-14));

    // (d a, b) = (a, delta b) for compactly supported forms
    double adj = 0.0;
    for (int i = 0; i < samples; ++i) {
        for (int degree = 0; degree <= 1; ++degree) {
            Cochain a = random_cochain(degree, inner, rng);
            Cochain b = random_cochain(degree + 1, inner, rng);
            Complex lhs = inner_product(coboundary(a), b);
            Complex rhs = inner_product(a, codifferential(b));
            adj = std::max(adj, std::abs(lhs - rhs) / (norm(a) * norm(b) + 1.0));
        }
    }
    suite.properties.push_back(prop("adjointness_compact", adj, 1e-13));

    // star after star is the signed shift by (1,1), exactly
    double star_shift = 0.0;
    Window basis_window(6);
    for (int degree = 0; degree <= 2; ++degree) {
        int count = component_count_for_degree(degree);
        double sign = (degree == 1) ? -1.0 : 1.0;  // (-1)^{r(2-r)}
        for (int c = 0; c < count; ++c) {
            for (int k = -4; k <= 4; ++k) {
                for (int s = -4; s <= 4; ++s) {
                    Cochain e = basis_element(degree, c, {k, s}, basis_window);
                    Cochain twice = star(star(e));
                    Cochain shifted = basis_element(degree, c, {k + 1, s + 1}, Window(7));
                    Cochain expected = lincomb(Complex(sign, 0.0), shifted,
                                               Complex(0.0, 0.0), shifted);
                    star_shift = std::max(star_shift, max_abs_diff(twice, expected));
                }
            }
        }
    }
    suite.properties.push_back(prop("star_signed_shift", star_shift, 0.0));

    double star_round = 0.0;
    for (int degree = 0; degree <= 2; ++degree) {
        for (int c = 0; c < component_count_for_degree(degree); ++c) {
            for (int k = -4; k <= 4; ++k) {
                for (int s = -4; s <= 4; ++s) {
                    Cochain e = basis_element(degree, c, {k, s}, basis_window);
                    star_round = std::max(star_round, max_abs_diff(star(star_inverse(e)), e));
                    star_round = std::max(star_round, max_abs_diff(star_inverse(star(e)), e));
                }
            }
        }
    }
    suite.properties.push_back(prop("star_inverse_roundtrip", star_round, 0.0));

    // -Delta^c of a delta is the 5-point pattern, every degree and component
    double stencil = 0.0;
    for (int degree = 0; degree <= 2; ++degree) {
        for (int c = 0; c < component_count_for_degree(degree); ++c) {
            Cochain d = basis_element(degree, c, {0, 0}, Window(3));
            Cochain ld = laplacian(d);
            for (int k = -4; k <= 4; ++k) {
                for (int s = -4; s <= 4; ++s) {
                    double expected = 0.0;
                    if (k == 0 && s == 0) expected = 4.0;
                    if (std::abs(k) + std::abs(s) == 1) expected = -1.0;
                    for (int cc = 0; cc < ld.component_count(); ++cc) {
                        double want = (cc == c) ? expected : 0.0;
                        stencil = std::max(stencil,
                                           std::abs(ld.at(cc, {k, s}) - Complex(want, 0.0)));
                    }
                }
            }
        }
    }
    suite.properties.push_back(prop("laplacian_delta_stencil", stencil, 0.0));

    // stencil Laplacian equals delta d + d delta composed from the primitives
    double two_path_lap = 0.0;
    for (int i = 0; i < samples; ++i) {
        for (int degree = 0; degree <= 2; ++degree) {
            Cochain a = random_cochain(degree, w, rng);
            Cochain composed = lincomb(Complex(1.0, 0.0), codifferential(coboundary(a)),
                                       Complex(1.0, 0.0), coboundary(codifferential(a)));
            two_path_lap =
                std::max(two_path_lap, rel_diff(laplacian(a), composed, norm(a) + 1.0));
        }
    }
    suite.properties.push_back(prop("laplacian_two_path", two_path_lap, 1e-13));

    // Green-formula residual against the explicit boundary sums (r = 0)
    double gf_boundary = 0.0;
    double gf_interior = 0.0;
    for (int i = 0; i < samples; ++i) {
        Cochain phi = random_cochain(0, w, rng);
        Cochain omega = random_cochain(1, w, rng);
        int trunc = n - 1;  // boundary-touching truncation
        Complex lhs = greens_formula_residual(phi, omega, trunc);
        Complex rhs = greens_boundary_sum_0form(phi, omega, trunc);
        gf_boundary = std::max(gf_boundary,
                               std::abs(lhs - rhs) / (norm(phi) * norm(omega) + 1.0));

        Cochain phi_in = random_cochain(0, inner, rng);
        Cochain omega_in = random_cochain(1, inner, rng);
        Complex res = greens_formula_residual(phi_in, omega_in, n);
        gf_interior = std::max(gf_interior,
                               std::abs(res) / (norm(phi_in) * norm(omega_in) + 1.0));
    }
    suite.properties.push_back(prop("greens_formula_boundary_sums", gf_boundary, 1e-13));
    suite.properties.push_back(prop("greens_formula_interior", gf_interior, 1e-13));

    return suite;
}

SuiteResult run_spectral_suite(int n, std::uint64_t seed, int samples) {
    std::mt19937_64 rng(seed);
    SuiteResult suite{"spectral", {}};
    Window w(n);
    Window inner(std::max(0, n - 2));

    double range_violation = 0.0;
    double min_rq = 8.0;
    for (int i = 0; i < samples; ++i) {
        Cochain a = random_cochain(i % 3, w, rng);
        double rq = rayleigh_quotient(a);
        range_violation = std::max(range_violation, std::max(rq - 8.0, -rq));
        min_rq = std::min(min_rq, rq);
    }
    suite.properties.push_back(prop("rayleigh_range", range_violation, 1e-12));
    suite.properties.push_back(prop("positivity", std::max(0.0, -min_rq),
                                    min_rq > 0.0 ? 0.0 : -1.0));

    double sa = 0.0;
    double bound = 0.0;
    for (int i = 0; i < samples; ++i) {
        int degree = i % 3;
        Cochain a = random_cochain(degree, inner, rng);
        Cochain b = random_cochain(degree, inner, rng);
        Complex lhs = inner_product(laplacian(a), b);
        Complex rhs = inner_product(a, laplacian(b));
        sa = std::max(sa, std::abs(lhs - rhs) / (norm(a) * norm(b) + 1.0));
        Complex quad = inner_product(laplacian(a), a);
        double den = inner_product(a, a).real();
        bound = std::max(bound, (std::abs(quad) - 8.0 * den) / den);
    }
    suite.properties.push_back(prop("self_adjointness_witness", sa, 1e-12));
    suite.properties.push_back(prop("norm_bound_8", bound, 1e-12));

    const double closed_form_n2 = 4.0 + 2.0 * std::sqrt(3.0);
    SpectralEstimate est2 = operator_norm_estimate(0, 2, 5000, 1e-13);
    suite.properties.push_back(
        prop("norm_estimate_n2", std::abs(est2.estimate - closed_form_n2), 1e-6));
    SpectralEstimate est2_deg1 = operator_norm_estimate(1, 2, 5000, 1e-13);
    suite.properties.push_back(
        prop("norm_estimate_n2_degree1", std::abs(est2_deg1.estimate - closed_form_n2), 1e-6));

    double mono_violation = 0.0;
    double ceiling = 0.0;
    double prev = 0.0;
    for (int nn : {2, 4, 8, 16, 32}) {
        SpectralEstimate est = operator_norm_estimate(0, nn, 20000, 1e-11);
        mono_violation = std::max(mono_violation, prev - est.estimate);
        ceiling = std::max(ceiling, est.estimate - 8.0);
        prev = est.estimate;
    }
    suite.properties.push_back(prop("norm_monotone_exhaustion", mono_violation, 1e-9));
    suite.properties.push_back(prop("norm_ceiling_8", ceiling, 1e-9));

    double decomposition = 0.0;
    for (int i = 0; i < samples; ++i) {
        Cochain omega = random_cochain(1, inner, rng);
        Cochain d = coboundary(omega);
        Cochain del = codifferential(omega);
        Complex lhs = inner_product(d, d) + inner_product(del, del);
        Complex rhs = inner_product(omega, laplacian(omega));
        double den = inner_product(omega, omega).real() + 1.0;
        decomposition = std::max(decomposition, std::abs(lhs - rhs) / den);
    }
    suite.properties.push_back(prop("decomposition_identity_1forms", decomposition, 1e-12));

    return suite;
}

SuiteResult run_green_suite(Complex lambda, std::uint64_t seed, const OracleConfig& config) {
    std::mt19937_64 rng(seed);
    SuiteResult suite{"green", {}};
    ResolventContext ctx = make_context(lambda);

    // decaying-root invariants over sampled lambdas
    double root_eq = 0.0;
    double root_mod = 0.0;
    for (Complex l : sample_lambdas(200, rng)) {
        ResolventContext c = make_context(l);
        root_eq = std::max(root_eq, std::abs(c.p * c.p - 2.0 * c.mu * c.p + 1.0));
        root_mod = std::max(root_mod, std::abs(c.p));
        root_eq = std::max(root_eq, std::abs(c.p * (c.mu - (c.p - c.mu)) - 1.0));
    }
    suite.properties.push_back(prop("root_equation", root_eq, 1e-13));
    suite.properties.push_back(prop("root_inside_unit_disk", root_mod < 1.0 ? 0.0 : root_mod, 0.0));

    double rejected = 0.0;
    for (Complex bad : {Complex(0.0, 0.0), Complex(8.0, 0.0), Complex(4.0, 0.0),
                        Complex(-1e-13, 0.0), Complex(8.0 + 1e-13, 0.0), Complex(4.0, 1e-13)}) {
        try {
            (void)make_context(bad);
            rejected = 1.0;
        } catch (const std::domain_error&) {
        }
    }
    suite.properties.push_back(prop("spectrum_rejection_band", rejected, 0.0));

    // Lemma-6 separable families, all four sign combinations
    double separable = 0.0;
    {
        std::uniform_int_distribution<int> coord(-10, 10);
        std::mt19937_64 mu_rng(seed + 1);
        auto mus = sample_lambdas(10, mu_rng);
        for (Complex l : mus) {
            ResolventContext c = make_context(l);
            for (int i = 0; i < 50; ++i) {
                int k = coord(rng), s = coord(rng);
                for (int sk : {+1, -1}) {
                    for (int ss : {+1, -1}) {
                        double scale = homogeneous_scale(k, s, c, sk, ss);
                        separable = std::max(
                            separable, std::abs(homogeneous_residual(k, s, c, sk, ss)) / scale);
                    }
                }
            }
        }
    }
    suite.properties.push_back(prop("separable_family_residual", separable, 1e-12));

    double phi_ids = 0.0;
    for (int k = 1; k <= 8; ++k) {
        Complex plus = phi_solution(k, +1, ctx);
        Complex minus = phi_solution(k, -1, ctx);
        phi_ids = std::max(phi_ids, std::abs(plus * minus - 1.0) /
                                        std::max(1.0, std::max(std::abs(plus), std::abs(minus))));
        phi_ids = std::max(phi_ids, std::abs(phi_solution(-k, +1, ctx) - minus) /
                                        std::max(1.0, std::abs(minus)));
    }
    for (int sign : {+1, -1}) {
        phi_ids = std::max(phi_ids, std::abs(phi_solution(2, sign, ctx) -
                                             2.0 * ctx.mu * phi_solution(1, sign, ctx) + 1.0));
    }
    suite.properties.push_back(prop("phi_solution_identities", phi_ids, 1e-12));

    double kernel_sym = 0.0;
    for (int k = -6; k <= 6; ++k) {
        for (int s = -6; s <= 6; ++s) {
            for (int m = -2; m <= 2; ++m) {
                for (int n2 = -2; n2 <= 2; ++n2) {
                    Complex g = green_component(k, s, m, n2, ctx);
                    kernel_sym = std::max(kernel_sym, std::abs(g - green_component(m, n2, k, s, ctx)));
                    kernel_sym = std::max(kernel_sym,
                                          std::abs(g - green_component(k - m, s - n2, 0, 0, ctx)));
                }
            }
        }
    }
    suite.properties.push_back(prop("kernel_symmetry_translation", kernel_sym, 0.0));

    suite.properties.push_back(
        prop("phi_plus_square_summable_ratio", std::norm(ctx.p), 1.0 - 1e-12));

    // oracles against each other
    Cochain column = truncated_resolvent_solve({0, 0}, ctx, config);
    double mutual = 0.0;
    for (int a = -6; a <= 6; ++a) {
        for (int b = -6; b <= 6; ++b) {
            Complex f = fourier_green(a, b, lambda, config);
            mutual = std::max(mutual,
                              std::abs(column.at(0, {a, b}) - f) / (1.0 + std::abs(f)));
        }
    }
    suite.properties.push_back(prop("oracle_mutual_agreement", mutual, 1e-8));

    // stencil applied to the solve column recovers the delta
    double inversion = 0.0;
    {
        Cochain lap = laplacian(column);
        int n = column.window().half_width;
        for (int k = -n + 1; k <= n - 1; ++k) {
            for (int s = -n + 1; s <= n - 1; ++s) {
                Complex rec = lap.at(0, {k, s}) - lambda * column.at(0, {k, s});
                Complex delta = (k == 0 && s == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                inversion = std::max(inversion, std::abs(rec - delta));
            }
        }
    }
    suite.properties.push_back(prop("solve_stencil_inversion", inversion, 10.0 * config.solver_tol));

    // resolvent fixed point through the solve-backed kernel
    double fixed_point = 0.0;
    double linearity = 0.0;
    {
        KernelFn kernel = solve_column_kernel(ctx, config);
        for (int i = 0; i < 5; ++i) {
            Cochain phi = random_cochain(0, Window(2), rng);
            Cochain out = resolvent_apply(phi, ctx, kernel);
            Cochain recovered = lincomb(Complex(1.0, 0.0), laplacian(out), -lambda, out);
            double scale = 0.0;
            for (int k = -2; k <= 2; ++k)
                for (int s = -2; s <= 2; ++s)
                    scale = std::max(scale, std::abs(phi.at(0, {k, s})));
            for (int k = -2; k <= 2; ++k) {
                for (int s = -2; s <= 2; ++s) {
                    fixed_point = std::max(fixed_point,
                                           std::abs(recovered.at(0, {k, s}) - phi.at(0, {k, s})) /
                                               std::max(1.0, scale));
                }
            }
        }
        Cochain f = random_cochain(0, Window(2), rng);
        Cochain g = random_cochain(0, Window(2), rng);
        Complex a(0.7, -0.3), b(-1.1, 0.2);
        Cochain combined = resolvent_apply(lincomb(a, f, b, g), ctx, kernel);
        Cochain parts = lincomb(a, resolvent_apply(f, ctx, kernel), b,
                                resolvent_apply(g, ctx, kernel));
        linearity = rel_diff(combined, parts, norm(f) + norm(g) + 1.0);
    }
    suite.properties.push_back(prop("resolvent_fixed_point", fixed_point, 1e-7));
    suite.properties.push_back(prop("resolvent_linearity", linearity, 1e-12));

    // closed-form residual vanishes where the whole stencil sits off-axis
    double off_axis = 0.0;
    {
        StencilResidualGrid grid = stencil_residual(ctx, 10);
        for (int k = -10; k <= 10; ++k) {
            for (int s = -10; s <= 10; ++s) {
                if (std::abs(k) < 2 || std::abs(s) < 2) continue;
                off_axis = std::max(off_axis, std::abs(grid.at(k, s)) / grid.scale_at(k, s));
            }
        }
    }
    suite.properties.push_back(prop("closed_form_offaxis_residual", off_axis, 1e-12));

    return suite;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

std::string suites_to_json(const std::vector<SuiteResult>& suites) {
    std::ostringstream out;
    out << "{\n  \"suites\": [\n";
    for (std::size_t i = 0; i < suites.size(); ++i) {
        const SuiteResult& suite = suites[i];
        out << "    {\"suite\": \"" << suite.suite << "\", \"pass\": "
            << (suite.all_pass() ? "true" : "false") << ", \"properties\": [\n";
        for (std::size_t j = 0; j < suite.properties.size(); ++j) {
            const PropertyResult& p = suite.properties[j];
            out << "      {\"name\": \"" << p.name << "\", \"residual\": " << fmt17(p.residual)
                << ", \"tolerance\": " << fmt17(p.tolerance)
                << ", \"pass\": " << (p.pass ? "true" : "false") << "}"
                << (j + 1 < suite.properties.size() ? "," : "") << "\n";
        }
        out << "    ]}" << (i + 1 < suites.size() ? "," : "") << "\n";
    }
    out << "  ]\n}\n";
    return out.str();
}

}  // namespace dlb
