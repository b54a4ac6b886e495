// Acceptance gate: one line per criterion, exit 0 only if every line passes.
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "dlb/operators.hpp"
#include "dlb/oracle.hpp"
#include "dlb/spectral.hpp"
#include "dlb/verify.hpp"

using namespace dlb;

namespace {

bool g_all_pass = true;

void line(int criterion, const char* label, bool pass, const std::string& detail) {
    std::printf("%s  criterion %2d: %s (%s)\n", pass ? "PASS" : "FAIL", criterion, label,
                detail.c_str());
    if (!pass) g_all_pass = false;
}

const PropertyResult& find(const SuiteResult& suite, const std::string& name) {
    for (const PropertyResult& p : suite.properties)
        if (p.name == name) return p;
    std::fprintf(stderr, "acceptance: missing property %s in suite %s\n", name.c_str(),
                 suite.suite.c_str());
    std::exit(1);
}

bool all_pass(const SuiteResult& suite, const std::vector<std::string>& names, double* worst) {
    bool ok = true;
    *worst = 0.0;
    for (const std::string& name : names) {
        const PropertyResult& p = find(suite, name);
        ok = ok && p.pass;
        if (p.residual > *worst) *worst = p.residual;
    }
    return ok;
}

std::string fmt(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.3g", x);
    return buf;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

int run_cli(const std::string& args) {
    std::string cmd = std::string(DLB_CLI_PATH) + " " + args + " > /dev/null 2>&1";
    int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

int main() {
    const std::uint64_t seed = 20240901;
    double worst = 0.0;

    SuiteResult calculus = run_calculus_suite(8, seed, 100);
    bool c1 = all_pass(calculus,
                       {"dd_zero", "leibniz_rule", "two_path_codifferential",
                        "adjointness_compact"},
                       &worst);
    line(1, "calculus identities, 100 random cochains per degree, n=8", c1,
         "worst residual " + fmt(worst) + " <= 1e-13");

    bool c2 = all_pass(calculus, {"star_signed_shift", "star_inverse_roundtrip"}, &worst);
    line(2, "star double application and inverse, exact on all basis elements", c2,
         "worst residual " + fmt(worst) + " == 0");

    bool c3 = all_pass(calculus, {"laplacian_delta_stencil"}, &worst);
    line(3, "five-point stencil of the delta, exact, all degrees", c3,
         "worst residual " + fmt(worst) + " == 0");

    SuiteResult spectral = run_spectral_suite(8, seed, 1000);
    bool c4 = all_pass(spectral, {"rayleigh_range", "positivity", "self_adjointness_witness"},
                       &worst);
    line(4, "Rayleigh quotients of 1000 random forms in [0,8], positive, self-adjoint", c4,
         "worst residual " + fmt(worst) + " <= 1e-12");

    bool c5 = all_pass(spectral, {"norm_estimate_n2", "norm_estimate_n2_degree1",
                                  "norm_monotone_exhaustion", "norm_ceiling_8"},
                       &worst);
    SpectralEstimate big = operator_norm_estimate(0, 100, 30000, 1e-11);
    bool c5_big = big.estimate >= 7.995 && big.estimate <= 8.0 + 1e-9;
    line(5, "norm estimate: 4+2*sqrt(3) at n=2, monotone in n, >= 7.995 at n=100, <= 8",
         c5 && c5_big, "n=100 estimate " + fmt(big.estimate));

    OracleConfig config;
    SuiteResult green = run_green_suite(Complex(-4.0, 0.0), seed, config);
    bool c6 = all_pass(green, {"root_equation", "root_inside_unit_disk",
                               "spectrum_rejection_band"},
                       &worst);
    line(6, "root selection for 200 sampled lambda: recurrence root, |p|<1, band rejection",
         c6, "worst residual " + fmt(worst) + " <= 1e-13");

    bool c7 = all_pass(green, {"separable_family_residual", "phi_solution_identities"}, &worst);
    line(7, "separable sign-family solutions at 50 sites x 10 mu", c7,
         "worst residual " + fmt(worst) + " <= 1e-12");

    bool c8 = true;
    double c8_worst = 0.0;
    for (Complex lambda : {Complex(-4.0, 0.0), Complex(-1.0, 0.0), Complex(12.0, 0.0),
                           Complex(-2.0, 3.0)}) {
        ResolventContext ctx = make_context(lambda);
        Cochain column = truncated_resolvent_solve({0, 0}, ctx, config);
        for (int a = -6; a <= 6 && c8; ++a) {
            for (int b = -6; b <= 6; ++b) {
                Complex f = fourier_green(a, b, lambda, config);
                double err = std::abs(column.at(0, {a, b}) - f) / (1.0 + std::abs(f));
                if (err > c8_worst) c8_worst = err;
                if (err > 1e-8) {
                    c8 = false;
                    break;
                }
            }
        }
        Cochain lap = laplacian(column);
        int n = column.window().half_width;
        for (int k = -n + 1; k <= n - 1 && c8; ++k) {
            for (int s = -n + 1; s <= n - 1; ++s) {
                Complex rec = lap.at(0, {k, s}) - lambda * column.at(0, {k, s});
                Complex want = (k == 0 && s == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
                if (std::abs(rec - want) > 10.0 * config.solver_tol) {
                    c8 = false;
                    break;
                }
            }
        }
    }
    line(8, "oracle self-validation at 4 lambda values, offsets |a|,|b| <= 6", c8,
         "worst mutual disagreement " + fmt(c8_worst) + " <= 1e-8");

    bool c9 = all_pass(green, {"resolvent_fixed_point", "resolvent_linearity"}, &worst);
    line(9, "(-stencil - lambda) after resolvent_apply recovers random 0-forms", c9,
         "worst residual " + fmt(worst) + " <= 1e-7");

    bool c10 = all_pass(calculus,
                        {"greens_formula_boundary_sums", "greens_formula_interior"}, &worst);
    line(10, "summation-by-parts residual matches the explicit boundary sums", c10,
         "worst residual " + fmt(worst) + " <= 1e-13");

    // Criterion 11: audit report exists, is byte-deterministic, and the
    // closed form has zero stencil residual strictly off-axis while both
    // oracles mutually validate. Axis offsets are measured, not judged.
    bool c11 = true;
    {
        int rc1 = run_cli("report --lambda -4,0 --w 10 --out acc_rep1.json --csv acc_rep1.csv");
        int rc2 = run_cli("report --lambda -4,0 --w 10 --out acc_rep2.json --csv acc_rep2.csv");
        c11 = rc1 == 0 && rc2 == 0;
        if (c11) {
            c11 = read_file("acc_rep1.json") == read_file("acc_rep2.json") &&
                  read_file("acc_rep1.csv") == read_file("acc_rep2.csv") &&
                  !read_file("acc_rep1.json").empty();
        }
        ResidualReport report =
            compare_kernels(make_context(Complex(-4.0, 0.0)), 10, 1e-8, config);
        c11 = c11 && report.oracles_valid &&
              report.records.size() == 21u * 21u;
        for (const OffsetRecord& rec : report.records) {
            if (std::abs(rec.k) >= 2 && std::abs(rec.s) >= 2) {
                c11 = c11 &&
                      std::abs(rec.residual) <= 1e-12 * (1.0 + std::abs(rec.closed_form));
            }
        }
        std::remove("acc_rep1.json");
        std::remove("acc_rep1.csv");
        std::remove("acc_rep2.json");
        std::remove("acc_rep2.csv");
    }
    bool suites_clean = all_pass(green, {"oracle_mutual_agreement", "solve_stencil_inversion",
                                         "closed_form_offaxis_residual"},
                                 &worst);
    line(11, "audit report: deterministic bytes, off-axis residual zero, oracles agree",
         c11 && suites_clean, "w=10 grid, 441 offsets recorded");

    return g_all_pass ? 0 : 1;
}
