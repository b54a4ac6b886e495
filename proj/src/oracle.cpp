#include "dlb/oracle.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>
#include <cmath>
#include <cstdio>
#include <memory>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace dlb {

namespace {

Cochain solve_on_window(GridIndex site, const ResolventContext& ctx, int n) {
    using SpMat = Eigen::SparseMatrix<Complex>;
    const int extent = 2 * n + 1;
    const int size = extent * extent;
    auto flat = [&](int k, int s) { return (k + n) * extent + (s + n); };

    std::vector<Eigen::Triplet<Complex>> triplets;
    triplets.reserve(static_cast<std::size_t>(size) * 5);
    // Row-major assembly, fixed order.
    for (int k = -n; k <= n; ++k) {
        for (int s = -n; s <= n; ++s) {
            int row = flat(k, s);
            triplets.emplace_back(row, row, Complex(4.0, 0.0) - ctx.lambda);
            if (k > -n) triplets.emplace_back(row, flat(k - 1, s), Complex(-1.0, 0.0));
            if (k < n) triplets.emplace_back(row, flat(k + 1, s), Complex(-1.0, 0.0));
            if (s > -n) triplets.emplace_back(row, flat(k, s - 1), Complex(-1.0, 0.0));
            if (s < n) triplets.emplace_back(row, flat(k, s + 1), Complex(-1.0, 0.0));
        }
    }
    SpMat matrix(size, size);
    matrix.setFromTriplets(triplets.begin(), triplets.end());
    matrix.makeCompressed();

    Eigen::SparseLU<SpMat> solver;
    solver.compute(matrix);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("truncated_resolvent_solve: factorization failed");
    Eigen::VectorXcd rhs = Eigen::VectorXcd::Zero(size);
    rhs(flat(site.k, site.s)) = Complex(1.0, 0.0);
    Eigen::VectorXcd u = solver.solve(rhs);
    if (solver.info() != Eigen::Success)
        throw std::runtime_error("truncated_resolvent_solve: solve failed");

    Cochain out(0, Window(n));
    for (int k = -n; k <= n; ++k) {
        for (int s = -n; s <= n; ++s) out.set(0, {k, s}, u(flat(k, s)));
    }
    return out;
}

double edge_max(const Cochain& u) {
    int n = u.window().half_width;
    double m = 0.0;
    for (int k = -n; k <= n; ++k) {
        m = std::max(m, std::abs(u.at(0, {k, n})));
        m = std::max(m, std::abs(u.at(0, {k, -n})));
        m = std::max(m, std::abs(u.at(0, {n, k})));
        m = std::max(m, std::abs(u.at(0, {-n, k})));
    }
    return m;
}

}  // namespace

Cochain truncated_resolvent_solve(GridIndex site, const ResolventContext& ctx,
                                  const OracleConfig& config) {
    int n = std::max(config.n_trunc, 8);
    if (std::abs(site.k) > n / 2 || std::abs(site.s) > n / 2)
        throw std::invalid_argument("truncated_resolvent_solve: site outside half the window");
    const int cap = 512;
    while (true) {
        Cochain u = solve_on_window(site, ctx, n);
        double center = std::abs(u.at(0, site));
        if (edge_max(u) < 1e-10 * center) return u;
        if (n >= cap)
            throw std::runtime_error(
                "truncated_resolvent_solve: truncation cap reached with large edge values "
                "(lambda too close to the spectrum)");
        n = std::min(2 * n, cap);
    }
}

namespace {

Complex fourier_quad(int a, int b, Complex lambda, int n_points) {
    const double two_pi = 2.0 * std::numbers::pi;
    std::vector<double> cos_t(static_cast<std::size_t>(n_points));
    std::vector<Complex> ea(static_cast<std::size_t>(n_points)), eb(static_cast<std::size_t>(n_points));
    for (int j = 0; j < n_points; ++j) {
        double theta = -std::numbers::pi + two_pi * j / n_points;
        cos_t[static_cast<std::size_t>(j)] = std::cos(theta);
        ea[static_cast<std::size_t>(j)] = std::polar(1.0, a * theta);
        eb[static_cast<std::size_t>(j)] = std::polar(1.0, b * theta);
    }
    Complex sum(0.0, 0.0);
    for (int j = 0; j < n_points; ++j) {
        Complex row(0.0, 0.0);
        Complex partial = Complex(4.0, 0.0) - 2.0 * cos_t[static_cast<std::size_t>(j)] - lambda;
        for (int l = 0; l < n_points; ++l) {
            row += eb[static_cast<std::size_t>(l)] /
                   (partial - 2.0 * cos_t[static_cast<std::size_t>(l)]);
        }
        sum += ea[static_cast<std::size_t>(j)] * row;
    }
    return sum / (static_cast<double>(n_points) * static_cast<double>(n_points));
}

}  // namespace

Complex fourier_green(int a, int b, Complex lambda, const OracleConfig& config) {
    if (distance_to_spectrum(lambda) <= 1e-12)
        throw std::domain_error("fourier_green: lambda on or near the spectrum [0, 8]");
    int n_points = std::max(config.quadrature_points, 64);
    Complex prev = fourier_quad(a, b, lambda, n_points);
    while (n_points <= 1 << 15) {
        n_points *= 2;
        Complex cur = fourier_quad(a, b, lambda, n_points);
        if (std::abs(cur - prev) < 1e-10) return cur;
        prev = cur;
    }
    throw std::runtime_error("fourier_green: quadrature refinement did not converge");
}

KernelFn solve_column_kernel(const ResolventContext& ctx, const OracleConfig& config) {
    auto column = std::make_shared<Cochain>(truncated_resolvent_solve({0, 0}, ctx, config));
    return [column](int k, int s, int m, int n) {
        return column->at(0, {k - m, s - n});
    };
}

ResidualReport compare_kernels(const ResolventContext& ctx, int w, double tol,
                               const OracleConfig& config) {
    OracleConfig cfg = config;
    // Keep the source offsets well inside the solve window.
    cfg.n_trunc = std::max(cfg.n_trunc, 4 * w);
    Cochain column = truncated_resolvent_solve({0, 0}, ctx, cfg);

    ResidualReport report;
    report.lambda = ctx.lambda;
    report.w = w;
    report.tol = tol;
    report.config = cfg;
    report.oracles_valid = true;
    report.records.reserve((2 * static_cast<std::size_t>(w) + 1) *
                           (2 * static_cast<std::size_t>(w) + 1));
    for (int k = -w; k <= w; ++k) {
        for (int s = -w; s <= w; ++s) {
            OffsetRecord rec;
            rec.k = k;
            rec.s = s;
            rec.closed_form = green_component(k, s, 0, 0, ctx);
            rec.solve = column.at(0, {k, s});
            rec.fourier = fourier_green(k, s, ctx.lambda, cfg);
            Complex delta = (k == 0 && s == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            rec.residual = 4.0 * ctx.mu * rec.closed_form -
                           (green_component(k + 1, s, 0, 0, ctx) +
                            green_component(k - 1, s, 0, 0, ctx) +
                            green_component(k, s + 1, 0, 0, ctx) +
                            green_component(k, s - 1, 0, 0, ctx)) -
                           delta;
            if (std::abs(rec.solve - rec.fourier) > 1e-8 * (1.0 + std::abs(rec.fourier)))
                report.oracles_valid = false;
            rec.agree = std::abs(rec.closed_form - rec.solve) <= tol * (1.0 + std::abs(rec.solve)) &&
                        std::abs(rec.closed_form - rec.fourier) <=
                            tol * (1.0 + std::abs(rec.fourier));
            report.max_abs = std::max(report.max_abs, std::abs(rec.residual));
            report.records.push_back(rec);
        }
    }
    return report;
}

namespace {

std::string fmt17(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt17(Complex v) {
    return "[" + fmt17(v.real()) + ", " + fmt17(v.imag()) + "]";
}

}  // namespace

void write_report(const ResidualReport& report, std::ostream& out) {
    out << "{\n";
    out << "  \"lambda\": " << fmt17(report.lambda) << ",\n";
    out << "  \"w\": " << report.w << ",\n";
    out << "  \"tol\": " << fmt17(report.tol) << ",\n";
    out << "  \"config\": {\"n_trunc\": " << report.config.n_trunc
        << ", \"quadrature_points\": " << report.config.quadrature_points
        << ", \"solver_tol\": " << fmt17(report.config.solver_tol) << "},\n";
    out << "  \"oracles_valid\": " << (report.oracles_valid ? "true" : "false") << ",\n";
    out << "  \"max_abs\": " << fmt17(report.max_abs) << ",\n";
    out << "  \"records\": [\n";
    for (std::size_t i = 0; i < report.records.size(); ++i) {
        const OffsetRecord& r = report.records[i];
        out << "    {\"k\": " << r.k << ", \"s\": " << r.s
            << ", \"closed_form\": " << fmt17(r.closed_form) << ", \"solve\": " << fmt17(r.solve)
            << ", \"fourier\": " << fmt17(r.fourier) << ", \"residual\": " << fmt17(r.residual)
            << ", \"agree\": " << (r.agree ? "true" : "false") << "}"
            << (i + 1 < report.records.size() ? "," : "") << "\n";
    }
    out << "  ]\n";
    out << "}\n";
}

std::string report_to_string(const ResidualReport& report) {
    std::ostringstream out;
    write_report(report, out);
    return out.str();
}

void write_report_csv(const ResidualReport& report, std::ostream& out) {
    for (const OffsetRecord& r : report.records) {
        out << r.k << "," << r.s << "," << fmt17(std::abs(r.residual)) << ","
            << (r.agree ? 1 : 0) << "\n";
    }
}

}  // namespace dlb
