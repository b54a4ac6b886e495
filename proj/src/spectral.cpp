#include "dlb/spectral.hpp"

#include <cmath>
#include <stdexcept>

#include "dlb/operators.hpp"

namespace dlb {

double rayleigh_quotient(const Cochain& form) {
    Complex den = inner_product(form, form);
    if (den.real() <= 0.0)
        throw std::invalid_argument("rayleigh_quotient: zero form");
    Complex num = inner_product(laplacian(form), form);
    if (std::abs(num.imag()) > 1e-12 * den.real())
        throw std::runtime_error("rayleigh_quotient: self-adjointness witness violated");
    return num.real() / den.real();
}

namespace {

// Flat real state for the power iteration; the stencil is real and the top
// Dirichlet eigenvector is real, so no complex arithmetic is needed.
struct FlatState {
    int n;
    int extent;
    std::vector<std::vector<double>> comps;

    double& at(int c, int k, int s) {
        return comps[static_cast<std::size_t>(c)]
                    [static_cast<std::size_t>(k + n) * static_cast<std::size_t>(extent) +
                     static_cast<std::size_t>(s + n)];
    }
    double get(int c, int k, int s) const {
        if (k < -n || k > n || s < -n || s > n) return 0.0;  // Dirichlet truncation
        return comps[static_cast<std::size_t>(c)]
                    [static_cast<std::size_t>(k + n) * static_cast<std::size_t>(extent) +
                     static_cast<std::size_t>(s + n)];
    }
};

void apply_stencil(const FlatState& x, FlatState& y) {
    for (std::size_t c = 0; c < x.comps.size(); ++c) {
        for (int k = -x.n; k <= x.n; ++k) {
            for (int s = -x.n; s <= x.n; ++s) {
                y.at(static_cast<int>(c), k, s) =
                    4.0 * x.get(static_cast<int>(c), k, s) - x.get(static_cast<int>(c), k + 1, s) -
                    x.get(static_cast<int>(c), k, s + 1) - x.get(static_cast<int>(c), k - 1, s) -
                    x.get(static_cast<int>(c), k, s - 1);
            }
        }
    }
}

double dot(const FlatState& a, const FlatState& b) {
    double sum = 0.0;
    for (std::size_t c = 0; c < a.comps.size(); ++c) {
        for (std::size_t i = 0; i < a.comps[c].size(); ++i) sum += a.comps[c][i] * b.comps[c][i];
    }
    return sum;
}

void scale(FlatState& a, double factor) {
    for (auto& comp : a.comps)
        for (auto& v : comp) v *= factor;
}

}  // namespace

SpectralEstimate operator_norm_estimate(int degree, int n, int max_iter, double tol) {
    if (n < 1 || max_iter < 1 || tol <= 0.0)
        throw std::invalid_argument("operator_norm_estimate: need n >= 1, max_iter >= 1, tol > 0");
    int count = component_count_for_degree(degree);
    int extent = 2 * n + 1;
    FlatState x{n, extent, std::vector<std::vector<double>>(
                               static_cast<std::size_t>(count),
                               std::vector<double>(static_cast<std::size_t>(extent) *
                                                   static_cast<std::size_t>(extent)))};
    FlatState y = x;
    for (int c = 0; c < count; ++c) {
        for (int k = -n; k <= n; ++k) {
            for (int s = -n; s <= n; ++s) {
                x.at(c, k, s) = ((k + s) % 2 == 0) ? 1.0 : -1.0;  // checkerboard start
            }
        }
    }
    scale(x, 1.0 / std::sqrt(dot(x, x)));

    SpectralEstimate result;
    double rq_prev = 0.0;
    for (int iter = 1; iter <= max_iter; ++iter) {
        apply_stencil(x, y);
        double rq = dot(x, y);  // x is unit
        result.iterations = iter;
        result.final_increment = std::abs(rq - rq_prev);
        result.estimate = rq;
        if (iter > 1 && result.final_increment < tol) break;
        rq_prev = rq;
        double ny = std::sqrt(dot(y, y));
        if (ny == 0.0) break;
        scale(y, 1.0 / ny);
        std::swap(x, y);
    }
    return result;
}

OperatorReport positivity_check(int samples, int n, std::uint64_t seed) {
    if (samples < 1) throw std::invalid_argument("positivity_check: samples >= 1");
    std::mt19937_64 rng(seed);
    OperatorReport report;
    bool first = true;
    for (int i = 0; i < samples; ++i) {
        for (int degree = 0; degree <= 2; ++degree) {
            Cochain a = random_cochain(degree, Window(n), rng);
            Complex den = inner_product(a, a);
            Complex num = inner_product(laplacian(a), a);
            if (std::abs(num.imag()) > 1e-12 * den.real())
                throw std::runtime_error("positivity_check: non-real quadratic form");
            if (num.real() <= 0.0)
                throw std::runtime_error("positivity_check: non-positive Rayleigh quotient");
            double rq = num.real() / den.real();
            if (first || rq < report.min_rayleigh_quotient) {
                report.min_rayleigh_quotient = rq;
                first = false;
            }
            double im = std::abs(num.imag());
            if (im > report.max_abs_residual) report.max_abs_residual = im;
        }
    }
    return report;
}

}  // namespace dlb
