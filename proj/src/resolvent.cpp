#include "dlb/resolvent.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dlb {

namespace {

Complex pow_nonneg(Complex base, int e) {
    Complex out(1.0, 0.0);
    for (int i = 0; i < e; ++i) out *= base;
    return out;
}

}  // namespace

double distance_to_spectrum(Complex lambda) {
    double x = std::clamp(lambda.real(), 0.0, 8.0);
    return std::hypot(lambda.real() - x, lambda.imag());
}

ResolventContext make_context(Complex lambda) {
    double dist = distance_to_spectrum(lambda);
    if (dist <= 1e-12)
        throw std::domain_error("make_context: lambda within 1e-12 of the spectrum [0, 8]");
    Complex mu = 1.0 - lambda / 4.0;
    Complex r = -std::sqrt(mu * mu - 1.0);
    Complex p = mu + r;
    bool swapped = false;
    if (std::abs(p) > 1.0) {
        p = mu - r;  // the reciprocal root: (mu+R)(mu-R) = 1
        swapped = true;
    }
    return ResolventContext{lambda, mu, r, p, dist, swapped};
}

Complex phi_solution(int k, int sign, const ResolventContext& ctx) {
    Complex base = (sign >= 0) ? ctx.mu + ctx.r_mu : ctx.mu - ctx.r_mu;
    Complex recip = (sign >= 0) ? ctx.mu - ctx.r_mu : ctx.mu + ctx.r_mu;
    return (k >= 0) ? pow_nonneg(base, k) : pow_nonneg(recip, -k);
}

Complex homogeneous_residual(int k, int s, const ResolventContext& ctx, int sign_k, int sign_s) {
    auto phi = [&](int a, int b) {
        return phi_solution(a, sign_k, ctx) * phi_solution(b, sign_s, ctx);
    };
    return 0.25 * (phi(k + 1, s) + phi(k, s + 1) + phi(k - 1, s) + phi(k, s - 1)) -
           ctx.mu * phi(k, s);
}

double homogeneous_scale(int k, int s, const ResolventContext& ctx, int sign_k, int sign_s) {
    auto phi = [&](int a, int b) {
        return phi_solution(a, sign_k, ctx) * phi_solution(b, sign_s, ctx);
    };
    double scale = std::abs(ctx.mu * phi(k, s));
    scale = std::max(scale, 0.25 * std::abs(phi(k + 1, s)));
    scale = std::max(scale, 0.25 * std::abs(phi(k, s + 1)));
    scale = std::max(scale, 0.25 * std::abs(phi(k - 1, s)));
    scale = std::max(scale, 0.25 * std::abs(phi(k, s - 1)));
    return scale;
}

Complex green_component(int k, int s, int m, int n, const ResolventContext& ctx) {
    // With the decaying root p, the effective R satisfies p = mu + R.
    Complex r_eff = ctx.p - ctx.mu;
    int e;
    if ((k == m && s > n) || (k > m && s == n)) {
        e = std::abs(k + 1 - m) + std::abs(s + 1 - n);
    } else if ((k == m && s < n) || (k < m && s == n)) {
        e = std::abs(k - 1 - m) + std::abs(s - 1 - n);
    } else {
        e = std::abs(k - m) + std::abs(s - n);
    }
    return -1.0 / (4.0 * r_eff) * pow_nonneg(ctx.p, e);
}

Complex green_for_1form(int component, int k, int s, int m, int n, const ResolventContext& ctx) {
    if (component != 0 && component != 1)
        throw std::invalid_argument("green_for_1form: component must be 0 (u) or 1 (v)");
    return green_component(k, s, m, n, ctx);
}

Complex green_for_2form(int k, int s, int m, int n, const ResolventContext& ctx) {
    return green_component(k, s, m, n, ctx);
}

Complex StencilResidualGrid::at(int k, int s) const {
    std::size_t extent = static_cast<std::size_t>(2 * w + 1);
    return residual[static_cast<std::size_t>(k + w) * extent + static_cast<std::size_t>(s + w)];
}

double StencilResidualGrid::scale_at(int k, int s) const {
    std::size_t extent = static_cast<std::size_t>(2 * w + 1);
    return scale[static_cast<std::size_t>(k + w) * extent + static_cast<std::size_t>(s + w)];
}

StencilResidualGrid stencil_residual(const ResolventContext& ctx, int w) {
    if (w < 2) throw std::invalid_argument("stencil_residual: w >= 2");
    StencilResidualGrid grid;
    grid.w = w;
    grid.residual.reserve((2 * static_cast<std::size_t>(w) + 1) * (2 * static_cast<std::size_t>(w) + 1));
    grid.scale.reserve(grid.residual.capacity());
    for (int k = -w; k <= w; ++k) {
        for (int s = -w; s <= w; ++s) {
            Complex g = green_component(k, s, 0, 0, ctx);
            Complex gt = green_component(k + 1, s, 0, 0, ctx);
            Complex gs = green_component(k - 1, s, 0, 0, ctx);
            Complex gu = green_component(k, s + 1, 0, 0, ctx);
            Complex gd = green_component(k, s - 1, 0, 0, ctx);
            Complex delta = (k == 0 && s == 0) ? Complex(1.0, 0.0) : Complex(0.0, 0.0);
            Complex res = 4.0 * ctx.mu * g - (gt + gs + gu + gd) - delta;
            double scale = std::abs(4.0 * ctx.mu * g) + std::abs(gt) + std::abs(gs) +
                           std::abs(gu) + std::abs(gd);
            grid.residual.push_back(res);
            grid.scale.push_back(scale);
            grid.max_abs = std::max(grid.max_abs, std::abs(res));
        }
    }
    return grid;
}

Cochain resolvent_apply(const Cochain& phi, const ResolventContext&, const KernelFn& kernel) {
    if (phi.degree() != 0)
        throw std::invalid_argument("resolvent_apply: expects a 0-form");
    int supp = phi.support_half_width();
    if (supp < 0) return Cochain(0, phi.window());

    // Collect the support once.
    struct Source {
        int m, n;
        Complex value;
    };
    std::vector<Source> sources;
    for (int m = -supp; m <= supp; ++m) {
        for (int n = -supp; n <= supp; ++n) {
            Complex v = phi.at(0, {m, n});
            if (v != Complex(0.0, 0.0)) sources.push_back({m, n, v});
        }
    }
    auto coeff = [&](int k, int s) {
        Complex sum(0.0, 0.0);
        for (const Source& src : sources) sum += kernel(k, s, src.m, src.n) * src.value;
        return sum;
    };

    const int cap = supp + 600;
    int w = supp + 2;
    double global_max = 0.0;
    for (int k = -w; k <= w; ++k)
        for (int s = -w; s <= w; ++s) global_max = std::max(global_max, std::abs(coeff(k, s)));
    while (true) {
        // contribution of the next shell
        int ring = w + 1;
        double ring_max = 0.0;
        for (int k = -ring; k <= ring; ++k) {
            ring_max = std::max(ring_max, std::abs(coeff(k, ring)));
            ring_max = std::max(ring_max, std::abs(coeff(k, -ring)));
        }
        for (int s = -ring + 1; s <= ring - 1; ++s) {
            ring_max = std::max(ring_max, std::abs(coeff(ring, s)));
            ring_max = std::max(ring_max, std::abs(coeff(-ring, s)));
        }
        global_max = std::max(global_max, ring_max);
        if (ring_max <= 1e-12 * global_max) break;
        w = ring;
        if (w > cap)
            throw std::runtime_error("resolvent_apply: shell expansion did not converge");
    }

    Cochain out(0, Window(w));
    for (int k = -w; k <= w; ++k) {
        for (int s = -w; s <= w; ++s) out.set(0, {k, s}, coeff(k, s));
    }
    return out;
}

Cochain resolvent_apply(const Cochain& phi, const ResolventContext& ctx) {
    return resolvent_apply(phi, ctx, [&ctx](int k, int s, int m, int n) {
        return green_component(k, s, m, n, ctx);
    });
}

}  // namespace dlb
