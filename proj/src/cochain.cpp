#include "dlb/cochain.hpp"

#include <cmath>

namespace dlb {

int component_count_for_degree(int degree) {
    switch (degree) {
        case 0:
        case 2:
            return 1;
        case 1:
            return 2;
        default:
            throw std::invalid_argument("degree must be 0, 1 or 2");
    }
}

Cochain::Cochain(int degree, Window window) : degree_(degree), window_(window) {
    int count = component_count_for_degree(degree);
    components_.assign(static_cast<std::size_t>(count),
                       std::vector<Complex>(window.point_count(), Complex(0.0, 0.0)));
}

Cochain Cochain::structural_zero_form(int degree, Window window) {
    Cochain z(degree, window);
    z.structural_zero_ = true;
    return z;
}

Cochain Cochain::delta(GridIndex site, Window window) {
    Cochain d(0, window);
    if (window.contains(site)) d.set(0, site, Complex(1.0, 0.0));
    return d;
}

void Cochain::set(int component, GridIndex idx, Complex value) {
    check_component(component);
    if (!window_.contains(idx))
        throw std::out_of_range("Cochain::set: index outside window");
    if (!std::isfinite(value.real()) || !std::isfinite(value.imag()))
        throw std::invalid_argument("Cochain::set: non-finite coefficient");
    components_[static_cast<std::size_t>(component)][window_.offset(idx)] = value;
}

int Cochain::support_half_width() const {
    int supp = -1;
    int n = window_.half_width;
    for (int c = 0; c < component_count(); ++c) {
        for (int k = -n; k <= n; ++k) {
            for (int s = -n; s <= n; ++s) {
                if (at(c, {k, s}) != Complex(0.0, 0.0)) {
                    int m = std::max(std::abs(k), std::abs(s));
                    if (m > supp) supp = m;
                }
            }
        }
    }
    return supp;
}

Cochain make_cochain(int degree, Window window, Complex fill) {
    if (!std::isfinite(fill.real()) || !std::isfinite(fill.imag()))
        throw std::invalid_argument("make_cochain: non-finite fill value");
    Cochain out(degree, window);
    for (int c = 0; c < out.component_count(); ++c) {
        auto& data = out.component_mutable(c);
        for (auto& v : data) v = fill;
    }
    return out;
}

Cochain make_cochain(int degree, Window window,
                     const std::function<Complex(int, GridIndex)>& fill) {
    Cochain out(degree, window);
    int n = window.half_width;
    for (int c = 0; c < out.component_count(); ++c) {
        for (int k = -n; k <= n; ++k) {
            for (int s = -n; s <= n; ++s) {
                out.set(c, {k, s}, fill(c, {k, s}));
            }
        }
    }
    return out;
}

Complex inner_product(const Cochain& a, const Cochain& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("inner_product: degree mismatch");
    int n = std::max(a.window().half_width, b.window().half_width);
    return inner_product_truncated(a, b, n);
}

Complex inner_product_truncated(const Cochain& a, const Cochain& b, int n) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("inner_product: degree mismatch");
    Complex sum(0.0, 0.0);
    for (int c = 0; c < a.component_count(); ++c) {
        for (int k = -n; k <= n; ++k) {
            for (int s = -n; s <= n; ++s) {
                sum += a.at(c, {k, s}) * std::conj(b.at(c, {k, s}));
            }
        }
    }
    return sum;
}

double norm(const Cochain& a) {
    return std::sqrt(std::max(0.0, inner_product(a, a).real()));
}

Cochain basis_element(int degree, int component, GridIndex site, Window window) {
    Cochain out(degree, window);
    if (component < 0 || component >= out.component_count())
        throw std::invalid_argument("basis_element: component selector inconsistent with degree");
    out.set(component, site, Complex(1.0, 0.0));
    return out;
}

Cochain random_cochain(int degree, Window window, std::mt19937_64& rng) {
    std::normal_distribution<double> gauss(0.0, 1.0);
    return make_cochain(degree, window, [&](int, GridIndex) {
        double re = gauss(rng);
        double im = gauss(rng);
        return Complex(re, im);
    });
}

}  // namespace dlb
