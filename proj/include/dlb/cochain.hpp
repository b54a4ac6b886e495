// Discrete r-forms (cochains) on finite square windows of the integer lattice Z^2.
#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <stdexcept>
#include <vector>

namespace dlb {

using Complex = std::complex<double>;

struct GridIndex {
    int k = 0;  // lattice column
    int s = 0;  // lattice row

    friend bool operator==(const GridIndex&, const GridIndex&) = default;
};

/// Centered square window: all (k,s) with -n <= k,s <= n.
struct Window {
    int half_width = 0;

    explicit Window(int n) : half_width(n) {
        if (n < 0) throw std::invalid_argument("Window: half-width must be non-negative");
    }

    int extent() const { return 2 * half_width + 1; }
    std::size_t point_count() const {
        return static_cast<std::size_t>(extent()) * static_cast<std::size_t>(extent());
    }
    bool contains(GridIndex idx) const {
        return idx.k >= -half_width && idx.k <= half_width &&
               idx.s >= -half_width && idx.s <= half_width;
    }
    /// Row-major flat offset; s varies fastest.
    std::size_t offset(GridIndex idx) const {
        return static_cast<std::size_t>(idx.k + half_width) * static_cast<std::size_t>(extent()) +
               static_cast<std::size_t>(idx.s + half_width);
    }

    friend bool operator==(const Window&, const Window&) = default;
};

/// A discrete r-form with complex coefficients stored densely over a window.
/// Coefficients outside the window are zero (compact-support embedding).
/// One coefficient array for degrees 0 and 2, two (u, v) for degree 1.
class Cochain {
public:
    Cochain(int degree, Window window);

    /// Designated zero object used for images that leave the complex
    /// (coboundary of a 2-form, codifferential of a 0-form).
    static Cochain structural_zero_form(int degree, Window window);

    /// Discrete delta: 0-form with coefficient 1 at `site`, 0 elsewhere.
    static Cochain delta(GridIndex site, Window window);

    int degree() const { return degree_; }
    Window window() const { return window_; }
    int component_count() const { return static_cast<int>(components_.size()); }
    bool is_structural_zero() const { return structural_zero_; }

    /// Coefficient read; exactly zero outside the window.
    Complex at(int component, GridIndex idx) const {
        check_component(component);
        if (!window_.contains(idx)) return Complex(0.0, 0.0);
        return components_[static_cast<std::size_t>(component)][window_.offset(idx)];
    }

    /// In-window coefficient write (construction phase; cochains are treated
    /// as immutable values once handed out).
    void set(int component, GridIndex idx, Complex value);

    const std::vector<Complex>& component(int c) const {
        check_component(c);
        return components_[static_cast<std::size_t>(c)];
    }
    std::vector<Complex>& component_mutable(int c) {
        check_component(c);
        return components_[static_cast<std::size_t>(c)];
    }

    /// Largest |k| or |s| carrying a nonzero coefficient; -1 for the zero form.
    int support_half_width() const;

private:
    void check_component(int component) const {
        if (component < 0 || component >= component_count())
            throw std::invalid_argument("Cochain: component selector inconsistent with degree");
    }

    int degree_;
    Window window_;
    bool structural_zero_ = false;
    std::vector<std::vector<Complex>> components_;
};

/// Number of coefficient arrays per degree: 1, 2, 1 for r = 0, 1, 2.
int component_count_for_degree(int degree);

Cochain make_cochain(int degree, Window window, Complex fill);
Cochain make_cochain(int degree, Window window,
                     const std::function<Complex(int component, GridIndex)>& fill);

/// (a, b) = sum over all components of a_{k,s} * conj(b_{k,s}).
/// Windows may differ; out-of-window coefficients are zero.
Complex inner_product(const Cochain& a, const Cochain& b);

/// Same sum truncated to |k|,|s| <= n (the (.,.)_N pairing).
Complex inner_product_truncated(const Cochain& a, const Cochain& b, int n);

double norm(const Cochain& a);

/// Form with independent standard complex Gaussian coefficients.
Cochain random_cochain(int degree, Window window, std::mt19937_64& rng);

/// Basis form: coefficient 1 in the given component at `site`, 0 elsewhere.
Cochain basis_element(int degree, int component, GridIndex site, Window window);

}  // namespace dlb
