#include "dlb/operators.hpp"

#include <algorithm>

namespace dlb {

namespace {

Cochain scaled(const Cochain& form, Complex factor) {
    Cochain out = form;
    for (int c = 0; c < out.component_count(); ++c) {
        for (auto& v : out.component_mutable(c)) v *= factor;
    }
    return out;
}

int clamp_degree(int degree) { return std::clamp(degree, 0, 2); }

}  // namespace

Cochain coboundary(const Cochain& form) {
    Window grown(form.window().half_width + 1);
    if (form.is_structural_zero())
        return Cochain::structural_zero_form(form.degree(), grown);
    int n = grown.half_width;
    switch (form.degree()) {
        case 0: {
            Cochain out(1, grown);
            for (int k = -n; k <= n; ++k) {
                for (int s = -n; s <= n; ++s) {
                    // <e1, d phi> = Delta_k phi, <e2, d phi> = Delta_s phi
                    out.set(0, {k, s}, form.at(0, {k + 1, s}) - form.at(0, {k, s}));
                    out.set(1, {k, s}, form.at(0, {k, s + 1}) - form.at(0, {k, s}));
                }
            }
            return out;
        }
        case 1: {
            Cochain out(2, grown);
            for (int k = -n; k <= n; ++k) {
                for (int s = -n; s <= n; ++s) {
                    // <Omega, d omega> = Delta_k v - Delta_s u
                    Complex dv = form.at(1, {k + 1, s}) - form.at(1, {k, s});
                    Complex du = form.at(0, {k, s + 1}) - form.at(0, {k, s});
                    out.set(0, {k, s}, dv - du);
                }
            }
            return out;
        }
        case 2:
            // d^c of a 2-form leaves the complex
            return Cochain::structural_zero_form(2, form.window());
        default:
            throw std::invalid_argument("coboundary: invalid degree");
    }
}

Cochain cup(const Cochain& a, const Cochain& b) {
    int total = clamp_degree(a.degree() + b.degree());
    Window w(std::max(a.window().half_width, b.window().half_width));
    if (a.is_structural_zero() || b.is_structural_zero())
        return Cochain::structural_zero_form(total, w);
    if (a.degree() + b.degree() > 2)
        throw std::invalid_argument("cup: total degree exceeds 2");

    Cochain out(a.degree() + b.degree(), w);
    int n = w.half_width;
    for (int k = -n; k <= n; ++k) {
        for (int s = -n; s <= n; ++s) {
            GridIndex p{k, s};
            switch (a.degree() * 4 + b.degree()) {
                case 0:  // 0 cup 0: x cup x = x
                    out.set(0, p, a.at(0, p) * b.at(0, p));
                    break;
                case 1:  // 0 cup 1: x cup e1 = e1, x cup e2 = e2
                    out.set(0, p, a.at(0, p) * b.at(0, p));
                    out.set(1, p, a.at(0, p) * b.at(1, p));
                    break;
                case 4:  // 1 cup 0: e1 cup x^{tau k,s} = e1, e2 cup x^{k,tau s} = e2
                    out.set(0, p, a.at(0, p) * b.at(0, {k + 1, s}));
                    out.set(1, p, a.at(1, p) * b.at(0, {k, s + 1}));
                    break;
                case 2:  // 0 cup 2: x cup Omega = Omega
                    out.set(0, p, a.at(0, p) * b.at(0, p));
                    break;
                case 8:  // 2 cup 0: Omega cup x^{tau k,tau s} = Omega
                    out.set(0, p, a.at(0, p) * b.at(0, {k + 1, s + 1}));
                    break;
                case 5:  // 1 cup 1: e1 cup e2^{tau k,s} = Omega, e2 cup e1^{k,tau s} = -Omega
                    out.set(0, p,
                            a.at(0, p) * b.at(1, {k + 1, s}) - a.at(1, p) * b.at(0, {k, s + 1}));
                    break;
                default:
                    throw std::logic_error("cup: unreachable degree pair");
            }
        }
    }
    return out;
}

Cochain star(const Cochain& form) {
    if (form.is_structural_zero())
        return Cochain::structural_zero_form(clamp_degree(2 - form.degree()), form.window());
    switch (form.degree()) {
        case 0: {
            Cochain out(2, form.window());
            out.component_mutable(0) = form.component(0);
            return out;
        }
        case 1: {
            Window grown(form.window().half_width + 1);
            Cochain out(1, grown);
            int n = grown.half_width;
            for (int k = -n; k <= n; ++k) {
                for (int s = -n; s <= n; ++s) {
                    out.set(0, {k, s}, -form.at(1, {k, s - 1}));
                    out.set(1, {k, s}, form.at(0, {k - 1, s}));
                }
            }
            return out;
        }
        case 2: {
            Window grown(form.window().half_width + 1);
            Cochain out(0, grown);
            int n = grown.half_width;
            for (int k = -n; k <= n; ++k) {
                for (int s = -n; s <= n; ++s) {
                    out.set(0, {k, s}, form.at(0, {k - 1, s - 1}));
                }
            }
            return out;
        }
        default:
            throw std::invalid_argument("star: invalid degree");
    }
}

Cochain star_inverse(const Cochain& form) {
    if (form.is_structural_zero())
        return Cochain::structural_zero_form(clamp_degree(2 - form.degree()), form.window());
    switch (form.degree()) {
        case 2: {
            Cochain out(0, form.window());
            out.component_mutable(0) = form.component(0);
            return out;
        }
        case 1: {
            Window grown(form.window().half_width + 1);
            Cochain out(1, grown);
            int n = grown.half_width;
            for (int k = -n; k <= n; ++k) {
                for (int s = -n; s <= n; ++s) {
                    out.set(0, {k, s}, form.at(1, {k + 1, s}));
                    out.set(1, {k, s}, -form.at(0, {k, s + 1}));
                }
            }
            return out;
        }
        case 0: {
            Window grown(form.window().half_width + 1);
            Cochain out(2, grown);
            int n = grown.half_width;
            for (int k = -n; k <= n; ++k) {
                for (int s = -n; s <= n; ++s) {
                    out.set(0, {k, s}, form.at(0, {k + 1, s + 1}));
                }
            }
            return out;
        }
        default:
            throw std::invalid_argument("star_inverse: invalid degree");
    }
}

Cochain codifferential(const Cochain& form) {
    Window grown(form.window().half_width + 1);
    if (form.is_structural_zero())
        return Cochain::structural_zero_form(form.degree(), grown);
    int n = grown.half_width;
    switch (form.degree()) {
        case 0:
            // delta^c of a 0-form leaves the complex
            return Cochain::structural_zero_form(0, form.window());
        case 1: {
            Cochain out(0, grown);
            for (int k = -n; k <= n; ++k) {
                for (int s = -n; s <= n; ++s) {
                    // -Delta_k u_{sigma k,s} - Delta_s v_{k,sigma s}
                    Complex du = form.at(0, {k, s}) - form.at(0, {k - 1, s});
                    Complex dv = form.at(1, {k, s}) - form.at(1, {k, s - 1});
                    out.set(0, {k, s}, -du - dv);
                }
            }
            return out;
        }
        case 2: {
            Cochain out(1, grown);
            for (int k = -n; k <= n; ++k) {
                for (int s = -n; s <= n; ++s) {
                    // <e1, delta eta> = Delta_s eta_{k,sigma s}
                    // <e2, delta eta> = -Delta_k eta_{sigma k,s}
                    out.set(0, {k, s}, form.at(0, {k, s}) - form.at(0, {k, s - 1}));
                    out.set(1, {k, s}, -(form.at(0, {k, s}) - form.at(0, {k - 1, s})));
                }
            }
            return out;
        }
        default:
            throw std::invalid_argument("codifferential: invalid degree");
    }
}

Cochain codifferential_compositional(const Cochain& form) {
    if (form.degree() == 0 || form.is_structural_zero())
        return Cochain::structural_zero_form(form.is_structural_zero() ? form.degree() : 0,
                                             form.window());
    Complex sign = (form.degree() % 2 == 1) ? Complex(-1.0, 0.0) : Complex(1.0, 0.0);
    return scaled(star_inverse(coboundary(star(form))), sign);
}

Cochain laplacian(const Cochain& form) {
    Window grown(form.window().half_width + 1);
    if (form.is_structural_zero())
        return Cochain::structural_zero_form(form.degree(), grown);
    Cochain out(form.degree(), grown);
    int n = grown.half_width;
    for (int c = 0; c < form.component_count(); ++c) {
        for (int k = -n; k <= n; ++k) {
            for (int s = -n; s <= n; ++s) {
                Complex v = 4.0 * form.at(c, {k, s}) - form.at(c, {k + 1, s}) -
                            form.at(c, {k, s + 1}) - form.at(c, {k - 1, s}) -
                            form.at(c, {k, s - 1});
                out.set(c, {k, s}, v);
            }
        }
    }
    return out;
}

Complex greens_formula_residual(const Cochain& a, const Cochain& b, int n) {
    if (b.degree() != a.degree() + 1)
        throw std::invalid_argument("greens_formula_residual: degrees must be r and r+1");
    Cochain da = coboundary(a);
    Cochain db = codifferential(b);
    return inner_product_truncated(da, b, n) - inner_product_truncated(a, db, n);
}

Complex greens_boundary_sum_0form(const Cochain& phi, const Cochain& omega, int n) {
    if (phi.degree() != 0 || omega.degree() != 1)
        throw std::invalid_argument("greens_boundary_sum_0form: expects a 0-form and a 1-form");
    Complex sum(0.0, 0.0);
    for (int k = -n; k <= n; ++k) {
        sum += phi.at(0, {k, n + 1}) * std::conj(omega.at(1, {k, n}));
        sum -= phi.at(0, {k, -n}) * std::conj(omega.at(1, {k, -n - 1}));
    }
    for (int s = -n; s <= n; ++s) {
        sum += phi.at(0, {n + 1, s}) * std::conj(omega.at(0, {n, s}));
        sum -= phi.at(0, {-n, s}) * std::conj(omega.at(0, {-n - 1, s}));
    }
    return sum;
}

Cochain lincomb(Complex ca, const Cochain& a, Complex cb, const Cochain& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("lincomb: degree mismatch");
    Window w(std::max(a.window().half_width, b.window().half_width));
    Cochain out(a.degree(), w);
    int n = w.half_width;
    for (int c = 0; c < out.component_count(); ++c) {
        for (int k = -n; k <= n; ++k) {
            for (int s = -n; s <= n; ++s) {
                out.set(c, {k, s}, ca * a.at(c, {k, s}) + cb * b.at(c, {k, s}));
            }
        }
    }
    return out;
}

double max_abs_diff(const Cochain& a, const Cochain& b) {
    if (a.degree() != b.degree())
        throw std::invalid_argument("max_abs_diff: degree mismatch");
    int n = std::max(a.window().half_width, b.window().half_width);
    double m = 0.0;
    for (int c = 0; c < a.component_count(); ++c) {
        for (int k = -n; k <= n; ++k) {
            for (int s = -n; s <= n; ++s) {
                m = std::max(m, std::abs(a.at(c, {k, s}) - b.at(c, {k, s})));
            }
        }
    }
    return m;
}

Cochain crop(const Cochain& form, Window target) {
    Cochain out(form.degree(), target);
    int n = target.half_width;
    for (int c = 0; c < form.component_count(); ++c) {
        for (int k = -n; k <= n; ++k) {
            for (int s = -n; s <= n; ++s) {
                out.set(c, {k, s}, form.at(c, {k, s}));
            }
        }
    }
    return out;
}

}  // namespace dlb
