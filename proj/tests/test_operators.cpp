#include <doctest.h>

#include <cmath>

#include "dlb/operators.hpp"

using namespace dlb;

namespace {
std::mt19937_64 rng(101);
}

TEST_CASE("coboundary of a delta is the forward-difference pattern") {
    Cochain d = Cochain::delta({0, 0}, Window(1));
    Cochain dd = coboundary(d);
    CHECK(dd.degree() == 1);
    CHECK(dd.window().half_width == 2);
    CHECK(dd.at(0, {-1, 0}) == Complex(1.0, 0.0));
    CHECK(dd.at(0, {0, 0}) == Complex(-1.0, 0.0));
    CHECK(dd.at(1, {0, -1}) == Complex(1.0, 0.0));
    CHECK(dd.at(1, {0, 0}) == Complex(-1.0, 0.0));
    int nonzero = 0;
    for (int c = 0; c < 2; ++c)
        for (int k = -2; k <= 2; ++k)
            for (int s = -2; s <= 2; ++s)
                if (dd.at(c, {k, s}) != Complex(0.0, 0.0)) ++nonzero;
    CHECK(nonzero == 4);
}

TEST_CASE("coboundary of a constant vanishes away from the window edge") {
    Cochain constant = make_cochain(0, Window(4), Complex(1.0, 0.0));
    Cochain d = coboundary(constant);
    for (int k = -3; k <= 3; ++k) {
        for (int s = -3; s <= 3; ++s) {
            CHECK(d.at(0, {k, s}) == Complex(0.0, 0.0));
            CHECK(d.at(1, {k, s}) == Complex(0.0, 0.0));
        }
    }
}

TEST_CASE("d after d vanishes, including the structural 2-form case") {
    Cochain d = Cochain::delta({0, 0}, Window(1));
    Cochain dd = coboundary(coboundary(d));
    CHECK(dd.degree() == 2);
    CHECK(norm(dd) == 0.0);

    Cochain eta = random_cochain(2, Window(2), rng);
    Cochain deta = coboundary(eta);
    CHECK(deta.is_structural_zero());
    CHECK(norm(deta) == 0.0);

    for (int degree = 0; degree <= 1; ++degree) {
        Cochain a = random_cochain(degree, Window(4), rng);
        CHECK(norm(coboundary(coboundary(a))) <= 1e-14 * norm(a));
    }
}

TEST_CASE("cup product basis table") {
    Window w(2);
    Cochain x00 = basis_element(0, 0, {0, 0}, w);
    Cochain e1_00 = basis_element(1, 0, {0, 0}, w);
    Cochain e2_00 = basis_element(1, 1, {0, 0}, w);
    Cochain e1_01 = basis_element(1, 0, {0, 1}, w);

    // x^{0,0} cup e1^{0,0} = e1^{0,0}
    Cochain a = cup(x00, e1_00);
    CHECK(max_abs_diff(a, e1_00) == 0.0);

    // e2^{0,0} cup e1^{0,tau 0} = -Omega^{0,0}
    Cochain b = cup(e2_00, e1_01);
    CHECK(b.degree() == 2);
    CHECK(b.at(0, {0, 0}) == Complex(-1.0, 0.0));
    CHECK(norm(b) == 1.0);

    // index pattern not in the table
    CHECK(norm(cup(e1_00, e2_00)) == 0.0);

    // remaining rows
    CHECK(cup(x00, x00).at(0, {0, 0}) == Complex(1.0, 0.0));
    Cochain omega00 = basis_element(2, 0, {0, 0}, w);
    CHECK(max_abs_diff(cup(x00, omega00), omega00) == 0.0);
    Cochain x11 = basis_element(0, 0, {1, 1}, w);
    CHECK(max_abs_diff(cup(omega00, x11), omega00) == 0.0);
    Cochain e2_10 = basis_element(1, 1, {1, 0}, w);
    CHECK(max_abs_diff(cup(e1_00, e2_10), omega00) == 0.0);
    Cochain x10 = basis_element(0, 0, {1, 0}, w);
    CHECK(max_abs_diff(cup(e1_00, x10), e1_00) == 0.0);

    CHECK_THROWS_AS((void)cup(e1_00, omega00), std::invalid_argument);
}

TEST_CASE("star and its inverse") {
    Window w(2);
    Cochain x00 = basis_element(0, 0, {0, 0}, w);
    Cochain omega00 = basis_element(2, 0, {0, 0}, w);
    CHECK(max_abs_diff(star(x00), omega00) == 0.0);

    // *e2^{0,0} = -e1^{0,1}
    Cochain se2 = star(basis_element(1, 1, {0, 0}, w));
    CHECK(se2.at(0, {0, 1}) == Complex(-1.0, 0.0));
    CHECK(norm(se2) == 1.0);

    // ** e1^{0,0} = -e1^{1,1}
    Cochain twice = star(star(basis_element(1, 0, {0, 0}, w)));
    CHECK(twice.at(0, {1, 1}) == Complex(-1.0, 0.0));
    CHECK(norm(twice) == 1.0);

    CHECK(max_abs_diff(star_inverse(omega00), x00) == 0.0);
    // *^{-1}(-e1^{0,1}) = e2^{0,0}
    Cochain neg_e1_01 = lincomb(Complex(-1.0, 0.0), basis_element(1, 0, {0, 1}, w),
                                Complex(0.0, 0.0), basis_element(1, 0, {0, 1}, w));
    CHECK(max_abs_diff(star_inverse(neg_e1_01), basis_element(1, 1, {0, 0}, w)) == 0.0);

    for (int degree = 0; degree <= 2; ++degree) {
        Cochain a = random_cochain(degree, Window(3), rng);
        CHECK(max_abs_diff(star(star_inverse(a)), a) == 0.0);
        CHECK(max_abs_diff(star_inverse(star(a)), a) == 0.0);
    }
}

TEST_CASE("codifferential formulas and the compositional path") {
    // delta^c of any 0-form is the designated zero
    Cochain phi = random_cochain(0, Window(3), rng);
    Cochain dphi = codifferential(phi);
    CHECK(dphi.is_structural_zero());
    CHECK(norm(dphi) == 0.0);

    // delta d delta^{0,0} has center coefficient 4
    Cochain d = Cochain::delta({0, 0}, Window(2));
    Cochain lap = codifferential(coboundary(d));
    CHECK(lap.at(0, {0, 0}) == Complex(4.0, 0.0));
    CHECK(lap.at(0, {1, 0}) == Complex(-1.0, 0.0));

    // delta^c Omega^{0,0}: u = Delta_s eta_{k, sigma s}, v = -Delta_k eta_{sigma k, s}
    Cochain omega00 = basis_element(2, 0, {0, 0}, Window(2));
    Cochain cod = codifferential(omega00);
    CHECK(cod.at(0, {0, 0}) == Complex(1.0, 0.0));
    CHECK(cod.at(0, {0, 1}) == Complex(-1.0, 0.0));
    CHECK(cod.at(1, {0, 0}) == Complex(-1.0, 0.0));
    CHECK(cod.at(1, {1, 0}) == Complex(1.0, 0.0));
    CHECK(max_abs_diff(cod, codifferential_compositional(omega00)) <= 1e-15);

    for (int degree = 1; degree <= 2; ++degree) {
        Cochain a = random_cochain(degree, Window(4), rng);
        CHECK(max_abs_diff(codifferential(a), codifferential_compositional(a)) <=
              1e-14 * (norm(a) + 1.0));
    }
}

TEST_CASE("laplacian stencil") {
    Cochain d = Cochain::delta({0, 0}, Window(2));
    Cochain l = laplacian(d);
    CHECK(l.at(0, {0, 0}) == Complex(4.0, 0.0));
    for (auto [k, s] : {std::pair{1, 0}, std::pair{-1, 0}, std::pair{0, 1}, std::pair{0, -1}}) {
        CHECK(l.at(0, {k, s}) == Complex(-1.0, 0.0));
    }
    CHECK(norm(l) == doctest::Approx(std::sqrt(20.0)));

    // constants are annihilated where the full stencil is in-window
    Cochain constant = make_cochain(0, Window(5), Complex(2.5, -1.0));
    Cochain lc = laplacian(constant);
    for (int k = -4; k <= 4; ++k)
        for (int s = -4; s <= 4; ++s) CHECK(lc.at(0, {k, s}) == Complex(0.0, 0.0));

    // agrees with delta d + d delta composed from the primitives
    for (int degree = 0; degree <= 2; ++degree) {
        Cochain a = random_cochain(degree, Window(4), rng);
        Cochain composed = lincomb(Complex(1.0, 0.0), codifferential(coboundary(a)),
                                   Complex(1.0, 0.0), coboundary(codifferential(a)));
        CHECK(max_abs_diff(laplacian(a), composed) <= 1e-13 * (norm(a) + 1.0));
    }
}

TEST_CASE("Green formula residual and the explicit boundary sums") {
    int n = 6;
    // interior support: residual vanishes
    Cochain phi_in = random_cochain(0, Window(n - 2), rng);
    Cochain omega_in = random_cochain(1, Window(n - 2), rng);
    CHECK(std::abs(greens_formula_residual(phi_in, omega_in, n)) <=
          1e-13 * (norm(phi_in) * norm(omega_in) + 1.0));

    Cochain zero = make_cochain(0, Window(n), Complex(0.0, 0.0));
    Cochain omega = random_cochain(1, Window(n), rng);
    CHECK(greens_formula_residual(zero, omega, n) == Complex(0.0, 0.0));

    // boundary-touching support: residual equals the explicit sums
    for (int i = 0; i < 20; ++i) {
        Cochain phi = random_cochain(0, Window(n), rng);
        Cochain om = random_cochain(1, Window(n), rng);
        Complex lhs = greens_formula_residual(phi, om, n - 1);
        Complex rhs = greens_boundary_sum_0form(phi, om, n - 1);
        CHECK(std::abs(lhs - rhs) <= 1e-13 * (norm(phi) * norm(om) + 1.0));
    }

    // degree-1/degree-2 pairing goes through the same operator route
    Cochain om1 = random_cochain(1, Window(n - 2), rng);
    Cochain eta = random_cochain(2, Window(n - 2), rng);
    CHECK(std::abs(greens_formula_residual(om1, eta, n)) <=
          1e-13 * (norm(om1) * norm(eta) + 1.0));

    CHECK_THROWS_AS((void)greens_formula_residual(phi_in, eta, n), std::invalid_argument);
}
