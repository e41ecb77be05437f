#include <cmath>

#include <doctest.h>

#include "sqz/special.hpp"
#include "sqz/wigner.hpp"

using namespace sqz;

TEST_CASE("vacuum Wigner function: Gaussian peak of height 2, unit mass") {
    const DensityMatrix rho = make_density(VacuumSpec{}, 32);
    CHECK(wigner_point(rho.rho, 0.0, 0.0) == doctest::Approx(2.0).epsilon(1e-10));
    CHECK(wigner_point(rho.rho, 1.0, -0.5) ==
          doctest::Approx(2.0 * std::exp(-(1.0 + 0.25))).epsilon(1e-10));
    GridSpec gs;
    gs.q_min = gs.p_min = -6.0;
    gs.q_max = gs.p_max = 6.0;
    gs.q_points = gs.p_points = 121;
    DiagnosticSink sink;
    const WignerGrid g = wigner_from_state(rho, gs, &sink);
    CHECK(g.quadrature_mass() == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("coherent Wigner function is the displaced vacuum Gaussian") {
    const Complex alpha(0.9, -0.6);
    const DensityMatrix rho = make_density(CoherentSpec{alpha}, 64);
    const double q0 = std::sqrt(2.0) * alpha.real();
    const double p0 = std::sqrt(2.0) * alpha.imag();
    CHECK(wigner_point(rho.rho, q0, p0) == doctest::Approx(2.0).epsilon(1e-9));
    for (double dq : {-0.8, 0.5}) {
        for (double dp : {0.3, -0.4}) {
            CHECK(wigner_point(rho.rho, q0 + dq, p0 + dp) ==
                  doctest::Approx(2.0 * std::exp(-(dq * dq + dp * dp))).epsilon(1e-8));
        }
    }
}

TEST_CASE("Fock Wigner functions are Laguerre-Gaussian rings") {
    for (int m : {1, 2, 3}) {
        const DensityMatrix rho = make_density(FockSpec{m}, 48);
        for (double q : {0.0, 0.7}) {
            for (double p : {0.0, -0.9}) {
                const double r2 = q * q + p * p;
                const double expect = 2.0 * ((m % 2) ? -1.0 : 1.0) * std::exp(-r2) *
                                      laguerre(unsigned(m), 2.0 * r2);
                CHECK(wigner_point(rho.rho, q, p) == doctest::Approx(expect).epsilon(1e-9));
            }
        }
    }
}

TEST_CASE("symplectic sampler reproduces the direct tomogram") {
    const DensityMatrix rho = make_density(CoherentSpec{Complex(0.8, 0.2)}, 64);
    const TomogramSampler sampler = make_symplectic_sampler(rho);
    for (double x : {-1.2, 0.4})
        for (double mu : {1.0, 0.3})
            for (double nu : {0.2, 0.9})
                CHECK(sampler(x, mu, nu) ==
                      doctest::Approx(symplectic_tomogram(rho, x, mu, nu)).epsilon(1e-10));
}

TEST_CASE("Wigner reconstruction from the symplectic tomogram") {
    const DensityMatrix rho = make_density(CoherentSpec{Complex(0.7, -0.3)}, 48);
    const TomogramSampler sampler = make_symplectic_sampler(rho);
    GridSpec gs;
    gs.q_min = gs.p_min = -3.0;
    gs.q_max = gs.p_max = 3.0;
    gs.q_points = gs.p_points = 13;
    QuadratureSpec quad;  // default budgets
    DiagnosticSink sink;
    const WignerGrid rec = wigner_from_symplectic(sampler, gs, quad, &sink);
    const WignerGrid direct = wigner_from_state(rho, gs, &sink);
    double err = 0.0;
    for (int i = 0; i < gs.q_points; ++i)
        for (int j = 0; j < gs.p_points; ++j)
            err = std::max(err, std::abs(rec.value_at(i, j) - direct.value_at(i, j)));
    CHECK(err < 1e-2);
}

TEST_CASE("density-matrix reconstruction from the symplectic tomogram") {
    const DensityMatrix rho = make_density(VacuumSpec{}, 32);
    const TomogramSampler sampler = make_symplectic_sampler(rho);
    QuadratureSpec quad;
    double defect = 0.0;
    DiagnosticSink sink;
    const DensityMatrix rec = density_from_symplectic(sampler, 10, quad, &defect, &sink);
    CHECK(defect < 1e-2);
    const double err =
        (rec.rho - rho.rho.topLeftCorner(10, 10)).cwiseAbs().maxCoeff();
    CHECK(err < 1e-2);
    CHECK(std::abs(rec.rho(0, 0).real() - 1.0) < 1e-2);
}
