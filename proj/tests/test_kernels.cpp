#include <cmath>

#include <doctest.h>

#include "sqz/kernels.hpp"

using namespace sqz;

TEST_CASE("kernel domain errors: singular parameter sets are rejected") {
    CHECK_THROWS_AS(kernel_density_to_squeeze(0.1, 0.2, 1, 0.5, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(kernel_wigner_to_squeeze(0.1, 0.2, 1, 0.5, 0.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(kernel_wigner_to_squeeze(0.1, 0.2, 1, 0.0, 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(kernel_symplectic_to_squeeze(1, 0.3, 0.4, 0.0, 0.5, 0.0),
                    std::invalid_argument);
}

TEST_CASE("kernels return finite values on generic frames") {
    for (int n : {0, 1, 4}) {
        const Complex kd = kernel_density_to_squeeze(0.4, -0.7, n, 0.8, 0.5);
        CHECK(std::isfinite(kd.real()));
        CHECK(std::isfinite(kd.imag()));
        CHECK(std::isfinite(kernel_wigner_to_squeeze(0.3, 0.9, n, 0.8, 0.5)));
        const Complex ks = kernel_symplectic_to_squeeze(n, 0.2, 0.6, 0.0, 0.8, 0.5);
        CHECK(std::isfinite(ks.real()));
        CHECK(std::isfinite(ks.imag()));
    }
    // beyond the 4 mu^2 nu^2 = 1 line the symplectic kernel continues on the
    // principal complex branch and stays finite
    const Complex ks = kernel_symplectic_to_squeeze(2, 0.3, 0.4, 0.0, 1.2, 0.9);
    CHECK(std::isfinite(ks.real()));
    CHECK(std::isfinite(ks.imag()));
}

TEST_CASE("density kernel has the symmetry of a diagonal matrix element") {
    // the tomogram is real, so K(x, y) must be conjugate to K(y, x)
    for (int n : {0, 2, 5}) {
        const Complex a = kernel_density_to_squeeze(0.6, -0.2, n, 0.9, 0.4);
        const Complex b = kernel_density_to_squeeze(-0.2, 0.6, n, 0.9, 0.4);
        CHECK(a.real() == doctest::Approx(b.real()).epsilon(1e-12));
        CHECK(a.imag() == doctest::Approx(-b.imag()).epsilon(1e-12));
    }
}

TEST_CASE("Wigner kernel decays in phase space") {
    const double near = std::abs(kernel_wigner_to_squeeze(0.2, 0.1, 1, 0.8, 0.5));
    const double far = std::abs(kernel_wigner_to_squeeze(6.0, 6.0, 1, 0.8, 0.5));
    CHECK(far < 1e-6 * near);
}

TEST_CASE("transform drivers produce finite tomogram values") {
    const DensityMatrix rho = make_density(VacuumSpec{}, 48);
    const TomographyFrame f(0.4, 0.6);
    for (int n : {0, 1, 2}) {
        CHECK(std::isfinite(squeeze_via_density_kernel(rho, f, n)));
    }
    GridSpec gs;
    gs.q_min = gs.p_min = -6.0;
    gs.q_max = gs.p_max = 6.0;
    gs.q_points = gs.p_points = 161;
    const WignerGrid g = wigner_from_state(rho, gs);
    CHECK(std::isfinite(squeeze_via_wigner_kernel(g, f, 0)));
    const TomogramSampler sampler = make_symplectic_sampler(rho);
    QuadratureSpec quad;
    quad.munu_points = 61;
    CHECK(std::isfinite(squeeze_via_symplectic_kernel(sampler, f, 0, quad)));
}
