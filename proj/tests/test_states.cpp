#include <cmath>
#include <complex>

#include <doctest.h>

#include "sqz/states.hpp"

using namespace sqz;

TEST_CASE("state parsing round trips through JSON") {
    for (const char* text :
         {"vacuum", "fock:3", "coherent:1.5+0.5j", "coherent:-2j", "cat:2+0j:+",
          "cat:1-1j:-", "thermal:1.5"}) {
        const StateSpec s = parse_state(text);
        const StateSpec back = state_from_json(state_to_json(s));
        CHECK(state_to_json(back) == state_to_json(s));
    }
    CHECK(state_name(parse_state("fock:3")) == state_name(StateSpec(FockSpec{3})));
}

TEST_CASE("bad state specs are rejected") {
    CHECK_THROWS_AS(parse_state("squeezed:1"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state("fock"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state("cat:1+0j"), std::invalid_argument);
    CHECK_THROWS_AS(parse_state("cat:1+0j:x"), std::invalid_argument);
    CHECK_THROWS_AS(make_density(ThermalSpec{-1.0}, 64), std::invalid_argument);
    CHECK_THROWS_AS(make_density(FockSpec{-2}, 64), std::invalid_argument);
}

TEST_CASE("coherent amplitudes are the Poisson-weighted phases") {
    const Complex alpha(1.2, -0.7);
    const Vector v = *make_pure_vector(CoherentSpec{alpha}, 64);
    double lf = 0.0;
    for (int n = 0; n < 30; ++n) {
        if (n > 0) lf += std::log(double(n));
        const Complex expect =
            std::exp(-0.5 * std::norm(alpha)) * std::pow(alpha, n) * std::exp(-0.5 * lf);
        CHECK(std::abs(v(n) - expect) < 1e-13);
    }
    CHECK(std::abs(v.squaredNorm() - 1.0) < 1e-12);
}

TEST_CASE("coherent state with too small a cutoff is a hard failure") {
    CHECK_THROWS_WITH_AS(static_cast<void>(make_density(CoherentSpec{Complex(6.0, 0.0)}, 32)),
                         doctest::Contains("tail mass"), std::invalid_argument);
}

TEST_CASE("cat states carry a single parity sector") {
    const Complex alpha(2.0, 0.0);
    const Vector even = *make_pure_vector(CatSpec{alpha, +1}, 96);
    const Vector odd = *make_pure_vector(CatSpec{alpha, -1}, 96);
    CHECK(std::abs(even.squaredNorm() - 1.0) < 1e-12);
    CHECK(std::abs(odd.squaredNorm() - 1.0) < 1e-12);
    for (int n = 0; n < 96; ++n) {
        if (n % 2 == 1) CHECK(std::abs(even(n)) == 0.0);
        if (n % 2 == 0) CHECK(std::abs(odd(n)) == 0.0);
    }
    // even-cat weight on |0> exceeds the bare coherent weight by the
    // constructive-interference factor 2/(1 + e^{-2|alpha|^2}) ... normalized
    const double w0 = std::norm(even(0));
    const double bare = std::exp(-std::norm(alpha));
    CHECK(w0 == doctest::Approx(2.0 * bare / (1.0 + std::exp(-2.0 * std::norm(alpha)))));
}

TEST_CASE("thermal state is Boltzmann-diagonal with the right mean occupation") {
    const double T = 1.3;
    const DensityMatrix d = make_density(ThermalSpec{T}, 128);
    double trace = 0.0, mean = 0.0;
    for (int n = 0; n < d.dim(); ++n) {
        trace += d.rho(n, n).real();
        mean += n * d.rho(n, n).real();
        for (int m = 0; m < d.dim(); ++m)
            if (m != n) CHECK(std::abs(d.rho(n, m)) == 0.0);
    }
    CHECK(trace == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(mean == doctest::Approx(1.0 / std::expm1(1.0 / T)).epsilon(1e-9));
    // ratio of successive weights is the Boltzmann factor
    CHECK(d.rho(5, 5).real() / d.rho(4, 4).real() ==
          doctest::Approx(std::exp(-1.0 / T)));
}

TEST_CASE("make_pure_vector is empty exactly for thermal states") {
    CHECK(make_pure_vector(ThermalSpec{1.0}, 32) == std::nullopt);
    CHECK(make_pure_vector(VacuumSpec{}, 32).has_value());
}

TEST_CASE("oscillator eigenfunctions: ground state and orthonormality") {
    const double x = 0.9;
    CHECK(fock_wavefunction(0, x) ==
          doctest::Approx(std::pow(M_PI, -0.25) * std::exp(-0.5 * x * x)));
    // trapezoid orthonormality on a wide grid
    const int K = 2001;
    const double L = 12.0, h = 2.0 * L / (K - 1);
    double n33 = 0.0, n03 = 0.0, n55 = 0.0;
    std::vector<double> psi(8);
    for (int i = 0; i < K; ++i) {
        const double xi = -L + i * h;
        fock_wavefunctions(xi, psi);
        n33 += psi[3] * psi[3] * h;
        n03 += psi[0] * psi[3] * h;
        n55 += psi[5] * psi[5] * h;
    }
    CHECK(n33 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(n55 == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(n03) < 1e-12);
}

TEST_CASE("wavefunction recursion matches the direct formula and scales to n=500") {
    std::vector<double> psi(501);
    fock_wavefunctions(0.7, psi);
    for (unsigned n : {0u, 1u, 4u, 9u})
        CHECK(psi[n] == doctest::Approx(fock_wavefunction(n, 0.7)).epsilon(1e-12));
    CHECK(std::isfinite(psi[500]));
    CHECK(std::abs(psi[500]) < 1.0);
}

TEST_CASE("coherent wavefunction overlaps") {
    const Complex alpha(0.8, 0.5);
    const int K = 4001;
    const double L = 14.0, h = 2.0 * L / (K - 1);
    Complex ov0 = 0.0;
    double norm = 0.0;
    for (int i = 0; i < K; ++i) {
        const double x = -L + i * h;
        const Complex psi = coherent_wavefunction(alpha, x);
        ov0 += fock_wavefunction(0, x) * psi * h;
        norm += std::norm(psi) * h;
    }
    CHECK(norm == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(std::abs(ov0 - std::exp(-0.5 * std::norm(alpha))) < 1e-9);
}
