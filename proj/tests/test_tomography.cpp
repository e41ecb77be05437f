#include <cmath>

#include <doctest.h>

#include "sqz/tomography.hpp"

using namespace sqz;

namespace {
double max_diff(const std::vector<double>& a, const std::vector<double>& b) {
    double m = 0.0;
    for (size_t i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}
}  // namespace

TEST_CASE("frame parameters and their canonical inverse") {
    for (double lam : {-0.8, 0.0, 0.4}) {
        for (double th : {-1.2, 0.0, 0.3, 0.7, M_PI / 2.0}) {
            const auto [mu, nu] = frame_to_munu(lam, th);
            CHECK(mu == doctest::Approx(std::exp(lam) * std::cos(th)));
            CHECK(nu == doctest::Approx(std::exp(-lam) * std::sin(th)));
            if (mu <= 0.0) continue;
            const TomographyFrame f = munu_to_frame(mu, nu);
            // (lambda, theta) -> (mu, nu) is two-to-one; the inverse returns the
            // canonical representative with |theta| <= pi/4.  Check the (mu, nu)
            // round trip always, and the exact parameters only on that branch.
            CHECK(std::abs(f.theta) <= M_PI / 4.0 + 1e-12);
            const auto [mu2, nu2] = frame_to_munu(f.lambda, f.theta);
            CHECK(mu2 == doctest::Approx(mu).epsilon(1e-10));
            CHECK(nu2 == doctest::Approx(nu).epsilon(1e-10));
            if (std::abs(th) <= M_PI / 4.0) {
                CHECK(f.lambda == doctest::Approx(lam).epsilon(1e-10));
                CHECK(f.theta == doctest::Approx(th).epsilon(1e-10));
            }
        }
    }
    // the mu = 0 ray maps to theta = pi/2
    const TomographyFrame f = munu_to_frame(0.0, 2.5);
    CHECK(f.theta == doctest::Approx(M_PI / 2.0));
    CHECK(f.lambda == doctest::Approx(-std::log(2.5)));
    CHECK_THROWS_AS(munu_to_frame(-0.5, 0.3), std::invalid_argument);
    CHECK_THROWS_AS(munu_to_frame(0.0, -1.0), std::invalid_argument);
    CHECK_THROWS_AS(munu_to_frame(1.0, 0.9), std::invalid_argument);  // |2 mu nu| > 1
}

TEST_CASE("identity frame returns the photon-number diagonal") {
    for (const StateSpec spec :
         {StateSpec(CoherentSpec{Complex(1.0, 0.8)}), StateSpec(ThermalSpec{1.0})}) {
        const DensityMatrix rho = make_density(spec, 96);
        const auto w = squeeze_tomogram_oracle(rho, TomographyFrame(0.0, 0.0), 30);
        for (int n = 0; n <= 30; ++n)
            CHECK(std::abs(w[n] - rho.rho(n, n).real()) < 1e-10);
    }
}

TEST_CASE("vacuum closed form matches the oracle and is theta-free") {
    const DensityMatrix rho = make_density(VacuumSpec{}, 128);
    for (double lam : {-1.0, -0.3, 0.6, 1.0}) {
        const auto w0 = squeeze_tomogram_oracle(rho, TomographyFrame(lam, 0.0), 40);
        const auto w1 = squeeze_tomogram_oracle(rho, TomographyFrame(lam, 0.7), 40);
        CHECK(max_diff(w0, w1) < 1e-10);
        for (int n = 0; n <= 40; ++n) {
            CHECK(std::abs(squeeze_tomogram_vacuum(n, lam) - w0[n]) < 1e-7);
            if (n % 2 == 1) CHECK(squeeze_tomogram_vacuum(n, lam) == 0.0);
        }
        double sum = 0.0;
        for (double v : w0) sum += v;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-6));
    }
}

TEST_CASE("coherent closed form: identity limit is Poisson, general frame matches oracle") {
    const Complex alpha(1.4, -0.6);
    const double na = std::norm(alpha);
    double lf = 0.0;
    for (int n = 0; n <= 20; ++n) {
        if (n > 0) lf += std::log(double(n));
        const double poisson = std::exp(n * std::log(na) - na - lf);
        CHECK(squeeze_tomogram_coherent(n, 0.0, 0.3, alpha) ==
              doctest::Approx(poisson).epsilon(1e-10));
        // continuity across the small-lambda branch switch
        CHECK(squeeze_tomogram_coherent(n, 1e-7, 0.3, alpha) ==
              doctest::Approx(poisson).epsilon(1e-5));
    }
    const DensityMatrix rho = make_density(CoherentSpec{alpha}, 128);
    for (double lam : {-0.9, 0.5}) {
        for (double th : {0.0, 1.1}) {
            const auto w = squeeze_tomogram_oracle(rho, TomographyFrame(lam, th), 40);
            for (int n = 0; n <= 40; ++n)
                CHECK(std::abs(squeeze_tomogram_coherent(n, lam, th, alpha) - w[n]) < 1e-7);
        }
    }
}

TEST_CASE("Fock closed forms match the oracle") {
    for (int m : {1, 2}) {
        const DensityMatrix rho = make_density(FockSpec{m}, 128);
        for (double lam : {-0.7, 0.4, 1.0}) {
            const auto w = squeeze_tomogram_oracle(rho, TomographyFrame(lam, 0.4), 40);
            for (int n = 0; n <= 40; ++n) {
                CHECK(std::abs(squeeze_tomogram_fock(n, lam, m) - w[n]) < 1e-7);
                if ((n + m) % 2 == 1) CHECK(squeeze_tomogram_fock(n, lam, m) == 0.0);
            }
        }
        // identity frame: delta_{nm}
        for (int n = 0; n <= 5; ++n)
            CHECK(squeeze_tomogram_fock(n, 0.0, m) == doctest::Approx(n == m ? 1.0 : 0.0));
    }
}

TEST_CASE("cat closed form matches the oracle and keeps its parity zeros") {
    const Complex alpha(2.0, 0.0);
    for (int parity : {+1, -1}) {
        const DensityMatrix rho = make_density(CatSpec{alpha, parity}, 128);
        for (double lam : {-0.6, 0.8}) {
            const auto w = squeeze_tomogram_oracle(rho, TomographyFrame(lam, 0.9), 40);
            for (int n = 0; n <= 40; ++n) {
                const double cf = squeeze_tomogram_cat(n, lam, 0.9, alpha, parity);
                CHECK(std::abs(cf - w[n]) < 1e-7);
                const bool forbidden = (parity == +1) ? (n % 2 == 1) : (n % 2 == 0);
                if (forbidden) CHECK(std::abs(cf) <= 1e-12);
            }
        }
    }
}

TEST_CASE("thermal closed form matches the oracle") {
    for (double T : {1.0, 2.0}) {
        const DensityMatrix rho = make_density(ThermalSpec{T}, 160);
        for (double lam : {-1.0, 0.5}) {
            const auto w = squeeze_tomogram_oracle(rho, TomographyFrame(lam, 0.0), 40);
            for (int n = 0; n <= 40; ++n)
                CHECK(std::abs(squeeze_tomogram_thermal(n, lam, T, 200) - w[n]) < 1e-7);
        }
    }
}

TEST_CASE("oracle rejects n_max inside the corrupted boundary band") {
    const DensityMatrix rho = make_density(VacuumSpec{}, 32);
    CHECK_THROWS_AS(squeeze_tomogram_oracle(rho, TomographyFrame(0.1, 0.0), 31),
                    std::invalid_argument);
}

TEST_CASE("optical tomogram of the vacuum is the ground-state density") {
    const DensityMatrix rho = make_density(VacuumSpec{}, 32);
    for (double x : {-2.0, -0.5, 0.0, 1.3}) {
        for (double th : {0.0, 0.8}) {
            CHECK(optical_tomogram(rho, x, th) ==
                  doctest::Approx(std::exp(-x * x) / std::sqrt(M_PI)).epsilon(1e-10));
        }
    }
}

TEST_CASE("symplectic tomogram: optical reduction and homogeneity") {
    const DensityMatrix rho = make_density(CoherentSpec{Complex(1.0, 0.4)}, 64);
    for (double th : {0.2, 1.0}) {
        for (double x : {-1.0, 0.7}) {
            CHECK(symplectic_tomogram(rho, x, std::cos(th), std::sin(th)) ==
                  doctest::Approx(optical_tomogram(rho, x, th)).epsilon(1e-10));
        }
    }
    // W(sX, s mu, s nu) = W(X, mu, nu) / |s|
    const double x = 0.6, mu = 0.8, nu = 0.5;
    for (double s : {2.0, 0.3}) {
        CHECK(symplectic_tomogram(rho, s * x, s * mu, s * nu) ==
              doctest::Approx(symplectic_tomogram(rho, x, mu, nu) / s).epsilon(1e-8));
    }
}

TEST_CASE("dequantizer pairs with the state to give the tomogram") {
    const DensityMatrix rho = make_density(CoherentSpec{Complex(0.9, -0.3)}, 96);
    const TomographyFrame f(0.45, 0.8);
    const auto w = squeeze_tomogram_oracle(rho, f, 6);
    for (int n = 0; n <= 6; ++n) {
        const Matrix u = squeeze_dequantizer(n, f, 96);
        const double via_trace = (rho.rho * u).trace().real();
        CHECK(via_trace == doctest::Approx(w[n]).epsilon(1e-9));
    }
}
