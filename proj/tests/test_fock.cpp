#include <cmath>

#include <doctest.h>

#include "sqz/fock.hpp"
#include "sqz/states.hpp"

using namespace sqz;

namespace {
double interior_max(const Matrix& m, int margin) {
    const int k = int(m.rows()) - margin;
    return max_abs(m.topLeftCorner(k, k));
}
}  // namespace

TEST_CASE("annihilation operator lowers Fock states") {
    const int N = 16;
    const Matrix a = annihilation_matrix(N);
    for (int n = 1; n < N; ++n) {
        Vector v = Vector::Zero(N);
        v(n) = 1.0;
        const Vector w = a * v;
        CHECK(std::abs(w(n - 1) - std::sqrt(double(n))) < 1e-14);
    }
}

TEST_CASE("commutators hold away from the truncation corner") {
    const int N = 40;
    const int margin = interior_margin(N);
    const Matrix a = annihilation_matrix(N);
    const Matrix comm = a * a.adjoint() - a.adjoint() * a;
    CHECK(interior_max(comm - Matrix::Identity(N, N), margin) < 1e-13);

    const Quadratures qp = quadrature_matrices(N);
    const Matrix qpc = qp.q * qp.p - qp.p * qp.q;
    CHECK(interior_max(qpc - Complex(0, 1) * Matrix::Identity(N, N), margin) < 1e-13);
    CHECK(max_abs(qp.q - qp.q.adjoint()) < 1e-14);
    CHECK(max_abs(qp.p - qp.p.adjoint()) < 1e-14);
}

TEST_CASE("squeeze operator composes and inverts") {
    const int N = 64;
    const int margin = interior_margin(N);
    DiagnosticSink sink;
    const Matrix s1 = squeeze_matrix(0.3, N, &sink);
    const Matrix s2 = squeeze_matrix(0.5, N, &sink);
    const Matrix s3 = squeeze_matrix(0.8, N, &sink);
    CHECK(interior_max(s1 * s2 - s3, margin) < 1e-9);
    const Matrix sm = squeeze_matrix(-0.3, N, &sink);
    CHECK(interior_max(s1 * sm - Matrix::Identity(N, N), margin) < 1e-10);
    CHECK(unitarity_defect(s1, margin) < 1e-10);
}

TEST_CASE("stoler form coincides with the quadrature form") {
    const int N = 48;
    const int margin = interior_margin(N);
    DiagnosticSink sink;
    for (double lam : {-0.6, 0.25, 0.9}) {
        const Matrix s = squeeze_matrix(lam, N, &sink);
        const Matrix st = stoler_squeeze(Complex(lam, 0.0), N, &sink);
        CHECK(interior_max(s - st, margin) < 1e-10);
    }
}

TEST_CASE("rotation operator is the expected diagonal phase") {
    const int N = 20;
    const double th = 1.1;
    const Matrix r = rotation_matrix(th, N);
    for (int n = 0; n < N; ++n) {
        CHECK(std::abs(r(n, n) - std::exp(Complex(0, th * (n + 0.5)))) < 1e-14);
        for (int m = 0; m < N; ++m)
            if (m != n) CHECK(std::abs(r(n, m)) == 0.0);
    }
    CHECK(max_abs(rotation_matrix(th, N) * rotation_matrix(-th, N) -
                  Matrix::Identity(N, N)) < 1e-14);
}

TEST_CASE("displacement operator: recursion matches the exponential") {
    const int N = 48;
    DiagnosticSink sink;
    const double eta = 0.3, xi = -0.5;
    const Complex beta = Complex(xi, eta) / std::sqrt(2.0);
    const Matrix viaExp = displacement_matrix(eta, xi, N, &sink);
    const Matrix viaRec = displacement_operator(beta, N);
    // the exponential route's truncation corruption decays with depth from
    // the cutoff, so compare a block well inside the standard margin
    CHECK(interior_max(viaExp - viaRec, N / 2) < 1e-10);
}

TEST_CASE("displacement operator first column is the coherent state") {
    const int N = 32;
    const Complex beta(0.7, -0.4);
    const Matrix d = displacement_operator(beta, N);
    double lf = 0.0;
    for (int n = 0; n < N - interior_margin(N); ++n) {
        if (n > 0) lf += std::log(double(n));
        const Complex expect =
            std::exp(-0.5 * std::norm(beta)) * std::pow(beta, n) * std::exp(-0.5 * lf);
        CHECK(std::abs(d(n, 0) - expect) < 1e-12);
    }
}

TEST_CASE("density matrix validation") {
    const DensityMatrix good = make_density(CoherentSpec{Complex(1.0, 0.5)}, 48);
    CHECK_NOTHROW(good.validate());

    DensityMatrix bad = good;
    bad.rho(0, 1) += Complex(0.0, 1e-3);  // break Hermiticity
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);

    DensityMatrix off = good;
    off.rho *= 1.5;  // break the trace
    CHECK_THROWS_AS(off.validate(), std::invalid_argument);
}

TEST_CASE("scale-and-shift transform with unit scale displaces the vacuum") {
    const int N = 64;
    DiagnosticSink sink;
    Vector vac = Vector::Zero(N);
    vac(0) = 1.0;
    PlebanskiParams params;
    params.eta = 0.4;
    params.xi = 0.6;
    params.a = 1.0;
    const Vector out = plebanski_transform(params, vac, &sink);
    const Complex beta = Complex(params.xi, params.eta) / std::sqrt(2.0);
    const Vector coh = *make_pure_vector(CoherentSpec{beta}, N);
    double phase_free = 0.0;
    const Complex phase = out(0) / coh(0);
    CHECK(std::abs(std::abs(phase) - 1.0) < 1e-9);
    for (int n = 0; n < N - interior_margin(N); ++n)
        phase_free = std::max(phase_free, std::abs(out(n) - phase * coh(n)));
    CHECK(phase_free < 1e-9);
}

TEST_CASE("top_fraction measures tail weight") {
    Vector v = Vector::Zero(10);
    v(8) = 0.6;
    v(1) = 0.8;
    CHECK(top_fraction(v, 2) == doctest::Approx(0.36));
    CHECK(top_fraction(v, 10) == doctest::Approx(1.0));
}
