#include "sqz/fock.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/special.hpp"

namespace sqz {

namespace {

void check_cutoff(int n) {
    if (n < 2) throw std::invalid_argument("Fock cutoff must be >= 2");
}

/// Warn when the operator leaks the vacuum into the top 10% of the basis.
void check_vacuum_leakage(const Matrix& U, const char* what, DiagnosticSink* sink) {
    const int n = static_cast<int>(U.rows());
    const Vector col0 = U.col(0);
    const double leak = top_fraction(col0, std::max(1, n / 10));
    if (leak > 1e-8) {
        emit_diagnostic(sink, {"truncation_leakage",
                               std::string(what) + ": vacuum image has weight in the top "
                                                   "10% of the truncated basis",
                               leak, 1e-8});
    }
}

}  // namespace

void DensityMatrix::validate() const {
    if (rho.rows() != rho.cols() || rho.rows() < 2)
        throw std::invalid_argument("DensityMatrix: bad dimension");
    const double herm = max_abs(rho - rho.adjoint());
    if (herm > 1e-12)
        throw std::invalid_argument("DensityMatrix: Hermiticity defect " + std::to_string(herm));
    const double tr = rho.trace().real();
    if (tr < 1.0 - 1e-6 || tr > 1.0 + 1e-9)
        throw std::invalid_argument("DensityMatrix: trace " + std::to_string(tr) +
                                    " outside [1-1e-6, 1]");
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho, Eigen::EigenvaluesOnly);
    const double min_eig = es.eigenvalues().minCoeff();
    if (min_eig < -1e-9)
        throw std::invalid_argument("DensityMatrix: negative eigenvalue " +
                                    std::to_string(min_eig));
}

Matrix annihilation_matrix(int n) {
    check_cutoff(n);
    Matrix a = Matrix::Zero(n, n);
    for (int k = 0; k + 1 < n; ++k) a(k, k + 1) = std::sqrt(k + 1.0);
    return a;
}

Quadratures quadrature_matrices(int n) {
    check_cutoff(n);
    const Matrix a = annihilation_matrix(n);
    const Matrix ad = a.adjoint();
    const double s = 1.0 / std::sqrt(2.0);
    Quadratures qp;
    qp.q = s * (a + ad);
    qp.p = Complex(0.0, -1.0) * s * (a - ad);
    return qp;
}

Matrix squeeze_matrix(double lambda, int n, DiagnosticSink* sink) {
    check_cutoff(n);
    if (lambda == 0.0) return Matrix::Identity(n, n);
    const Quadratures qp = quadrature_matrices(n);
    const Matrix gen = Complex(0.0, 0.5 * lambda) * (qp.q * qp.p + qp.p * qp.q);
    Matrix s = matrix_exponential(gen);
    check_vacuum_leakage(s, "squeeze_matrix", sink);
    return s;
}

Matrix rotation_matrix(double theta, int n) {
    check_cutoff(n);
    Matrix r = Matrix::Zero(n, n);
    for (int k = 0; k < n; ++k) r(k, k) = std::exp(Complex(0.0, theta * (k + 0.5)));
    return r;
}

Matrix displacement_matrix(double eta, double xi, int n, DiagnosticSink* sink) {
    check_cutoff(n);
    const Quadratures qp = quadrature_matrices(n);
    const Matrix gen = Complex(0.0, 1.0) * (eta * qp.q - xi * qp.p);
    Matrix d = matrix_exponential(gen);
    check_vacuum_leakage(d, "displacement_matrix", sink);
    return d;
}

Matrix stoler_squeeze(Complex z, int n, DiagnosticSink* sink) {
    check_cutoff(n);
    const Matrix a = annihilation_matrix(n);
    const Matrix gen = 0.5 * (z * a * a - std::conj(z) * (a.adjoint() * a.adjoint()));
    Matrix s = matrix_exponential(gen);
    check_vacuum_leakage(s, "stoler_squeeze", sink);
    return s;
}

Vector plebanski_transform(const PlebanskiParams& params, const Vector& psi,
                           DiagnosticSink* sink) {
    if (params.a <= 0.0) throw std::invalid_argument("plebanski_transform: scale a must be > 0");
    const int n = static_cast<int>(psi.size());
    check_cutoff(n);
    const double norm = psi.norm();
    if (std::abs(norm - 1.0) > 1e-6)
        throw std::invalid_argument("plebanski_transform: input state not normalized");
    Vector out = squeeze_matrix(std::log(params.a), n, sink) * psi;
    out = displacement_matrix(params.eta, params.xi, n, sink) * out;
    const double leak = top_fraction(out, std::max(1, n / 10));
    if (leak > 1e-8)
        emit_diagnostic(sink, {"truncation_leakage",
                               "plebanski_transform: output has weight in the top 10% "
                               "of the truncated basis",
                               leak, 1e-8});
    return out;
}

Matrix displacement_operator(Complex beta, int n) {
    check_cutoff(n);
    Matrix d(n, n);
    const double b2 = std::norm(beta);
    // First row: <0|D|m> = e^{-|b|^2/2} (-b*)^m / sqrt(m!)
    d(0, 0) = std::exp(-0.5 * b2);
    for (int m = 1; m < n; ++m) d(0, m) = d(0, m - 1) * (-std::conj(beta)) / std::sqrt(double(m));
    // a D = D (a + beta)  =>  sqrt(r+1) d(r+1, m) = sqrt(m) d(r, m-1) + beta d(r, m)
    for (int r = 0; r + 1 < n; ++r) {
        for (int m = 0; m < n; ++m) {
            Complex v = beta * d(r, m);
            if (m > 0) v += std::sqrt(double(m)) * d(r, m - 1);
            d(r + 1, m) = v / std::sqrt(r + 1.0);
        }
    }
    return d;
}

double top_fraction(const Vector& v, int count) {
    const int n = static_cast<int>(v.size());
    const double total = v.squaredNorm();
    if (total == 0.0) return 0.0;
    double tail = 0.0;
    for (int k = std::max(0, n - count); k < n; ++k) tail += std::norm(v(k));
    return tail / total;
}

}  // namespace sqz
