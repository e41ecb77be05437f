#ifndef SQZ_FOCK_HPP
#define SQZ_FOCK_HPP

#include "sqz/diagnostics.hpp"
#include "sqz/linalg.hpp"

namespace sqz {

/// Units: hbar = m = omega(0) = 1 throughout; q = (a + a^dag)/sqrt(2),
/// p = (a - a^dag)/(i sqrt(2)).

struct PlebanskiParams {
    double eta = 0.0;
    double xi = 0.0;
    double a = 1.0;  // scale, > 0
};

/// Hermitian, unit-trace (up to truncation tail), PSD state on the
/// truncated Fock space.
struct DensityMatrix {
    Matrix rho;
    double tail_mass = 0.0;  // probability weight lost beyond the cutoff

    int dim() const { return static_cast<int>(rho.rows()); }
    /// Throws std::invalid_argument when the type invariants fail.
    void validate() const;
};

Matrix annihilation_matrix(int n);

struct Quadratures {
    Matrix q;
    Matrix p;
};
Quadratures quadrature_matrices(int n);

/// S(lambda) = exp[i lambda/2 (qp + pq)]
Matrix squeeze_matrix(double lambda, int n, DiagnosticSink* sink = nullptr);

/// R(theta) = exp[i theta/2 (q^2 + p^2)] = diag(e^{i theta (k + 1/2)})
Matrix rotation_matrix(double theta, int n);

/// exp[i (eta q - xi p)]
Matrix displacement_matrix(double eta, double xi, int n, DiagnosticSink* sink = nullptr);

/// Stoler form: S(z) = exp[(z a^2 - z* a^dag^2)/2]
Matrix stoler_squeeze(Complex z, int n, DiagnosticSink* sink = nullptr);

/// exp[i(eta q - xi p)] exp[(i/2) log(a) (qp + pq)] |psi>
Vector plebanski_transform(const PlebanskiParams& params, const Vector& psi,
                           DiagnosticSink* sink = nullptr);

/// Matrix elements <row| D(beta) |col> of the displacement operator
/// D(beta) = exp(beta a^dag - beta* a), by the stable two-term recursion
/// (no matrix exponential). Row-major n x n.
Matrix displacement_operator(Complex beta, int n);

/// Fraction of ||v||^2 carried by the top `count` basis states.
double top_fraction(const Vector& v, int count);

}  // namespace sqz

#endif
