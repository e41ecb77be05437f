#include "sqz/linalg.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/diagnostics.hpp"

#include <iostream>

namespace sqz {

void emit_diagnostic(DiagnosticSink* sink, const Diagnostic& d) {
    if (sink) {
        sink->emit(d);
    } else {
        std::cerr << "warning: " << d.code << " value=" << d.value
                  << " threshold=" << d.threshold << " : " << d.message << "\n";
    }
}

namespace {

// Pade-13 numerator/denominator split: exp(A) ~ (V+U)(V-U)^{-1}.
void pade13(const Matrix& A, Matrix& U, Matrix& V) {
    static const double b[] = {64764752532480000., 32382376266240000., 7771770303897600.,
                               1187353796428800.,  129060195264000.,   10559470521600.,
                               670442572800.,      33522128640.,       1323241920.,
                               40840800.,          960960.,            16380.,
                               182.,               1.};
    const Eigen::Index n = A.rows();
    const Matrix I = Matrix::Identity(n, n);
    const Matrix A2 = A * A;
    const Matrix A4 = A2 * A2;
    const Matrix A6 = A4 * A2;
    U = A * (A6 * (b[13] * A6 + b[11] * A4 + b[9] * A2) + b[7] * A6 + b[5] * A4 +
             b[3] * A2 + b[1] * I);
    V = A6 * (b[12] * A6 + b[10] * A4 + b[8] * A2) + b[6] * A6 + b[4] * A4 + b[2] * A2 +
        b[0] * I;
}

}  // namespace

Matrix matrix_exponential(const Matrix& A) {
    if (A.rows() != A.cols()) throw std::invalid_argument("matrix_exponential: non-square");
    if (!A.allFinite()) throw std::invalid_argument("matrix_exponential: non-finite entries");

    const double norm1 = A.cwiseAbs().colwise().sum().maxCoeff();
    const double theta13 = 5.371920351148152;
    int squarings = 0;
    Matrix As = A;
    if (norm1 > theta13) {
        squarings = std::max(0, static_cast<int>(std::ceil(std::log2(norm1 / theta13))));
        As /= std::pow(2.0, squarings);
    }
    Matrix U, V;
    pade13(As, U, V);
    Matrix R = (V - U).partialPivLu().solve(V + U);
    for (int i = 0; i < squarings; ++i) R = R * R;
    return R;
}

double max_abs(const Matrix& A) { return A.cwiseAbs().maxCoeff(); }

int interior_margin(int n) { return (n + 9) / 10; }

double unitarity_defect(const Matrix& U, int margin) {
    const Eigen::Index n = U.rows();
    const Eigen::Index k = std::max<Eigen::Index>(0, n - margin);
    if (k == 0) return 0.0;
    Matrix D = U.adjoint() * U - Matrix::Identity(n, n);
    return D.topLeftCorner(k, k).cwiseAbs().maxCoeff();
}

}  // namespace sqz
