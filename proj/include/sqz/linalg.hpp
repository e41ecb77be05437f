#ifndef SQZ_LINALG_HPP
#define SQZ_LINALG_HPP

#include <complex>

#include <Eigen/Dense>

namespace sqz {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// exp(A) for a dense complex square matrix, scaling-and-squaring with a
/// degree-13 Pade approximant (Higham 2005 parameter set).
Matrix matrix_exponential(const Matrix& A);

/// max |entry|
double max_abs(const Matrix& A);

/// ||U^dag U - I||_max restricted to the leading (N-margin) x (N-margin) block.
double unitarity_defect(const Matrix& U, int margin);

/// Boundary-corruption margin k = ceil(N/10) used by interior checks.
int interior_margin(int n);

}  // namespace sqz

#endif
