#ifndef SQZ_KERNELS_HPP
#define SQZ_KERNELS_HPP

#include "sqz/tomography.hpp"
#include "sqz/wigner.hpp"

namespace sqz {

/// The three integral-transform kernels are implemented exactly as printed;
/// their agreement with the matrix-element oracle is arbitrated by the
/// verification suite, never patched here. Singular parameter sets are hard
/// domain errors.

/// Density-matrix -> squeeze-tomogram kernel.
Complex kernel_density_to_squeeze(double x, double y, int n, double mu, double nu);

/// Wigner -> squeeze-tomogram kernel, (-1)^n/pi e^{-|z|^2/2} L_n(|z|^2).
double kernel_wigner_to_squeeze(double q, double p, int n, double mu, double nu);

/// Symplectic -> squeeze-tomogram kernel. For 4 mu^2 nu^2 > 1 the radical is
/// taken on the principal complex branch and |alpha|^2 means the modulus
/// squared of the resulting complex alpha.
Complex kernel_symplectic_to_squeeze(int n, double mu_p, double nu_p, double x, double mu,
                                     double nu);

struct PlaneQuadrature {
    double window = 10.0;
    int points = 401;
};

/// Transform drivers: apply the printed kernels by quadrature.
double squeeze_via_density_kernel(const DensityMatrix& rho, const TomographyFrame& frame,
                                  int n, const PlaneQuadrature& quad = {});
double squeeze_via_wigner_kernel(const WignerGrid& grid, const TomographyFrame& frame,
                                 int n);
double squeeze_via_symplectic_kernel(const TomogramSampler& sampler,
                                     const TomographyFrame& target, int n,
                                     const QuadratureSpec& quad = {});

}  // namespace sqz

#endif
