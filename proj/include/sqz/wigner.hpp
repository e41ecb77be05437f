#ifndef SQZ_WIGNER_HPP
#define SQZ_WIGNER_HPP

#include <functional>
#include <vector>

#include "sqz/fock.hpp"
#include "sqz/tomography.hpp"

namespace sqz {

/// Uniform phase-space grid; normalization convention: integral dq dp / (2 pi)
/// of the values is 1, so the vacuum peaks at W(0,0) = 2.
struct WignerGrid {
    std::vector<double> q;
    std::vector<double> p;
    Eigen::MatrixXd values;  // rows follow q, columns follow p

    /// Trapezoid estimate of integral dq dp / (2 pi).
    double quadrature_mass() const;
    double value_at(int iq, int ip) const { return values(iq, ip); }
};

struct GridSpec {
    double q_min = -5.0, q_max = 5.0;
    int q_points = 81;
    double p_min = -5.0, p_max = 5.0;
    int p_points = 81;
};

/// Quadrature budget for the oscillatory inverse transforms. The X integral
/// is taken in the scaled variable u = X / |(mu, nu)| so that a fixed window
/// covers every frame.
struct QuadratureSpec {
    double x_window = 12.0;
    int x_points = 257;
    double munu_window = 6.0;
    int munu_points = 81;
};

using TomogramSampler = std::function<double(double x, double mu, double nu)>;

/// Symplectic-tomogram sampler with the spectral decomposition of rho cached.
TomogramSampler make_symplectic_sampler(const DensityMatrix& rho);

/// phi(mu, nu) = integral dX e^{iX} W_sym(X, mu, nu) on the given nodes, with
/// the X integral taken in the scaled variable u = X / |(mu, nu)|.
Eigen::MatrixXcd symplectic_characteristic(const TomogramSampler& sampler,
                                           const std::vector<double>& mus,
                                           const std::vector<double>& nus,
                                           const QuadratureSpec& quad);

/// Fock-basis Wigner synthesis.
WignerGrid wigner_from_state(const DensityMatrix& rho, const GridSpec& spec,
                             DiagnosticSink* sink = nullptr);

/// Single-point Wigner value of rho.
double wigner_point(const Matrix& rho, double q, double p);

/// Inverse transform: Fourier reconstruction of W(q,p) from the symplectic
/// tomogram.
WignerGrid wigner_from_symplectic(const TomogramSampler& sampler, const GridSpec& grid,
                                  const QuadratureSpec& quad,
                                  DiagnosticSink* sink = nullptr);

/// Operator Fourier reconstruction of the density matrix from the symplectic
/// tomogram. `hermiticity_defect`, when non-null, receives the
/// pre-symmetrization defect.
DensityMatrix density_from_symplectic(const TomogramSampler& sampler, int cutoff,
                                      const QuadratureSpec& quad,
                                      double* hermiticity_defect = nullptr,
                                      DiagnosticSink* sink = nullptr);

}  // namespace sqz

#endif
