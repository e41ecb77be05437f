#ifndef SQZ_TOMOGRAPHY_HPP
#define SQZ_TOMOGRAPHY_HPP

#include <vector>

#include "sqz/fock.hpp"
#include "sqz/states.hpp"

namespace sqz {

/// A squeeze-rotation frame (lambda, theta) with the derived
/// symplectic parameters mu = e^lambda cos(theta), nu = e^{-lambda} sin(theta).
struct TomographyFrame {
    double lambda = 0.0;
    double theta = 0.0;
    double mu = 1.0;
    double nu = 0.0;

    TomographyFrame() = default;
    TomographyFrame(double lambda_, double theta_);
};

std::pair<double, double> frame_to_munu(double lambda, double theta);

/// Canonical preimage with theta in (-pi/2, pi/2]; rejects (mu, nu) outside
/// the branch image {mu > 0} U {mu = 0, nu > 0} or with |2 mu nu| > 1.
TomographyFrame munu_to_frame(double mu, double nu);

/// Photon-number probabilities of one state on a set of frames.
struct SqueezeTomogram {
    int n_max = 0;
    std::vector<TomographyFrame> frames;
    std::vector<std::vector<double>> values;  // [frame][n]
    std::vector<double> tail_mass;            // per frame, 1 - sum_n W(n)
    double preclip_min = 0.0;                 // most negative raw value seen
};

/// Ground truth: W(n) = <n| S(lambda) R(theta) rho R^dag S^dag |n>.
SqueezeTomogram squeeze_tomogram_oracle(const DensityMatrix& rho,
                                        const std::vector<TomographyFrame>& frames,
                                        int n_max, DiagnosticSink* sink = nullptr);
std::vector<double> squeeze_tomogram_oracle(const DensityMatrix& rho,
                                            const TomographyFrame& frame, int n_max,
                                            DiagnosticSink* sink = nullptr);

/// Closed-form tomograms (theta enters only where the state is not
/// rotation-covariant; vacuum/Fock/thermal tomograms are theta-free).
double squeeze_tomogram_vacuum(int n, double lambda);
Complex coherent_matrix_element(int n, double lambda, double theta, Complex alpha);
double squeeze_tomogram_coherent(int n, double lambda, double theta, Complex alpha);
double squeeze_tomogram_fock(int n, double lambda, int m);
double squeeze_tomogram_cat(int n, double lambda, double theta, Complex alpha, int parity);
double squeeze_tomogram_thermal(int n, double lambda, double temperature, int m_sum_max,
                                DiagnosticSink* sink = nullptr);

/// Optical tomogram: density of X = cos(theta) q + sin(theta) p.
double optical_tomogram(const DensityMatrix& rho, double x, double theta);

/// Symplectic tomogram: density of X = mu q + nu p.
double symplectic_tomogram(const DensityMatrix& rho, double x, double mu, double nu);

/// Position density <x|rho|x> evaluated on a grid (shared by the optical and
/// symplectic routes).
std::vector<double> position_density(const Matrix& rho, const std::vector<double>& xs);

/// Dequantizer R^dag S^dag |n><n| S R; trace{rho * U} is the squeeze tomogram.
Matrix squeeze_dequantizer(int n, const TomographyFrame& frame, int cutoff);

}  // namespace sqz

#endif
