#ifndef SQZ_DYNAMICS_HPP
#define SQZ_DYNAMICS_HPP

#include <complex>
#include <functional>
#include <vector>

namespace sqz {

using FrequencyProfile = std::function<double(double t)>;

FrequencyProfile constant_frequency(double omega = 1.0);
FrequencyProfile step_frequency(double omega0, double omega1, double t_step);
FrequencyProfile sinusoidal_frequency(double omega0, double depth, double mod_freq);
/// Linear interpolation through (t, omega) samples, clamped at the ends.
FrequencyProfile tabulated_frequency(std::vector<double> ts, std::vector<double> omegas);

/// Complex mode function of the parametric oscillator:
/// eps'' + omega^2(t) eps = 0, eps(0) = 1, eps'(0) = i.
struct ClassicalTrajectory {
    std::vector<double> t;
    std::vector<std::complex<double>> eps;
    std::vector<std::complex<double>> eps_dot;

    /// Wronskian-type invariant Im(eps* eps_dot); 1 at t = 0.
    double invariant(size_t i) const;
    double max_invariant_drift() const;
};

ClassicalTrajectory integrate_epsilon(const FrequencyProfile& omega,
                                      const std::vector<double>& t_grid,
                                      double abs_tol = 1e-12, double rel_tol = 1e-10);

struct GaussianMoments {
    double mean_q = 0.0;
    double mean_p = 0.0;
    double sigma_q = 0.0;   // variance of q
    double sigma_p = 0.0;   // variance of p
    double sigma_pq = 0.0;  // symmetrized covariance
    double correlation = 0.0;
    bool squeezed = false;  // sigma_q below the vacuum value 1/2
};

std::vector<GaussianMoments> parametric_variances(const ClassicalTrajectory& traj);

struct KanaiCoefficients {
    double t = 0.0;
    double gamma = 0.0;
    std::complex<double> lambda_q;
    std::complex<double> lambda_p;
};

/// The printed lambda_p / lambda_q expressions, evaluated verbatim.
KanaiCoefficients kanai_coefficients(double gamma, double t);

GaussianMoments kanai_moments(double gamma, std::complex<double> alpha, double t);

/// Gaussian position density with mean <q>_alpha(t) and variance |lambda_p|^2.
double kanai_density(double gamma, std::complex<double> alpha, double q, double t);

/// Measures sigma_p sigma_q - sigma_pq^2 over the grid, asserts constancy, and
/// compares the constant against the reference value 1/4 without rescaling anything.
struct UncertaintyAudit {
    double gamma = 0.0;
    double invariant_value = 0.0;   // time-averaged sigma_p sigma_q - sigma_pq^2
    double reference_value = 0.25;
    double constancy_drift = 0.0;   // max deviation from the mean over the grid
    double reconciling_scale = 1.0; // factor on lambda_p and lambda_q that would
                                    // bring the constant to 1/4
};

UncertaintyAudit uncertainty_audit(double gamma, const std::vector<double>& t_grid);

}  // namespace sqz

#endif
