#include "sqz/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <boost/numeric/odeint.hpp>

namespace sqz {

namespace {
using State = std::array<double, 4>;  // Re eps, Im eps, Re eps', Im eps'
using Complexd = std::complex<double>;
}  // namespace

FrequencyProfile constant_frequency(double omega) {
    return [omega](double) { return omega; };
}

FrequencyProfile step_frequency(double omega0, double omega1, double t_step) {
    return [=](double t) { return t < t_step ? omega0 : omega1; };
}

FrequencyProfile sinusoidal_frequency(double omega0, double depth, double mod_freq) {
    return [=](double t) { return omega0 * (1.0 + depth * std::sin(mod_freq * t)); };
}

FrequencyProfile tabulated_frequency(std::vector<double> ts, std::vector<double> omegas) {
    if (ts.size() != omegas.size() || ts.size() < 2)
        throw std::invalid_argument("tabulated_frequency: need >= 2 matching samples");
    return [ts = std::move(ts), omegas = std::move(omegas)](double t) {
        if (t <= ts.front()) return omegas.front();
        if (t >= ts.back()) return omegas.back();
        const auto it = std::upper_bound(ts.begin(), ts.end(), t);
        const size_t i = it - ts.begin();
        const double w = (t - ts[i - 1]) / (ts[i] - ts[i - 1]);
        return omegas[i - 1] * (1.0 - w) + omegas[i] * w;
    };
}

double ClassicalTrajectory::invariant(size_t i) const {
    return std::imag(std::conj(eps[i]) * eps_dot[i]);
}

double ClassicalTrajectory::max_invariant_drift() const {
    double worst = 0.0;
    for (size_t i = 0; i < t.size(); ++i)
        worst = std::max(worst, std::abs(invariant(i) - 1.0));
    return worst;
}

ClassicalTrajectory integrate_epsilon(const FrequencyProfile& omega,
                                      const std::vector<double>& t_grid, double abs_tol,
                                      double rel_tol) {
    if (t_grid.size() < 2 || !std::is_sorted(t_grid.begin(), t_grid.end()))
        throw std::invalid_argument("integrate_epsilon: time grid must be increasing");
    namespace odeint = boost::numeric::odeint;
    auto rhs = [&omega](const State& s, State& dsdt, double t) {
        const double w2 = omega(t) * omega(t);
        dsdt[0] = s[2];
        dsdt[1] = s[3];
        dsdt[2] = -w2 * s[0];
        dsdt[3] = -w2 * s[1];
    };
    State s = {1.0, 0.0, 0.0, 1.0};  // eps(0) = 1, eps'(0) = i
    ClassicalTrajectory traj;
    traj.t.reserve(t_grid.size());
    auto observer = [&traj](const State& st, double t) {
        traj.t.push_back(t);
        traj.eps.emplace_back(st[0], st[1]);
        traj.eps_dot.emplace_back(st[2], st[3]);
    };
    auto stepper = odeint::make_dense_output(abs_tol, rel_tol,
                                             odeint::runge_kutta_dopri5<State>());
    odeint::integrate_times(stepper, rhs, s, t_grid.begin(), t_grid.end(), 1e-3, observer);
    const double drift = traj.max_invariant_drift();
    if (drift > 1e-9)
        throw std::runtime_error("integrate_epsilon: Wronskian invariant drift " +
                                 std::to_string(drift) + " exceeds 1e-9");
    return traj;
}

std::vector<GaussianMoments> parametric_variances(const ClassicalTrajectory& traj) {
    std::vector<GaussianMoments> out(traj.t.size());
    for (size_t i = 0; i < traj.t.size(); ++i) {
        GaussianMoments& m = out[i];
        m.sigma_q = 0.5 * std::norm(traj.eps[i]);
        m.sigma_p = 0.5 * std::norm(traj.eps_dot[i]);
        m.sigma_pq = 0.5 * std::real(std::conj(traj.eps[i]) * traj.eps_dot[i]);
        m.correlation = m.sigma_pq / std::sqrt(m.sigma_q * m.sigma_p);
        m.squeezed = std::abs(traj.eps[i]) < 1.0;
    }
    return out;
}

KanaiCoefficients kanai_coefficients(double gamma, double t) {
    if (gamma < 0.0 || gamma >= 1.0)
        throw std::invalid_argument("kanai_coefficients: need 0 <= gamma < 1");
    const double w = std::sqrt(1.0 - gamma * gamma);
    const double pref = 1.0 / std::sqrt(2.0 * w);
    const Complexd ei = std::exp(Complexd(0.0, w * t));
    KanaiCoefficients k;
    k.t = t;
    k.gamma = gamma;
    k.lambda_p = pref * std::exp(-gamma * t) * (Complexd(0.0, 1.0) * ei - std::sin(w * t));
    k.lambda_q = pref * std::exp(gamma * t) *
                 ((Complexd(0.0, gamma) + w) * ei + w * std::cos(w * t) -
                  gamma * std::sin(w * t));
    return k;
}

GaussianMoments kanai_moments(double gamma, std::complex<double> alpha, double t) {
    const KanaiCoefficients k = kanai_coefficients(gamma, t);
    GaussianMoments m;
    m.mean_q = 2.0 * std::imag(k.lambda_p * std::conj(alpha));
    m.mean_p = 2.0 * std::imag(std::conj(k.lambda_q) * alpha);
    m.sigma_q = std::norm(k.lambda_p);
    m.sigma_p = std::norm(k.lambda_q);
    m.sigma_pq = -std::real(k.lambda_p * std::conj(k.lambda_q));
    m.correlation = m.sigma_pq / std::sqrt(m.sigma_q * m.sigma_p);
    m.squeezed = m.sigma_q < 0.5;
    return m;
}

double kanai_density(double gamma, std::complex<double> alpha, double q, double t) {
    const GaussianMoments m = kanai_moments(gamma, alpha, t);
    const double var = m.sigma_q;
    const double d = q - m.mean_q;
    return std::exp(-0.5 * d * d / var) / std::sqrt(2.0 * M_PI * var);
}

UncertaintyAudit uncertainty_audit(double gamma, const std::vector<double>& t_grid) {
    if (t_grid.empty()) throw std::invalid_argument("uncertainty_audit: empty grid");
    UncertaintyAudit audit;
    audit.gamma = gamma;
    double sum = 0.0;
    std::vector<double> vals(t_grid.size());
    for (size_t i = 0; i < t_grid.size(); ++i) {
        const GaussianMoments m = kanai_moments(gamma, 0.0, t_grid[i]);
        vals[i] = m.sigma_p * m.sigma_q - m.sigma_pq * m.sigma_pq;
        sum += vals[i];
    }
    audit.invariant_value = sum / t_grid.size();
    for (double v : vals)
        audit.constancy_drift = std::max(audit.constancy_drift,
                                         std::abs(v - audit.invariant_value));
    if (audit.constancy_drift > 1e-6)
        throw std::runtime_error(
            "uncertainty_audit: sigma_p sigma_q - sigma_pq^2 not constant (drift " +
            std::to_string(audit.constancy_drift) + "); implementation bug");
    // Both lambdas scaled by s multiply the invariant by s^4.
    audit.reconciling_scale =
        std::pow(audit.reference_value / audit.invariant_value, 0.25);
    return audit;
}

}  // namespace sqz
