#include "sqz/tomography.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

#include "sqz/special.hpp"

namespace sqz {

namespace {
constexpr double kLambdaZeroSwitch = 1e-6;  // below this, Poisson-limit branch
}

TomographyFrame::TomographyFrame(double lambda_, double theta_)
    : lambda(lambda_), theta(theta_) {
    const auto mn = frame_to_munu(lambda_, theta_);
    mu = mn.first;
    nu = mn.second;
}

std::pair<double, double> frame_to_munu(double lambda, double theta) {
    return {std::exp(lambda) * std::cos(theta), std::exp(-lambda) * std::sin(theta)};
}

TomographyFrame munu_to_frame(double mu, double nu) {
    if (!std::isfinite(mu) || !std::isfinite(nu))
        throw std::invalid_argument("munu_to_frame: non-finite parameters");
    if (mu < 0.0 || (mu == 0.0 && nu <= 0.0))
        throw std::invalid_argument(
            "munu_to_frame: (mu, nu) outside the canonical branch image "
            "{mu > 0} U {mu = 0, nu > 0}");
    double s = 2.0 * mu * nu;
    if (std::abs(s) > 1.0 + 1e-12)
        throw std::invalid_argument("munu_to_frame: |2 mu nu| > 1, outside the frame manifold");
    s = std::clamp(s, -1.0, 1.0);
    if (mu == 0.0) return TomographyFrame(-std::log(nu), M_PI / 2.0);
    const double theta = 0.5 * std::asin(s);
    const double lambda = std::log(mu / std::cos(theta));
    return TomographyFrame(lambda, theta);
}

std::vector<double> squeeze_tomogram_oracle(const DensityMatrix& rho,
                                            const TomographyFrame& frame, int n_max,
                                            DiagnosticSink* sink) {
    return squeeze_tomogram_oracle(rho, std::vector<TomographyFrame>{frame}, n_max, sink)
        .values[0];
}

SqueezeTomogram squeeze_tomogram_oracle(const DensityMatrix& rho,
                                        const std::vector<TomographyFrame>& frames,
                                        int n_max, DiagnosticSink* sink) {
    const int n = rho.dim();
    if (n_max >= n - interior_margin(n))
        throw std::invalid_argument("squeeze_tomogram_oracle: n_max inside the corrupted "
                                    "boundary block; raise the cutoff");
    SqueezeTomogram out;
    out.n_max = n_max;
    out.frames = frames;
    for (const auto& frame : frames) {
        const Matrix u =
            squeeze_matrix(frame.lambda, n, sink) * rotation_matrix(frame.theta, n);
        const Matrix scaled = u * rho.rho * u.adjoint();
        std::vector<double> w(n_max + 1);
        double sum = 0.0;
        for (int k = 0; k <= n_max; ++k) {
            const double v = scaled(k, k).real();
            if (v < out.preclip_min) out.preclip_min = v;
            w[k] = std::max(v, 0.0);
            sum += w[k];
        }
        if (sum < 1.0 - 1e-4)
            emit_diagnostic(sink, {"truncation_leakage",
                                   "squeeze tomogram mass below 1 - 1e-4; raise the "
                                   "cutoff or n_max",
                                   sum, 1.0 - 1e-4});
        out.values.push_back(std::move(w));
        out.tail_mass.push_back(1.0 - sum);
    }
    return out;
}

double squeeze_tomogram_vacuum(int n, double lambda) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    if (n % 2 == 1) return 0.0;
    if (lambda == 0.0) return n == 0 ? 1.0 : 0.0;
    const LogVal h0 = hermite_at_zero(n);
    const double log_w = n * std::log(std::abs(std::tanh(lambda))) - log_factorial(n) -
                         n * std::log(2.0) - std::log(std::cosh(lambda)) + 2.0 * h0.log_abs;
    return std::exp(log_w);
}

Complex coherent_matrix_element(int n, double lambda, double theta, Complex alpha) {
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const Complex alpha_rot = alpha * std::exp(Complex(0.0, theta));
    if (std::abs(lambda) < kLambdaZeroSwitch) {
        // lambda -> 0 limit: rotated coherent amplitudes (Poisson statistics).
        const double log_mag = -0.5 * std::norm(alpha) - 0.5 * log_factorial(n);
        Complex pow_a = n == 0 ? Complex(1.0, 0.0) : std::pow(alpha_rot, n);
        return std::exp(Complex(log_mag, 0.5 * theta)) * pow_a;
    }
    // Principal complex branches carry the formula across lambda < 0, where
    // tanh and sinh(2 lambda) go negative.
    const double th = std::tanh(lambda);
    const Complex arg = alpha_rot / std::sqrt(Complex(std::sinh(2.0 * lambda), 0.0));
    const ScaledComplex h = hermite_scaled(n, arg);
    const Complex pref = 0.5 * (Complex(-std::norm(alpha), theta) +
                                alpha_rot * alpha_rot * th);
    const Complex half_pow = 0.5 * double(n) * std::log(Complex(0.5 * th, 0.0));
    const double log_mag = -0.5 * (log_factorial(n) + std::log(std::cosh(lambda)));
    return std::exp(pref + half_pow + Complex(log_mag + h.log_scale, 0.0)) * h.mantissa;
}

double squeeze_tomogram_coherent(int n, double lambda, double theta, Complex alpha) {
    return std::norm(coherent_matrix_element(n, lambda, theta, alpha));
}

double squeeze_tomogram_fock(int n, double lambda, int m) {
    if (n < 0 || m < 0) throw std::invalid_argument("indices must be >= 0");
    if (lambda == 0.0) return n == m ? 1.0 : 0.0;
    if ((n + m) % 2 == 1) return 0.0;  // parity selection rule
    if (m == 1) {
        // Closed form for the |1> state.
        if (n == 0) return 0.0;
        const LogVal h0 = hermite_at_zero(n - 1);
        const double log_w = 2.0 * std::log(double(n)) +
                             (n - 1) * std::log(std::abs(std::tanh(lambda))) -
                             (n - 1) * std::log(2.0) - log_factorial(n) -
                             3.0 * std::log(std::cosh(lambda)) + 2.0 * h0.log_abs;
        return std::exp(log_w);
    }
    const double th = std::tanh(lambda), sch = 1.0 / std::cosh(lambda);
    const std::array<std::array<double, 2>, 2> r = {{{th, -sch}, {-sch, -th}}};
    const LogVal h = hermite_two_index_zero(r, n, m);
    if (h.sign == 0) return 0.0;
    const double log_w = std::log(sch) - log_factorial(m) - log_factorial(n) + 2.0 * h.log_abs;
    return std::exp(log_w);
}

double squeeze_tomogram_cat(int n, double lambda, double theta, Complex alpha, int parity) {
    if (parity != 1 && parity != -1) throw std::invalid_argument("parity must be +-1");
    const int sign = n % 2 == 0 ? 1 : -1;
    if (parity != sign) return 0.0;  // exact interference zero
    const double norm = 1.0 + parity * std::exp(-2.0 * std::norm(alpha));
    return 2.0 / norm * squeeze_tomogram_coherent(n, lambda, theta, alpha);
}

double squeeze_tomogram_thermal(int n, double lambda, double temperature, int m_sum_max,
                                DiagnosticSink* sink) {
    if (temperature <= 0.0) throw std::invalid_argument("temperature must be > 0");
    if (n < 0) throw std::invalid_argument("n must be >= 0");
    const double z = 0.5 / std::sinh(0.5 / temperature);
    // Boltzmann tail beyond the summation window.
    const double tail = std::exp(-(m_sum_max + 1.5) / temperature) /
                        (z * (1.0 - std::exp(-1.0 / temperature)));
    if (tail > 1e-10)
        emit_diagnostic(sink, {"boltzmann_tail",
                               "thermal tomogram sum truncated with tail above budget; "
                               "raise m_sum_max",
                               tail, 1e-10});
    if (lambda == 0.0) return std::exp(-(n + 0.5) / temperature) / z;
    const double th = std::tanh(lambda), sch = 1.0 / std::cosh(lambda);
    const std::array<std::array<double, 2>, 2> r = {{{th, -sch}, {-sch, -th}}};
    const auto table = hermite_two_index_zero_table(r, n, m_sum_max);
    double sum = 0.0;
    for (int m = 0; m <= m_sum_max; ++m) {
        const LogVal& h = table[static_cast<size_t>(n) * (m_sum_max + 1) + m];
        if (h.sign == 0) continue;
        const double log_w = -(m + 0.5) / temperature - std::log(z) + std::log(sch) -
                             log_factorial(m) - log_factorial(n) + 2.0 * h.log_abs;
        sum += std::exp(log_w);
    }
    return sum;
}

std::vector<double> position_density(const Matrix& rho, const std::vector<double>& xs) {
    const int n = static_cast<int>(rho.rows());
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho);
    std::vector<double> out(xs.size(), 0.0);
    std::vector<double> psi(n);
    for (size_t i = 0; i < xs.size(); ++i) {
        fock_wavefunctions(xs[i], psi);
        double acc = 0.0;
        for (int k = 0; k < n; ++k) {
            const double w = es.eigenvalues()(k);
            if (w < 1e-14) continue;
            Complex amp = 0.0;
            for (int j = 0; j < n; ++j) amp += es.eigenvectors()(j, k) * psi[j];
            acc += w * std::norm(amp);
        }
        out[i] = acc;
    }
    return out;
}

double optical_tomogram(const DensityMatrix& rho, double x, double theta) {
    const int n = rho.dim();
    // density of X_theta = R q R^dag, i.e. position density of R^dag rho R
    Matrix rotated = rho.rho;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            rotated(i, j) *= std::exp(Complex(0.0, -theta * (i - j)));
    return position_density(rotated, {x})[0];
}

double symplectic_tomogram(const DensityMatrix& rho, double x, double mu, double nu) {
    if (mu == 0.0 && nu == 0.0)
        throw std::invalid_argument("symplectic_tomogram: (mu, nu) = (0, 0)");
    const double r = std::hypot(mu, nu);
    const double phi = std::atan2(nu, mu);
    return optical_tomogram(rho, x / r, phi) / r;
}

Matrix squeeze_dequantizer(int n, const TomographyFrame& frame, int cutoff) {
    if (n < 0 || n >= cutoff) throw std::invalid_argument("dequantizer index out of range");
    const Matrix u =
        squeeze_matrix(frame.lambda, cutoff) * rotation_matrix(frame.theta, cutoff);
    const Vector row = u.row(n).adjoint();  // R^dag S^dag |n>
    return row * row.adjoint();
}

}  // namespace sqz
