#include "sqz/special.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include <Eigen/Dense>

namespace sqz {

namespace {
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
constexpr double kRescaleThreshold = 1e150;
constexpr double kLogRescale = 345.3877639491069;  // log(1e150)
}  // namespace

LogVal LogVal::zero() { return {kNegInf, 0}; }

LogVal LogVal::from(double v) {
    if (v == 0.0) return zero();
    return {std::log(std::abs(v)), v > 0 ? 1 : -1};
}

double LogVal::value() const { return sign == 0 ? 0.0 : sign * std::exp(log_abs); }

LogVal LogVal::operator*(const LogVal& o) const {
    if (sign == 0 || o.sign == 0) return zero();
    return {log_abs + o.log_abs, sign * o.sign};
}

LogVal LogVal::operator+(const LogVal& o) const {
    if (sign == 0) return o;
    if (o.sign == 0) return *this;
    const double m = std::max(log_abs, o.log_abs);
    const double r = sign * std::exp(log_abs - m) + o.sign * std::exp(o.log_abs - m);
    if (r == 0.0) return zero();
    return {m + std::log(std::abs(r)), r > 0 ? 1 : -1};
}

LogVal LogVal::pow(double e) const {
    if (sign == 0) return zero();
    if (sign < 0) {
        const long long k = static_cast<long long>(std::llround(e));
        if (static_cast<double>(k) != e)
            throw std::domain_error("LogVal::pow: negative base, non-integer exponent");
        return {log_abs * e, k % 2 == 0 ? 1 : -1};
    }
    return {log_abs * e, 1};
}

double log_factorial(unsigned n) { return std::lgamma(static_cast<double>(n) + 1.0); }

double hermite(unsigned n, double x) {
    double p0 = 1.0, p1 = 2.0 * x;
    if (n == 0) return p0;
    for (unsigned k = 1; k < n; ++k) {
        const double p2 = 2.0 * x * p1 - 2.0 * k * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

std::complex<double> hermite(unsigned n, std::complex<double> x) {
    std::complex<double> p0 = 1.0, p1 = 2.0 * x;
    if (n == 0) return p0;
    for (unsigned k = 1; k < n; ++k) {
        const std::complex<double> p2 = 2.0 * x * p1 - 2.0 * static_cast<double>(k) * p0;
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

ScaledComplex hermite_scaled(unsigned n, std::complex<double> x) {
    std::complex<double> p0 = 1.0, p1 = 2.0 * x;
    double scale = 0.0;
    if (n == 0) return {p0, 0.0};
    for (unsigned k = 1; k < n; ++k) {
        std::complex<double> p2 = 2.0 * x * p1 - 2.0 * static_cast<double>(k) * p0;
        if (std::abs(p2) > kRescaleThreshold) {
            p2 /= kRescaleThreshold;
            p1 /= kRescaleThreshold;
            scale += kLogRescale;
        }
        p0 = p1;
        p1 = p2;
    }
    return {p1, scale};
}

LogVal hermite_scaled(unsigned n, double x) {
    const ScaledComplex h = hermite_scaled(n, std::complex<double>(x, 0.0));
    const double v = h.mantissa.real();
    if (v == 0.0) return LogVal::zero();
    return {std::log(std::abs(v)) + h.log_scale, v > 0 ? 1 : -1};
}

LogVal hermite_at_zero(unsigned n) {
    if (n % 2 == 1) return LogVal::zero();
    const unsigned k = n / 2;
    // H_{2k}(0) = (-1)^k (2k)! / k!
    return {log_factorial(n) - log_factorial(k), k % 2 == 0 ? 1 : -1};
}

double laguerre(unsigned n, double x) { return laguerre_assoc(n, 0, x); }

double laguerre_assoc(unsigned n, unsigned k, double x) {
    double p0 = 1.0;
    if (n == 0) return p0;
    double p1 = 1.0 + k - x;
    for (unsigned j = 1; j < n; ++j) {
        const double p2 =
            ((2.0 * j + 1.0 + k - x) * p1 - (j + static_cast<double>(k)) * p0) / (j + 1.0);
        p0 = p1;
        p1 = p2;
    }
    return p1;
}

std::vector<LogVal> hermite_two_index_zero_table(
    const std::array<std::array<double, 2>, 2>& R, unsigned n_max, unsigned m_max) {
    const double r11 = R[0][0], r12 = R[0][1], r22 = R[1][1];
    const unsigned cols = m_max + 1;
    std::vector<LogVal> h((n_max + 1) * cols, LogVal::zero());
    auto at = [&](unsigned n, unsigned m) -> LogVal& { return h[n * cols + m]; };

    // Row n = 0: single-index recursion in m, H_{0,m+1} = -r22 m H_{0,m-1}.
    at(0, 0) = LogVal::from(1.0);
    for (unsigned m = 1; m <= m_max; ++m) {
        LogVal v = LogVal::zero();
        if (m >= 2) v = LogVal::from(-r22 * (m - 1.0)) * at(0, m - 2);
        at(0, m) = v;
    }
    if (n_max >= 1) {
        for (unsigned m = 1; m <= m_max; ++m)
            at(1, m) = LogVal::from(-r12 * static_cast<double>(m)) * at(0, m - 1);
    }
    for (unsigned n = 1; n < n_max; ++n) {
        for (unsigned m = 0; m <= m_max; ++m) {
            LogVal v = LogVal::from(-r11 * static_cast<double>(n)) * at(n - 1, m);
            if (m >= 1) v = v + LogVal::from(-r12 * static_cast<double>(m)) * at(n, m - 1);
            at(n + 1, m) = v;
        }
    }
    return h;
}

LogVal hermite_two_index_zero(const std::array<std::array<double, 2>, 2>& R,
                              unsigned n, unsigned m) {
    return hermite_two_index_zero_table(R, n, m)[n * (m + 1) + m];
}

void gauss_hermite(unsigned n, std::vector<double>& nodes, std::vector<double>& weights) {
    Eigen::MatrixXd J = Eigen::MatrixXd::Zero(n, n);
    for (unsigned k = 1; k < n; ++k) {
        const double b = std::sqrt(k / 2.0);
        J(k - 1, k) = b;
        J(k, k - 1) = b;
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(J);
    nodes.resize(n);
    weights.resize(n);
    const double mu0 = std::sqrt(M_PI);
    for (unsigned k = 0; k < n; ++k) {
        nodes[k] = es.eigenvalues()(k);
        const double v0 = es.eigenvectors()(0, k);
        weights[k] = mu0 * v0 * v0;
    }
}

}  // namespace sqz
