#ifndef SQZ_SPECIAL_HPP
#define SQZ_SPECIAL_HPP

#include <array>
#include <complex>
#include <vector>

namespace sqz {

/// Sign-and-log-magnitude scalar. Products and sums of enormous
/// polynomial/factorial values are carried as (sign, log|v|) so that
/// ratios like H_n(0)^2 / n! stay representable far past n ~ 150.
struct LogVal {
    double log_abs;   // log |v|, -inf encodes zero
    int sign;         // -1, 0, +1

    static LogVal zero();
    static LogVal from(double v);
    double value() const;           // sign * exp(log_abs); may over/underflow to +-inf/0
    LogVal operator*(const LogVal& o) const;
    LogVal operator+(const LogVal& o) const;
    LogVal pow(double e) const;     // requires sign >= 0 unless e is an integer
};

double log_factorial(unsigned n);

/// Physicists' Hermite polynomial H_n(x), three-term recursion.
double hermite(unsigned n, double x);
std::complex<double> hermite(unsigned n, std::complex<double> x);

/// Overflow-safe Hermite: value = mantissa * exp(log_scale), |mantissa| = O(1).
struct ScaledComplex {
    std::complex<double> mantissa;
    double log_scale;
};
ScaledComplex hermite_scaled(unsigned n, std::complex<double> x);
LogVal hermite_scaled(unsigned n, double x);

/// H_n(0) as a LogVal: zero for odd n, (-1)^{n/2} n!/(n/2)! for even n.
LogVal hermite_at_zero(unsigned n);

/// Laguerre polynomials L_n(x) and associated L_n^k(x).
double laguerre(unsigned n, double x);
double laguerre_assoc(unsigned n, unsigned k, double x);

/// Two-index Hermite polynomial H^{R}_{nm}(0) for a symmetric 2x2 matrix
/// R = [[r11, r12], [r12, r22]], defined through the generating function
///   sum_{n,m} H_{nm}(0) a^n b^m / (n! m!) = exp(-(r11 a^2 + 2 r12 ab + r22 b^2)/2).
/// Recursion: H_{n+1,m} = -r11 n H_{n-1,m} - r12 m H_{n,m-1}.
LogVal hermite_two_index_zero(const std::array<std::array<double, 2>, 2>& R,
                              unsigned n, unsigned m);

/// Full table H_{nm}(0) for n <= n_max, m <= m_max (row-major, (n_max+1) x (m_max+1)).
std::vector<LogVal> hermite_two_index_zero_table(
    const std::array<std::array<double, 2>, 2>& R, unsigned n_max, unsigned m_max);

/// Gauss-Hermite nodes/weights for weight e^{-x^2} (Golub-Welsch).
void gauss_hermite(unsigned n, std::vector<double>& nodes, std::vector<double>& weights);

}  // namespace sqz

#endif
