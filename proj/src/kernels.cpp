#include "sqz/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "sqz/special.hpp"

namespace sqz {

namespace {

void check_kernel_domain(double mu, double nu, bool need_mu) {
    if (nu == 0.0)
        throw std::invalid_argument("kernel: nu = 0 (1/nu term in the printed formula)");
    if (need_mu && mu == 0.0)
        throw std::invalid_argument("kernel: mu = 0 (1/mu term in the printed formula)");
    const double rad = 1.0 - 4.0 * mu * mu * nu * nu;
    if (rad >= 0.0 && 1.0 - std::sqrt(rad) == 0.0)
        throw std::invalid_argument(
            "kernel: 1 - sqrt(1 - 4 mu^2 nu^2) = 0 (singular denominator)");
}

double radical_term(double mu, double nu) {
    // sqrt(2) / (1 - sqrt(1 - 4 mu^2 nu^2)), exactly as printed
    const double rad = 1.0 - 4.0 * mu * mu * nu * nu;
    return std::sqrt(2.0) / (1.0 - std::sqrt(rad));
}

}  // namespace

Complex kernel_density_to_squeeze(double x, double y, int n, double mu, double nu) {
    if (n < 0) throw std::invalid_argument("kernel: n must be >= 0");
    check_kernel_domain(mu, nu, /*need_mu=*/false);
    const double s2 = mu * mu + nu * nu;
    const double a = radical_term(mu, nu);
    const Complex bracket_x = a - Complex(mu, nu) / (nu * s2);
    const Complex bracket_y = a - Complex(mu, -nu) / (nu * s2);
    const Complex expo = Complex(0.0, -0.5 * x * x) * bracket_x +
                         Complex(0.0, 0.5 * y * y) * bracket_y;
    const double s = std::sqrt(s2);
    const LogVal hx = hermite_scaled(unsigned(n), x / s);
    const LogVal hy = hermite_scaled(unsigned(n), y / s);
    if (hx.sign == 0 || hy.sign == 0) return 0.0;
    const double log_pref = -0.5 * std::log(M_PI * s2) - n * std::log(2.0) -
                            log_factorial(unsigned(n));
    const double mag = hx.sign * hy.sign *
                       std::exp(log_pref + hx.log_abs + hy.log_abs + expo.real());
    return mag * std::exp(Complex(0.0, expo.imag()));
}

double kernel_wigner_to_squeeze(double q, double p, int n, double mu, double nu) {
    if (n < 0) throw std::invalid_argument("kernel: n must be >= 0");
    check_kernel_domain(mu, nu, /*need_mu=*/false);
    const double s2 = mu * mu + nu * nu;
    const double shear = radical_term(mu, nu) - mu / (nu * s2);
    const double t = p - shear * q;
    const double z2 = 2.0 * q * q / s2 + 2.0 * s2 * t * t;
    const double sign = n % 2 == 0 ? 1.0 : -1.0;
    return sign / M_PI * std::exp(-0.5 * z2) * laguerre(unsigned(n), z2);
}

Complex kernel_symplectic_to_squeeze(int n, double mu_p, double nu_p, double x, double mu,
                                     double nu) {
    if (n < 0) throw std::invalid_argument("kernel: n must be >= 0");
    check_kernel_domain(mu, nu, /*need_mu=*/true);
    // Principal complex branch once 4 mu^2 nu^2 > 1 (the printed formula is
    // real only on |mu nu| <= 1/2).
    const Complex rad = std::sqrt(Complex(1.0 - 4.0 * mu * mu * nu * nu, 0.0));
    const Complex mu_t = -nu_p / (2.0 * nu) * (1.0 - rad) + mu_p * mu;
    const Complex nu_t = nu_p / (2.0 * mu) * (1.0 + rad) + mu_p * nu;
    const Complex alpha = (nu_t - Complex(0.0, 1.0) * mu_t) / std::sqrt(2.0);
    const double a2 = std::norm(alpha);
    return std::exp(Complex(0.0, x)) / (2.0 * M_PI) * std::exp(-0.5 * a2) *
           laguerre(unsigned(n), a2);
}

double squeeze_via_density_kernel(const DensityMatrix& rho, const TomographyFrame& frame,
                                  int n, const PlaneQuadrature& quad) {
    const int dim = rho.dim();
    std::vector<double> xs(quad.points);
    for (int i = 0; i < quad.points; ++i)
        xs[i] = -quad.window + 2.0 * quad.window * i / (quad.points - 1.0);
    const double h = xs[1] - xs[0];
    // psi table and rho(x, y) = Psi^T rho Psi
    Eigen::MatrixXd psi(dim, quad.points);
    std::vector<double> col(dim);
    for (int i = 0; i < quad.points; ++i) {
        fock_wavefunctions(xs[i], col);
        for (int a = 0; a < dim; ++a) psi(a, i) = col[a];
    }
    const Matrix density_xy = psi.transpose().cast<Complex>() * rho.rho * psi.cast<Complex>();
    Complex acc = 0.0;
    for (int i = 0; i < quad.points; ++i) {
        const double wi = (i == 0 || i == quad.points - 1) ? 0.5 * h : h;
        for (int j = 0; j < quad.points; ++j) {
            const double wj = (j == 0 || j == quad.points - 1) ? 0.5 * h : h;
            acc += wi * wj * density_xy(i, j) *
                   kernel_density_to_squeeze(xs[i], xs[j], n, frame.mu, frame.nu);
        }
    }
    return acc.real();
}

double squeeze_via_wigner_kernel(const WignerGrid& grid, const TomographyFrame& frame,
                                 int n) {
    const double hq = grid.q[1] - grid.q[0];
    const double hp = grid.p[1] - grid.p[0];
    double acc = 0.0;
    for (size_t i = 0; i < grid.q.size(); ++i) {
        const double wi = (i == 0 || i + 1 == grid.q.size()) ? 0.5 * hq : hq;
        for (size_t j = 0; j < grid.p.size(); ++j) {
            const double wj = (j == 0 || j + 1 == grid.p.size()) ? 0.5 * hp : hp;
            acc += wi * wj * grid.values(i, j) *
                   kernel_wigner_to_squeeze(grid.q[i], grid.p[j], n, frame.mu, frame.nu);
        }
    }
    // The transform measure is dq dp; the grid normalization is dq dp / 2 pi.
    return acc;
}

double squeeze_via_symplectic_kernel(const TomogramSampler& sampler,
                                     const TomographyFrame& target, int n,
                                     const QuadratureSpec& quad) {
    // Midpoint nodes keep the integration off the singular axes mu = 0, nu = 0;
    // an even node count is required, otherwise the central midpoint is 0.
    const int points = quad.munu_points + (quad.munu_points % 2);
    std::vector<double> nodes(points);
    const double h = 2.0 * quad.munu_window / points;
    for (int i = 0; i < points; ++i)
        nodes[i] = -quad.munu_window + (i + 0.5) * h;
    const Eigen::MatrixXcd phi = symplectic_characteristic(sampler, nodes, nodes, quad);
    Complex acc = 0.0;
    for (int i = 0; i < points; ++i)
        for (int j = 0; j < points; ++j) {
            // e^{iX} already integrated into phi; the rest of the kernel at X = 0.
            acc += h * h * phi(i, j) *
                   kernel_symplectic_to_squeeze(n, target.mu, target.nu, 0.0, nodes[i],
                                                nodes[j]);
        }
    return acc.real();
}

}  // namespace sqz
