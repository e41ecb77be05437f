#include "sqz/wigner.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace sqz {

namespace {

std::vector<double> linspace(double lo, double hi, int n) {
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * i / (n - 1.0);
    return v;
}

double trapezoid_weight(int i, int n, double h) {
    return (i == 0 || i == n - 1) ? 0.5 * h : h;
}

}  // namespace

Eigen::MatrixXcd symplectic_characteristic(const TomogramSampler& sampler,
                                           const std::vector<double>& mus,
                                           const std::vector<double>& nus,
                                           const QuadratureSpec& quad) {
    const auto us = linspace(-quad.x_window, quad.x_window, quad.x_points);
    const double hu = us[1] - us[0];
    Eigen::MatrixXcd phi(mus.size(), nus.size());
    for (size_t i = 0; i < mus.size(); ++i) {
        for (size_t j = 0; j < nus.size(); ++j) {
            const double r = std::hypot(mus[i], nus[j]);
            if (r < 1e-12) {
                phi(i, j) = 1.0;  // X collapses to a point mass at 0
                continue;
            }
            Complex acc = 0.0;
            for (int k = 0; k < quad.x_points; ++k) {
                const double w = trapezoid_weight(k, quad.x_points, hu);
                const double val = sampler(r * us[k], mus[i], nus[j]);
                acc += w * r * val * std::exp(Complex(0.0, r * us[k]));
            }
            phi(i, j) = acc;
        }
    }
    return phi;
}

double WignerGrid::quadrature_mass() const {
    const double hq = q[1] - q[0], hp = p[1] - p[0];
    double acc = 0.0;
    for (size_t i = 0; i < q.size(); ++i)
        for (size_t j = 0; j < p.size(); ++j)
            acc += trapezoid_weight(int(i), int(q.size()), hq) *
                   trapezoid_weight(int(j), int(p.size()), hp) * values(i, j);
    return acc / (2.0 * M_PI);
}

TomogramSampler make_symplectic_sampler(const DensityMatrix& rho) {
    struct Cache {
        std::vector<double> weights;
        std::vector<Vector> vecs;
        int dim;
    };
    auto cache = std::make_shared<Cache>();
    Eigen::SelfAdjointEigenSolver<Matrix> es(rho.rho);
    cache->dim = rho.dim();
    for (int k = 0; k < cache->dim; ++k) {
        const double w = es.eigenvalues()(k);
        if (w < 1e-14) continue;
        cache->weights.push_back(w);
        cache->vecs.push_back(es.eigenvectors().col(k));
    }
    return [cache](double x, double mu, double nu) -> double {
        if (mu == 0.0 && nu == 0.0)
            throw std::invalid_argument("symplectic sampler: (mu, nu) = (0, 0)");
        const double r = std::hypot(mu, nu);
        const double phi = std::atan2(nu, mu);
        std::vector<double> psi(cache->dim);
        fock_wavefunctions(x / r, psi);
        double acc = 0.0;
        for (size_t k = 0; k < cache->weights.size(); ++k) {
            Complex amp = 0.0;
            for (int j = 0; j < cache->dim; ++j)
                amp += std::exp(Complex(0.0, -phi * j)) * cache->vecs[k](j) * psi[j];
            acc += cache->weights[k] * std::norm(amp);
        }
        return acc / r;
    };
}

double wigner_point(const Matrix& rho, double q, double p) {
    const int n = static_cast<int>(rho.rows());
    const Complex alpha2(std::sqrt(2.0) * q, std::sqrt(2.0) * p);  // 2 alpha
    const Matrix d2 = displacement_operator(alpha2, n);
    // W = 2 sum_{n,m} rho_{nm} (-1)^n <m|D(2 alpha)|n>
    Complex acc = 0.0;
    for (int a = 0; a < n; ++a) {
        const double sign = a % 2 == 0 ? 1.0 : -1.0;
        for (int b = 0; b < n; ++b) acc += rho(a, b) * sign * d2(b, a);
    }
    return 2.0 * acc.real();
}

WignerGrid wigner_from_state(const DensityMatrix& rho, const GridSpec& spec,
                             DiagnosticSink* sink) {
    WignerGrid g;
    g.q = linspace(spec.q_min, spec.q_max, spec.q_points);
    g.p = linspace(spec.p_min, spec.p_max, spec.p_points);
    g.values.resize(spec.q_points, spec.p_points);
    for (int i = 0; i < spec.q_points; ++i)
        for (int j = 0; j < spec.p_points; ++j)
            g.values(i, j) = wigner_point(rho.rho, g.q[i], g.p[j]);
    const double mass = g.quadrature_mass();
    if (std::abs(mass - 1.0) > 1e-4)
        emit_diagnostic(sink, {"support_coverage",
                               "Wigner grid quadrature mass deviates from 1; enlarge "
                               "or refine the grid",
                               mass, 1e-4});
    return g;
}

WignerGrid wigner_from_symplectic(const TomogramSampler& sampler, const GridSpec& grid,
                                  const QuadratureSpec& quad, DiagnosticSink* sink) {
    const auto mus = linspace(-quad.munu_window, quad.munu_window, quad.munu_points);
    const auto nus = mus;
    const double h = mus[1] - mus[0];
    const Eigen::MatrixXcd phi = symplectic_characteristic(sampler, mus, nus, quad);

    WignerGrid g;
    g.q = linspace(grid.q_min, grid.q_max, grid.q_points);
    g.p = linspace(grid.p_min, grid.p_max, grid.p_points);
    g.values.resize(grid.q_points, grid.p_points);
    // W(q,p) = (1/2pi) integral dmu dnu phi(mu,nu) e^{-i(mu q + nu p)}
    Eigen::VectorXd wl(quad.munu_points);
    for (int i = 0; i < quad.munu_points; ++i)
        wl(i) = trapezoid_weight(i, quad.munu_points, h);
    for (int a = 0; a < grid.q_points; ++a) {
        Eigen::VectorXcd eq(quad.munu_points);
        for (int i = 0; i < quad.munu_points; ++i)
            eq(i) = wl(i) * std::exp(Complex(0.0, -mus[i] * g.q[a]));
        for (int b = 0; b < grid.p_points; ++b) {
            Complex acc = 0.0;
            for (int j = 0; j < quad.munu_points; ++j) {
                Complex col = 0.0;
                for (int i = 0; i < quad.munu_points; ++i) col += eq(i) * phi(i, j);
                acc += col * wl(j) * std::exp(Complex(0.0, -nus[j] * g.p[b]));
            }
            g.values(a, b) = acc.real() / (2.0 * M_PI);
        }
    }
    const double mass = g.quadrature_mass();
    if (std::abs(mass - 1.0) > 1e-2)
        emit_diagnostic(sink, {"quadrature_budget",
                               "reconstructed Wigner mass deviates from 1; raise the "
                               "quadrature budget",
                               mass, 1e-2});
    return g;
}

DensityMatrix density_from_symplectic(const TomogramSampler& sampler, int cutoff,
                                      const QuadratureSpec& quad,
                                      double* hermiticity_defect, DiagnosticSink* sink) {
    const auto mus = linspace(-quad.munu_window, quad.munu_window, quad.munu_points);
    const auto nus = mus;
    const double h = mus[1] - mus[0];
    const Eigen::MatrixXcd phi = symplectic_characteristic(sampler, mus, nus, quad);

    // rho = (1/2pi) integral dmu dnu phi(mu,nu) e^{-i(mu q + nu p)}
    // with e^{-i(mu q + nu p)} = D(beta), beta = (nu - i mu)/sqrt(2).
    Matrix rho = Matrix::Zero(cutoff, cutoff);
    for (int i = 0; i < quad.munu_points; ++i) {
        const double wi = trapezoid_weight(i, quad.munu_points, h);
        for (int j = 0; j < quad.munu_points; ++j) {
            const double wj = trapezoid_weight(j, quad.munu_points, h);
            const Complex beta = Complex(nus[j], -mus[i]) / std::sqrt(2.0);
            rho += (wi * wj / (2.0 * M_PI)) * phi(i, j) * displacement_operator(beta, cutoff);
        }
    }
    const double defect = max_abs(rho - rho.adjoint());
    if (hermiticity_defect) *hermiticity_defect = defect;
    DensityMatrix d;
    d.rho = 0.5 * (rho + rho.adjoint());
    d.tail_mass = std::abs(1.0 - d.rho.trace().real());
    if (d.tail_mass > 1e-2)
        emit_diagnostic(sink, {"quadrature_budget",
                               "reconstructed density trace deviates from 1; raise the "
                               "quadrature budget",
                               d.rho.trace().real(), 1e-2});
    return d;
}

}  // namespace sqz
