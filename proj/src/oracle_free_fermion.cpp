#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>

#include <Eigen/Eigenvalues>

#include "stagxx/oracle.hpp"
#include "stagxx/quadrature.hpp"

namespace stagxx::oracle {

namespace {

using cd = std::complex<double>;

double log_sum_exp(std::initializer_list<double> xs) {
    const double mx = std::max(xs);
    double s = 0.0;
    for (double x : xs) s += std::exp(x - mx);
    return mx + std::log(s);
}

}  // namespace

Eigen::Matrix2cd momentum_block(const ChainParams& p, int k, int n_sites) {
    const double q = 2.0 * kPi * k / n_sites;
    const double c = std::cos(q);
    const double s = std::sin(q);
    Eigen::Matrix2cd h;
    h(0, 0) = 2.0 * p.B() - 2.0 * p.J() * c;           // mu_k^-
    h(1, 1) = 2.0 * p.B() + 2.0 * p.J() * c;           // mu_k^+
    h(0, 1) = cd(2.0 * p.b(), 2.0 * p.j() * s);        // nu_k^+
    h(1, 0) = cd(2.0 * p.b(), -2.0 * p.j() * s);       // nu_k^-
    return h;
}

double block_spectrum_deviation(const ChainParams& p, int k, int n_sites) {
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(momentum_block(p, k, n_sites), Eigen::EigenvaluesOnly);
    const double q = 2.0 * kPi * k / n_sites;
    const double cj = p.J() * std::cos(q);
    const double sj = p.j() * std::sin(q);
    const double root = 2.0 * std::sqrt(cj * cj + p.b() * p.b() + sj * sj);
    // eigenvalues come back ascending: lambda^- then lambda^+
    return std::max(std::abs(es.eigenvalues()(0) - (2.0 * p.B() - root)),
                    std::abs(es.eigenvalues()(1) - (2.0 * p.B() + root)));
}

FreeFermionResult finite_free_fermion(const FiniteChainSpec& spec, int max_R) {
    const int n = spec.n_sites;
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("finite_free_fermion: n_sites must be even and >= 4");
    if (max_R < 1) throw std::invalid_argument("finite_free_fermion: max_R must be positive");
    const ChainParams& p = spec.params;
    const Thermal& t = spec.thermal;

    FreeFermionResult res;
    res.n_sites = n;
    res.g.assign(static_cast<std::size_t>(max_R), {0.0, 0.0});
    std::vector<cd> gs_acc(static_cast<std::size_t>(max_R), 0.0);
    double ln_z = 0.0;

    for (int k = 1; k <= n / 2; ++k) {
        const double q = 2.0 * kPi * k / n;
        const Eigen::Matrix2cd h = momentum_block(p, k, n);
        Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(h);
        const Eigen::Vector2d lam = es.eigenvalues();
        const Eigen::Matrix2cd& v = es.eigenvectors();
        res.max_block_deviation = std::max(res.max_block_deviation, block_spectrum_deviation(p, k, n));

        // <1 - 2 d_i^+ d_j> structure: T = tanh(beta h / 2), or sign(h) at T = 0.
        Eigen::Matrix2cd tmat = Eigen::Matrix2cd::Zero();
        double occupied_energy = 0.0;
        for (int i = 0; i < 2; ++i) {
            const double tf = thermal_factor(t, 0.5 * lam(i));
            tmat += tf * v.col(i) * v.col(i).adjoint();
            occupied_energy += lam(i) * 0.5 * (1.0 - tf);
        }

        res.u += occupied_energy - 2.0 * p.B();
        res.m += (tmat(0, 0) + tmat(1, 1)).real();
        res.m_s += 2.0 * tmat(0, 1).real();
        if (!t.is_zero()) {
            const double beta = t.beta();
            ln_z += log_sum_exp({2.0 * beta * p.B(), -beta * (lam(0) - 2.0 * p.B()),
                                 -beta * (lam(1) - 2.0 * p.B()), -beta * (lam(0) + lam(1) - 2.0 * p.B())});
        }
        for (int R = 1; R <= max_R; ++R) {
            const double parity = (R % 2 == 0) ? 1.0 : -1.0;
            auto& g = res.g[static_cast<std::size_t>(R - 1)];
            g.g0 += std::cos(q * R) * (tmat(0, 0) + parity * tmat(1, 1)).real();
            // Odd R pairs sin(qR) with the imaginary part of T12, even R pairs cos(qR) with its real part.
            gs_acc[static_cast<std::size_t>(R - 1)] += (R % 2 == 1)
                ? cd(0.0, -1.0) * std::sin(q * R) * (tmat(1, 0) - tmat(0, 1))
                : std::cos(q * R) * (tmat(1, 0) + tmat(0, 1));
        }
    }

    const double inv_n = 1.0 / n;
    res.u *= inv_n;
    res.m *= inv_n;
    res.m_s *= inv_n;
    res.ln_z_per_site = t.is_zero() ? std::numeric_limits<double>::quiet_NaN() : ln_z * inv_n;
    for (int R = 1; R <= max_R; ++R) {
        auto& g = res.g[static_cast<std::size_t>(R - 1)];
        g.g0 *= inv_n;
        g.gs = gs_acc[static_cast<std::size_t>(R - 1)].real() * inv_n;
    }
    return res;
}

}  // namespace stagxx::oracle
