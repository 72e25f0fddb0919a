#include "stagxx/entanglement.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

#include <Eigen/Eigenvalues>

#include "stagxx/errors.hpp"
#include "stagxx/thermo.hpp"

namespace stagxx::entanglement {

namespace {

constexpr double kStateTol = 1e-10;
constexpr double kRadicandTol = 1e-9;

Eigen::Matrix4cd spin_flip() {
    Eigen::Matrix4cd yy = Eigen::Matrix4cd::Zero();
    yy(0, 3) = -1.0;
    yy(1, 2) = 1.0;
    yy(2, 1) = 1.0;
    yy(3, 0) = -1.0;
    return yy;
}

}  // namespace

double wootters(const Eigen::Matrix4cd& rho) {
    if ((rho - rho.adjoint()).cwiseAbs().maxCoeff() > kStateTol) {
        throw InvalidState("wootters: density matrix is not Hermitian");
    }
    const std::complex<double> tr = rho.trace();
    if (std::abs(tr - 1.0) > kStateTol) {
        throw InvalidState("wootters: density matrix trace is " + std::to_string(tr.real()));
    }
    const Eigen::Matrix4cd herm = 0.5 * (rho + rho.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(herm);
    if (es.eigenvalues().minCoeff() < -kStateTol) {
        throw InvalidState("wootters: density matrix is not positive semidefinite");
    }
    const Eigen::Vector4d root_evals = es.eigenvalues().cwiseMax(0.0).cwiseSqrt();
    const Eigen::Matrix4cd sqrt_rho = es.eigenvectors() * root_evals.asDiagonal() * es.eigenvectors().adjoint();

    const Eigen::Matrix4cd yy = spin_flip();
    const Eigen::Matrix4cd rho_tilde = yy * herm.conjugate() * yy;
    // sqrt(rho) rho~ sqrt(rho) is Hermitian and shares its spectrum with rho rho~.
    Eigen::Matrix4cd m = sqrt_rho * rho_tilde * sqrt_rho;
    m = 0.5 * (m + m.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> ms(m, Eigen::EigenvaluesOnly);

    std::array<double, 4> lam{};
    for (int i = 0; i < 4; ++i) lam[i] = std::sqrt(std::max(0.0, ms.eigenvalues()(i)));
    std::sort(lam.begin(), lam.end(), std::greater<>());
    return std::max(0.0, lam[0] - lam[1] - lam[2] - lam[3]);
}

double x_state_concurrence(double coherence, double radicand) {
    if (radicand < -kRadicandTol) {
        throw NegativeRadicand("concurrence radicand " + std::to_string(radicand) +
                               " is negative beyond tolerance");
    }
    return std::max(0.0, std::abs(coherence) - 0.5 * std::sqrt(std::max(0.0, radicand)));
}

ConcurrencePair c1(const correlations::CorrelationSet& cs) {
    auto at = [&](Parity s) {
        const double zz = cs.zz(s, 1);
        const double total_sz = cs.sigma_z_at(s) + cs.sigma_z_at(correlations::flip(s));  // = 2m
        return x_state_concurrence(cs.g_site(s, 1), (1.0 + zz) * (1.0 + zz) - total_sz * total_sz);
    };
    return {at(Parity::Odd), at(Parity::Even)};
}

ConcurrencePair c1(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    return c1(correlations::CorrelationSet::compute(p, t, 1, quad));
}

ConcurrencePair c2(const correlations::CorrelationSet& cs) {
    // l and l+2 share a sublattice; l+1 sits on the other one. G_{l,2} has no
    // staggered part, so only <sz_{l+1}> and the radicand depend on the parity.
    auto at = [&](Parity s) {
        const Parity mid = correlations::flip(s);
        const double coherence = cs.g_site(s, 1) * cs.g_site(mid, 1) - cs.g_site(s, 2) * cs.sigma_z_at(mid);
        const double zz = cs.zz(s, 2);
        const double total_sz = 2.0 * cs.sigma_z_at(s);
        return x_state_concurrence(coherence, (1.0 + zz) * (1.0 + zz) - total_sz * total_sz);
    };
    return {at(Parity::Odd), at(Parity::Even)};
}

ConcurrencePair c2(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    return c2(correlations::CorrelationSet::compute(p, t, 2, quad));
}

WitnessValue witness(const ChainParams& p, double u, double m, double m_s) {
    const double denom = std::abs(p.J() - p.j()) + std::abs(p.J() + p.j());
    if (denom == 0.0) throw DegenerateCoupling("witness: J = j = 0 leaves no coupling to bound");
    const double lhs = 4.0 * std::abs(u + p.B() * m + p.b() * m_s) / denom;
    return {lhs, lhs > 1.0};
}

WitnessValue witness(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    if (std::abs(p.J() - p.j()) + std::abs(p.J() + p.j()) == 0.0) {
        throw DegenerateCoupling("witness: J = j = 0 leaves no coupling to bound");
    }
    return witness(p, thermo::internal_energy(p, t, quad), thermo::magnetization(p, t, quad),
                   thermo::staggered_magnetization(p, t, quad));
}

}  // namespace stagxx::entanglement
