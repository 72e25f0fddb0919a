#include <bit>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "stagxx/errors.hpp"
#include "stagxx/oracle.hpp"

namespace stagxx::oracle {

namespace {

using State = std::uint32_t;

// Site i (0-based) is site l = i + 1; even l has the sign +1.
int stagger_sign(int i) { return ((i + 1) % 2 == 0) ? 1 : -1; }

struct Ring {
    int n;
    std::vector<double> field;    // B_l per site
    std::vector<double> coupling; // J_l of bond (i, i+1 mod n)

    Ring(const ChainParams& p, int n_sites) : n(n_sites), field(n_sites), coupling(n_sites) {
        for (int i = 0; i < n; ++i) {
            field[i] = p.B() + stagger_sign(i) * p.b();
            coupling[i] = p.J() + stagger_sign(i) * p.j();
        }
    }

    static int sz(State s, int i) { return ((s >> i) & 1U) ? 1 : -1; }

    double diagonal(State s) const {
        double e = 0.0;
        for (int i = 0; i < n; ++i) e -= field[i] * sz(s, i);
        return e;
    }

    // Calls visit(target, amplitude) for each off-diagonal element of column s.
    template <class Visit>
    void hops(State s, Visit&& visit) const {
        for (int i = 0; i < n; ++i) {
            const int k = (i + 1) % n;
            if (((s >> i) & 1U) != ((s >> k) & 1U) && coupling[i] != 0.0) {
                visit(s ^ ((State{1} << i) | (State{1} << k)), -coupling[i]);
            }
        }
    }
};

struct Sector {
    std::vector<State> states;
    Eigen::VectorXd energies;
    Eigen::MatrixXd vectors;  // columns are eigenvectors
};

// Basis index helpers for the 4x4 pair matrix: |uu>, |ud>, |du>, |dd>.
int pair_index(int up_a, int up_b) { return 2 * (1 - up_a) + (1 - up_b); }

struct Accumulator {
    int n;
    std::vector<double> sz;                          // per site
    std::vector<std::array<Eigen::Matrix4d, 2>> rho; // per site, R = 1, 2

    explicit Accumulator(int n_sites) : n(n_sites), sz(n_sites, 0.0), rho(n_sites) {
        for (auto& r : rho) r = {Eigen::Matrix4d::Zero(), Eigen::Matrix4d::Zero()};
    }

    void add(const Sector& sec, const std::vector<int>& index, int col, double w) {
        const auto v = sec.vectors.col(col);
        for (std::size_t a = 0; a < sec.states.size(); ++a) {
            const double amp = v(static_cast<Eigen::Index>(a));
            const double prob = w * amp * amp;
            if (amp == 0.0) continue;
            const State s = sec.states[a];
            for (int i = 0; i < n; ++i) {
                const int ui = (s >> i) & 1U;
                sz[i] += prob * (ui ? 1.0 : -1.0);
                for (int R = 1; R <= 2; ++R) {
                    const int k = (i + R) % n;
                    const int uk = (s >> k) & 1U;
                    const int row = pair_index(ui, uk);
                    rho[i][R - 1](row, row) += prob;
                    if (ui != uk) {
                        const State t = s ^ ((State{1} << i) | (State{1} << k));
                        const double amp_t = v(index[t]);
                        // <row| rho |col> with |row> = s-part, |col> = t-part
                        rho[i][R - 1](row, pair_index(1 - ui, 1 - uk)) += w * amp * amp_t;
                    }
                }
            }
        }
    }
};

}  // namespace

const PairObservables& EDResult::pair(Parity s, int R) const { return pairs.at(parity_index(s)).at(R - 1); }

double EDResult::sigma_z_at(Parity s) const { return sigma_z[parity_index(s)]; }

entanglement::ConcurrencePair EDResult::c1() const {
    return {pair(Parity::Odd, 1).concurrence, pair(Parity::Even, 1).concurrence};
}

entanglement::ConcurrencePair EDResult::c2() const {
    return {pair(Parity::Odd, 2).concurrence, pair(Parity::Even, 2).concurrence};
}

EDResult dense_ed(const FiniteChainSpec& spec) {
    const int n = spec.n_sites;
    if (n > kMaxDenseSites) {
        throw DimensionTooLarge("dense_ed: " + std::to_string(n) + " sites exceeds the limit of " +
                                std::to_string(kMaxDenseSites));
    }
    if (n < 4 || n % 2 != 0) throw std::invalid_argument("dense_ed: n_sites must be even and >= 4");

    const Ring ring(spec.params, n);
    const State dim = State{1} << n;

    std::vector<Sector> sectors(n + 1);
    std::vector<int> index(dim);
    for (State s = 0; s < dim; ++s) {
        auto& sec = sectors[std::popcount(s)];
        index[s] = static_cast<int>(sec.states.size());
        sec.states.push_back(s);
    }

    double sz_leak = 0.0;
    double e_min = std::numeric_limits<double>::infinity();
    for (auto& sec : sectors) {
        const auto d = static_cast<Eigen::Index>(sec.states.size());
        Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
        for (Eigen::Index a = 0; a < d; ++a) {
            const State s = sec.states[a];
            h(a, a) = ring.diagonal(s);
            ring.hops(s, [&](State t, double amp) {
                if (std::popcount(t) != std::popcount(s)) {
                    sz_leak += std::abs(amp);
                    return;
                }
                h(index[t], a) += amp;
            });
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
        sec.energies = es.eigenvalues();
        sec.vectors = es.eigenvectors();
        e_min = std::min(e_min, sec.energies.minCoeff());
    }

    const double degeneracy_tol = 1e-9 * std::max(1.0, std::abs(e_min));
    auto weight = [&](double e) {
        if (spec.thermal.is_zero()) return (e - e_min <= degeneracy_tol) ? 1.0 : 0.0;
        return std::exp(-spec.thermal.beta() * (e - e_min));
    };

    double z = 0.0;
    double z_ground = 0.0;
    double e_sum = 0.0;
    for (const auto& sec : sectors) {
        for (Eigen::Index c = 0; c < sec.energies.size(); ++c) {
            const double w = weight(sec.energies(c));
            z += w;
            e_sum += w * sec.energies(c);
            if (sec.energies(c) - e_min <= degeneracy_tol) z_ground += 1.0;
        }
    }

    Accumulator thermal(n);
    Accumulator ground(n);
    const double cutoff = 1e-16;
    for (const auto& sec : sectors) {
        for (Eigen::Index c = 0; c < sec.energies.size(); ++c) {
            const double e = sec.energies(c);
            const double w = weight(e) / z;
            if (w > cutoff) thermal.add(sec, index, static_cast<int>(c), w);
            if (e - e_min <= degeneracy_tol) ground.add(sec, index, static_cast<int>(c), 1.0 / z_ground);
        }
    }

    EDResult res;
    res.n_sites = n;
    res.energy_per_site = e_sum / z / n;
    res.ground_energy_per_site = e_min / n;
    res.ground_degeneracy = static_cast<int>(z_ground);
    res.sz_sector_leakage = sz_leak;

    // Apply H in the full 2^N space to each ground vector; independent of the sector blocks.
    for (const auto& sec : sectors) {
        for (Eigen::Index c = 0; c < sec.energies.size(); ++c) {
            if (sec.energies(c) - e_min > degeneracy_tol) continue;
            Eigen::VectorXd psi = Eigen::VectorXd::Zero(dim);
            for (std::size_t a = 0; a < sec.states.size(); ++a) psi(sec.states[a]) = sec.vectors(a, c);
            Eigen::VectorXd hpsi = Eigen::VectorXd::Zero(dim);
            for (State s = 0; s < dim; ++s) {
                if (psi(s) == 0.0) continue;
                hpsi(s) += ring.diagonal(s) * psi(s);
                ring.hops(s, [&](State t, double amp) { hpsi(t) += amp * psi(s); });
            }
            res.ground_residual = std::max(res.ground_residual, (hpsi - sec.energies(c) * psi).norm());
        }
    }

    for (auto& per_parity : res.pairs) {
        for (auto& po : per_parity) po.rho.setZero();
    }
    std::array<int, 2> count{};
    for (int i = 0; i < n; ++i) {
        const Parity par = stagger_sign(i) > 0 ? Parity::Even : Parity::Odd;
        const int pi = parity_index(par);
        res.sigma_z[pi] += thermal.sz[i];
        for (int R = 1; R <= 2; ++R) {
            res.pairs[pi][R - 1].rho += thermal.rho[i][R - 1].cast<std::complex<double>>();
        }
        ++count[pi];
    }
    for (int pi = 0; pi < 2; ++pi) {
        res.sigma_z[pi] /= count[pi];
        for (int R = 1; R <= 2; ++R) {
            auto& po = res.pairs[pi][R - 1];
            po.rho /= static_cast<double>(count[pi]);
            const Eigen::Matrix4d r = po.rho.real();
            // <sx sx + sy sy> = 2 (rho_{ud,du} + rho_{du,ud}) for a number-conserving state
            po.g = -(r(1, 2) + r(2, 1));
            po.zz = r(0, 0) - r(1, 1) - r(2, 2) + r(3, 3);
            po.concurrence = entanglement::wootters(po.rho);
        }
    }
    res.magnetization = 0.5 * (res.sigma_z[0] + res.sigma_z[1]);
    res.staggered_magnetization = 0.5 * (res.sigma_z[0] - res.sigma_z[1]);

    double sz2 = 0.0;
    for (int i = 0; i < n; ++i) sz2 += ground.sz[i] * ground.sz[i];
    res.e_mw = 1.0 - sz2 / n;

    const auto& prm = spec.params;
    res.witness_lhs = (prm.J() == 0.0 && prm.j() == 0.0)
                          ? std::numeric_limits<double>::quiet_NaN()
                          : entanglement::witness(prm, res.energy_per_site, res.magnetization,
                                                  res.staggered_magnetization)
                                .lhs;
    return res;
}

}  // namespace stagxx::oracle
