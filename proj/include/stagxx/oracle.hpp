#pragma once

#include <array>
#include <vector>

#include <Eigen/Core>

#include "stagxx/correlations.hpp"
#include "stagxx/entanglement.hpp"
#include "stagxx/model.hpp"

// Finite-size ground truth: dense diagonalization of the periodic spin ring and
// momentum sums over the 2x2 fermion blocks.
namespace stagxx::oracle {

using correlations::Parity;

inline constexpr int kMaxDenseSites = 12;

struct FiniteChainSpec {
    int n_sites;  // even, >= 4; sites l = 1..n_sites on a periodic ring
    ChainParams params;
    Thermal thermal;
};

/// Per-parity observables of the pair (l, l+R), averaged over every l of that parity.
struct PairObservables {
    double g;            // -<sx sx + sy sy> / 2
    double zz;           // <sz_l sz_{l+R}>
    Eigen::Matrix4cd rho;  // basis |uu>, |ud>, |du>, |dd>, site l first
    double concurrence;  // Wootters concurrence of rho
};

struct EDResult {
    int n_sites = 0;
    double energy_per_site = 0.0;         // thermal <H>/N (ground energy at T = 0)
    double ground_energy_per_site = 0.0;  // lowest eigenvalue / N
    int ground_degeneracy = 0;
    double magnetization = 0.0;
    double staggered_magnetization = 0.0;
    std::array<double, 2> sigma_z{};  // indexed by parity_index
    /// pairs[parity_index][R - 1] for R = 1, 2
    std::array<std::array<PairObservables, 2>, 2> pairs{};
    double e_mw = 0.0;  // Meyer-Wallach measure of the (uniformly mixed) ground space
    double witness_lhs = 0.0;
    /// Summed |amplitude| of Hamiltonian elements that change total sz; 0 when sz is conserved.
    double sz_sector_leakage = 0.0;
    /// Largest |H psi - E psi| over ground vectors, with H applied in the full 2^N space.
    double ground_residual = 0.0;

    const PairObservables& pair(Parity s, int R) const;
    double sigma_z_at(Parity s) const;
    entanglement::ConcurrencePair c1() const;
    entanglement::ConcurrencePair c2() const;
};

constexpr int parity_index(Parity s) noexcept { return s == Parity::Even ? 0 : 1; }

/// Full diagonalization sector by sector of total sz. Throws DimensionTooLarge
/// above kMaxDenseSites. Degenerate ground spaces are mixed uniformly.
EDResult dense_ed(const FiniteChainSpec& spec);

struct FreeFermionResult {
    int n_sites = 0;
    double ln_z_per_site = 0.0;  // NaN at T = 0
    double u = 0.0;
    double m = 0.0;
    double m_s = 0.0;
    /// g[R - 1] for R = 1..max_R
    std::vector<correlations::GPair> g;
    /// Largest |eigenvalue - (2B +- 2 Theta)| over all blocks.
    double max_block_deviation = 0.0;
};

/// The 2x2 momentum block coupling d_k and d_{k+N/2}.
Eigen::Matrix2cd momentum_block(const ChainParams& p, int k, int n_sites);

/// max |eig(block) - lambda_k^+-| for one block.
double block_spectrum_deviation(const ChainParams& p, int k, int n_sites);

/// Momentum sums over k = 1..N/2 built from the block eigenvectors.
FreeFermionResult finite_free_fermion(const FiniteChainSpec& spec, int max_R = 3);

}  // namespace stagxx::oracle
