#pragma once

#include <Eigen/Core>

#include "stagxx/correlations.hpp"
#include "stagxx/model.hpp"
#include "stagxx/quadrature.hpp"

namespace stagxx::entanglement {

using correlations::Parity;

struct ConcurrencePair {
    double odd;
    double even;
    double at(Parity s) const noexcept { return s == Parity::Even ? even : odd; }
};

struct WitnessValue {
    double lhs;
    bool detected;  // lhs > 1
};

/// Wootters concurrence max{0, l1 - l2 - l3 - l4} of a two-qubit state, where
/// l_i are the decreasing square roots of the eigenvalues of rho (sy x sy) rho* (sy x sy).
/// Throws InvalidState unless rho is Hermitian, PSD and of unit trace within 1e-10.
double wootters(const Eigen::Matrix4cd& rho);

/// Concurrence of a number-conserving (X-shaped) two-qubit state from its
/// coherence term |G| = 2|z| and the radicand (1 + <zz>)^2 - (<sz_a> + <sz_b>)^2.
/// Radicands below -1e-9 throw NegativeRadicand; smaller negatives are clamped.
double x_state_concurrence(double coherence, double radicand);

/// Nearest-neighbour concurrence for bonds starting on odd and on even sites.
ConcurrencePair c1(const correlations::CorrelationSet& cs);
ConcurrencePair c1(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

/// Next-nearest-neighbour concurrence; the set must hold R = 1 and R = 2.
ConcurrencePair c2(const correlations::CorrelationSet& cs);
ConcurrencePair c2(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

/// 4|u + B m + b m_s| / (|J - j| + |J + j|) from per-site quantities.
/// Throws DegenerateCoupling when J = j = 0.
WitnessValue witness(const ChainParams& p, double u, double m, double m_s);
WitnessValue witness(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

}  // namespace stagxx::entanglement
