#pragma once

#include <map>

#include "stagxx/model.hpp"
#include "stagxx/quadrature.hpp"

// Two-point functions of the infinite chain. Sites are numbered from l = 1 and
// a site is even or odd by the parity of l; even sites carry B + b and the bond
// (l, l+1) starting on an even site carries J + j.
namespace stagxx::correlations {

enum class Parity { Even, Odd };

constexpr int sign_of(Parity s) noexcept { return s == Parity::Even ? 1 : -1; }
constexpr Parity flip(Parity s) noexcept { return s == Parity::Even ? Parity::Odd : Parity::Even; }
/// Parity of site l + R given the parity of l.
constexpr Parity shifted(Parity s, int R) noexcept { return (R % 2 == 0) ? s : flip(s); }

/// <sz_l> = uniform + (-1)^l staggered.
struct SigmaZ {
    double uniform;    // m
    double staggered;  // m_s
    double at(Parity s) const noexcept { return uniform + sign_of(s) * staggered; }
};

/// G_{l,R} = g0 + (-1)^l gs with G_{l,R} = -<a_l^+ a_{l+R} - a_l a_{l+R}^+>.
struct GPair {
    double g0;
    double gs;
    double at(Parity s) const noexcept { return g0 + sign_of(s) * gs; }
};

SigmaZ sigma_z(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

/// Nearest-neighbour contraction (the odd-R form at R = 1).
GPair g1(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

/// Even R >= 0. R = 0 reproduces <sz>: g0 = m and gs = m_s. The staggered part
/// (1/2pi) int cos(qR) b [tf(L+) - tf(L-)] / Theta dq vanishes only when b = 0.
GPair g_even(const ChainParams& p, const Thermal& t, int R, const QuadSpec& quad = {});

/// Odd R >= 1.
GPair g_odd(const ChainParams& p, const Thermal& t, int R, const QuadSpec& quad = {});

/// Dispatches on the parity of R >= 1.
GPair g_r(const ChainParams& p, const Thermal& t, int R, const QuadSpec& quad = {});

/// Real coefficient of -i in the sine form of the even-R staggered expression,
/// (1/2pi) int b sin(qR) [tf(L+) - tf(L-)] / Theta dq. Vanishes by q -> pi - q,
/// so it is not the staggered part of G_R; see g_even.
double even_r_staggered_integral(const ChainParams& p, const Thermal& t, int R, const QuadSpec& quad = {});

/// <sz_l> and G_R for R = 1..max_R, computed once and shared by the site-resolved queries.
class CorrelationSet {
public:
    static CorrelationSet compute(const ChainParams& p, const Thermal& t, int max_R, const QuadSpec& quad = {});

    const SigmaZ& sigma_z() const noexcept { return sigma_z_; }
    const GPair& g(int R) const;
    int max_R() const noexcept { return max_R_; }

    double sigma_z_at(Parity s) const noexcept { return sigma_z_.at(s); }
    double g_site(Parity s, int R) const { return g(R).at(s); }
    /// <sz_l sz_{l+R}> = <sz_l><sz_{l+R}> - G_{l,R}^2.
    double zz(Parity s, int R) const;
    /// <sx_l sx_{l+1} + sy_l sy_{l+1}> = -2 G_{l,1}.
    double xx_plus_yy(Parity s) const { return -2.0 * g_site(s, 1); }

private:
    SigmaZ sigma_z_{0.0, 0.0};
    std::map<int, GPair> g_;
    int max_R_ = 0;
};

double g_site(const ChainParams& p, const Thermal& t, Parity s, int R, const QuadSpec& quad = {});
double zz_correlator(const ChainParams& p, const Thermal& t, Parity s, int R, const QuadSpec& quad = {});
double xx_plus_yy(const ChainParams& p, const Thermal& t, Parity s, const QuadSpec& quad = {});

}  // namespace stagxx::correlations
