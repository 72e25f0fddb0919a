#include "stagxx/correlations.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "integrands.hpp"
#include "stagxx/thermo.hpp"

namespace stagxx::correlations {

namespace {

constexpr double kInv2Pi = 0.5 / kPi;

void require(bool ok, const std::string& msg) {
    if (!ok) throw std::invalid_argument(msg);
}

}  // namespace

SigmaZ sigma_z(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    return {thermo::magnetization(p, t, quad), thermo::staggered_magnetization(p, t, quad)};
}

GPair g_even(const ChainParams& p, const Thermal& t, int R, const QuadSpec& quad) {
    require(R >= 0 && R % 2 == 0, "g_even: R must be a non-negative even integer");
    const QuadSpec spec = detail::with_kinks(p, t, quad);
    GPair out{0.0, 0.0};
    if (p.B() != 0.0) {  // tf(L+) + tf(L-) vanishes identically at B = 0
        auto f0 = [&](double q) {
            const auto bf = detail::branch_factors(p, t, q);
            return std::cos(q * R) * (bf.plus + bf.minus);
        };
        out.g0 = kInv2Pi * integrate_or_throw(f0, spec, "g_even (uniform)");
    }
    if (p.b() != 0.0) {
        auto fs = [&](double q) {
            const auto bf = detail::branch_factors(p, t, q);
            return std::cos(q * R) * p.b() * detail::gap_over_theta(t, p, bf);
        };
        out.gs = kInv2Pi * integrate_or_throw(fs, spec, "g_even (staggered)");
    }
    return out;
}

GPair g_odd(const ChainParams& p, const Thermal& t, int R, const QuadSpec& quad) {
    require(R >= 1 && R % 2 == 1, "g_odd: R must be a positive odd integer");
    const QuadSpec spec = detail::with_kinks(p, t, quad);
    GPair out{0.0, 0.0};
    if (p.J() != 0.0) {
        auto f0 = [&](double q) {
            const auto bf = detail::branch_factors(p, t, q);
            return std::cos(q * R) * p.J() * std::cos(q) * detail::gap_over_theta(t, p, bf);
        };
        out.g0 = -kInv2Pi * integrate_or_throw(f0, spec, "g_odd (uniform)");
    }
    if (p.j() != 0.0) {
        auto fs = [&](double q) {
            const auto bf = detail::branch_factors(p, t, q);
            return std::sin(q * R) * p.j() * std::sin(q) * detail::gap_over_theta(t, p, bf);
        };
        out.gs = -kInv2Pi * integrate_or_throw(fs, spec, "g_odd (staggered)");
    }
    return out;
}

GPair g1(const ChainParams& p, const Thermal& t, const QuadSpec& quad) { return g_odd(p, t, 1, quad); }

GPair g_r(const ChainParams& p, const Thermal& t, int R, const QuadSpec& quad) {
    require(R >= 1, "g_r: R must be positive");
    return R % 2 == 0 ? g_even(p, t, R, quad) : g_odd(p, t, R, quad);
}

double even_r_staggered_integral(const ChainParams& p, const Thermal& t, int R, const QuadSpec& quad) {
    require(R >= 0 && R % 2 == 0, "even_r_staggered_integral: R must be even");
    auto f = [&](double q) {
        const auto bf = detail::branch_factors(p, t, q);
        return p.b() * std::sin(q * R) * detail::gap_over_theta(t, p, bf);
    };
    return kInv2Pi * integrate_or_throw(f, detail::with_kinks(p, t, quad), "even_r_staggered_integral");
}

CorrelationSet CorrelationSet::compute(const ChainParams& p, const Thermal& t, int max_R, const QuadSpec& quad) {
    require(max_R >= 1, "CorrelationSet: max_R must be at least 1");
    CorrelationSet cs;
    cs.max_R_ = max_R;
    cs.sigma_z_ = correlations::sigma_z(p, t, quad);
    for (int R = 1; R <= max_R; ++R) cs.g_.emplace(R, g_r(p, t, R, quad));
    return cs;
}

const GPair& CorrelationSet::g(int R) const {
    const auto it = g_.find(R);
    if (it == g_.end()) throw std::out_of_range("CorrelationSet: R = " + std::to_string(R) + " not computed");
    return it->second;
}

double CorrelationSet::zz(Parity s, int R) const {
    const double gl = g_site(s, R);
    return sigma_z_at(s) * sigma_z_at(shifted(s, R)) - gl * gl;
}

double g_site(const ChainParams& p, const Thermal& t, Parity s, int R, const QuadSpec& quad) {
    return g_r(p, t, R, quad).at(s);
}

double zz_correlator(const ChainParams& p, const Thermal& t, Parity s, int R, const QuadSpec& quad) {
    require(R >= 1, "zz_correlator: R must be positive");
    const SigmaZ sz = sigma_z(p, t, quad);
    const double gl = g_r(p, t, R, quad).at(s);
    return sz.at(s) * sz.at(shifted(s, R)) - gl * gl;
}

double xx_plus_yy(const ChainParams& p, const Thermal& t, Parity s, const QuadSpec& quad) {
    return -2.0 * g1(p, t, quad).at(s);
}

}  // namespace stagxx::correlations
