#pragma once

// Shared pieces of the momentum-space integrands. Internal to the library.

#include <cmath>
#include <numbers>
#include <vector>

#include "stagxx/model.hpp"
#include "stagxx/quadrature.hpp"

namespace stagxx::detail {

struct BranchFactors {
    double theta;
    double plus;   // thermal factor of B + Theta
    double minus;  // thermal factor of B - Theta
};

inline BranchFactors branch_factors(const ChainParams& p, const Thermal& t, double q) {
    const double th = theta_of_q(p, q);
    return {th, thermal_factor(t, p.B() + th), thermal_factor(t, p.B() - th)};
}

// [tf(B + Theta) - tf(B - Theta)] / Theta. Theta vanishes only at isolated q
// with b = 0, where every caller's weight vanishes too; the finite limit is
// 2 beta sech^2(beta B) at finite beta and 0 at T = 0 with B != 0.
inline double gap_over_theta(const Thermal& t, const ChainParams& p, const BranchFactors& f) {
    if (f.theta > 0.0) return (f.plus - f.minus) / f.theta;
    if (t.is_zero()) return 0.0;
    const double c = std::cosh(t.beta() * p.B());
    return 2.0 * t.beta() / (c * c);
}

// Breakpoints at the Fermi points. At finite beta the thermal factor turns over
// within ~1/beta of them, narrower than a Kronrod panel can see, so the mesh is
// graded geometrically toward each one down to that width.
inline QuadSpec with_kinks(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    std::vector<double> pts = kink_angles(p);
    const auto x = xi(p);
    if (!x || t.is_zero() || t.beta() <= 1.0) return quad.with_breakpoints(pts);
    const double width = 0.1 / t.beta();
    for (double c : {*x, kPi - *x}) {
        for (double d = 0.25; d > width; d *= 0.5) {
            pts.push_back(c - d);
            pts.push_back(c + d);
        }
    }
    return quad.with_breakpoints(pts);
}

// Overflow-safe ln cosh x.
inline double log_cosh(double x) {
    const double a = std::abs(x);
    return a + std::log1p(std::exp(-2.0 * a)) - std::numbers::ln2;
}

}  // namespace stagxx::detail
