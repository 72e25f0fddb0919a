#include "stagxx/thermo.hpp"

#include <cmath>
#include <limits>

#include "integrands.hpp"
#include "stagxx/errors.hpp"

namespace stagxx::thermo {

namespace {
constexpr double kInv2Pi = 0.5 / kPi;
}

double ln_z_per_site(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    if (t.is_zero()) {
        throw ZeroTemperatureUnsupported("ln Z has no finite zero-temperature limit; use ground::energy");
    }
    const double beta = t.beta();
    auto f = [&](double q) {
        const double th = theta_of_q(p, q);
        return 2.0 * std::numbers::ln2 + detail::log_cosh(beta * (p.B() + th)) +
               detail::log_cosh(beta * (p.B() - th));
    };
    return kInv2Pi * integrate_or_throw(f, detail::with_kinks(p, t, quad), "ln_z_per_site");
}

double internal_energy(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    auto f = [&](double q) {
        const auto bf = detail::branch_factors(p, t, q);
        return (p.B() + bf.theta) * bf.plus + (p.B() - bf.theta) * bf.minus;
    };
    return -kInv2Pi * integrate_or_throw(f, detail::with_kinks(p, t, quad), "internal_energy");
}

double magnetization(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    if (p.B() == 0.0) return 0.0;  // integrand is odd under L+ <-> -L-
    auto f = [&](double q) {
        const auto bf = detail::branch_factors(p, t, q);
        return bf.plus + bf.minus;
    };
    return kInv2Pi * integrate_or_throw(f, detail::with_kinks(p, t, quad), "magnetization");
}

double staggered_magnetization(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    if (p.b() == 0.0) return 0.0;
    auto f = [&](double q) {
        const auto bf = detail::branch_factors(p, t, q);
        return p.b() * detail::gap_over_theta(t, p, bf);
    };
    return kInv2Pi * integrate_or_throw(f, detail::with_kinks(p, t, quad), "staggered_magnetization");
}

ThermoPoint evaluate(const ChainParams& p, const Thermal& t, const QuadSpec& quad) {
    return {t.is_zero() ? std::numeric_limits<double>::quiet_NaN() : ln_z_per_site(p, t, quad),
            internal_energy(p, t, quad), magnetization(p, t, quad), staggered_magnetization(p, t, quad)};
}

}  // namespace stagxx::thermo
