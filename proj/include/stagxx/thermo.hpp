#pragma once

#include "stagxx/model.hpp"
#include "stagxx/quadrature.hpp"

// Per-site thermodynamics of the infinite chain. Every function integrates its
// own closed momentum integral and throws ToleranceNotReached when quadrature
// fails to converge.
namespace stagxx::thermo {

struct ThermoPoint {
    double ln_z_per_site;  // NaN at zero temperature
    double u;
    double m;
    double m_s;
};

/// ln Z / N = (1/2pi) int_0^pi ln[4 cosh(beta L+) cosh(beta L-)] dq.
/// Throws ZeroTemperatureUnsupported for the ground-state limit.
double ln_z_per_site(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

double internal_energy(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

double magnetization(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

/// Exactly 0 when b == 0.
double staggered_magnetization(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

ThermoPoint evaluate(const ChainParams& p, const Thermal& t, const QuadSpec& quad = {});

}  // namespace stagxx::thermo
