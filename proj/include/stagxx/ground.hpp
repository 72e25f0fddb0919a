#pragma once

#include <vector>

#include "stagxx/model.hpp"
#include "stagxx/quadrature.hpp"

// Zero-temperature closed forms. The field B enters through |B| except for the
// sign of the magnetization; b and j enter through their squares.
namespace stagxx::ground {

struct GroundReport {
    PhaseRegion region;
    double energy;
    double m_g;
    double e_mw;
    CriticalFields qcp_fields;
};

/// Ground-state energy per site.
double energy(const ChainParams& p, const QuadSpec& quad = {});

/// Magnetization per site at T = 0; odd in B.
double magnetization_t0(const ChainParams& p);

/// Staggered magnetization per site at T = 0.
double staggered_magnetization_t0(const ChainParams& p, const QuadSpec& quad = {});

/// Meyer-Wallach measure of the ground state, 1 - (sz_even^2 + sz_odd^2) / 2.
double meyer_wallach(const ChainParams& p, const QuadSpec& quad = {});

GroundReport report(const ChainParams& p, const QuadSpec& quad = {});

enum class ScanAxis { B, b, j };

struct ScanPoint {
    double value;
    double d2e;  // central second difference of the ground energy
    bool flagged;
};

struct QcpScan {
    std::vector<ScanPoint> points;
    /// Flagged local maxima of |d2e| that fall to half height within five steps on one side.
    std::vector<double> peaks;
};

/// Scans one parameter over [from, to] in steps of `step` and flags points whose
/// |d2e - running median of d2e over 11 points| exceeds ten times the median of
/// that residual over the scan. For the j axis, scan
/// points closer than one step to |j| = J are rejected.
QcpScan qcp_scan(const ChainParams& base, ScanAxis axis, double from, double to, double step,
                 const QuadSpec& quad = {});

ChainParams with_axis(const ChainParams& p, ScanAxis axis, double value);

}  // namespace stagxx::ground
