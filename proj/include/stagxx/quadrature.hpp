#pragma once

#include <functional>
#include <vector>

#include "stagxx/model.hpp"

namespace stagxx {

struct QuadSpec {
    double abs_tol = 1e-10;
    double rel_tol = 1e-10;
    int max_subdivisions = 60;
    /// Interior points of (0, pi) where the integrand is not smooth.
    std::vector<double> breakpoints;

    /// Copy with extra breakpoints merged in (sorted, deduplicated, interior only).
    QuadSpec with_breakpoints(const std::vector<double>& extra) const;
};

struct QuadResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = true;
    int subdivisions = 0;
    int evaluations = 0;
};

/// Globally adaptive 21-point Gauss-Kronrod integration of f over [a, b].
/// Panels are first split at spec.breakpoints lying inside (a, b); the panel
/// with the largest Kronrod-Gauss difference is then bisected until the total
/// error estimate drops below max(abs_tol, rel_tol * |value|) or
/// max_subdivisions bisections have been spent (converged = false).
/// Nodes are strictly interior, so f is never evaluated at a or b or at a breakpoint.
QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadSpec& spec);

/// Integral over [0, pi].
QuadResult integrate(const std::function<double(double)>& f, const QuadSpec& spec);

/// Same as integrate(f, spec) but throws ToleranceNotReached when not converged.
double integrate_or_throw(const std::function<double(double)>& f, const QuadSpec& spec, const char* what);

/// tanh(beta * lambda) at finite temperature, sign(lambda) (with sign(0) = 0) at T = 0.
double thermal_factor(const Thermal& t, double lambda) noexcept;

}  // namespace stagxx
