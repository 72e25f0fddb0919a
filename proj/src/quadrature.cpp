#include "stagxx/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <queue>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "stagxx/errors.hpp"

namespace stagxx {
namespace {

using Kronrod = boost::math::quadrature::gauss_kronrod<double, 21>;
using Gauss = boost::math::quadrature::gauss<double, 10>;

struct Panel {
    double a;
    double b;
    double value;
    double error;
    bool operator<(const Panel& other) const { return error < other.error; }
};

// Boost stores the non-negative half of the symmetric rules. For the 21-point
// Kronrod rule the odd-indexed abscissae are the 10-point Gauss nodes.
Panel eval_panel(const std::function<double(double)>& f, double a, double b, int& evals) {
    const auto& xk = Kronrod::abscissa();
    const auto& wk = Kronrod::weights();
    const auto& wg = Gauss::weights();
    const double center = 0.5 * (a + b);
    const double half = 0.5 * (b - a);

    const double f0 = f(center);
    double kron = wk[0] * f0;
    double gauss = 0.0;  // 10-point rule has no center node
    ++evals;
    for (std::size_t i = 1; i < xk.size(); ++i) {
        const double dx = half * xk[i];
        const double fsum = f(center - dx) + f(center + dx);
        evals += 2;
        kron += wk[i] * fsum;
        if (i % 2 == 1) gauss += wg[i / 2] * fsum;
    }
    kron *= half;
    gauss *= half;
    return {a, b, kron, std::abs(kron - gauss)};
}

void validate(const QuadSpec& spec) {
    if (!(spec.abs_tol > 0.0) || !(spec.rel_tol > 0.0)) {
        throw std::invalid_argument("QuadSpec: tolerances must be positive");
    }
    if (spec.max_subdivisions < 0) {
        throw std::invalid_argument("QuadSpec: max_subdivisions must be non-negative");
    }
}

}  // namespace

QuadSpec QuadSpec::with_breakpoints(const std::vector<double>& extra) const {
    QuadSpec out = *this;
    out.breakpoints.insert(out.breakpoints.end(), extra.begin(), extra.end());
    std::erase_if(out.breakpoints, [](double q) { return !(q > 0.0 && q < kPi); });
    std::sort(out.breakpoints.begin(), out.breakpoints.end());
    out.breakpoints.erase(std::unique(out.breakpoints.begin(), out.breakpoints.end()),
                          out.breakpoints.end());
    return out;
}

QuadResult integrate(const std::function<double(double)>& f, double a, double b, const QuadSpec& spec) {
    validate(spec);
    QuadResult res;
    if (!(b > a)) return res;

    std::vector<double> edges{a};
    for (double q : spec.breakpoints) {
        if (q > a && q < b && q > edges.back()) edges.push_back(q);
    }
    edges.push_back(b);

    std::priority_queue<Panel> panels;
    double total = 0.0;
    double total_err = 0.0;
    for (std::size_t i = 0; i + 1 < edges.size(); ++i) {
        Panel p = eval_panel(f, edges[i], edges[i + 1], res.evaluations);
        total += p.value;
        total_err += p.error;
        panels.push(p);
    }

    auto target = [&] { return std::max(spec.abs_tol, spec.rel_tol * std::abs(total)); };
    while (total_err > target()) {
        if (res.subdivisions >= spec.max_subdivisions) {
            res.converged = false;
            break;
        }
        const Panel worst = panels.top();
        const double mid = 0.5 * (worst.a + worst.b);
        if (!(mid > worst.a && mid < worst.b)) {
            // Panel below floating-point resolution; cannot refine further.
            res.converged = false;
            break;
        }
        panels.pop();
        Panel left = eval_panel(f, worst.a, mid, res.evaluations);
        Panel right = eval_panel(f, mid, worst.b, res.evaluations);
        total += left.value + right.value - worst.value;
        total_err += left.error + right.error - worst.error;
        panels.push(left);
        panels.push(right);
        ++res.subdivisions;
    }

    // Re-sum from the panels to shed the drift of incremental updates.
    total = 0.0;
    total_err = 0.0;
    while (!panels.empty()) {
        total += panels.top().value;
        total_err += panels.top().error;
        panels.pop();
    }
    res.value = total;
    res.error = total_err;
    return res;
}

QuadResult integrate(const std::function<double(double)>& f, const QuadSpec& spec) {
    return integrate(f, 0.0, kPi, spec);
}

double integrate_or_throw(const std::function<double(double)>& f, const QuadSpec& spec, const char* what) {
    const QuadResult r = integrate(f, spec);
    if (!r.converged) {
        throw ToleranceNotReached(std::string(what) + ": quadrature tolerance not reached (error estimate " +
                                      std::to_string(r.error) + ")",
                                  r.value, r.error);
    }
    return r.value;
}

double thermal_factor(const Thermal& t, double lambda) noexcept {
    if (t.is_zero()) return lambda > 0.0 ? 1.0 : (lambda < 0.0 ? -1.0 : 0.0);
    return std::tanh(t.beta() * lambda);
}

}  // namespace stagxx
