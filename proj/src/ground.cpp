#include "stagxx/ground.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "stagxx/errors.hpp"

namespace stagxx::ground {

namespace {

enum class Branch { Weak, Dimer, Strong };  // |j| < J, |j| == J, |j| > J

Branch branch_of(const ChainParams& p) {
    const double aj = std::abs(p.j());
    if (aj < p.J()) return Branch::Weak;
    if (aj == p.J()) return Branch::Dimer;
    return Branch::Strong;
}

double checked(const QuadResult& r, const char* what) {
    if (!r.converged) {
        throw ToleranceNotReached(std::string(what) + ": quadrature tolerance not reached", r.value, r.error);
    }
    return r.value;
}

double theta_integral(const ChainParams& p, double lo, double hi, const QuadSpec& quad) {
    QuadSpec plain = quad;
    plain.breakpoints.clear();
    return checked(integrate([&](double q) { return theta_of_q(p, q); }, lo, hi, plain), "theta integral");
}

double inverse_theta_integral(const ChainParams& p, double lo, double hi, const QuadSpec& quad) {
    QuadSpec plain = quad;
    plain.breakpoints.clear();
    return checked(integrate([&](double q) { return 1.0 / theta_of_q(p, q); }, lo, hi, plain),
                   "inverse theta integral");
}

// Xi for the non-degenerate branches, which always have one.
double xi_of(const ChainParams& p) { return *xi(p); }

}  // namespace

ChainParams with_axis(const ChainParams& p, ScanAxis axis, double value) {
    switch (axis) {
        case ScanAxis::B: return p.with_B(value);
        case ScanAxis::b: return p.with_b(value);
        case ScanAxis::j: return p.with_j(value);
    }
    return p;
}

double energy(const ChainParams& p, const QuadSpec& quad) {
    const double B = std::abs(p.B());
    const PhaseRegion region = classify_region(p);
    switch (branch_of(p)) {
        case Branch::Weak:
            if (region == PhaseRegion::B1) {
                const double x = xi_of(p);
                return (2.0 / kPi * x - 1.0) * B - 2.0 / kPi * theta_integral(p, 0.0, x, quad);
            }
            return -B;
        case Branch::Dimer:
            return region == PhaseRegion::B1 ? -std::hypot(p.J(), p.b()) : -B;
        case Branch::Strong:
            if (region == PhaseRegion::B1) return -2.0 / kPi * theta_integral(p, 0.0, kPi / 2, quad);
            if (region == PhaseRegion::B2) {
                const double x = xi_of(p);
                return -2.0 / kPi * x * B - 2.0 / kPi * theta_integral(p, x, kPi / 2, quad);
            }
            return -B;
    }
    return -B;
}

double magnetization_t0(const ChainParams& p) {
    const PhaseRegion region = classify_region(p);
    double m = 1.0;
    switch (branch_of(p)) {
        case Branch::Weak:
            m = region == PhaseRegion::B1 ? 1.0 - 2.0 / kPi * xi_of(p) : 1.0;
            break;
        case Branch::Dimer:
            m = region == PhaseRegion::B1 ? 0.0 : 1.0;
            break;
        case Branch::Strong:
            if (region == PhaseRegion::B1) m = 0.0;
            else if (region == PhaseRegion::B2) m = 2.0 / kPi * xi_of(p);
            else m = 1.0;
            break;
    }
    return p.B() < 0.0 ? -m : m;
}

double staggered_magnetization_t0(const ChainParams& p, const QuadSpec& quad) {
    if (p.b() == 0.0) return 0.0;
    const PhaseRegion region = classify_region(p);
    const double scale = 2.0 * p.b() / kPi;
    switch (branch_of(p)) {
        case Branch::Weak:
            return region == PhaseRegion::B1 ? scale * inverse_theta_integral(p, 0.0, xi_of(p), quad) : 0.0;
        case Branch::Dimer:
            return region == PhaseRegion::B1 ? p.b() / std::hypot(p.J(), p.b()) : 0.0;
        case Branch::Strong:
            if (region == PhaseRegion::B1) return scale * inverse_theta_integral(p, 0.0, kPi / 2, quad);
            if (region == PhaseRegion::B2) return scale * inverse_theta_integral(p, xi_of(p), kPi / 2, quad);
            return 0.0;
    }
    return 0.0;
}

double meyer_wallach(const ChainParams& p, const QuadSpec& quad) {
    const PhaseRegion region = classify_region(p);
    if (region == PhaseRegion::B3 || region == PhaseRegion::B3prime) return 0.0;
    const double ms = staggered_magnetization_t0(p, quad);
    switch (branch_of(p)) {
        case Branch::Weak: {
            const double x = xi_of(p);
            return 4.0 / kPi * x * (1.0 - x / kPi) - ms * ms;
        }
        case Branch::Dimer: {
            const double J2 = p.J() * p.J();
            return J2 / (J2 + p.b() * p.b());
        }
        case Branch::Strong: {
            if (region == PhaseRegion::B1) return 1.0 - ms * ms;
            const double x = xi_of(p);
            return 1.0 - 4.0 * x * x / (kPi * kPi) - ms * ms;
        }
    }
    return 0.0;
}

GroundReport report(const ChainParams& p, const QuadSpec& quad) {
    return {classify_region(p), energy(p, quad), magnetization_t0(p), meyer_wallach(p, quad), critical_fields(p)};
}

QcpScan qcp_scan(const ChainParams& base, ScanAxis axis, double from, double to, double step, const QuadSpec& quad) {
    if (!(step > 0.0) || !std::isfinite(step)) throw std::invalid_argument("qcp_scan: step must be positive");
    if (!(to >= from)) throw std::invalid_argument("qcp_scan: empty range");

    const auto n = static_cast<std::size_t>(std::floor((to - from) / step + 1e-9)) + 1;
    QcpScan scan;
    scan.points.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double x = from + static_cast<double>(i) * step;
        if (axis == ScanAxis::j && std::abs(std::abs(x) - base.J()) < step) {
            throw std::invalid_argument("qcp_scan: j axis passes within one step of |j| = J");
        }
        const double e_minus = energy(with_axis(base, axis, x - step), quad);
        const double e_zero = energy(with_axis(base, axis, x), quad);
        const double e_plus = energy(with_axis(base, axis, x + step), quad);
        scan.points.push_back({x, (e_plus - 2.0 * e_zero + e_minus) / (step * step), false});
    }

    // Smooth curvature is removed with a running median before the median test,
    // so a divergence on top of a curved background still stands out.
    constexpr std::size_t kTrend = 5;
    std::vector<double> resid(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t lo = i >= kTrend ? i - kTrend : 0;
        const std::size_t hi = std::min(n, i + kTrend + 1);
        std::vector<double> win;
        for (std::size_t k = lo; k < hi; ++k) win.push_back(scan.points[k].d2e);
        std::nth_element(win.begin(), win.begin() + static_cast<std::ptrdiff_t>(win.size() / 2), win.end());
        resid[i] = std::abs(scan.points[i].d2e - win[win.size() / 2]);
    }
    std::vector<double> sorted = resid;
    std::nth_element(sorted.begin(), sorted.begin() + static_cast<std::ptrdiff_t>(n / 2), sorted.end());
    // The absolute floor keeps roundoff from being flagged on exactly linear stretches.
    const double threshold = std::max(10.0 * sorted[n / 2], 1e-8);

    for (std::size_t i = 0; i < n; ++i) scan.points[i].flagged = resid[i] > threshold;

    // A divergence is a local maximum of |d2e| that at least halves within a few
    // steps on one side. Smooth curvature cannot drop that fast; the one-sided
    // inverse-square-root growth at a critical field always does.
    constexpr std::size_t kWindow = 5;
    auto mag = [&](std::size_t i) { return std::abs(scan.points[i].d2e); };
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double a = mag(i);
        if (!scan.points[i].flagged || a < mag(i - 1) || a < mag(i + 1) || (a == mag(i - 1) && a == mag(i + 1))) continue;
        bool drops = false;
        for (std::size_t k = 1; k <= kWindow && !drops; ++k) {
            drops = (i >= k && mag(i - k) <= 0.5 * a) || (i + k < n && mag(i + k) <= 0.5 * a);
        }
        if (drops) scan.peaks.push_back(scan.points[i].value);
    }
    return scan;
}

}  // namespace stagxx::ground
