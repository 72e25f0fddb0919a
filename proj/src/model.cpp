#include "stagxx/model.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

namespace stagxx {

ChainParams::ChainParams(double J, double j, double B, double b) : J_(J), j_(j), B_(B), b_(b) {
    if (!std::isfinite(J) || !std::isfinite(j) || !std::isfinite(B) || !std::isfinite(b)) {
        throw std::invalid_argument("ChainParams: all couplings and fields must be finite");
    }
    if (J < 0.0) {
        throw std::invalid_argument("ChainParams: J must be non-negative, got " + std::to_string(J));
    }
}

Thermal Thermal::finite(double beta) {
    if (!std::isfinite(beta) || beta <= 0.0) {
        throw std::invalid_argument("Thermal: beta must be finite and positive");
    }
    Thermal t;
    t.beta_ = beta;
    return t;
}

Thermal Thermal::from_temperature(double T) {
    if (!std::isfinite(T) || T < 0.0) {
        throw std::invalid_argument("Thermal: temperature must be finite and non-negative");
    }
    return T == 0.0 ? zero() : finite(1.0 / T);
}

double Thermal::beta() const {
    if (!beta_) throw std::logic_error("Thermal: beta requested for zero temperature");
    return *beta_;
}

std::string_view to_string(PhaseRegion r) noexcept {
    switch (r) {
        case PhaseRegion::B1: return "B1";
        case PhaseRegion::B2: return "B2";
        case PhaseRegion::B3: return "B3";
        case PhaseRegion::B3prime: return "B3prime";
    }
    return "?";
}

double theta_of_q(const ChainParams& p, double q) {
    if (!(q >= 0.0 && q <= kPi)) {
        throw std::domain_error("theta_of_q: q must lie in [0, pi]");
    }
    const double c = p.J() * std::cos(q);
    const double s = p.j() * std::sin(q);
    return std::sqrt(c * c + p.b() * p.b() + s * s);
}

BranchEnergies lambda_pm(const ChainParams& p, double q) {
    const double th = theta_of_q(p, q);
    return {p.B() + th, p.B() - th};
}

std::optional<double> xi(const ChainParams& p) {
    const double J2 = p.J() * p.J();
    const double j2 = p.j() * p.j();
    if (J2 == j2) return std::nullopt;
    const double r = (p.B() * p.B() - p.b() * p.b() - j2) / (J2 - j2);
    return std::acos(std::sqrt(std::clamp(r, 0.0, 1.0)));
}

std::vector<Interval> region_q(const ChainParams& p) {
    std::vector<Interval> out;
    auto push = [&](double lo, double hi) {
        if (hi > lo) out.push_back({lo, hi});
    };
    // B - Theta < 0 everywhere once the field is negative.
    if (p.B() < 0.0) {
        push(0.0, kPi);
        return out;
    }
    const auto x = xi(p);
    if (!x) {
        if (p.B() < std::hypot(p.J(), p.b())) push(0.0, kPi);
        return out;
    }
    if (std::abs(p.j()) < p.J()) {
        push(0.0, *x);
        push(kPi - *x, kPi);
    } else {
        push(*x, kPi - *x);
    }
    return out;
}

double region_q_measure(const ChainParams& p) {
    double total = 0.0;
    for (const auto& iv : region_q(p)) total += iv.length();
    return total;
}

CriticalFields critical_fields(const ChainParams& p) noexcept {
    return {std::hypot(p.J(), p.b()), std::hypot(p.j(), p.b())};
}

PhaseRegion classify_region(const ChainParams& p) {
    const double B = std::abs(p.B());
    const auto [bc_uniform, bc_staggered] = critical_fields(p);
    if (std::abs(p.j()) <= p.J()) {
        return B < bc_uniform ? PhaseRegion::B1 : PhaseRegion::B3prime;
    }
    if (B < bc_uniform) return PhaseRegion::B1;
    if (B < bc_staggered) return PhaseRegion::B2;
    return PhaseRegion::B3;
}

std::vector<double> kink_angles(const ChainParams& p) {
    std::vector<double> out{kPi / 2};
    // Kinks sit where Theta(q) = |B|, which depends on B only through B^2.
    if (const auto x = xi(p)) {
        for (double q : {*x, kPi - *x}) {
            if (q > 0.0 && q < kPi) out.push_back(q);
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

}  // namespace stagxx
