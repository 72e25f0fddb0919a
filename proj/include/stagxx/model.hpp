#pragma once

#include <numbers>
#include <optional>
#include <string_view>
#include <vector>

namespace stagxx {

inline constexpr double kPi = std::numbers::pi;

/// Couplings and fields of the staggered XX ring
///
///   H = -sum_l [ J_l/2 (sx_l sx_{l+1} + sy_l sy_{l+1}) + B_l sz_l ],
///   J_l = J + (-1)^l j,   B_l = B + (-1)^l b.
///
/// J must be finite and non-negative; the others may take either sign.
class ChainParams {
public:
    ChainParams(double J, double j, double B, double b);

    double J() const noexcept { return J_; }
    double j() const noexcept { return j_; }
    double B() const noexcept { return B_; }
    double b() const noexcept { return b_; }

    ChainParams with_J(double v) const { return {v, j_, B_, b_}; }
    ChainParams with_j(double v) const { return {J_, v, B_, b_}; }
    ChainParams with_B(double v) const { return {J_, j_, v, b_}; }
    ChainParams with_b(double v) const { return {J_, j_, B_, v}; }

    friend bool operator==(const ChainParams&, const ChainParams&) = default;

private:
    double J_;
    double j_;
    double B_;
    double b_;
};

/// Inverse temperature, or the ground-state limit.
class Thermal {
public:
    static Thermal finite(double beta);
    static Thermal zero() noexcept { return Thermal{}; }
    /// T == 0 maps to the ground-state limit, otherwise beta = 1/T.
    static Thermal from_temperature(double T);

    bool is_zero() const noexcept { return !beta_.has_value(); }
    /// Throws std::logic_error for the zero-temperature variant.
    double beta() const;
    /// 0 for the zero-temperature variant.
    double temperature() const noexcept { return beta_ ? 1.0 / *beta_ : 0.0; }

private:
    Thermal() = default;
    std::optional<double> beta_;
};

enum class PhaseRegion { B1, B2, B3, B3prime };

std::string_view to_string(PhaseRegion r) noexcept;

struct Interval {
    double lo;
    double hi;
    double length() const noexcept { return hi - lo; }
    bool contains(double q) const noexcept { return q > lo && q < hi; }
};

struct CriticalFields {
    double uniform;    // sqrt(J^2 + b^2)
    double staggered;  // sqrt(j^2 + b^2)
};

/// sqrt(J^2 cos^2 q + b^2 + j^2 sin^2 q); q must lie in [0, pi].
double theta_of_q(const ChainParams& p, double q);

struct BranchEnergies {
    double plus;   // B + Theta(q)
    double minus;  // B - Theta(q)
};

BranchEnergies lambda_pm(const ChainParams& p, double q);

/// Boundary angle of the negative branch region. The ratio
/// (B^2 - b^2 - j^2) / (J^2 - j^2) is clamped to [0, 1] before taking
/// arccos(sqrt(.)), so the result always lies in [0, pi/2]. Returns nullopt
/// when |J| == |j|, where the dispersion is flat.
std::optional<double> xi(const ChainParams& p);

/// {q in (0, pi) : B - Theta(q) < 0} as disjoint open intervals, empty ones dropped.
std::vector<Interval> region_q(const ChainParams& p);

/// Total measure of region_q(p).
double region_q_measure(const ChainParams& p);

PhaseRegion classify_region(const ChainParams& p);

CriticalFields critical_fields(const ChainParams& p) noexcept;

/// Interior angles where zero-temperature integrands have kinks (Xi, pi - Xi),
/// plus pi/2 where every integrand is reflection-symmetric.
std::vector<double> kink_angles(const ChainParams& p);

}  // namespace stagxx
