#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "stagxx/model.hpp"
#include "support.hpp"

using namespace stagxx;
using stagxx::test::near;

TEST_SUITE("model") {

TEST_CASE("ChainParams rejects negative J and non-finite values") {
    CHECK_THROWS_AS(ChainParams(-0.1, 0, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(ChainParams(1, NAN, 0, 0), std::invalid_argument);
    CHECK_THROWS_AS(ChainParams(1, 0, INFINITY, 0), std::invalid_argument);
    CHECK_NOTHROW(ChainParams(0, -1, -2, -3));
    const ChainParams p(1, 0.5, 0.2, 0.1);
    CHECK(p.with_B(0.7).B() == 0.7);
    CHECK(p.with_B(0.7).j() == 0.5);
}

TEST_CASE("Thermal variants") {
    CHECK(Thermal::zero().is_zero());
    CHECK_THROWS_AS(Thermal::zero().beta(), std::logic_error);
    CHECK(Thermal::finite(2.0).beta() == 2.0);
    CHECK(Thermal::from_temperature(0.0).is_zero());
    CHECK(near(Thermal::from_temperature(0.25).beta(), 4.0, 1e-15));
    CHECK_THROWS_AS(Thermal::finite(0.0), std::invalid_argument);
    CHECK_THROWS_AS(Thermal::finite(INFINITY), std::invalid_argument);
    CHECK_THROWS_AS(Thermal::from_temperature(-1.0), std::invalid_argument);
}

TEST_CASE("theta_of_q examples") {
    CHECK(near(theta_of_q(ChainParams(1, 0, 0, 0), 0.0), 1.0, 1e-15));
    CHECK(near(theta_of_q(ChainParams(1, 0.5, 0, 0.5), kPi / 2), std::sqrt(0.5), 1e-15));
    for (double q : {0.0, 0.3, 1.2, kPi / 2, 2.9, kPi}) CHECK(near(theta_of_q(ChainParams(1, 1, 0, 0), q), 1.0, 1e-15));
    CHECK_THROWS_AS(theta_of_q(ChainParams(1, 0, 0, 0), -0.1), std::domain_error);
    CHECK_THROWS_AS(theta_of_q(ChainParams(1, 0, 0, 0), 3.2), std::domain_error);
}

TEST_CASE("lambda_pm examples") {
    auto l = lambda_pm(ChainParams(1, 0, 1, 0), kPi / 2);
    CHECK(near(l.plus, 1.0, 1e-15));
    CHECK(near(l.minus, 1.0, 1e-15));
    l = lambda_pm(ChainParams(1, 0.5, 1, 0.5), kPi / 2);
    CHECK(near(l.plus, 1.70711, 1e-5));
    CHECK(near(l.minus, 0.29289, 1e-5));
    l = lambda_pm(ChainParams(1, 0, 0, 0), 0.0);
    CHECK(l.plus == 1.0);
    CHECK(l.minus == -1.0);
}

TEST_CASE("xi examples and clamping") {
    CHECK(near(*xi(ChainParams(1, 0, 0.5, 0)), kPi / 3, 1e-14));
    CHECK(near(*xi(ChainParams(1, 0, 1 / std::sqrt(2.0), 0)), kPi / 4, 1e-14));
    CHECK(near(*xi(ChainParams(1, 0, 0, 0)), kPi / 2, 1e-15));
    CHECK(*xi(ChainParams(1, 0, 3, 0)) == 0.0);             // ratio > 1
    CHECK(near(*xi(ChainParams(1, 0.5, 0, 1)), kPi / 2, 0));  // ratio < 0
    CHECK_FALSE(xi(ChainParams(1, 1, 0.3, 0.2)).has_value());
    CHECK_FALSE(xi(ChainParams(1, -1, 0.3, 0.2)).has_value());
}

TEST_CASE("xi is monotone non-increasing in B for j < J") {
    const ChainParams p(1, 0.4, 0, 0.3);
    double prev = *xi(p);
    for (double B = 0.0; B <= 1.5; B += 0.01) {
        const double x = *xi(p.with_B(B));
        CHECK(x <= prev + 1e-15);
        prev = x;
    }
}

TEST_CASE("region_q examples") {
    auto r = region_q(ChainParams(1, 0, 0, 0));
    REQUIRE(r.size() == 2);
    CHECK(near(r[0].lo, 0, 0));
    CHECK(near(r[0].hi, kPi / 2, 1e-15));
    CHECK(near(r[1].lo, kPi / 2, 1e-15));
    CHECK(near(r[1].hi, kPi, 1e-15));
    CHECK(region_q(ChainParams(1, 0, 2, 0)).empty());
    r = region_q(ChainParams(1, 2, 1.5, 0));
    REQUIRE(r.size() == 1);
    const double x = std::acos(std::sqrt(7.0 / 12.0));
    CHECK(near(r[0].lo, x, 1e-14));
    CHECK(near(r[0].hi, kPi - x, 1e-14));
    const ChainParams dimer(1, 1, 0.5, 0.3);
    CHECK(near(region_q_measure(dimer), kPi, 1e-15));
    CHECK(region_q(dimer.with_B(std::sqrt(1.09) + 1e-9)).empty());
}

TEST_CASE("region_q matches the sign of the lower branch by dense sampling") {
    test::Sampler s(11);
    for (int trial = 0; trial < 200; ++trial) {
        const ChainParams p(1.0, s.uniform(0, 2), s.uniform(-2, 2), s.uniform(-2, 2));
        const auto r = region_q(p);
        for (int i = 0; i < 1000; ++i) {
            const double q = kPi * (i + 0.5) / 1000;
            bool inside = false;
            for (const auto& iv : r) inside = inside || iv.contains(q);
            const double lm = lambda_pm(p, q).minus;
            if (std::abs(lm) < 1e-9) continue;  // boundary points are measure zero
            CHECK_MESSAGE(inside == (lm < 0), "J=1 j=", p.j(), " B=", p.B(), " b=", p.b(), " q=", q);
        }
    }
}

TEST_CASE("theta extremes and reflection symmetry") {
    test::Sampler s(12);
    for (int trial = 0; trial < 100; ++trial) {
        const ChainParams p(s.uniform(0, 2), s.uniform(-2, 2), 0, s.uniform(-2, 2));
        double lo = INFINITY, hi = 0;
        for (int i = 0; i <= 2000; ++i) {
            const double q = kPi * i / 2000;
            const double t = theta_of_q(p, q);
            lo = std::min(lo, t);
            hi = std::max(hi, t);
            CHECK(near(t, theta_of_q(p, kPi - q), 1e-14));
        }
        const double J2 = p.J() * p.J(), j2 = p.j() * p.j(), b2 = p.b() * p.b();
        CHECK(near(lo, std::sqrt(std::min(J2, j2) + b2), 1e-12));
        CHECK(near(hi, std::sqrt(std::max(J2, j2) + b2), 1e-12));
    }
}

TEST_CASE("classify_region examples") {
    CHECK(classify_region(ChainParams(1, 0.3, 0.5, 0.4)) == PhaseRegion::B1);
    CHECK(classify_region(ChainParams(1, 2, 1.5, 0)) == PhaseRegion::B2);
    CHECK(classify_region(ChainParams(1, 0, 1.2, 0)) == PhaseRegion::B3prime);
    CHECK(classify_region(ChainParams(1, 2, 2.5, 0)) == PhaseRegion::B3);
    CHECK(classify_region(ChainParams(1, 0, -1.2, 0)) == PhaseRegion::B3prime);
    // Half-open intervals: the critical field itself belongs to the upper region.
    CHECK(classify_region(ChainParams(1, 0, 1.0, 0)) == PhaseRegion::B3prime);
    CHECK(to_string(PhaseRegion::B3prime) == "B3prime");
}

TEST_CASE("B2 is reachable only for j > J") {
    test::Sampler s(13);
    for (int trial = 0; trial < 500; ++trial) {
        const ChainParams p(1.0, s.uniform(0, 1), s.uniform(0, 3), s.uniform(0, 2));
        CHECK(classify_region(p) != PhaseRegion::B2);
    }
}

TEST_CASE("critical fields and kink angles") {
    const auto c = critical_fields(ChainParams(1, 0.5, 0, 1));
    CHECK(near(c.uniform, std::sqrt(2.0), 1e-15));
    CHECK(near(c.staggered, std::sqrt(1.25), 1e-15));
    const auto k = kink_angles(ChainParams(1, 0, 0.5, 0));
    REQUIRE(k.size() == 3);
    CHECK(near(k[0], kPi / 3, 1e-14));
    CHECK(near(k[1], kPi / 2, 0));
    CHECK(near(k[2], 2 * kPi / 3, 1e-14));
}

}  // TEST_SUITE
