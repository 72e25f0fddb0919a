#include <doctest.h>

#include <cmath>

#include <Eigen/Eigenvalues>

#include "stagxx/correlations.hpp"
#include "stagxx/oracle.hpp"
#include "stagxx/thermo.hpp"
#include "support.hpp"

using namespace stagxx;
using namespace stagxx::correlations;
using stagxx::test::near;

namespace {

// <a_l^+ a_m> of the open fermion chain, diagonalized in real space. Bulk sites
// of a long chain reproduce the infinite-chain contractions.
Eigen::MatrixXd real_space_correlations(const ChainParams& p, double beta, int n) {
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(n, n);
    for (int i = 0; i < n; ++i) {
        const double s = ((i + 1) % 2 == 0) ? 1.0 : -1.0;
        h(i, i) = -2 * (p.B() + s * p.b());
        if (i + 1 < n) h(i, i + 1) = h(i + 1, i) = -(p.J() + s * p.j());
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(h);
    const Eigen::VectorXd occ = (1.0 / ((beta * es.eigenvalues().array()).exp() + 1.0)).matrix();
    return es.eigenvectors() * occ.asDiagonal() * es.eigenvectors().transpose();
}

}  // namespace

TEST_SUITE("correlations") {

TEST_CASE("g1 examples") {
    auto g = g1(ChainParams(1, 0, 0, 0), Thermal::zero());
    CHECK(near(g.g0, -2 / kPi, 1e-12));
    CHECK(g.gs == 0.0);
    g = g1(ChainParams(1, 1, 0, 0), Thermal::zero());
    CHECK(near(g.g0, -0.5, 1e-12));
    CHECK(near(g.gs, -0.5, 1e-12));
}

TEST_CASE("g1 is minus the coupling derivative of ln Z over beta") {
    const ChainParams p(1, 0.5, 0.4, 0.3);
    const double beta = 3, h = 1e-4;
    const Thermal t = Thermal::finite(beta);
    auto lnz = [&](const ChainParams& q) { return thermo::ln_z_per_site(q, t); };
    const auto g = g1(p, t);
    CHECK(near(g.g0, -(lnz(p.with_J(p.J() + h)) - lnz(p.with_J(p.J() - h))) / (2 * h * beta), 1e-5));
    CHECK(near(g.gs, -(lnz(p.with_j(p.j() + h)) - lnz(p.with_j(p.j() - h))) / (2 * h * beta), 1e-5));
}

TEST_CASE("g_even at R = 0 is the site magnetization") {
    test::Sampler s(41);
    for (int i = 0; i < 30; ++i) {
        const ChainParams p(1, s.uniform(0, 2), s.uniform(-2, 2), s.uniform(-2, 2));
        const Thermal t = (i % 4 == 0) ? Thermal::zero() : Thermal::finite(s.uniform(0.2, 20));
        const auto g = g_even(p, t, 0);
        CHECK(near(g.g0, thermo::magnetization(p, t), 1e-10));
        CHECK(near(g.gs, thermo::staggered_magnetization(p, t), 1e-10));
    }
}

TEST_CASE("g_even examples") {
    const auto g = g_even(ChainParams(1, 0, 0, 0), Thermal::zero(), 2);
    CHECK(g.g0 == 0.0);
    CHECK(g.gs == 0.0);
    CHECK_THROWS_AS(g_even(ChainParams(1, 0, 0, 0), Thermal::zero(), 3), std::invalid_argument);
    CHECK_THROWS_AS(g_even(ChainParams(1, 0, 0, 0), Thermal::zero(), -2), std::invalid_argument);
}

TEST_CASE("the sine form of the even-R staggered expression vanishes") {
    test::Sampler s(42);
    for (int i = 0; i < 40; ++i) {
        const ChainParams p(1, s.uniform(0, 2), s.uniform(-2, 2), s.uniform(-2, 2));
        const Thermal t = (i % 4 == 0) ? Thermal::zero() : Thermal::finite(s.uniform(0.2, 20));
        for (int R : {2, 4, 6}) CHECK(std::abs(even_r_staggered_integral(p, t, R)) < 1e-10);
    }
}

TEST_CASE("even-R contractions match the real-space chain on both sublattices") {
    // The staggered part of G_R for even R is non-zero whenever b != 0.
    const int n = 400;
    const int mid = 199;  // site l = 200, even
    for (const auto& [p, beta] : {std::pair{ChainParams(1, 0.5, 1.0, 0.5), 2.0},
                                  {ChainParams(1, 1.4, 0.3, -0.7), 5.0},
                                  {ChainParams(0.6, 0.2, -0.4, 0.9), 0.7}}) {
        const auto c = real_space_correlations(p, beta, n);
        const Thermal t = Thermal::finite(beta);
        const SigmaZ sz = sigma_z(p, t);
        CHECK(near(sz.at(Parity::Even), 2 * c(mid, mid) - 1, 1e-10));
        CHECK(near(sz.at(Parity::Odd), 2 * c(mid + 1, mid + 1) - 1, 1e-10));
        for (int R = 1; R <= 4; ++R) {
            const auto g = g_r(p, t, R);
            // Even separations carry the opposite overall sign to -2<a^+ a>.
            const double sign = (R % 2 == 0) ? 1.0 : -1.0;
            CHECK(near(g.at(Parity::Even), sign * 2 * c(mid, mid + R), 1e-9));
            CHECK(near(g.at(Parity::Odd), sign * 2 * c(mid + 1, mid + 1 + R), 1e-9));
        }
        CHECK(std::abs(g_even(p, t, 2).gs) > 1e-3);
    }
}

TEST_CASE("g_odd examples") {
    test::Sampler s(43);
    for (int i = 0; i < 10; ++i) {
        const ChainParams p(1, 0, s.uniform(-2, 2), s.uniform(-2, 2));
        for (int R : {1, 3, 5}) CHECK(g_odd(p, Thermal::finite(2), R).gs == 0.0);
    }
    const auto g3 = g_odd(ChainParams(1, 0, 0, 0), Thermal::zero(), 3);
    QuadSpec fine;
    fine.abs_tol = fine.rel_tol = 1e-11;
    fine.max_subdivisions = 2000;
    // Reference: G_3 = -(1/2pi) int cos 3q cos q * 2 sign(cos q)/|cos q| dq.
    const double ref = -integrate([](double q) { return 2 * std::cos(3 * q) * (std::cos(q) > 0 ? 1.0 : -1.0); },
                                  fine.with_breakpoints({kPi / 2}))
                            .value /
                       (2 * kPi);
    CHECK(near(g3.g0, ref, 1e-10));
    CHECK(near(g3.g0, 2 / (3 * kPi), 1e-10));
    const auto d3 = g_odd(ChainParams(1, 1, 0, 0), Thermal::zero(), 3);
    CHECK(near(d3.g0 + d3.gs, 0.0, 1e-12));
    CHECK(near(d3.g0 - d3.gs, 0.0, 1e-12));
    CHECK_THROWS_AS(g_odd(ChainParams(1, 0, 0, 0), Thermal::zero(), 2), std::invalid_argument);
}

TEST_CASE("site-resolved values and the dimer") {
    const ChainParams dimer(1, 1, 0, 0);
    const Thermal t0 = Thermal::zero();
    CHECK(near(g_site(dimer, t0, Parity::Even, 1), -1.0, 1e-12));
    CHECK(near(g_site(dimer, t0, Parity::Odd, 1), 0.0, 1e-12));
    CHECK(near(xx_plus_yy(dimer, t0, Parity::Even), 2.0, 1e-12));
    CHECK(near(xx_plus_yy(dimer, t0, Parity::Odd), 0.0, 1e-12));
    CHECK(near(xx_plus_yy(ChainParams(1, 0, 0, 0), t0, Parity::Even), 4 / kPi, 1e-12));
    CHECK(near(zz_correlator(dimer, t0, Parity::Even, 1), -1.0, 1e-12));
    // j -> -j swaps the sublattices.
    const ChainParams p(1, 0.4, 0.3, 0.0);
    const Thermal t = Thermal::finite(3);
    CHECK(near(g_site(p, t, Parity::Even, 1), g_site(p.with_j(-0.4), t, Parity::Odd, 1), 1e-12));
}

TEST_CASE("zz correlator examples") {
    CHECK(near(zz_correlator(ChainParams(1, 0, 0, 0), Thermal::zero(), Parity::Odd, 1), -4 / (kPi * kPi), 1e-12));
    const ChainParams p(1, 0.5, 0.6, 0.5);
    for (int R = 1; R <= 4; ++R) {
        CHECK(std::abs(zz_correlator(p, Thermal::finite(1e-6), Parity::Even, R)) < 1e-5);
    }
    CHECK_THROWS_AS(zz_correlator(p, Thermal::zero(), Parity::Even, 0), std::invalid_argument);
}

TEST_CASE("bounds on the canonical grid") {
    for (double j : {0.0, 0.5, 1.5}) {
        for (double B : {0.0, 0.7, 1.6}) {
            for (double b : {0.0, 0.5, 1.2}) {
                for (bool zero : {true, false}) {
                    const Thermal t = zero ? Thermal::zero() : Thermal::finite(2);
                    const auto cs = CorrelationSet::compute(ChainParams(1, j, B, b), t, 3);
                    for (Parity s : {Parity::Even, Parity::Odd}) {
                        for (int R = 1; R <= 3; ++R) {
                            CHECK(std::abs(cs.g_site(s, R)) <= 1 + 1e-10);
                            CHECK(std::abs(cs.zz(s, R)) <= 1 + 1e-10);
                        }
                    }
                }
            }
        }
    }
}

TEST_CASE("CorrelationSet bookkeeping") {
    const ChainParams p(1, 0.5, 0.3, 0.2);
    const Thermal t = Thermal::finite(2);
    const auto cs = CorrelationSet::compute(p, t, 2);
    CHECK(cs.max_R() == 2);
    CHECK_THROWS_AS(cs.g(3), std::out_of_range);
    CHECK_THROWS_AS(CorrelationSet::compute(p, t, 0), std::invalid_argument);
    CHECK(near(cs.zz(Parity::Odd, 1), zz_correlator(p, t, Parity::Odd, 1), 1e-14));
    CHECK(near(cs.g_site(Parity::Even, 2), g_site(p, t, Parity::Even, 2), 1e-14));
}

TEST_CASE("contractions converge to dense ED along N = 8, 10, 12") {
    const ChainParams p(1, 0.5, 1.0, 0.5);
    const Thermal t = Thermal::finite(2);
    const auto cs = CorrelationSet::compute(p, t, 1);
    double prev_g = INFINITY, prev_zz = INFINITY;
    for (int n : {8, 10, 12}) {
        const auto ed = oracle::dense_ed({n, p, t});
        const double gap_g = std::abs(ed.pair(Parity::Even, 1).g - cs.g_site(Parity::Even, 1));
        const double gap_zz = std::abs(ed.pair(Parity::Odd, 1).zz - cs.zz(Parity::Odd, 1));
        CHECK(gap_g <= prev_g + 1e-3);
        CHECK(gap_zz <= prev_zz + 1e-3);
        prev_g = gap_g;
        prev_zz = gap_zz;
    }
    CHECK(prev_g < 0.02);
    CHECK(prev_zz < 0.02);
}

}  // TEST_SUITE
