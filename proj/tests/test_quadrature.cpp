#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include <disc/polynomial.hpp>
#include <disc/quadrature.hpp>

#include "oracles.hpp"

using namespace disc;

TEST(GaussLegendre, IntegratesPolynomialsExactly) {
    const GaussRule g = gauss_legendre(10, 0.0, 2.0);
    for (int m = 0; m < 20; ++m) {
        double s = 0.0;
        for (std::size_t i = 0; i < g.nodes.size(); ++i) {
            s += g.weights[i] * std::pow(g.nodes[i], m);
        }
        EXPECT_NEAR(s, std::pow(2.0, m + 1) / (m + 1), 1e-12 * std::pow(2.0, m + 1)) << m;
    }
}

TEST(DiscGrid, WeightsSumToHalf) {
    const DiscGrid grid;
    double s = 0.0;
    for (const auto& n : grid.nodes()) {
        s += n.weight;
    }
    EXPECT_NEAR(s, 0.5, 1e-12);
    EXPECT_THROW(DiscGrid(0, 10), Error);
}

TEST(DiscIntegrate, Examples) {
    const DiscGrid grid;
    EXPECT_NEAR(disc_integrate([](cplx) { return 1.0; }, 0.0, grid), 0.5, 1e-14);
    EXPECT_NEAR(disc_integrate([](cplx z) { return std::norm(z); }, 0.0, grid), 0.25, 1e-14);
    EXPECT_NEAR(disc_integrate([](cplx) { return 1.0; }, 1.0, grid), 0.25, 1e-14);
    EXPECT_THROW(disc_integrate([](cplx) { return NAN; }, 0.0, grid), Error);
}

TEST(DiscIntegrate, MomentIdentity) {
    const DiscGrid grid;
    for (unsigned k = 1; k <= 8; ++k) {
        for (double p : {1.0, 2.0, 4.0}) {
            const double q = k * p;
            const double v = disc_integrate([q](cplx z) { return std::pow(std::abs(z), q); }, 0.0, grid);
            EXPECT_NEAR(v, oracle::disc_moment(q), 1e-10) << k << " " << p;
        }
    }
}

TEST(DiscIntegrate, AnnulusMatchesFullGrid) {
    const DiscGrid an = DiscGrid::annulus(0.8, 32, 128);
    const double v = disc_integrate([](cplx z) { return std::norm(z); }, 0.0, an);
    EXPECT_NEAR(v, 0.25 * (1.0 - std::pow(0.8, 4)), 1e-14);
}

TEST(BergmanNorm, Examples) {
    const DiscGrid grid;
    EXPECT_NEAR(bergman_norm_disc([](cplx) { return cplx(1.0); }, 1.0, 0.0, grid), 0.5, 1e-14);
    EXPECT_NEAR(bergman_norm_disc([](cplx z) { return z; }, 2.0, 0.0, grid), 0.5, 1e-14);
    EXPECT_NEAR(bergman_norm_disc([](cplx z) { return z * z; }, 2.0, 0.0, grid), std::sqrt(1.0 / 6.0), 1e-14);
    EXPECT_THROW(bergman_norm_disc([](cplx z) { return z; }, 0.5, 0.0, grid), Error);
}

TEST(Sphere, ProductRuleMoments) {
    const SphereSampler s = SphereSampler::product(2);
    EXPECT_NEAR(sphere_integrate([](const CPoint&) { return 1.0; }, s), 1.0, 1e-12);
    EXPECT_NEAR(sphere_integrate([](const CPoint& z) { return std::norm(z[0]); }, s), 0.5, 1e-12);
    EXPECT_NEAR(sphere_integrate([](const CPoint& z) { return z[0].real(); }, s), 0.0, 1e-12);
    for (unsigned a = 0; a <= 4; ++a) {
        for (unsigned b = 0; b <= 4; ++b) {
            const double v = sphere_integrate(
                [&](const CPoint& z) { return std::pow(std::norm(z[0]), a) * std::pow(std::norm(z[1]), b); }, s);
            EXPECT_NEAR(v, oracle::sphere_moment({a, b}), 1e-12) << a << " " << b;
        }
    }
}

TEST(Sphere, MonteCarloAgreesWithProductRule) {
    const SphereSampler pr = SphereSampler::product(2);
    const SphereSampler mc = SphereSampler::monte_carlo(2, 40000, 17);
    EXPECT_EQ(mc.sample_count(), 40000u);
    for (int m = 1; m <= 4; ++m) {
        auto g = [m](const CPoint& z) { return std::pow(std::norm(z[0]), m); };
        EXPECT_NEAR(sphere_integrate(g, mc), sphere_integrate(g, pr), 5.0 / std::sqrt(40000.0)) << m;
    }
}

TEST(Sphere, MonteCarloDeterministic) {
    const SphereSampler a = SphereSampler::monte_carlo(3, 1000, 5);
    const SphereSampler b = SphereSampler::monte_carlo(3, 1000, 5);
    auto g = [](const CPoint& z) { return std::norm(z[2]); };
    EXPECT_EQ(sphere_integrate(g, a), sphere_integrate(g, b));
    EXPECT_NEAR(sphere_integrate([](const CPoint&) { return 1.0; }, a), 1.0, 3.0 / std::sqrt(1000.0));
    EXPECT_NEAR(sphere_integrate(g, SphereSampler::monte_carlo(3, 100000, 5)), 1.0 / 3.0, 0.01);
}

TEST(Hardy, Examples) {
    const SphereSampler s = SphereSampler::product(2);
    for (double p : {1.0, 2.0, 3.5}) {
        EXPECT_NEAR(hardy_norm(Polynomial::constant(2, 1.0), p, s), 1.0, 1e-12);
    }
    EXPECT_NEAR(hardy_norm(Polynomial::monomial({1, 0}), 2.0, s), std::sqrt(0.5), 1e-12);
    EXPECT_NEAR(hardy_norm(Polynomial::monomial({2, 0}), 2.0, s), std::sqrt(1.0 / 3.0), 1e-12);
    EXPECT_NEAR(hardy_norm(Polynomial::monomial({1, 1}), 4.0, s), oracle::monomial_hardy_norm({1, 1}, 4.0), 1e-10);
    EXPECT_THROW(hardy_norm(Polynomial::monomial({1, 0}), 0.9, s), Error);
}

TEST(Hardy, MonotoneInRadius) {
    const SphereSampler s = SphereSampler::product(2);
    const Polynomial f(2, {{1.0, {1, 0}}, {cplx(0.0, 2.0), {0, 3}}, {0.5, {0, 0}}});
    const HardyProfile prof = hardy_profile(f, 3.0, s);
    EXPECT_TRUE(prof.monotone);
    ASSERT_EQ(prof.means.size(), 4u);
    EXPECT_NEAR(std::pow(prof.norm, 3.0), prof.means.back(), 1e-12);
}
