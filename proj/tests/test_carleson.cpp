#include <gtest/gtest.h>

#include <cmath>
#include <numbers>
#include <random>

#include <disc/carleson.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace disc;

TEST(Pushforward, RequiresDimensionTwo) {
    EXPECT_THROW(PushforwardMeasure(flat_disc(1)), Error);
    const PushforwardMeasure mu(flat_disc(3));
    EXPECT_NEAR(mu.total_mass(), 0.25, 1e-15);
    EXPECT_EQ(mu.weight_exponent(), 1.0);
}

TEST(BoxMass, FlatDiscLens) {
    const PushforwardMeasure mu(flat_disc(2));
    const CPoint one{1.0, 0.0};
    EXPECT_NEAR(pushforward_box_mass(mu, one, 0.2), oracle::lens_mass(0.2), 2e-4);
    EXPECT_NEAR(oracle::lens_mass(0.2), 0.009575, 1e-6);
    EXPECT_NEAR(pushforward_box_mass(mu, one, 0.05) / (0.05 * 0.05), oracle::lens_mass(0.05) / 0.0025, 0.01);
    EXPECT_NEAR(pushforward_box_mass(mu, CPoint{0.0, 1.0}, 0.5), 0.0, 1e-15);
    EXPECT_NEAR(pushforward_box_mass(mu, one, 3.0), 0.5, 1e-12);
    EXPECT_THROW(pushforward_box_mass(mu, one, 0.0), Error);
    EXPECT_THROW(pushforward_box_mass(mu, CPoint{0.5, 0.0}, 0.1), Error);
}

TEST(CarlesonScan, FlatDiscRatio) {
    const PushforwardMeasure mu(flat_disc(2));
    const CarlesonReport r = carleson_scan(mu, scan_directions(mu.disc(), 8, 1), {0.05, 0.1, 0.2, 0.4});
    EXPECT_NEAR(r.sup_ratio_2, 0.25, 0.025);
    EXPECT_EQ(r.entries.size(), 32u);
    for (const auto& e : r.entries) {
        EXPECT_GE(e.mass, 0.0);
        EXPECT_LE(e.mass, r.total_mass + 1e-12);
    }
}

TEST(CarlesonScan, RandomDiscsBelowBound) {
    std::mt19937_64 rng(31);
    for (int it = 0; it < 4; ++it) {
        const PushforwardMeasure mu(support::random_disc(rng, 2, 2 + it, true), 48, 2048);
        const CarlesonReport r = carleson_scan(mu, scan_directions(mu.disc(), 8, it), {0.1, 0.3});
        EXPECT_LE(r.sup_ratio_2, 1.1 * kCarlesonBound);
    }
}

TEST(Subordination, WorkedRatios) {
    const DiscGrid grid;
    const SphereSampler s = SphereSampler::product(2);
    const DiscMap flat = flat_disc(2);
    EXPECT_NEAR(subordination_ratio(Polynomial::constant(2, 1.0), flat, 3.0, grid, s).ratio, 0.5, 1e-9);
    EXPECT_NEAR(subordination_ratio(Polynomial::monomial({1, 0}), flat, 2.0, grid, s).ratio, 0.5, 1e-9);
    EXPECT_NEAR(subordination_ratio(Polynomial::monomial({2, 0}), flat, 2.0, grid, s).ratio, 0.5, 1e-9);
    EXPECT_THROW(subordination_ratio(Polynomial::constant(2, 0.0), flat, 2.0, grid, s), Error);
    const DiscMap shifted = validate_disc_map({{0.1, 0.5}, {0.0, 0.0}}, 2, 1);
    EXPECT_THROW(subordination_ratio(Polynomial::monomial({1, 0}), shifted, 2.0, grid, s), Error);
}

TEST(HarmonicIndicator, HalfPlane) {
    for (double d : {0.05, 0.1, 0.7}) {
        EXPECT_NEAR(harmonic_indicator_halfplane(0.0, d, d), std::numbers::pi / 2.0, 1e-12);
        EXPECT_NEAR(harmonic_indicator_halfplane(d, d, d), std::atan(2.0), 1e-12);
    }
    EXPECT_LT(harmonic_indicator_halfplane(1e6, 1.0, 1e-3), 1e-8);
    EXPECT_THROW(harmonic_indicator_halfplane(0.0, 0.0, 0.1), Error);
}

TEST(HarmonicIndicator, DiscClosedFormAgainstQuadrature) {
    std::mt19937_64 rng(32);
    for (double d : {0.05, 0.1, 0.5, 1.5}) {
        EXPECT_NEAR(harmonic_indicator_disc(0.0, d), 4.0 * std::asin(d / 2.0), 1e-12);
        for (int i = 0; i < 20; ++i) {
            const cplx z = support::uniform_disc(rng, 0.95);
            EXPECT_NEAR(harmonic_indicator_disc(z, d), oracle::poisson_arc(z, d), 1e-8);
        }
    }
    EXPECT_NEAR(harmonic_indicator_disc(cplx(0.3, 0.2), 2.0), 2.0 * std::numbers::pi, 1e-12);
    EXPECT_GE(harmonic_indicator_disc(0.9, 0.1), std::numbers::pi / 4.0);
    EXPECT_THROW(harmonic_indicator_disc(1.0, 0.1), Error);
}

TEST(HarmonicIndicator, QuarterPiOnBoxes) {
    for (double d : {0.05, 0.1, 0.2}) {
        EXPECT_GE(harmonic_indicator_min(d, 200, 4), std::numbers::pi / 4.0 - 1e-6);
    }
}

TEST(BoundarySlice, Examples) {
    const DiscMap zero = validate_disc_map({{0.0, 0.0}}, 1, 1);
    EXPECT_EQ(boundary_slice_measure(zero, 0.9, 0.1).arc_length, 0.0);
    const DiscMap id = flat_disc(1);
    EXPECT_EQ(boundary_slice_measure(id, 0.0, 0.1).arc_length, 0.0);
    const SliceMeasure s = boundary_slice_measure(id, 0.95, 0.1);
    EXPECT_TRUE(s.within_bound);
    EXPECT_NEAR(s.arc_length, 2.0 * std::numbers::pi * s.sigma, 1e-15);
    EXPECT_THROW(boundary_slice_measure(id, 1.0, 0.1), Error);
}

TEST(BoundarySlice, RandomScalarDiscs) {
    std::mt19937_64 rng(33);
    for (int it = 0; it < 10; ++it) {
        const DiscMap phi = support::random_disc(rng, 1, 1 + it % 4, true);
        for (double rho : {0.5, 0.9, 0.99}) {
            EXPECT_TRUE(boundary_slice_measure(phi, rho, 0.1).within_bound);
        }
    }
}

TEST(Preimage, BoxPreimageStaysNearBoundary) {
    std::mt19937_64 rng(34);
    const DiscGrid grid(32, 256);
    for (int it = 0; it < 10; ++it) {
        const DiscMap phi = support::random_disc(rng, 2, 1 + it % 4, true);
        for (double d : {0.05, 0.2}) {
            EXPECT_GE(min_preimage_radius(phi, d, grid).box, 1.0 - d - 1e-12);
        }
    }
}

TEST(SchwarzDecay, Examples) {
    const DiscGrid grid;
    const SphereSampler s = SphereSampler::product(2);
    const SchwarzDecayReport r = schwarz_decay_check(Polynomial::monomial({1, 0}), flat_disc(2), 2, 2.0, grid, s, 1);
    EXPECT_TRUE(r.passed);
    EXPECT_NEAR(r.norm_p, 1.0 / 6.0, 1e-12);
    const DiscMap sq = validate_disc_map({{0.0, 0.0, 0.5}, {0.0, 0.0, 0.0}}, 2, 2);
    for (unsigned k = 1; k <= 6; ++k) {
        const SchwarzDecayReport q = schwarz_decay_check(Polynomial::monomial({1, 0}), sq, k, 2.0, grid, s, 1);
        EXPECT_TRUE(q.passed);
        EXPECT_LT(q.norm_p, q.bound);
    }
    EXPECT_THROW(schwarz_decay_check(Polynomial::constant(2, 0.5), flat_disc(2), 1, 2.0, grid, s, 1), Error);
    EXPECT_THROW(schwarz_decay_check(Polynomial::monomial({1, 0}, 2.0), flat_disc(2), 1, 2.0, grid, s, 1), Error);
}

TEST(InnerMoments, Examples) {
    for (unsigned m : {1u, 2u, 3u}) {
        const BlaschkeProduct b(std::vector<cplx>(m, 0.0));
        const auto mom = inner_pushforward_moments(b, 4);
        EXPECT_NEAR(std::abs(mom[0] - 1.0), 0.0, 1e-12);
        for (unsigned j = 1; j <= 4; ++j) {
            EXPECT_LT(std::abs(mom[j]), 1e-12);
        }
    }
    const auto mom = inner_pushforward_moments(BlaschkeProduct({0.0, 0.4}), 3);
    for (unsigned j = 1; j <= 3; ++j) {
        EXPECT_LT(std::abs(mom[j]), 1e-3);
    }
    EXPECT_THROW(inner_pushforward_moments(BlaschkeProduct({0.3}), 2), Error);
    EXPECT_THROW(inner_pushforward_moment([](cplx z) { return 0.5 * z; }, 1), Error);
}
