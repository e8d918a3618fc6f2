#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include <disc/pick.hpp>

#include "oracles.hpp"
#include "support.hpp"

using namespace disc;

namespace {

PickProblem infeasible_example() { return PickProblem({0.0, 0.1}, {CPoint{0.0, 0.0}, CPoint{0.9, 0.0}}); }

std::vector<cplx> coords(const CPoint& p) { return {p.coords().begin(), p.coords().end()}; }

} // namespace

TEST(PickProblem, InputErrors) {
    EXPECT_THROW(PickProblem({}, {}), Error);
    EXPECT_THROW(PickProblem({0.0}, {CPoint{0.0}, CPoint{0.1}}), Error);
    EXPECT_THROW(PickProblem({0.0, 0.1}, {CPoint{0.0}, CPoint{0.1, 0.0}}), Error);
    EXPECT_THROW(PickProblem({0.0}, {CPoint{1.1}}), Error);
    EXPECT_THROW(PickProblem({1.0}, {CPoint{0.1}}), Error);
    try {
        PickProblem({0.2, 0.2}, {CPoint{0.0}, CPoint{0.0}});
        FAIL();
    } catch (const Error& e) {
        EXPECT_EQ(e.kind(), ErrorKind::degenerate);
    }
    // polydisc allows |v| > 1 with every coordinate in the disc
    EXPECT_NO_THROW(PickProblem({0.0}, {CPoint{0.9, 0.9}}, TargetDomain::polydisc));
}

TEST(BuildPickMatrix, Examples) {
    EXPECT_NEAR(std::abs(build_pick_matrix(PickProblem({0.0}, {CPoint{0.0}})).matrix()(0, 0) - 1.0), 0.0, 1e-15);
    const CMatrix m = build_pick_matrix(infeasible_example()).matrix();
    EXPECT_NEAR(std::abs(m(0, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m(0, 1) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m(1, 0) - 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(m(1, 1) - 0.19 / 0.99), 0.0, 1e-15);
    const CMatrix u = build_pick_matrix(PickProblem({0.0, 0.5}, {CPoint{0.0, 0.0}, CPoint{0.5, 0.0}})).matrix();
    EXPECT_NEAR((u - CMatrix::Ones(2, 2)).cwiseAbs().maxCoeff(), 0.0, 1e-15);
}

TEST(BuildPickMatrix, MatchesDirectEntries) {
    std::mt19937_64 rng(21);
    const auto nodes = support::separated_nodes(rng, 6, 0.9, 0.05);
    std::vector<CPoint> v;
    for (int k = 0; k < 6; ++k) {
        v.push_back(support::uniform_ball(rng, 3));
    }
    const CMatrix m = build_pick_matrix(PickProblem(nodes, v)).matrix();
    for (int k = 0; k < 6; ++k) {
        for (int l = 0; l < 6; ++l) {
            EXPECT_NEAR(std::abs(m(k, l) - oracle::pick_entry(nodes[k], nodes[l], coords(v[k]), coords(v[l]))), 0.0, 1e-14);
        }
    }
}

TEST(PolydiscPick, Examples) {
    const PickProblem c({0.0, 0.3, cplx(0.0, 0.5)}, {CPoint{0.3, 0.5}, CPoint{0.3, 0.5}, CPoint{0.3, 0.5}},
                        TargetDomain::polydisc);
    EXPECT_TRUE(pick_check(c).feasible);
    const auto ms = build_polydisc_pick_matrices(c);
    const CMatrix g = kernel_gram(c.nodes()).matrix();
    EXPECT_LT((ms[1].matrix() - 0.75 * g).cwiseAbs().maxCoeff(), 1e-14);

    const PickProblem bad({0.0, 0.1}, {CPoint{0.0, 0.0}, CPoint{0.9, 0.9}}, TargetDomain::polydisc);
    const PickCheck r = pick_check(bad);
    EXPECT_FALSE(r.feasible);
    EXPECT_LT((build_polydisc_pick_matrices(bad)[0].matrix() - build_pick_matrix(infeasible_example()).matrix())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
    const PickProblem one({0.0, 0.4}, {CPoint{0.1}, CPoint{0.2}}, TargetDomain::polydisc);
    EXPECT_LT((build_polydisc_pick_matrices(one)[0].matrix() -
               build_pick_matrix(PickProblem({0.0, 0.4}, {CPoint{0.1}, CPoint{0.2}})).matrix())
                  .cwiseAbs()
                  .maxCoeff(),
              1e-15);
}

TEST(PsdCheck, Examples) {
    const FeasibilityVerdict id = psd_check(HermitianMatrix(CMatrix::Identity(3, 3)));
    EXPECT_TRUE(id.feasible);
    EXPECT_NEAR(id.min_eigenvalue, 1.0, 1e-15);
    const FeasibilityVerdict bad = psd_check(build_pick_matrix(infeasible_example()));
    const auto [lo, hi] = oracle::eig2(1.0, 1.0, 0.19 / 0.99);
    EXPECT_FALSE(bad.feasible);
    EXPECT_NEAR(bad.min_eigenvalue, lo, 1e-12);
    EXPECT_NEAR(bad.min_eigenvalue, -0.4826, 1e-3);
    EXPECT_NEAR(bad.eigenvalues.maxCoeff(), hi, 1e-12);
    const FeasibilityVerdict edge = psd_check(HermitianMatrix(CMatrix::Ones(2, 2)));
    EXPECT_TRUE(edge.feasible);
    EXPECT_NEAR(edge.min_eigenvalue, 0.0, 1e-15);
    EXPECT_THROW(psd_check(HermitianMatrix(CMatrix::Identity(2, 2)), 0.0), Error);
}

TEST(HermitianMatrix, RejectsNonHermitian) {
    CMatrix m = CMatrix::Identity(2, 2);
    m(0, 1) = 1.0;
    EXPECT_THROW(HermitianMatrix{m}, Error);
}

TEST(KernelGram, Examples) {
    EXPECT_NEAR(std::abs(kernel_gram({0.0}).matrix()(0, 0) - 1.0), 0.0, 1e-15);
    const CMatrix g = kernel_gram({0.0, 0.5}).matrix();
    EXPECT_NEAR(std::abs(g(1, 1) - 4.0 / 3.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(g(0, 1) - 1.0), 0.0, 1e-15);
    std::mt19937_64 rng(5);
    const auto nodes = support::separated_nodes(rng, 7, 0.9, 0.1);
    EXPECT_GT(kernel_gram(nodes).eigenvalues().minCoeff(), 0.0);
    EXPECT_THROW(kernel_gram({0.1, 0.1}), Error);
}

TEST(RepresentationNorm, Examples) {
    EXPECT_NEAR(representation_norm({0.3}, {CPoint{cplx(0.3, 0.4), 0.0}}), 0.5, 1e-12);
    const CPoint c{cplx(0.6, 0.0), 0.0};
    EXPECT_NEAR(representation_norm({0.0, 0.5, cplx(0.0, -0.4)}, {c, c, c}), 0.6, 1e-12);
    EXPECT_GT(representation_norm({0.0, 0.1}, {CPoint{0.0, 0.0}, CPoint{0.9, 0.0}}), 1.0);
}

TEST(RepresentationNorm, FormEqualsGramMinusPick) {
    std::mt19937_64 rng(6);
    for (int it = 0; it < 50; ++it) {
        const std::size_t n = 1 + it % 3;
        const auto nodes = support::separated_nodes(rng, 2 + it % 7, 0.9, 0.05);
        std::vector<CPoint> v;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            v.push_back(support::uniform_ball(rng, n));
        }
        const HermitianMatrix g = kernel_gram(nodes);
        const CMatrix lhs = g.matrix() - representation_form(g, v);
        const CMatrix p = build_pick_matrix(PickProblem(nodes, v)).matrix();
        EXPECT_LT((lhs - p).cwiseAbs().maxCoeff(), 1e-10);
    }
}

TEST(PickInvariants, MoebiusCovariance) {
    std::mt19937_64 rng(7);
    for (int it = 0; it < 50; ++it) {
        const auto nodes = support::separated_nodes(rng, 2 + it % 5, 0.8, 0.1);
        std::vector<CPoint> v;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            v.push_back(support::uniform_ball(rng, 2, it % 2 ? 1.0 : 0.3));
        }
        const cplx a = support::uniform_disc(rng, 0.6);
        std::vector<cplx> moved;
        for (const auto& x : nodes) {
            moved.push_back(disc_automorphism(a, x));
        }
        const PickCheck before = pick_check(PickProblem(nodes, v));
        const PickCheck after = pick_check(PickProblem(moved, v));
        if (std::abs(before.min_eigenvalue) > 1e-6) {
            EXPECT_EQ(before.feasible, after.feasible) << it;
        }
    }
}

TEST(PickInvariants, ShrinkingKeepsFeasibility) {
    std::mt19937_64 rng(8);
    for (int it = 0; it < 30; ++it) {
        const auto nodes = support::separated_nodes(rng, 2 + it % 6, 0.9, 0.05);
        const DiscMap phi = support::random_disc(rng, 2, 1 + it % 4, false);
        const auto v = support::values_at(phi, nodes);
        ASSERT_TRUE(pick_check(PickProblem(nodes, v)).feasible);
        for (double t : {0.9, 0.5, 0.1}) {
            std::vector<CPoint> w;
            for (const auto& x : v) {
                w.push_back(cplx(t) * x);
            }
            EXPECT_TRUE(pick_check(PickProblem(nodes, w)).feasible);
        }
    }
}

TEST(ScalarSolve, Examples) {
    const ScalarInterpolant zero = scalar_np_solve(PickProblem({0.0}, {CPoint{0.0}}));
    EXPECT_NEAR(std::abs(zero(cplx(0.3, 0.4))), 0.0, 1e-15);

    const ScalarInterpolant id = scalar_np_solve(PickProblem({0.0, 0.5}, {CPoint{0.0}, CPoint{0.5}}));
    EXPECT_EQ(id.degree(), 1u);
    for (int i = 0; i < 16; ++i) {
        const cplx z = std::polar(0.9, 0.4 * i);
        EXPECT_NEAR(std::abs(id(z) - z), 0.0, 1e-12);
    }

    const ScalarInterpolant half = scalar_np_solve(PickProblem({0.0}, {CPoint{0.5}}));
    EXPECT_NEAR(std::abs(half(cplx(-0.7, 0.1)) - 0.5), 0.0, 1e-15);

    try {
        scalar_np_solve(PickProblem({0.0, 0.1}, {CPoint{0.0}, CPoint{0.9}}));
        FAIL();
    } catch (const InfeasibleError& e) {
        EXPECT_LT(e.min_eigenvalue(), 0.0);
    }
    EXPECT_THROW(scalar_np_solve(infeasible_example()), Error);
}

TEST(ScalarSolve, RandomFeasibleData) {
    std::mt19937_64 rng(9);
    for (int it = 0; it < 40; ++it) {
        const auto nodes = support::separated_nodes(rng, 1 + it % 6, 0.85, 0.2);
        const auto v = support::values_at(support::random_disc(rng, 1, 1 + it % 5, false), nodes);
        const PickProblem p(nodes, v);
        const InterpolationReport r = verify_interpolant(scalar_np_solve(p), p);
        EXPECT_LE(r.max_residual, 1e-8);
        EXPECT_LE(r.boundary_sup, 1.0 + 1e-8);
    }
}

TEST(VerifyInterpolant, Examples) {
    const PickProblem p({0.0, 0.5}, {CPoint{0.0, 0.0}, CPoint{0.5, 0.0}});
    const InterpolationReport r = verify_interpolant([](cplx z) { return CPoint{z, 0.0}; }, p);
    EXPECT_NEAR(r.max_residual, 0.0, 1e-15);
    EXPECT_NEAR(r.boundary_sup, 1.0, 1e-15);
    const InterpolationReport z = verify_interpolant([](cplx) { return CPoint{0.0, 0.0}; },
                                                     PickProblem({0.0}, {CPoint{0.5, 0.0}}));
    EXPECT_NEAR(z.max_residual, 0.5, 1e-15);
}
