#pragma once

///
/// \file sequences.hpp
///
/// Finite point sequences in B_n: weighted l^p norms, Gleason separation,
/// greedy delta-nets, counts in admissible approach regions, and discs
/// (sigma, phi) passing through a sequence with the checks that any such disc
/// must pass.
///

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <disc/error.hpp>
#include <disc/geometry.hpp>

namespace disc {

/// Finite list of points of the open ball B_n.
class PointSequence {
public:
    PointSequence(std::size_t dimension, std::vector<CPoint> points)
        : dim_(dimension), points_(std::move(points)) {
        if (dim_ == 0) {
            fail(ErrorKind::shape, "PointSequence: dimension must be at least 1");
        }
        for (const auto& a : points_) {
            if (a.dim() != dim_) {
                fail(ErrorKind::shape, "PointSequence: point of wrong dimension");
            }
            require_in_ball(a, "PointSequence");
        }
    }

    std::size_t dim() const noexcept { return dim_; }
    std::size_t size() const noexcept { return points_.size(); }
    bool empty() const noexcept { return points_.empty(); }
    const CPoint& operator[](std::size_t k) const { return points_[k]; }
    const std::vector<CPoint>& points() const noexcept { return points_; }

    /// Points with |a| <= r.
    PointSequence truncated(double r) const {
        std::vector<CPoint> kept;
        for (const auto& a : points_) {
            if (a.norm() <= r) {
                kept.push_back(a);
            }
        }
        return PointSequence(dim_, std::move(kept));
    }

private:
    std::size_t dim_;
    std::vector<CPoint> points_;
};

/// (sum_k |lambda_k|^p (1 - |a_k|^2)^e)^{1/p}. e = n gives l^p_H, e = n + l + 1
/// gives l^p_{A_l}.
inline double weighted_seq_norm(const std::vector<cplx>& lambda, const PointSequence& points,
                                double p, double exponent) {
    if (lambda.size() != points.size()) {
        fail(ErrorKind::shape, "weighted_seq_norm: lambda and points differ in length");
    }
    if (!(p >= 1.0) || !std::isfinite(p)) {
        fail(ErrorKind::parameter, "weighted_seq_norm: p must lie in [1, inf)");
    }
    if (!(exponent >= 0.0)) {
        fail(ErrorKind::parameter, "weighted_seq_norm: exponent must be nonnegative");
    }
    double s = 0.0;
    for (std::size_t k = 0; k < lambda.size(); ++k) {
        s += std::pow(std::abs(lambda[k]), p) * std::pow(1.0 - points[k].norm2(), exponent);
    }
    return std::pow(s, 1.0 / p);
}

/// Disc nodes viewed as a sequence in B_1.
inline PointSequence as_sequence(const std::vector<cplx>& nodes) {
    std::vector<CPoint> pts;
    pts.reserve(nodes.size());
    for (const auto& a : nodes) {
        pts.push_back(CPoint{a});
    }
    return PointSequence(1, std::move(pts));
}

/// Smallest pairwise Gleason distance.
inline double min_separation(const PointSequence& s) {
    if (s.size() < 2) {
        fail(ErrorKind::parameter, "min_separation: need at least two points");
    }
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < s.size(); ++k) {
        for (std::size_t l = k + 1; l < s.size(); ++l) {
            best = std::min(best, gleason_distance_ball(s[k], s[l]));
        }
    }
    return best;
}

namespace detail {

/// Allocation-free Gleason distance for B_2, same formula as
/// gleason_distance_ball.
inline double gleason2(const std::array<cplx, 2>& a, const std::array<cplx, 2>& b) {
    const double num = std::norm(a[0] - b[0]) + std::norm(a[1] - b[1]) -
                       std::norm(a[0] * b[1] - a[1] * b[0]);
    const double den = std::norm(1.0 - a[0] * std::conj(b[0]) - a[1] * std::conj(b[1]));
    return std::sqrt(std::max(0.0, num / den));
}

inline double radical_inverse(std::uint64_t i, unsigned base) {
    double inv = 1.0 / base;
    double f = inv;
    double r = 0.0;
    while (i > 0) {
        r += f * static_cast<double>(i % base);
        i /= base;
        f *= inv;
    }
    return r;
}

inline std::array<cplx, 2> as_array(const CPoint& p) { return {p[0], p[1]}; }

} // namespace detail

/// Seeded low-discrepancy candidates in {|z| <= r} of B_2, distributed by the
/// Moebius-invariant measure dV / (1 - |z|^2)^3 restricted to that ball, so
/// their density follows the hyperbolic volume a full net must fill.
///
/// Halton sequence in bases 2, 3, 5 with a seeded Cranley-Patterson shift:
/// u1 -> radius through the invariant radial distribution
/// F(s) = s^2 / (2 (1 - s)^2), s = |z|^2; u2 -> |z_1|^2 / |z|^2; u3, u4 -> phases.
inline std::vector<CPoint> net_candidates(double radius, std::size_t count, std::uint64_t seed) {
    if (!(radius > 0.0 && radius < 1.0)) {
        fail(ErrorKind::parameter, "net_candidates: radius must lie in (0, 1)");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    std::array<double, 4> shift{};
    for (auto& s : shift) {
        s = unif(rng);
    }
    constexpr std::array<unsigned, 4> bases{2, 3, 5, 7};
    const double s_max = radius * radius;
    const double f_max = s_max * s_max / (2.0 * (1.0 - s_max) * (1.0 - s_max));
    std::vector<CPoint> out;
    out.reserve(count);
    for (std::size_t i = 1; i <= count; ++i) {
        std::array<double, 4> u{};
        for (std::size_t d = 0; d < 4; ++d) {
            u[d] = std::fmod(detail::radical_inverse(i, bases[d]) + shift[d], 1.0);
        }
        const double q = std::sqrt(2.0 * u[0] * f_max);
        const double s = q / (1.0 + q);
        const double rho = std::min(std::sqrt(s), radius);
        const double t = u[1];
        out.push_back(CPoint{std::polar(rho * std::sqrt(t), 2.0 * std::numbers::pi * u[2]),
                             std::polar(rho * std::sqrt(1.0 - t), 2.0 * std::numbers::pi * u[3])});
    }
    return out;
}

struct GreedyNet {
    PointSequence net;
    std::vector<CPoint> candidates;
    std::vector<std::size_t> chosen;   // candidate indices of the net points
};

/// Greedy maximal delta-separated subset of the candidates (in order).
inline GreedyNet greedy_net(double delta, double radius, std::size_t candidate_count,
                            std::uint64_t seed) {
    if (candidate_count == 0) {
        fail(ErrorKind::parameter, "greedy_net: candidate_count must be positive");
    }
    if (!(delta > 0.0 && delta < 1.0)) {
        fail(ErrorKind::parameter, "greedy_net: delta must lie in (0, 1)");
    }
    auto cands = net_candidates(radius, candidate_count, seed);
    std::vector<std::array<cplx, 2>> kept;
    std::vector<std::size_t> chosen;
    std::vector<CPoint> pts;
    for (std::size_t i = 0; i < cands.size(); ++i) {
        const auto c = detail::as_array(cands[i]);
        bool ok = true;
        for (const auto& k : kept) {
            if (detail::gleason2(c, k) < delta) {
                ok = false;
                break;
            }
        }
        if (ok) {
            kept.push_back(c);
            chosen.push_back(i);
            pts.push_back(cands[i]);
        }
    }
    return GreedyNet{PointSequence(2, std::move(pts)), std::move(cands), std::move(chosen)};
}

struct NetVerification {
    double min_separation = 0.0;
    bool separated = false;
    bool maximal = false;
    std::size_t uncovered = 0;   // candidates at distance >= delta from every net point
};

/// Brute-force re-check of separation and maximality against the candidates.
inline NetVerification verify_net(const PointSequence& net, const std::vector<CPoint>& candidates,
                                  double delta) {
    NetVerification v;
    std::vector<std::array<cplx, 2>> pts;
    for (const auto& a : net.points()) {
        pts.push_back(detail::as_array(a));
    }
    v.min_separation = std::numeric_limits<double>::infinity();
    for (std::size_t k = 0; k < pts.size(); ++k) {
        for (std::size_t l = k + 1; l < pts.size(); ++l) {
            v.min_separation = std::min(v.min_separation, detail::gleason2(pts[k], pts[l]));
        }
    }
    v.separated = v.min_separation >= delta - 1e-12;
    for (const auto& c : candidates) {
        const auto ca = detail::as_array(c);
        bool covered = false;
        for (const auto& p : pts) {
            if (detail::gleason2(ca, p) < delta) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            ++v.uncovered;
        }
    }
    v.maximal = v.uncovered == 0;
    return v;
}

/// Number of points of S in Gamma(zeta, alpha), per zeta.
inline std::vector<std::size_t> admissible_counts(const PointSequence& s,
                                                  const std::vector<CPoint>& zetas, double alpha) {
    if (!(alpha > 0.5)) {
        fail(ErrorKind::parameter, "admissible_counts: aperture must exceed 1/2");
    }
    std::vector<std::size_t> counts;
    counts.reserve(zetas.size());
    for (const auto& zeta : zetas) {
        const Region gamma = Region::admissible(zeta, alpha);
        std::size_t c = 0;
        for (const auto& a : s.points()) {
            if (gamma.contains(a)) {
                ++c;
            }
        }
        counts.push_back(c);
    }
    return counts;
}

struct TraceReport {
    std::vector<double> residuals;   // |phi(alpha_k) - a_k|
    double max_residual = 0.0;
    bool passed = false;             // all <= 1e-8
};

inline constexpr double kTraceTolerance = 1e-8;

inline TraceReport disc_trace_residuals(const DiscMap& phi, const std::vector<cplx>& sigma,
                                        const PointSequence& s) {
    if (sigma.size() != s.size()) {
        fail(ErrorKind::shape, "disc_trace_residuals: sigma and S differ in length");
    }
    if (phi.dim() != s.dim()) {
        fail(ErrorKind::shape, "disc_trace_residuals: disc and sequence differ in dimension");
    }
    TraceReport r;
    for (std::size_t k = 0; k < sigma.size(); ++k) {
        require_in_disc(sigma[k], "disc_trace_residuals");
        const double res = (phi(sigma[k]) - s[k]).norm();
        r.residuals.push_back(res);
        r.max_residual = std::max(r.max_residual, res);
    }
    r.passed = r.max_residual <= kTraceTolerance;
    return r;
}

/// A disc (sigma, phi) with phi(alpha_k) = a_k to kTraceTolerance.
class DiscThroughS {
public:
    DiscThroughS(std::vector<cplx> sigma, DiscMap phi, PointSequence s)
        : sigma_(std::move(sigma)), phi_(std::move(phi)), s_(std::move(s)) {
        const TraceReport r = disc_trace_residuals(phi_, sigma_, s_);
        if (!r.passed) {
            fail(ErrorKind::precondition, "DiscThroughS: trace residual " +
                                              std::to_string(r.max_residual) + " exceeds 1e-8");
        }
    }

    const std::vector<cplx>& sigma() const noexcept { return sigma_; }
    const DiscMap& disc() const noexcept { return phi_; }
    const PointSequence& points() const noexcept { return s_; }

    bool normalized() const noexcept {
        return !sigma_.empty() && std::abs(sigma_[0]) <= 1e-12 && s_[0].norm() <= 1e-12;
    }

private:
    std::vector<cplx> sigma_;
    DiscMap phi_;
    PointSequence s_;
};

/// Moves a_0 and alpha_0 to the origin with the involutive automorphisms of
/// the ball and of the disc. Gleason distances are unchanged.
inline std::pair<PointSequence, std::vector<cplx>> normalize_to_origin(const PointSequence& s,
                                                                       const std::vector<cplx>& sigma) {
    if (s.empty() || sigma.empty()) {
        fail(ErrorKind::shape, "normalize_to_origin: empty input");
    }
    const BallAutomorphism psi(s[0]);
    std::vector<CPoint> pts;
    pts.reserve(s.size());
    for (const auto& a : s.points()) {
        pts.push_back(psi(a));
    }
    std::vector<cplx> nodes;
    nodes.reserve(sigma.size());
    for (const auto& a : sigma) {
        require_in_disc(a, "normalize_to_origin");
        nodes.push_back(disc_automorphism(sigma[0], a));
    }
    return {PointSequence(s.dim(), std::move(pts)), std::move(nodes)};
}

struct NecessaryConditionReport {
    std::vector<double> point_moduli;   // |a_k|
    std::vector<double> node_moduli;    // |alpha_k|
    bool moduli_ok = false;             // |a_k| <= |alpha_k| + 1e-10
    double norm_sigma = 0.0;            // ||lambda||_{A,p} on sigma (exponent 2)
    double norm_points = 0.0;           // ||lambda||_{H,p} on S (exponent 2)
    double gap = 0.0;                   // norm_points - norm_sigma
    bool norms_ok = false;
    double separation_sigma = 0.0;      // set for >= 2 points
    double separation_points = 0.0;
    bool separation_ok = true;          // sep(sigma) >= sep(S) - 1e-10
    bool passed = false;
};

/// Schwarz / Gleason monotonicity along a disc through S, normalized so that
/// a_0 = 0 and alpha_0 = 0, and the resulting comparison of the weighted l^p
/// norms (B_2 exponents). Only the normalized data enter; the disc itself
/// need not be polynomial after normalization.
inline NecessaryConditionReport necessary_condition_check(const PointSequence& s,
                                                          const std::vector<cplx>& sigma,
                                                          const std::vector<cplx>& lambda, double p) {
    if (s.size() != sigma.size() || s.empty()) {
        fail(ErrorKind::shape, "necessary_condition_check: S and sigma differ in length");
    }
    if (std::abs(sigma[0]) > 1e-12 || s[0].norm() > 1e-12) {
        fail(ErrorKind::precondition, "necessary_condition_check: need a_0 = 0 and alpha_0 = 0");
    }
    NecessaryConditionReport r;
    r.moduli_ok = true;
    for (std::size_t k = 0; k < s.size(); ++k) {
        r.point_moduli.push_back(s[k].norm());
        r.node_moduli.push_back(std::abs(sigma[k]));
        r.moduli_ok = r.moduli_ok && r.point_moduli.back() <= r.node_moduli.back() + 1e-10;
    }
    const PointSequence nodes = as_sequence(sigma);
    r.norm_sigma = weighted_seq_norm(lambda, nodes, p, 2.0);
    r.norm_points = weighted_seq_norm(lambda, s, p, 2.0);
    r.gap = r.norm_points - r.norm_sigma;
    r.norms_ok = r.norm_sigma <= r.norm_points + 1e-10;
    if (s.size() >= 2) {
        r.separation_sigma = min_separation(nodes);
        r.separation_points = min_separation(s);
        r.separation_ok = r.separation_sigma >= r.separation_points - 1e-10;
    }
    r.passed = r.moduli_ok && r.norms_ok && r.separation_ok;
    return r;
}

inline NecessaryConditionReport necessary_condition_check(const DiscThroughS& d,
                                                          const std::vector<cplx>& lambda, double p) {
    if (!d.normalized()) {
        fail(ErrorKind::precondition, "necessary_condition_check: need a_0 = 0 and alpha_0 = 0");
    }
    return necessary_condition_check(d.points(), d.sigma(), lambda, p);
}

namespace detail {

/// Monomial coefficients of prod_j (z - roots_j).
inline std::vector<cplx> poly_from_roots(const std::vector<cplx>& roots) {
    std::vector<cplx> c{1.0};
    for (const auto& r : roots) {
        std::vector<cplx> next(c.size() + 1, 0.0);
        for (std::size_t m = 0; m < c.size(); ++m) {
            next[m + 1] += c[m];
            next[m] -= r * c[m];
        }
        c = std::move(next);
    }
    return c;
}

} // namespace detail

/// Vector Lagrange interpolant through (alpha_k, a_k), as DiscMap coefficients.
inline std::vector<std::vector<cplx>> lagrange_coefficients(const std::vector<cplx>& nodes,
                                                            const PointSequence& s) {
    const std::size_t m = nodes.size();
    std::vector<std::vector<cplx>> coeffs(s.dim(), std::vector<cplx>(m, 0.0));
    for (std::size_t k = 0; k < m; ++k) {
        std::vector<cplx> others;
        cplx denom = 1.0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j != k) {
                others.push_back(nodes[j]);
                denom *= nodes[k] - nodes[j];
            }
        }
        const auto basis = detail::poly_from_roots(others);
        for (std::size_t d = 0; d < s.dim(); ++d) {
            for (std::size_t q = 0; q < m; ++q) {
                coeffs[d][q] += s[k][d] * basis[q] / denom;
            }
        }
    }
    return coeffs;
}

/// Searches for a polynomial disc through a normalized sequence (a_0 = 0):
/// alpha_0 = 0, alpha_k = R_k e^{i t_k} with R_k drawn in [|a_k|, 0.999] (the
/// Schwarz-Gleason constraint), phi the vector Lagrange interpolant, kept when
/// it validates as a map into the ball.
inline std::optional<DiscThroughS> construct_disc_through(const PointSequence& s,
                                                          std::uint64_t seed,
                                                          std::size_t attempts = 2000) {
    if (s.empty() || s[0].norm() > 1e-12) {
        fail(ErrorKind::precondition, "construct_disc_through: need a_0 = 0");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (std::size_t t = 0; t < attempts; ++t) {
        std::vector<cplx> nodes{0.0};
        for (std::size_t k = 1; k < s.size(); ++k) {
            const double lo = std::min(s[k].norm(), 0.999);
            const double rad = lo + (0.999 - lo) * unif(rng);
            nodes.push_back(std::polar(rad, 2.0 * std::numbers::pi * unif(rng)));
        }
        bool distinct = true;
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            for (std::size_t l = k + 1; l < nodes.size(); ++l) {
                distinct = distinct && std::abs(nodes[k] - nodes[l]) > 1e-6;
            }
        }
        if (!distinct) {
            continue;
        }
        auto coeffs = lagrange_coefficients(nodes, s);
        // exact zero constant term: a_0 = 0 at alpha_0 = 0
        for (auto& row : coeffs) {
            row[0] = 0.0;
        }
        try {
            DiscMap phi = validate_disc_map(std::move(coeffs), s.dim(), s.size() - 1);
            return DiscThroughS(std::move(nodes), std::move(phi), s);
        } catch (const Error&) {
            continue;
        }
    }
    return std::nullopt;
}

} // namespace disc
