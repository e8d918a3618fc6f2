#pragma once

///
/// \file quadrature.hpp
///
/// Integration over the unit disc against (1 - |z|^2)^k dlambda, with
/// dlambda = (planar area) / (2 pi) so that lambda(D) = 1/2, and over the unit
/// sphere of C^n against the normalized surface measure sigma.
///

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <span>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <disc/error.hpp>
#include <disc/geometry.hpp>

namespace disc {

namespace detail {

/// Pairwise (cascade) summation with a fixed split, so the result depends
/// only on the order of the input.
inline double pairwise_sum(std::span<const double> x) {
    if (x.size() <= 16) {
        double s = 0.0;
        for (double v : x) {
            s += v;
        }
        return s;
    }
    const std::size_t half = x.size() / 2;
    return pairwise_sum(x.first(half)) + pairwise_sum(x.subspan(half));
}

inline void require_finite(double v, const std::string& where) {
    if (!std::isfinite(v)) {
        fail(ErrorKind::integration, "non-finite integrand value at " + where);
    }
}

inline std::string describe(cplx z) {
    std::ostringstream os;
    os.precision(17);
    os << "z = (" << z.real() << ", " << z.imag() << ")";
    return os.str();
}

} // namespace detail

struct GaussRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Gauss-Legendre rule with n points on [a, b], by Newton iteration on P_n.
inline GaussRule gauss_legendre(std::size_t n, double a = -1.0, double b = 1.0) {
    if (n == 0) {
        fail(ErrorKind::parameter, "gauss_legendre: need at least one node");
    }
    GaussRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    const double dn = static_cast<double>(n);
    for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (dn + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (std::size_t k = 2; k <= n; ++k) {
                const double dk = static_cast<double>(k);
                const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
                p0 = p1;
                p1 = p2;
            }
            dp = dn * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        // recompute derivative at the converged node
        double p0 = 1.0;
        double p1 = x;
        for (std::size_t k = 2; k <= n; ++k) {
            const double dk = static_cast<double>(k);
            const double p2 = ((2.0 * dk - 1.0) * x * p1 - (dk - 1.0) * p0) / dk;
            p0 = p1;
            p1 = p2;
        }
        dp = dn * (x * p1 - p0) / (x * x - 1.0);
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        // ascending order: node i from the left, n-1-i from the right
        rule.nodes[i] = mid - half * x;
        rule.nodes[n - 1 - i] = mid + half * x;
        rule.weights[i] = half * w;
        rule.weights[n - 1 - i] = half * w;
    }
    return rule;
}

/// Tensor rule on the disc (or an annulus r0 <= |z| <= 1): Gauss-Legendre in
/// r (with the Jacobian r folded into the weights) times the trapezoidal rule
/// in theta. Weights realize integration against dlambda.
///
/// The radial rule is exact for r^m, m <= 2R - 2, so |z|^q integrates exactly
/// for every integer q <= 2R - 2, odd q included.
class DiscGrid {
public:
    struct Node {
        cplx z;
        double weight;
    };

    static constexpr std::size_t default_radial = 32;
    static constexpr std::size_t default_angular = 128;

    DiscGrid() : DiscGrid(default_radial, default_angular) {}

    DiscGrid(std::size_t radial, std::size_t angular, double inner_radius = 0.0)
        : radial_(radial), angular_(angular), inner_radius_(inner_radius) {
        if (radial == 0 || angular == 0) {
            fail(ErrorKind::parameter, "DiscGrid: node counts must be positive");
        }
        if (!(inner_radius >= 0.0 && inner_radius < 1.0)) {
            fail(ErrorKind::parameter, "DiscGrid: inner radius must lie in [0, 1)");
        }
        const GaussRule r = gauss_legendre(radial, inner_radius, 1.0);
        nodes_.reserve(radial * angular);
        const double dt = 2.0 * std::numbers::pi / static_cast<double>(angular);
        for (std::size_t i = 0; i < radial; ++i) {
            const double w = r.weights[i] * r.nodes[i] / static_cast<double>(angular);
            for (std::size_t t = 0; t < angular; ++t) {
                nodes_.push_back({std::polar(r.nodes[i], dt * static_cast<double>(t)), w});
            }
        }
    }

    /// Grid covering only r0 <= |z| <= 1.
    static DiscGrid annulus(double r0, std::size_t radial, std::size_t angular) {
        return DiscGrid(radial, angular, r0);
    }

    std::size_t radial_nodes() const noexcept { return radial_; }
    std::size_t angular_nodes() const noexcept { return angular_; }
    double inner_radius() const noexcept { return inner_radius_; }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }

private:
    std::size_t radial_;
    std::size_t angular_;
    double inner_radius_;
    std::vector<Node> nodes_;
};

/// sum_i g(z_i) (1 - |z_i|^2)^k w_i  ~  int_D g (1 - |z|^2)^k dlambda
template <typename F>
double disc_integrate(F&& g, double weight_exponent, const DiscGrid& grid) {
    if (!std::isfinite(weight_exponent)) {
        fail(ErrorKind::parameter, "disc_integrate: weight exponent must be finite");
    }
    const auto& nodes = grid.nodes();
    std::vector<double> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const cplx z = nodes[i].z;
        const double v = static_cast<double>(g(z));
        detail::require_finite(v, detail::describe(z));
        const double w = weight_exponent == 0.0
                             ? 1.0
                             : std::pow(1.0 - std::norm(z), weight_exponent);
        terms[i] = v * w * nodes[i].weight;
    }
    return detail::pairwise_sum(terms);
}

/// (int_D |g|^p (1 - |z|^2)^k dlambda)^{1/p}
template <typename F>
double bergman_norm_disc(F&& g, double p, double weight_exponent, const DiscGrid& grid) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        fail(ErrorKind::parameter, "bergman_norm_disc: p must lie in [1, inf)");
    }
    const double s = disc_integrate(
        [&](cplx z) { return std::pow(std::abs(static_cast<cplx>(g(z))), p); },
        weight_exponent, grid);
    return std::pow(s, 1.0 / p);
}

enum class SphereMode { product_rule, monte_carlo };

/// Quadrature for the normalized surface measure on the unit sphere of C^n.
///
/// n = 1: trapezoidal rule on the circle.
/// n = 2: exact product parametrization z = (e^{i t1} cos s, e^{i t2} sin s),
///        dsigma = sin(2s) ds dt1/2pi dt2/2pi, Gauss-Legendre in s.
/// n >= 3 (or on request): seeded Monte Carlo with normalized complex
///        Gaussian vectors.
class SphereSampler {
public:
    struct Node {
        CPoint zeta;
        double weight;
    };

    static constexpr std::size_t default_polar = 32;
    static constexpr std::size_t default_angular = 64;
    static constexpr std::size_t default_mc_samples = 200000;

    static SphereSampler product(std::size_t n, std::size_t polar = default_polar,
                                 std::size_t angular = default_angular) {
        if (n == 0 || n > 2) {
            fail(ErrorKind::parameter, "SphereSampler: product rule needs n = 1 or 2");
        }
        if (polar == 0 || angular == 0) {
            fail(ErrorKind::parameter, "SphereSampler: node counts must be positive");
        }
        SphereSampler s(n, SphereMode::product_rule, 0);
        const double dt = 2.0 * std::numbers::pi / static_cast<double>(angular);
        if (n == 1) {
            for (std::size_t t = 0; t < angular; ++t) {
                s.nodes_.push_back({CPoint{std::polar(1.0, dt * static_cast<double>(t))},
                                    1.0 / static_cast<double>(angular)});
            }
        } else {
            const GaussRule g = gauss_legendre(polar, 0.0, 0.5 * std::numbers::pi);
            const double a2 = static_cast<double>(angular) * static_cast<double>(angular);
            s.nodes_.reserve(polar * angular * angular);
            for (std::size_t i = 0; i < polar; ++i) {
                const double c = std::cos(g.nodes[i]);
                const double sn = std::sin(g.nodes[i]);
                const double w = g.weights[i] * std::sin(2.0 * g.nodes[i]) / a2;
                for (std::size_t t1 = 0; t1 < angular; ++t1) {
                    const cplx e1 = std::polar(c, dt * static_cast<double>(t1));
                    for (std::size_t t2 = 0; t2 < angular; ++t2) {
                        s.nodes_.push_back(
                            {CPoint{e1, std::polar(sn, dt * static_cast<double>(t2))}, w});
                    }
                }
            }
        }
        return s;
    }

    static SphereSampler monte_carlo(std::size_t n, std::size_t samples, std::uint64_t seed) {
        if (n == 0 || samples == 0) {
            fail(ErrorKind::parameter, "SphereSampler: need n >= 1 and samples >= 1");
        }
        SphereSampler s(n, SphereMode::monte_carlo, seed);
        s.nodes_.reserve(samples);
        for (auto& zeta : random_sphere_points(n, samples, seed)) {
            s.nodes_.push_back({std::move(zeta), 1.0 / static_cast<double>(samples)});
        }
        return s;
    }

    /// Product rule when available, Monte Carlo otherwise.
    static SphereSampler for_dimension(std::size_t n, std::size_t polar, std::size_t angular,
                                       std::size_t mc_samples, std::uint64_t seed) {
        return n <= 2 ? product(n, polar, angular) : monte_carlo(n, mc_samples, seed);
    }

    /// Uniform points on the sphere from normalized complex Gaussian vectors.
    static std::vector<CPoint> random_sphere_points(std::size_t n, std::size_t count,
                                                    std::uint64_t seed) {
        std::mt19937_64 rng(seed);
        std::normal_distribution<double> normal(0.0, 1.0);
        std::vector<CPoint> out;
        out.reserve(count);
        std::vector<cplx> v(n);
        while (out.size() < count) {
            double r2 = 0.0;
            for (auto& c : v) {
                c = cplx(normal(rng), normal(rng));
                r2 += std::norm(c);
            }
            if (r2 == 0.0) {
                continue;
            }
            const double inv = 1.0 / std::sqrt(r2);
            std::vector<cplx> u(v);
            for (auto& c : u) {
                c *= inv;
            }
            out.emplace_back(std::move(u));
        }
        return out;
    }

    std::size_t dim() const noexcept { return dim_; }
    SphereMode mode() const noexcept { return mode_; }
    std::uint64_t seed() const noexcept { return seed_; }
    std::size_t sample_count() const noexcept { return nodes_.size(); }
    const std::vector<Node>& nodes() const noexcept { return nodes_; }

private:
    SphereSampler(std::size_t n, SphereMode mode, std::uint64_t seed)
        : dim_(n), mode_(mode), seed_(seed) {}

    std::size_t dim_;
    SphereMode mode_;
    std::uint64_t seed_;
    std::vector<Node> nodes_;
};

/// int_{dB_n} g dsigma
template <typename F>
double sphere_integrate(F&& g, const SphereSampler& sampler) {
    const auto& nodes = sampler.nodes();
    std::vector<double> terms(nodes.size());
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        const double v = static_cast<double>(g(nodes[i].zeta));
        if (!std::isfinite(v)) {
            fail(ErrorKind::integration, "sphere_integrate: non-finite integrand at node " +
                                             std::to_string(i));
        }
        terms[i] = v * nodes[i].weight;
    }
    return detail::pairwise_sum(terms);
}

inline constexpr double kHardyRadii[] = {0.5, 0.9, 0.99, 1.0};

struct HardyProfile {
    std::vector<double> radii;
    std::vector<double> means;   // int |f(r zeta)|^p dsigma per radius
    double norm = 0.0;           // (sup of means)^{1/p}
    bool monotone = true;        // means non-decreasing in r
};

/// p-means of f over the spheres r dB_n on the fixed radius grid; the norm is
/// the p-th root of the largest mean (attained at r = 1 for polynomials).
template <typename F>
HardyProfile hardy_profile(F&& f, double p, const SphereSampler& sampler) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        fail(ErrorKind::parameter, "hardy_norm: p must lie in [1, inf)");
    }
    HardyProfile prof;
    double sup = 0.0;
    for (double r : kHardyRadii) {
        const double m = sphere_integrate(
            [&](const CPoint& zeta) {
                std::vector<cplx> w(zeta.coords().begin(), zeta.coords().end());
                for (auto& c : w) {
                    c *= r;
                }
                return std::pow(std::abs(static_cast<cplx>(f(CPoint(std::move(w))))), p);
            },
            sampler);
        if (!prof.means.empty() && m < prof.means.back() * (1.0 - 1e-12) - 1e-15) {
            prof.monotone = false;
        }
        prof.radii.push_back(r);
        prof.means.push_back(m);
        sup = std::max(sup, m);
    }
    prof.norm = std::pow(sup, 1.0 / p);
    return prof;
}

template <typename F>
double hardy_norm(F&& f, double p, const SphereSampler& sampler) {
    return hardy_profile(std::forward<F>(f), p, sampler).norm;
}

} // namespace disc
