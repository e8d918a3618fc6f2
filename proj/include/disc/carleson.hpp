#pragma once

///
/// \file carleson.hpp
///
/// Pushforwards of (1 - |z|^2)^{n-2} dlambda under polynomial discs phi into
/// B_n, pseudo-ball (Carleson box) masses, the subordination ratio, and the
/// one-variable lemmas behind the Carleson estimate: harmonic extension of an
/// arc indicator, boundary slices of A_delta, Schwarz decay and boundary
/// moments of finite Blaschke products.
///
/// Masses are in lambda units (lambda = area / 2pi, lambda(D) = 1/2); boundary
/// lengths are arc length unless a field says sigma (normalized, |T| = 1).
///

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <disc/error.hpp>
#include <disc/geometry.hpp>
#include <disc/polynomial.hpp>
#include <disc/quadrature.hpp>

namespace disc {

inline constexpr const char* kMassUnits = "lambda = area/(2 pi), lambda(D) = 1/2";

/// Carleson constant predicted for n = 2 in lambda units: the (8/pi) delta^2
/// area bound divided by 2 pi.
inline constexpr double kCarlesonBound = 4.0 / (std::numbers::pi * std::numbers::pi);

/// Image of (1 - |z|^2)^{n-2} dlambda under phi. Box masses are computed by
/// node counting on a tensor grid; when phi(0) = 0 only the annulus
/// |z| >= 1 - delta can reach Q(zeta, delta), and the grid is restricted to it.
class PushforwardMeasure {
public:
    static constexpr std::size_t default_radial = 64;
    static constexpr std::size_t default_angular = 4096;

    explicit PushforwardMeasure(DiscMap phi, std::size_t radial = default_radial,
                                std::size_t angular = default_angular)
        : phi_(std::move(phi)), radial_(radial), angular_(angular) {
        if (phi_.dim() < 2) {
            fail(ErrorKind::parameter,
                 "PushforwardMeasure: n = 1 gives a negative weight exponent; need n >= 2");
        }
        if (radial == 0 || angular == 0) {
            fail(ErrorKind::parameter, "PushforwardMeasure: node counts must be positive");
        }
    }

    const DiscMap& disc() const noexcept { return phi_; }
    std::size_t dim() const noexcept { return phi_.dim(); }
    double weight_exponent() const noexcept { return static_cast<double>(phi_.dim()) - 2.0; }
    std::size_t radial_nodes() const noexcept { return radial_; }
    std::size_t angular_nodes() const noexcept { return angular_; }

    /// int_D (1 - |z|^2)^{n-2} dlambda = 1 / (2 (n - 1))
    double total_mass() const noexcept { return 0.5 / (weight_exponent() + 1.0); }

    DiscGrid grid_for(double delta) const {
        const double r0 = (phi_.fixes_origin() && delta < 1.0) ? 1.0 - delta : 0.0;
        return DiscGrid(radial_, angular_, r0);
    }

private:
    DiscMap phi_;
    std::size_t radial_;
    std::size_t angular_;
};

namespace detail {

inline void require_delta(double delta, const char* who) {
    if (!(delta > 0.0) || !std::isfinite(delta)) {
        fail(ErrorKind::parameter, std::string(who) + ": delta must be positive");
    }
}

/// phi(z_i) for all grid nodes, flattened row-major (node, coordinate).
inline std::vector<cplx> evaluate_on_grid(const DiscMap& phi, const DiscGrid& grid) {
    const std::size_t n = phi.dim();
    std::vector<cplx> out(grid.nodes().size() * n);
    for (std::size_t i = 0; i < grid.nodes().size(); ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out[i * n + j] = phi.coordinate(j, grid.nodes()[i].z);
        }
    }
    return out;
}

inline double box_mass_from_values(const std::vector<cplx>& values, const DiscGrid& grid,
                                   std::size_t n, double k, const CPoint& zeta, double delta) {
    const auto& nodes = grid.nodes();
    std::vector<double> terms(nodes.size(), 0.0);
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        cplx pairing = 0.0;
        for (std::size_t j = 0; j < n; ++j) {
            pairing += values[i * n + j] * std::conj(zeta[j]);
        }
        if (std::abs(1.0 - pairing) < delta) {
            const double w = k == 0.0 ? 1.0 : std::pow(1.0 - std::norm(nodes[i].z), k);
            terms[i] = w * nodes[i].weight;
        }
    }
    return pairwise_sum(terms);
}

inline void require_unit(const CPoint& zeta, std::size_t n, const char* who) {
    if (zeta.dim() != n) {
        fail(ErrorKind::shape, std::string(who) + ": zeta has the wrong dimension");
    }
    if (std::abs(zeta.norm() - 1.0) > 1e-12) {
        fail(ErrorKind::domain, std::string(who) + ": zeta must lie on the unit sphere");
    }
}

} // namespace detail

/// mu(Q(zeta, delta)) = int_D 1{phi(z) in Q(zeta, delta)} (1 - |z|^2)^{n-2} dlambda
inline double pushforward_box_mass(const PushforwardMeasure& mu, const CPoint& zeta, double delta) {
    detail::require_delta(delta, "pushforward_box_mass");
    detail::require_unit(zeta, mu.dim(), "pushforward_box_mass");
    const DiscGrid grid = mu.grid_for(delta);
    const auto values = detail::evaluate_on_grid(mu.disc(), grid);
    return detail::box_mass_from_values(values, grid, mu.dim(), mu.weight_exponent(), zeta, delta);
}

struct BoxEntry {
    std::size_t zeta_index;
    double delta;
    double mass;
    double ratio_n;   // mass / delta^n
    double ratio_2;   // mass / delta^2
};

struct CarlesonReport {
    std::vector<BoxEntry> entries;
    double sup_ratio_n = 0.0;
    double sup_ratio_2 = 0.0;
    double total_mass = 0.0;
    std::size_t dimension = 0;
    std::size_t radial_nodes = 0;
    std::size_t angular_nodes = 0;
    std::string units = kMassUnits;
    double predicted_bound = kCarlesonBound;   // meaningful for n = 2
};

/// Box masses over every (zeta, delta) pair. phi is evaluated once per delta.
inline CarlesonReport carleson_scan(const PushforwardMeasure& mu, const std::vector<CPoint>& zetas,
                                    const std::vector<double>& deltas) {
    if (zetas.empty() || deltas.empty()) {
        fail(ErrorKind::parameter, "carleson_scan: empty zeta or delta grid");
    }
    for (const auto& z : zetas) {
        detail::require_unit(z, mu.dim(), "carleson_scan");
    }
    CarlesonReport rep;
    rep.total_mass = mu.total_mass();
    rep.dimension = mu.dim();
    rep.radial_nodes = mu.radial_nodes();
    rep.angular_nodes = mu.angular_nodes();
    const double n = static_cast<double>(mu.dim());
    for (double delta : deltas) {
        detail::require_delta(delta, "carleson_scan");
        const DiscGrid grid = mu.grid_for(delta);
        const auto values = detail::evaluate_on_grid(mu.disc(), grid);
        for (std::size_t i = 0; i < zetas.size(); ++i) {
            const double m = detail::box_mass_from_values(values, grid, mu.dim(),
                                                          mu.weight_exponent(), zetas[i], delta);
            BoxEntry e{i, delta, m, m / std::pow(delta, n), m / (delta * delta)};
            rep.sup_ratio_n = std::max(rep.sup_ratio_n, e.ratio_n);
            rep.sup_ratio_2 = std::max(rep.sup_ratio_2, e.ratio_2);
            rep.entries.push_back(e);
        }
    }
    return rep;
}

/// Boundary directions for a scan: (1, 0, ..., 0), the direction where
/// |phi(e^{i theta})| peaks, then seeded uniform points of the sphere.
inline std::vector<CPoint> scan_directions(const DiscMap& phi, std::size_t count,
                                           std::uint64_t seed) {
    std::vector<CPoint> out;
    if (count == 0) {
        return out;
    }
    const std::size_t n = phi.dim();
    out.push_back(CPoint::unit_first(n));
    if (count >= 2) {
        double best = -1.0;
        CPoint arg = CPoint::unit_first(n);
        for (std::size_t i = 0; i < kDiscValidationSamples; ++i) {
            const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) /
                                 static_cast<double>(kDiscValidationSamples);
            const CPoint w = phi(std::polar(1.0, theta));
            if (w.norm() > best) {
                best = w.norm();
                arg = w;
            }
        }
        if (best > 0.0) {
            out.push_back(cplx(1.0 / best) * arg);
        } else {
            out.push_back(CPoint::unit_first(n));
        }
    }
    if (count > out.size()) {
        auto rnd = SphereSampler::random_sphere_points(n, count - out.size(), seed);
        out.insert(out.end(), rnd.begin(), rnd.end());
    }
    return out;
}

struct SubordinationResult {
    double ratio = 0.0;
    double lhs = 0.0;       // int_D |f o phi|^p (1 - |z|^2)^{n-2} dlambda
    double hardy_p = 0.0;   // ||f||_p^p
};

/// int_D |f o phi|^p (1 - |z|^2)^{n-2} dlambda / ||f||_{H^p}^p
template <typename F>
SubordinationResult subordination_ratio(F&& f, const DiscMap& phi, double p, const DiscGrid& grid,
                                        const SphereSampler& sampler) {
    phi.require_fixes_origin("subordination_ratio");
    if (phi.dim() < 2) {
        fail(ErrorKind::parameter, "subordination_ratio: need n >= 2");
    }
    if (sampler.dim() != phi.dim()) {
        fail(ErrorKind::shape, "subordination_ratio: sphere sampler dimension != disc dimension");
    }
    SubordinationResult r;
    const double hn = hardy_norm(f, p, sampler);
    r.hardy_p = std::pow(hn, p);
    if (!(r.hardy_p > 1e-300)) {
        fail(ErrorKind::precondition, "subordination_ratio: ||f||_p = 0, ratio undefined");
    }
    const double k = static_cast<double>(phi.dim()) - 2.0;
    r.lhs = disc_integrate(
        [&](cplx z) { return std::pow(std::abs(static_cast<cplx>(f(phi(z)))), p); }, k, grid);
    r.ratio = r.lhs / r.hardy_p;
    return r;
}

/// Poisson integral of the indicator of ]-delta, delta[ in the upper half
/// plane: atan((x + delta) / y) - atan((x - delta) / y).
inline double harmonic_indicator_halfplane(double x, double y, double delta) {
    if (!(y > 0.0)) {
        fail(ErrorKind::domain, "harmonic_indicator_halfplane: need y > 0");
    }
    detail::require_delta(delta, "harmonic_indicator_halfplane");
    return std::atan((x + delta) / y) - std::atan((x - delta) / y);
}

/// Half-width of the arc I = {theta : |1 - e^{i theta}| < delta}.
inline double arc_half_width(double delta) {
    return delta >= 2.0 ? std::numbers::pi : 2.0 * std::asin(delta / 2.0);
}

/// I~(z) = int_I (1 - |z|^2) / |e^{i theta} - z|^2 dtheta (total mass 2 pi).
/// Closed form: twice the angle subtended at z by I, minus |I|.
inline double harmonic_indicator_disc(cplx z, double delta) {
    require_in_disc(z, "harmonic_indicator_disc");
    detail::require_delta(delta, "harmonic_indicator_disc");
    if (delta >= 2.0) {
        return 2.0 * std::numbers::pi;
    }
    const double t0 = arc_half_width(delta);
    double angle = std::arg((std::polar(1.0, t0) - z) / (std::polar(1.0, -t0) - z));
    if (angle < 0.0) {
        angle += 2.0 * std::numbers::pi;
    }
    return 2.0 * angle - 2.0 * t0;
}

inline constexpr std::size_t kBoundarySamples = 8192;

struct SliceMeasure {
    double arc_length = 0.0;      // |{theta : I~(phi1(rho e^{i theta})) > pi/4}|
    double sigma = 0.0;           // same set, normalized measure
    double arc_I = 0.0;           // |I| = 4 asin(delta / 2)
    double sigma_bound = 0.0;     // (4 / pi) |I|
    bool within_bound = false;    // sigma <= sigma_bound
};

/// Boundary slice of A_delta = {I~ > pi/4} under phi1(rho .), sampled at
/// kBoundarySamples points.
template <typename F>
SliceMeasure boundary_slice_measure(F&& phi1, double rho, double delta) {
    if (!(rho >= 0.0 && rho < 1.0)) {
        fail(ErrorKind::parameter, "boundary_slice_measure: rho must lie in [0, 1)");
    }
    detail::require_delta(delta, "boundary_slice_measure");
    std::size_t count = 0;
    for (std::size_t i = 0; i < kBoundarySamples; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(kBoundarySamples);
        const cplx w = static_cast<cplx>(phi1(std::polar(rho, theta)));
        if (harmonic_indicator_disc(w, delta) > std::numbers::pi / 4.0) {
            ++count;
        }
    }
    SliceMeasure s;
    s.sigma = static_cast<double>(count) / static_cast<double>(kBoundarySamples);
    s.arc_length = 2.0 * std::numbers::pi * s.sigma;
    s.arc_I = 2.0 * arc_half_width(delta);
    s.sigma_bound = 4.0 / std::numbers::pi * s.arc_I;
    s.within_bound = s.sigma <= s.sigma_bound;
    return s;
}

inline SliceMeasure boundary_slice_measure(const DiscMap& phi1, double rho, double delta) {
    if (phi1.dim() != 1) {
        fail(ErrorKind::shape, "boundary_slice_measure: expected a scalar disc");
    }
    phi1.require_fixes_origin("boundary_slice_measure");
    return boundary_slice_measure([&](cplx z) { return phi1.coordinate(0, z); }, rho, delta);
}

/// Minimum of I~ over seeded uniform points of d(1, delta) inside D.
inline double harmonic_indicator_min(double delta, std::size_t samples, std::uint64_t seed) {
    detail::require_delta(delta, "harmonic_indicator_min");
    if (samples == 0) {
        fail(ErrorKind::parameter, "harmonic_indicator_min: samples must be positive");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double best = std::numeric_limits<double>::infinity();
    std::size_t got = 0;
    while (got < samples) {
        const cplx z = 1.0 + std::polar(delta * std::sqrt(unif(rng)),
                                        2.0 * std::numbers::pi * unif(rng));
        if (std::norm(z) >= 1.0) {
            continue;
        }
        best = std::min(best, harmonic_indicator_disc(z, delta));
        ++got;
    }
    return best;
}

/// Smallest |z| over grid nodes whose image has first coordinate in d(1, delta)
/// (box) or in A_delta (harmonic); 1 when no node qualifies.
struct PreimageRadius {
    double box = 1.0;
    double harmonic = 1.0;
};

inline PreimageRadius min_preimage_radius(const DiscMap& phi, double delta, const DiscGrid& grid) {
    detail::require_delta(delta, "min_preimage_radius");
    PreimageRadius r;
    for (const auto& node : grid.nodes()) {
        const cplx w = phi.coordinate(0, node.z);
        const double rz = std::abs(node.z);
        if (std::abs(1.0 - w) < delta) {
            r.box = std::min(r.box, rz);
        }
        if (std::norm(w) < 1.0 && harmonic_indicator_disc(w, delta) > std::numbers::pi / 4.0) {
            r.harmonic = std::min(r.harmonic, rz);
        }
    }
    return r;
}

/// Largest value of |phi(z)| - |z| over seeded uniform probes of D.
inline double schwarz_margin(const DiscMap& phi, std::size_t probes, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    double worst = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < probes; ++i) {
        const double r = std::sqrt(unif(rng));
        const cplx z = std::polar(r, 2.0 * std::numbers::pi * unif(rng));
        worst = std::max(worst, phi(z).norm() - r);
    }
    return worst;
}

struct SchwarzDecayReport {
    double f_sphere_sup = 0.0;
    double max_excess = 0.0;      // max over probes of |f(phi(z))| - |z|
    bool schwarz_ok = false;      // max_excess <= 1e-9
    double norm_p = 0.0;          // ||(f o phi)^k||_{A^p}^p
    double bound = 0.0;           // 1 / (kp + 2)
    bool decay_ok = false;
    bool passed = false;
};

inline constexpr std::size_t kSchwarzProbes = 500;

/// Schwarz lemma for f o phi and the resulting A^p bound on (f o phi)^k.
template <typename F>
SchwarzDecayReport schwarz_decay_check(F&& f, const DiscMap& phi, unsigned k, double p,
                                       const DiscGrid& grid, const SphereSampler& sampler,
                                       std::uint64_t seed) {
    phi.require_fixes_origin("schwarz_decay_check");
    if (k < 1) {
        fail(ErrorKind::parameter, "schwarz_decay_check: k must be at least 1");
    }
    if (!(p >= 1.0)) {
        fail(ErrorKind::parameter, "schwarz_decay_check: p must be at least 1");
    }
    if (sampler.dim() != phi.dim()) {
        fail(ErrorKind::shape, "schwarz_decay_check: sampler dimension != disc dimension");
    }
    SchwarzDecayReport r;
    if (std::abs(static_cast<cplx>(f(CPoint::zero(phi.dim())))) > 1e-12) {
        fail(ErrorKind::precondition, "schwarz_decay_check: f(0) != 0");
    }
    for (const auto& node : sampler.nodes()) {
        r.f_sphere_sup = std::max(r.f_sphere_sup, std::abs(static_cast<cplx>(f(node.zeta))));
    }
    if (r.f_sphere_sup > 1.0 + 1e-9) {
        fail(ErrorKind::precondition, "schwarz_decay_check: sup |f| on the sphere exceeds 1");
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    r.max_excess = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < kSchwarzProbes; ++i) {
        const double rad = std::sqrt(unif(rng));
        const cplx z = std::polar(rad, 2.0 * std::numbers::pi * unif(rng));
        r.max_excess = std::max(r.max_excess, std::abs(static_cast<cplx>(f(phi(z)))) - rad);
    }
    r.schwarz_ok = r.max_excess <= 1e-9;

    const double kp = static_cast<double>(k) * p;
    r.norm_p = disc_integrate(
        [&](cplx z) { return std::pow(std::abs(static_cast<cplx>(f(phi(z)))), kp); }, 0.0, grid);
    r.bound = 1.0 / (kp + 2.0);
    r.decay_ok = r.norm_p <= r.bound + 1e-10;
    r.passed = r.schwarz_ok && r.decay_ok;
    return r;
}

/// Finite Blaschke product c * prod_j (z - a_j) / (1 - conj(a_j) z), |c| = 1.
class BlaschkeProduct {
public:
    explicit BlaschkeProduct(std::vector<cplx> zeros, cplx unimodular = 1.0)
        : zeros_(std::move(zeros)), c_(unimodular) {
        for (const auto& a : zeros_) {
            require_in_disc(a, "BlaschkeProduct");
        }
        if (std::abs(std::abs(c_) - 1.0) > 1e-12) {
            fail(ErrorKind::domain, "BlaschkeProduct: constant must be unimodular");
        }
    }

    const std::vector<cplx>& zeros() const noexcept { return zeros_; }

    cplx operator()(cplx z) const {
        cplx v = c_;
        for (const auto& a : zeros_) {
            v *= (z - a) / (1.0 - std::conj(a) * z);
        }
        return v;
    }

private:
    std::vector<cplx> zeros_;
    cplx c_;
};

/// m_j = int_T (phi*)^j dsigma by the kBoundarySamples-point trapezoidal rule.
/// Precondition: phi(0) = 0 and |phi| = 1 on the samples to 1e-9.
template <typename F>
cplx inner_pushforward_moment(F&& phi, unsigned j) {
    if (std::abs(static_cast<cplx>(phi(cplx(0.0)))) > 1e-12) {
        fail(ErrorKind::precondition, "inner_pushforward_moments: phi(0) != 0");
    }
    std::vector<double> re(kBoundarySamples);
    std::vector<double> im(kBoundarySamples);
    for (std::size_t i = 0; i < kBoundarySamples; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(kBoundarySamples);
        const cplx w = static_cast<cplx>(phi(std::polar(1.0, theta)));
        if (std::abs(std::abs(w) - 1.0) > 1e-9) {
            fail(ErrorKind::precondition, "inner_pushforward_moments: phi is not inner on the boundary");
        }
        const cplx wj = std::pow(w, static_cast<int>(j));
        re[i] = wj.real() / static_cast<double>(kBoundarySamples);
        im[i] = wj.imag() / static_cast<double>(kBoundarySamples);
    }
    return {detail::pairwise_sum(re), detail::pairwise_sum(im)};
}

inline std::vector<cplx> inner_pushforward_moments(const BlaschkeProduct& phi, unsigned max_j) {
    std::vector<cplx> out;
    for (unsigned j = 0; j <= max_j; ++j) {
        out.push_back(inner_pushforward_moment(phi, j));
    }
    return out;
}

} // namespace disc
