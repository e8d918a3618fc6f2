#pragma once

///
/// \file geometry.hpp
///
/// Points of C^n, the unit ball and disc, Gleason (pseudo-hyperbolic)
/// distances, involutive ball automorphisms, boundary approach regions and
/// polynomial discs D -> B_n.
///
/// Hermitian pairing convention used everywhere: <z, w> = sum_j z_j conj(w_j).
///

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <initializer_list>
#include <numbers>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include <disc/error.hpp>

namespace disc {

using cplx = std::complex<double>;

/// A point of C^n, n >= 1, with finite coordinates.
class CPoint {
public:
    CPoint() = default;

    explicit CPoint(std::vector<cplx> coords) : coords_(std::move(coords)) {
        if (coords_.empty()) {
            fail(ErrorKind::shape, "CPoint: dimension must be at least 1");
        }
        for (const auto& c : coords_) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                fail(ErrorKind::shape, "CPoint: non-finite coordinate");
            }
        }
    }

    CPoint(std::initializer_list<cplx> coords)
        : CPoint(std::vector<cplx>(coords)) {}

    static CPoint zero(std::size_t n) { return CPoint(std::vector<cplx>(n)); }

    /// (1, 0, ..., 0)
    static CPoint unit_first(std::size_t n) {
        std::vector<cplx> c(n);
        c[0] = 1.0;
        return CPoint(std::move(c));
    }

    std::size_t dim() const noexcept { return coords_.size(); }
    const cplx& operator[](std::size_t j) const { return coords_[j]; }
    std::span<const cplx> coords() const noexcept { return coords_; }

    double norm2() const noexcept {
        double s = 0.0;
        for (const auto& c : coords_) {
            s += std::norm(c);
        }
        return s;
    }
    double norm() const noexcept { return std::sqrt(norm2()); }

    friend CPoint operator-(const CPoint& a, const CPoint& b) {
        std::vector<cplx> c(a.dim());
        for (std::size_t j = 0; j < c.size(); ++j) {
            c[j] = a[j] - b[j];
        }
        return CPoint(std::move(c));
    }

    friend CPoint operator*(cplx s, const CPoint& a) {
        std::vector<cplx> c(a.coords_);
        for (auto& x : c) {
            x *= s;
        }
        return CPoint(std::move(c));
    }

    friend bool operator==(const CPoint&, const CPoint&) = default;

private:
    std::vector<cplx> coords_;
};

inline void require_same_dim(const CPoint& a, const CPoint& b, const char* who) {
    if (a.dim() != b.dim()) {
        fail(ErrorKind::shape, std::string(who) + ": dimension mismatch");
    }
}

/// <z, w> = sum_j z_j conj(w_j)
inline cplx inner(const CPoint& z, const CPoint& w) {
    require_same_dim(z, w, "inner");
    cplx s = 0.0;
    for (std::size_t j = 0; j < z.dim(); ++j) {
        s += z[j] * std::conj(w[j]);
    }
    return s;
}

inline void require_in_ball(const CPoint& z, const char* who) {
    if (!(z.norm2() < 1.0)) {
        fail(ErrorKind::domain, std::string(who) + ": point not in the open unit ball");
    }
}

inline void require_in_disc(cplx z, const char* who) {
    if (!(std::norm(z) < 1.0)) {
        fail(ErrorKind::domain, std::string(who) + ": point not in the open unit disc");
    }
}

/// Pseudo-hyperbolic distance |(a - b) / (1 - conj(a) b)| in D.
inline double gleason_distance_disc(cplx a, cplx b) {
    require_in_disc(a, "gleason_distance_disc");
    require_in_disc(b, "gleason_distance_disc");
    return std::abs(a - b) / std::abs(1.0 - std::conj(a) * b);
}

/// Gleason distance in B_n, defined by
///   1 - d^2 = (1 - |a|^2)(1 - |b|^2) / |1 - <a,b>|^2.
/// Evaluated through the equivalent numerator
///   |a - b|^2 - sum_{i<j} |a_i b_j - a_j b_i|^2
/// which avoids cancellation for nearby points.
inline double gleason_distance_ball(const CPoint& a, const CPoint& b) {
    require_same_dim(a, b, "gleason_distance_ball");
    require_in_ball(a, "gleason_distance_ball");
    require_in_ball(b, "gleason_distance_ball");
    const std::size_t n = a.dim();
    double num = (a - b).norm2();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            num -= std::norm(a[i] * b[j] - a[j] * b[i]);
        }
    }
    const double den = std::norm(1.0 - inner(a, b));
    return std::sqrt(std::max(0.0, num / den));
}

/// The involutive automorphism of B_n exchanging a and 0:
///   psi_a(z) = (a - P_a z - s_a Q_a z) / (1 - <z, a>),  s_a = sqrt(1 - |a|^2).
/// For a = 0 this is z -> -z.
class BallAutomorphism {
public:
    explicit BallAutomorphism(CPoint base) : a_(std::move(base)) {
        require_in_ball(a_, "BallAutomorphism");
        a2_ = a_.norm2();
        s_ = std::sqrt(1.0 - a2_);
    }

    const CPoint& base() const noexcept { return a_; }

    CPoint operator()(const CPoint& z) const {
        require_in_ball(z, "BallAutomorphism");
        return extended(z);
    }

    /// Same formula on the closed ball (boundary points map to the sphere).
    CPoint extended(const CPoint& z) const {
        require_same_dim(z, a_, "BallAutomorphism");
        if (z.norm2() > 1.0 + 1e-12) {
            fail(ErrorKind::domain, "BallAutomorphism: point outside the closed ball");
        }
        const cplx za = inner(z, a_);
        const cplx den = 1.0 - za;
        const cplx proj = a2_ > 0.0 ? za / a2_ : cplx(0.0);
        std::vector<cplx> out(z.dim());
        for (std::size_t j = 0; j < z.dim(); ++j) {
            const cplx pz = proj * a_[j];
            out[j] = (a_[j] - pz - s_ * (z[j] - pz)) / den;
        }
        return CPoint(std::move(out));
    }

private:
    CPoint a_;
    double a2_ = 0.0;
    double s_ = 1.0;
};

inline CPoint apply_ball_automorphism(const BallAutomorphism& psi, const CPoint& z) {
    return psi(z);
}

/// Rudin's weighted composition operator for psi in Aut(B_n), a = psi^{-1}(0):
///   (T f)(z) = (1 - |a|^2)^{n/p} / (1 - <z, a>)^{2n/p} f(psi(z)),
/// an isometry of H^p(B_n). Evaluable on the closed ball.
template <typename F>
auto rudin_operator(const BallAutomorphism& psi, F f, double p) {
    if (!(p >= 1.0) || !std::isfinite(p)) {
        fail(ErrorKind::parameter, "rudin_operator: p must lie in [1, inf)");
    }
    const double n = static_cast<double>(psi.base().dim());
    const double scale = std::pow(1.0 - psi.base().norm2(), n / p);
    const double expo = 2.0 * n / p;
    return [psi, f = std::move(f), expo, scale](const CPoint& z) -> cplx {
        const cplx den = std::pow(1.0 - inner(z, psi.base()), expo);
        return scale / den * static_cast<cplx>(f(psi.extended(z)));
    };
}

/// Involutive disc automorphism (a - z) / (1 - conj(a) z).
inline cplx disc_automorphism(cplx a, cplx z) {
    return (a - z) / (1.0 - std::conj(a) * z);
}

enum class RegionKind { pseudo_ball, admissible };

/// Q(zeta, delta) = {|1 - <z, zeta>| < delta} or
/// Gamma(zeta, alpha) = {|1 - <z, zeta>| < alpha (1 - |z|^2)}.
class Region {
public:
    static Region pseudo_ball(CPoint center, double delta) {
        return Region(RegionKind::pseudo_ball, std::move(center), delta);
    }
    static Region admissible(CPoint center, double aperture) {
        return Region(RegionKind::admissible, std::move(center), aperture);
    }

    RegionKind kind() const noexcept { return kind_; }
    const CPoint& center() const noexcept { return center_; }
    double parameter() const noexcept { return param_; }

    bool contains(const CPoint& z) const {
        require_same_dim(z, center_, "region_contains");
        require_in_ball(z, "region_contains");
        const double gap = std::abs(1.0 - inner(z, center_));
        if (kind_ == RegionKind::pseudo_ball) {
            return gap < param_;
        }
        return gap < param_ * (1.0 - z.norm2());
    }

private:
    Region(RegionKind kind, CPoint center, double param)
        : kind_(kind), center_(std::move(center)), param_(param) {
        if (std::abs(center_.norm() - 1.0) > 1e-12) {
            fail(ErrorKind::domain, "Region: center must lie on the unit sphere");
        }
        if (!(param_ > 0.0) || !std::isfinite(param_)) {
            fail(ErrorKind::parameter, "Region: radius / aperture must be positive");
        }
    }

    RegionKind kind_;
    CPoint center_;
    double param_;
};

inline bool region_contains(const Region& region, const CPoint& z) {
    return region.contains(z);
}

/// Number of equispaced boundary samples used to validate a disc's range.
inline constexpr std::size_t kDiscValidationSamples = 4096;
inline constexpr double kDiscRangeTolerance = 1e-9;
inline constexpr std::size_t kMaxDiscDegree = 64;

/// Polynomial holomorphic map phi: D -> B_n, phi_j(z) = sum_m c[j][m] z^m,
/// whose boundary sup has been checked on kDiscValidationSamples points.
class DiscMap {
public:
    std::size_t dim() const noexcept { return coeffs_.size(); }
    std::size_t degree() const noexcept { return coeffs_.front().size() - 1; }
    const std::vector<std::vector<cplx>>& coefficients() const noexcept { return coeffs_; }

    /// Measured sup over the validation grid of |phi(e^{i theta})|.
    double boundary_sup() const noexcept { return boundary_sup_; }
    double boundary_margin() const noexcept { return std::max(0.0, boundary_sup_ - 1.0); }

    cplx coordinate(std::size_t j, cplx z) const {
        const auto& c = coeffs_[j];
        cplx acc = c.back();
        for (std::size_t m = c.size() - 1; m-- > 0;) {
            acc = acc * z + c[m];
        }
        return acc;
    }

    CPoint operator()(cplx z) const {
        std::vector<cplx> out(dim());
        for (std::size_t j = 0; j < dim(); ++j) {
            out[j] = coordinate(j, z);
        }
        return CPoint(std::move(out));
    }

    /// All constant coefficients vanish (to 1e-12).
    bool fixes_origin() const noexcept {
        return std::all_of(coeffs_.begin(), coeffs_.end(),
                           [](const auto& c) { return std::abs(c[0]) <= 1e-12; });
    }

    void require_fixes_origin(const char* who) const {
        if (!fixes_origin()) {
            fail(ErrorKind::precondition, std::string(who) + ": disc must satisfy phi(0) = 0");
        }
    }

    friend DiscMap validate_disc_map(std::vector<std::vector<cplx>> coefficients,
                                     std::size_t dimension, std::size_t degree);

private:
    DiscMap() = default;

    std::vector<std::vector<cplx>> coeffs_;
    double boundary_sup_ = 0.0;
};

inline DiscMap validate_disc_map(std::vector<std::vector<cplx>> coefficients,
                                 std::size_t dimension, std::size_t degree) {
    if (dimension == 0 || coefficients.empty()) {
        fail(ErrorKind::shape, "DiscMap: empty coefficients");
    }
    if (coefficients.size() != dimension) {
        fail(ErrorKind::shape, "DiscMap: coefficient rows do not match dimension");
    }
    if (degree > kMaxDiscDegree) {
        fail(ErrorKind::shape, "DiscMap: degree exceeds " + std::to_string(kMaxDiscDegree));
    }
    for (const auto& row : coefficients) {
        if (row.size() != degree + 1) {
            fail(ErrorKind::shape, "DiscMap: each coordinate needs degree + 1 coefficients");
        }
        for (const auto& c : row) {
            if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
                fail(ErrorKind::shape, "DiscMap: non-finite coefficient");
            }
        }
    }

    DiscMap phi;
    phi.coeffs_ = std::move(coefficients);
    double sup2 = 0.0;
    for (std::size_t i = 0; i < kDiscValidationSamples; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(kDiscValidationSamples);
        const cplx z = std::polar(1.0, theta);
        double s = 0.0;
        for (std::size_t j = 0; j < dimension; ++j) {
            s += std::norm(phi.coordinate(j, z));
        }
        sup2 = std::max(sup2, s);
    }
    phi.boundary_sup_ = std::sqrt(sup2);
    if (phi.boundary_sup_ > 1.0 + kDiscRangeTolerance) {
        fail(ErrorKind::domain, "DiscMap: boundary sup " + std::to_string(phi.boundary_sup_) +
                                    " leaves the unit ball");
    }
    return phi;
}

/// Flat disc z -> (z, 0, ..., 0) in B_n.
inline DiscMap flat_disc(std::size_t n) {
    std::vector<std::vector<cplx>> c(n, std::vector<cplx>(2));
    c[0][1] = 1.0;
    return validate_disc_map(std::move(c), n, 1);
}

} // namespace disc
