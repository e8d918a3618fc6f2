#pragma once

// Seeded random instances shared by the unit tests and the acceptance run.

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include <disc/geometry.hpp>
#include <disc/pick.hpp>

namespace support {

using disc::cplx;
using disc::CPoint;

inline cplx uniform_disc(std::mt19937_64& rng, double r_max = 1.0) {
    std::uniform_real_distribution<double> u(0.0, 1.0);
    return std::polar(r_max * std::sqrt(u(rng)), 2.0 * std::numbers::pi * u(rng));
}

inline CPoint uniform_ball(std::mt19937_64& rng, std::size_t n, double r_max = 1.0) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    std::vector<cplx> v(n);
    double s = 0.0;
    for (auto& c : v) {
        c = cplx(g(rng), g(rng));
        s += std::norm(c);
    }
    const double r = r_max * std::pow(u(rng), 1.0 / (2.0 * static_cast<double>(n)));
    for (auto& c : v) {
        c *= r / std::sqrt(s);
    }
    return CPoint(std::move(v));
}

// nodes in |a| <= r_max with pairwise Gleason distance >= gap
inline std::vector<cplx> separated_nodes(std::mt19937_64& rng, std::size_t count, double r_max,
                                         double gap) {
    std::vector<cplx> out;
    while (out.size() < count) {
        const cplx a = uniform_disc(rng, r_max);
        bool ok = true;
        for (const auto& b : out) {
            ok = ok && disc::gleason_distance_disc(a, b) >= gap;
        }
        if (ok) {
            out.push_back(a);
        }
    }
    return out;
}

// Random polynomial disc rescaled so that its boundary sup (16384 samples) is
// 1 / (1 + margin).
inline disc::DiscMap random_disc(std::mt19937_64& rng, std::size_t n, std::size_t degree,
                                 bool fix_origin, double margin = 1e-5) {
    std::normal_distribution<double> g(0.0, 1.0);
    std::vector<std::vector<cplx>> c(n, std::vector<cplx>(degree + 1));
    for (auto& row : c) {
        for (std::size_t m = 0; m <= degree; ++m) {
            row[m] = (fix_origin && m == 0) ? cplx(0.0) : cplx(g(rng), g(rng));
        }
    }
    double sup2 = 0.0;
    for (int i = 0; i < 16384; ++i) {
        const cplx z = std::polar(1.0, 2.0 * std::numbers::pi * i / 16384.0);
        double s = 0.0;
        for (const auto& row : c) {
            cplx acc = 0.0;
            for (std::size_t m = row.size(); m-- > 0;) {
                acc = acc * z + row[m];
            }
            s += std::norm(acc);
        }
        sup2 = std::max(sup2, s);
    }
    const double scale = 1.0 / (std::sqrt(sup2) * (1.0 + margin));
    for (auto& row : c) {
        for (auto& x : row) {
            x *= scale;
        }
    }
    return disc::validate_disc_map(std::move(c), n, degree);
}

inline std::vector<CPoint> values_at(const disc::DiscMap& phi, const std::vector<cplx>& nodes) {
    std::vector<CPoint> v;
    for (const auto& a : nodes) {
        v.push_back(phi(a));
    }
    return v;
}

inline CPoint scaled(const CPoint& v, double t) {
    const double r = v.norm();
    const double s = r > 0.0 ? std::min(t, 1.0 / r) : t;
    return cplx(s) * v;
}

} // namespace support
