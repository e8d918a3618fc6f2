#pragma once

///
/// \file pick.hpp
///
/// Pick-Nevanlinna feasibility for maps from the disc into the ball B_n or the
/// polydisc D^n, the operator norm of the diagonal representation on the
/// span of Szego kernels, and the Schur recursion for scalar targets.
///

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

#include <Eigen/Cholesky>
#include <Eigen/Core>
#include <Eigen/Eigenvalues>

#include <disc/error.hpp>
#include <disc/geometry.hpp>

namespace disc {

using CMatrix = Eigen::MatrixXcd;

enum class TargetDomain { ball, polydisc };

inline const char* to_string(TargetDomain d) {
    return d == TargetDomain::ball ? "ball" : "polydisc";
}

/// Finite interpolation data alpha_k -> v_k.
class PickProblem {
public:
    PickProblem(std::vector<cplx> nodes, std::vector<CPoint> targets,
                TargetDomain domain = TargetDomain::ball)
        : nodes_(std::move(nodes)), targets_(std::move(targets)), domain_(domain) {
        if (nodes_.empty()) {
            fail(ErrorKind::shape, "PickProblem: no nodes");
        }
        if (nodes_.size() != targets_.size()) {
            fail(ErrorKind::shape, "PickProblem: nodes and targets differ in length");
        }
        dim_ = targets_.front().dim();
        for (const auto& v : targets_) {
            if (v.dim() != dim_) {
                fail(ErrorKind::shape, "PickProblem: targets differ in dimension");
            }
            if (domain_ == TargetDomain::ball) {
                if (v.norm() > 1.0 + 1e-12) {
                    fail(ErrorKind::domain, "PickProblem: target outside the closed ball");
                }
            } else {
                for (const auto& c : v.coords()) {
                    if (std::abs(c) > 1.0 + 1e-12) {
                        fail(ErrorKind::domain, "PickProblem: target outside the closed polydisc");
                    }
                }
            }
        }
        for (const auto& a : nodes_) {
            require_in_disc(a, "PickProblem");
        }
        require_distinct_nodes(nodes_, "PickProblem");
    }

    std::size_t size() const noexcept { return nodes_.size(); }
    std::size_t dim() const noexcept { return dim_; }
    TargetDomain domain() const noexcept { return domain_; }
    const std::vector<cplx>& nodes() const noexcept { return nodes_; }
    const std::vector<CPoint>& targets() const noexcept { return targets_; }

    static void require_distinct_nodes(const std::vector<cplx>& nodes, const char* who) {
        for (std::size_t k = 0; k < nodes.size(); ++k) {
            for (std::size_t l = k + 1; l < nodes.size(); ++l) {
                if (std::abs(nodes[k] - nodes[l]) <= 1e-12) {
                    fail(ErrorKind::degenerate, std::string(who) + ": coincident nodes " +
                                                    std::to_string(k) + " and " +
                                                    std::to_string(l));
                }
            }
        }
    }

private:
    std::vector<cplx> nodes_;
    std::vector<CPoint> targets_;
    TargetDomain domain_;
    std::size_t dim_ = 0;
};

/// Complex Hermitian matrix; construction checks conj-symmetry and then
/// symmetrizes away rounding.
class HermitianMatrix {
public:
    explicit HermitianMatrix(CMatrix m) {
        if (m.rows() != m.cols()) {
            fail(ErrorKind::shape, "HermitianMatrix: not square");
        }
        const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
        const double asym = (m - m.adjoint()).cwiseAbs().maxCoeff();
        if (asym > 1e-12 * scale) {
            fail(ErrorKind::shape, "HermitianMatrix: not Hermitian (defect " +
                                       std::to_string(asym) + ")");
        }
        m_ = 0.5 * (m + m.adjoint());
    }

    Eigen::Index order() const noexcept { return m_.rows(); }
    const CMatrix& matrix() const noexcept { return m_; }
    cplx operator()(Eigen::Index k, Eigen::Index l) const { return m_(k, l); }

    Eigen::VectorXd eigenvalues() const {
        Eigen::SelfAdjointEigenSolver<CMatrix> es(m_, Eigen::EigenvaluesOnly);
        return es.eigenvalues();
    }

private:
    CMatrix m_;
};

struct FeasibilityVerdict {
    bool feasible = false;
    double min_eigenvalue = 0.0;
    double tolerance = 0.0;   // absolute threshold: feasible iff min_eigenvalue >= -tolerance
    Eigen::VectorXd eigenvalues;
    CMatrix witness;
};

inline constexpr double kDefaultPsdTolerance = 1e-9;

/// Smallest eigenvalue test with a threshold relative to the matrix scale
/// max(trace / N, max |entry|).
inline FeasibilityVerdict psd_check(const HermitianMatrix& m, double tol = kDefaultPsdTolerance) {
    if (!(tol > 0.0)) {
        fail(ErrorKind::parameter, "psd_check: tolerance must be positive");
    }
    const CMatrix& a = m.matrix();
    const double n = static_cast<double>(a.rows());
    const double scale = std::max(std::abs(a.trace().real()) / n, a.cwiseAbs().maxCoeff());
    FeasibilityVerdict v;
    v.eigenvalues = m.eigenvalues();
    v.min_eigenvalue = v.eigenvalues.minCoeff();
    v.tolerance = tol * scale;
    v.feasible = v.min_eigenvalue >= -v.tolerance;
    v.witness = a;
    return v;
}

/// G[k][l] = 1 / (1 - conj(alpha_k) alpha_l)
inline HermitianMatrix kernel_gram(const std::vector<cplx>& nodes) {
    for (const auto& a : nodes) {
        require_in_disc(a, "kernel_gram");
    }
    PickProblem::require_distinct_nodes(nodes, "kernel_gram");
    const auto n = static_cast<Eigen::Index>(nodes.size());
    CMatrix g(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            g(k, l) = 1.0 / (1.0 - std::conj(nodes[k]) * nodes[l]);
        }
    }
    return HermitianMatrix(std::move(g));
}

/// P[k][l] = (1 - <v_l, v_k>) / (1 - conj(alpha_k) alpha_l)
inline HermitianMatrix build_pick_matrix(const PickProblem& p) {
    const auto n = static_cast<Eigen::Index>(p.size());
    const auto& a = p.nodes();
    const auto& v = p.targets();
    CMatrix m(n, n);
    for (Eigen::Index k = 0; k < n; ++k) {
        for (Eigen::Index l = 0; l < n; ++l) {
            m(k, l) = (1.0 - inner(v[l], v[k])) / (1.0 - std::conj(a[k]) * a[l]);
        }
    }
    return HermitianMatrix(std::move(m));
}

/// One scalar Pick matrix per coordinate: (1 - conj(v_k^m) v_l^m) / (1 - conj(alpha_k) alpha_l).
inline std::vector<HermitianMatrix> build_polydisc_pick_matrices(const PickProblem& p) {
    const auto n = static_cast<Eigen::Index>(p.size());
    const auto& a = p.nodes();
    const auto& v = p.targets();
    std::vector<HermitianMatrix> out;
    out.reserve(p.dim());
    for (std::size_t m = 0; m < p.dim(); ++m) {
        CMatrix mat(n, n);
        for (Eigen::Index k = 0; k < n; ++k) {
            for (Eigen::Index l = 0; l < n; ++l) {
                mat(k, l) = (1.0 - std::conj(v[k][m]) * v[l][m]) / (1.0 - std::conj(a[k]) * a[l]);
            }
        }
        out.emplace_back(std::move(mat));
    }
    return out;
}

struct PickCheck {
    bool feasible = false;
    double min_eigenvalue = 0.0;               // over all matrices
    std::vector<FeasibilityVerdict> verdicts;  // one (ball) or n (polydisc)
};

/// Feasibility of the problem in its own target domain. For the polydisc every
/// coordinate matrix must pass.
inline PickCheck pick_check(const PickProblem& p, double tol = kDefaultPsdTolerance) {
    PickCheck out;
    if (p.domain() == TargetDomain::ball) {
        out.verdicts.push_back(psd_check(build_pick_matrix(p), tol));
    } else {
        for (const auto& m : build_polydisc_pick_matrices(p)) {
            out.verdicts.push_back(psd_check(m, tol));
        }
    }
    out.feasible = true;
    out.min_eigenvalue = std::numeric_limits<double>::infinity();
    for (const auto& v : out.verdicts) {
        out.feasible = out.feasible && v.feasible;
        out.min_eigenvalue = std::min(out.min_eigenvalue, v.min_eigenvalue);
    }
    return out;
}

/// A = sum_m D_m^* G D_m with D_m = diag(v_k^m). In the coefficient basis of
/// the kernels k_alpha this is (the complex conjugate of) the Gram matrix of
/// pi_sigma(f) applied to E_sigma, so that G - A is exactly the Pick matrix.
inline CMatrix representation_form(const HermitianMatrix& gram, const std::vector<CPoint>& values) {
    const CMatrix& g = gram.matrix();
    const Eigen::Index n = g.rows();
    if (static_cast<Eigen::Index>(values.size()) != n) {
        fail(ErrorKind::shape, "representation_norm: values and nodes differ in length");
    }
    const std::size_t dim = values.front().dim();
    CMatrix a = CMatrix::Zero(n, n);
    for (std::size_t m = 0; m < dim; ++m) {
        for (Eigen::Index k = 0; k < n; ++k) {
            for (Eigen::Index l = 0; l < n; ++l) {
                a(k, l) += std::conj(values[k][m]) * g(k, l) * values[l][m];
            }
        }
    }
    return a;
}

/// Norm of pi_sigma(f) on E_sigma = span{k_alpha}: square root of the largest
/// generalized eigenvalue of A c = mu G c.
inline double representation_norm(const std::vector<cplx>& nodes, const std::vector<CPoint>& values) {
    if (nodes.size() != values.size() || nodes.empty()) {
        fail(ErrorKind::shape, "representation_norm: values and nodes differ in length");
    }
    for (const auto& v : values) {
        if (v.dim() != values.front().dim()) {
            fail(ErrorKind::shape, "representation_norm: values differ in dimension");
        }
        if (v.norm() > 1.0 + 1e-12) {
            fail(ErrorKind::domain, "representation_norm: value outside the closed ball");
        }
    }
    const HermitianMatrix gram = kernel_gram(nodes);
    const CMatrix a = representation_form(gram, values);
    Eigen::LLT<CMatrix> llt(gram.matrix());
    if (llt.info() != Eigen::Success) {
        fail(ErrorKind::degenerate, "representation_norm: kernel Gram matrix is singular");
    }
    // L^{-1} A L^{-*} has the generalized eigenvalues of (A, G)
    CMatrix c = llt.matrixL().solve(a);
    c = llt.matrixL().solve(c.adjoint().eval()).adjoint();
    c = 0.5 * (c + c.adjoint()).eval();
    Eigen::SelfAdjointEigenSolver<CMatrix> es(c, Eigen::EigenvaluesOnly);
    const double mu = es.eigenvalues().maxCoeff();
    if (!std::isfinite(mu)) {
        fail(ErrorKind::degenerate, "representation_norm: non-finite generalized eigenvalue");
    }
    return std::sqrt(std::max(0.0, mu));
}

/// Rational Schur function produced by the Schur (Nevanlinna) recursion:
///   f_j = (gamma_j + b_j f_{j+1}) / (1 + conj(gamma_j) b_j f_{j+1}),
///   b_j(z) = (z - c_j) / (1 - conj(c_j) z),
/// ending in a constant tail: 0 (free parameter) or a unimodular constant when
/// the Pick matrix is singular.
class ScalarInterpolant {
public:
    ScalarInterpolant(std::vector<cplx> centers, std::vector<cplx> gammas, cplx tail)
        : centers_(std::move(centers)), gammas_(std::move(gammas)), tail_(tail) {}

    const std::vector<cplx>& centers() const noexcept { return centers_; }
    const std::vector<cplx>& schur_parameters() const noexcept { return gammas_; }
    cplx tail() const noexcept { return tail_; }

    /// Number of effective Blaschke factors.
    std::size_t degree() const noexcept {
        if (tail_ == cplx(0.0) && !centers_.empty()) {
            return centers_.size() - 1;
        }
        return centers_.size();
    }

    cplx operator()(cplx z) const {
        cplx f = tail_;
        for (std::size_t j = centers_.size(); j-- > 0;) {
            const cplx b = (z - centers_[j]) / (1.0 - std::conj(centers_[j]) * z);
            const cplx bf = b * f;
            f = (gammas_[j] + bf) / (1.0 + std::conj(gammas_[j]) * bf);
        }
        return f;
    }

private:
    std::vector<cplx> centers_;
    std::vector<cplx> gammas_;
    cplx tail_;
};

inline constexpr double kRankThreshold = 1e-9;

/// Schur recursion for scalar data. Requires a feasible Pick matrix; the
/// recursion is shortened to rank(P) steps when P is singular.
inline ScalarInterpolant scalar_np_solve(const PickProblem& p, double tol = kDefaultPsdTolerance) {
    if (p.dim() != 1) {
        fail(ErrorKind::precondition, "scalar_np_solve: targets must be scalar (n = 1)");
    }
    const FeasibilityVerdict v = psd_check(build_pick_matrix(p), tol);
    if (!v.feasible) {
        throw InfeasibleError("scalar_np_solve: Pick matrix is not positive semidefinite",
                              v.min_eigenvalue);
    }
    const std::size_t n = p.size();
    const double trace = v.witness.trace().real();
    std::size_t rank = 0;
    for (Eigen::Index i = 0; i < v.eigenvalues.size(); ++i) {
        if (v.eigenvalues[i] > kRankThreshold * std::max(trace, 0.0)) {
            ++rank;
        }
    }

    std::vector<cplx> z = p.nodes();
    std::vector<cplx> w(n);
    for (std::size_t k = 0; k < n; ++k) {
        w[k] = p.targets()[k][0];
    }

    std::vector<cplx> centers;
    std::vector<cplx> gammas;
    for (std::size_t j = 0; j < rank; ++j) {
        const cplx gamma = w[j];
        if (std::abs(gamma) >= 1.0) {
            fail(ErrorKind::conditioning,
                 "scalar_np_solve: Schur parameter " + std::to_string(j) + " has modulus " +
                     std::to_string(std::abs(gamma)) + " >= 1");
        }
        centers.push_back(z[j]);
        gammas.push_back(gamma);
        for (std::size_t k = j + 1; k < n; ++k) {
            const cplx b = (z[k] - z[j]) / (1.0 - std::conj(z[j]) * z[k]);
            w[k] = (w[k] - gamma) / (1.0 - std::conj(gamma) * w[k]) / b;
        }
    }
    if (rank == n) {
        return ScalarInterpolant(std::move(centers), std::move(gammas), 0.0);
    }
    // Singular case: the remaining reduced values are one unimodular constant.
    const double mod = std::abs(w[rank]);
    if (std::abs(mod - 1.0) > 1e-6) {
        fail(ErrorKind::conditioning, "scalar_np_solve: reduced value at the rank step has modulus " +
                                          std::to_string(mod) + ", expected 1");
    }
    return ScalarInterpolant(std::move(centers), std::move(gammas), w[rank] / mod);
}

struct InterpolationReport {
    std::vector<double> residuals;   // |f(alpha_k) - v_k|
    double max_residual = 0.0;
    double boundary_sup = 0.0;       // over kDiscValidationSamples boundary points
};

/// Residuals and boundary sup for any map returning a CPoint or a scalar.
template <typename F>
InterpolationReport verify_interpolant(F&& f, const PickProblem& p) {
    auto as_point = [&](cplx z) {
        if constexpr (std::is_convertible_v<decltype(f(z)), cplx>) {
            return CPoint{static_cast<cplx>(f(z))};
        } else {
            return CPoint(f(z));
        }
    };
    InterpolationReport r;
    for (std::size_t k = 0; k < p.size(); ++k) {
        const double res = (as_point(p.nodes()[k]) - p.targets()[k]).norm();
        r.residuals.push_back(res);
        r.max_residual = std::max(r.max_residual, res);
    }
    for (std::size_t i = 0; i < kDiscValidationSamples; ++i) {
        const double theta = 2.0 * std::numbers::pi * static_cast<double>(i) /
                             static_cast<double>(kDiscValidationSamples);
        r.boundary_sup = std::max(r.boundary_sup, as_point(std::polar(1.0, theta)).norm());
    }
    return r;
}

} // namespace disc
