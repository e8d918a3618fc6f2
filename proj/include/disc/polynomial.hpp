#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include <disc/error.hpp>
#include <disc/geometry.hpp>

namespace disc {

/// Holomorphic polynomial on C^n, sum of c_alpha w^alpha.
class Polynomial {
public:
    struct Term {
        cplx coefficient;
        std::vector<unsigned> exponents;
    };

    Polynomial(std::size_t dimension, std::vector<Term> terms)
        : dim_(dimension), terms_(std::move(terms)) {
        if (dim_ == 0) {
            fail(ErrorKind::shape, "Polynomial: dimension must be at least 1");
        }
        for (const auto& t : terms_) {
            if (t.exponents.size() != dim_) {
                fail(ErrorKind::shape, "Polynomial: exponent vector length != dimension");
            }
            if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag())) {
                fail(ErrorKind::shape, "Polynomial: non-finite coefficient");
            }
        }
    }

    static Polynomial constant(std::size_t n, cplx c) {
        return Polynomial(n, {Term{c, std::vector<unsigned>(n, 0)}});
    }

    /// c * w^exponents
    static Polynomial monomial(std::vector<unsigned> exponents, cplx c = 1.0) {
        const std::size_t n = exponents.size();
        return Polynomial(n, {Term{c, std::move(exponents)}});
    }

    std::size_t dim() const noexcept { return dim_; }
    const std::vector<Term>& terms() const noexcept { return terms_; }

    cplx operator()(const CPoint& w) const {
        if (w.dim() != dim_) {
            fail(ErrorKind::shape, "Polynomial: evaluation point has wrong dimension");
        }
        cplx acc = 0.0;
        for (const auto& t : terms_) {
            cplx m = t.coefficient;
            for (std::size_t j = 0; j < dim_; ++j) {
                for (unsigned e = 0; e < t.exponents[j]; ++e) {
                    m *= w[j];
                }
            }
            acc += m;
        }
        return acc;
    }

    cplx at_origin() const {
        cplx c = 0.0;
        for (const auto& t : terms_) {
            bool constant = true;
            for (auto e : t.exponents) {
                constant = constant && e == 0;
            }
            if (constant) {
                c += t.coefficient;
            }
        }
        return c;
    }

    bool is_zero() const {
        for (const auto& t : terms_) {
            if (t.coefficient != cplx(0.0)) {
                return false;
            }
        }
        return true;
    }

private:
    std::size_t dim_;
    std::vector<Term> terms_;
};

} // namespace disc
