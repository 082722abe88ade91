#pragma once

#include <span>

#include "fcauchy/polynomial.hpp"

namespace fcauchy {

/// Value of the Gaussian-weighted product, rational_part * pi^(n/2).
///
/// The pi^(n/2) factor is the same for every value in one dimension, so
/// equality and ordering of same-dimension values reduce to exact rational
/// comparisons. Mixing dimensions throws std::invalid_argument.
struct RealFischerValue {
    GaussianRational rational_part;
    std::size_t n = 0;

    /// rational_part * pi^(n/2) as a complex double.
    std::complex<double> to_complex() const;

    RealFischerValue& operator+=(const RealFischerValue& o);
    friend RealFischerValue operator+(RealFischerValue a, const RealFischerValue& b) { return a += b; }
    friend RealFischerValue operator*(const GaussianRational& c, const RealFischerValue& v) {
        return {c * v.rational_part, v.n};
    }
    friend bool operator==(const RealFischerValue& a, const RealFischerValue& b);
};

/// Orders two real-valued same-dimension values: -1, 0 or 1.
/// Throws std::invalid_argument if either value has a nonzero imaginary part.
int compare(const RealFischerValue& a, const RealFischerValue& b);

/// <f,g>_F = sum_alpha alpha! c_alpha conj(d_alpha). Different degrees are orthogonal.
GaussianRational fischer_inner(const HomPoly& f, const HomPoly& g);
GaussianRational fischer_inner(const GradedSeries& f, const GradedSeries& g);

/// Integral over R^n of x^gamma exp(-|x|^2), divided by pi^(n/2):
/// prod_i gamma_i! / (4^(gamma_i/2) (gamma_i/2)!) when every gamma_i is even, else 0.
BigRational gaussian_monomial_moment(std::span<const unsigned> gamma);

/// <f,g>_rF = integral over R^n of f conj(g) exp(-|x|^2) dx. Unlike the
/// Fischer product, parts of different degree need not be orthogonal.
RealFischerValue real_fischer_inner(const HomPoly& f, const HomPoly& g);
RealFischerValue real_fischer_inner(const GradedSeries& f, const GradedSeries& g);

GaussianRational norm_sq_F(const HomPoly& f);
RealFischerValue norm_sq_rF(const HomPoly& f);

/// Grid estimate of max over the unit sphere of |f|.
struct SphereMaxEstimate {
    double lower = 0;            ///< best grid value, <= true maximum
    double certified_upper = 0;  ///< lower + Lipschitz * mesh radius, >= true maximum
    std::vector<double> argmax;
};

/// Requires n in {2,3} and resolution >= 8; throws std::invalid_argument otherwise.
SphereMaxEstimate sphere_max_estimate(const HomPoly& f, unsigned resolution);

}  // namespace fcauchy
