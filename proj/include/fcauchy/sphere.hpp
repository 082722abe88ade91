#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "fcauchy/polynomial.hpp"

namespace fcauchy {

/// Angular grids on S^1 and S^2.
///
/// n = 2: resolution equally spaced angles on the circle.
/// n = 3: polar angles i*pi/resolution (i = 0..resolution) times azimuths
///        j*pi/resolution (j < 2*resolution).
/// Every point of the sphere lies within mesh_radius() (Euclidean) of a grid point.
class SphereGrid {
public:
    /// Throws std::invalid_argument unless n is 2 or 3 and resolution >= 8.
    SphereGrid(std::size_t n, unsigned resolution);

    std::size_t dimension() const { return n_; }
    unsigned resolution() const { return resolution_; }
    std::size_t size() const;
    double mesh_radius() const;
    std::vector<double> point(std::size_t index) const;

private:
    std::size_t n_;
    unsigned resolution_;
};

struct GridExtremum {
    double value = 0;
    std::vector<double> point;
};

/// Maximum (or minimum) of value(x) over the grid, evaluated in parallel
/// chunks and reduced in index order; ties keep the lowest index.
GridExtremum grid_extremum(const SphereGrid& grid, const std::function<double(std::span<const double>)>& value,
                           bool maximize);

/// Lipschitz bound for f on the closed unit ball: degree * sum |c_alpha|.
double lipschitz_bound(const HomPoly& f);

/// Allowance for floating-point evaluation error on the unit sphere.
double evaluation_slack(const HomPoly& f);

/// Double-precision copy of a polynomial for fast repeated evaluation.
class FloatPoly {
public:
    explicit FloatPoly(const HomPoly& f);
    std::complex<double> operator()(std::span<const double> x) const;

private:
    std::size_t n_;
    std::vector<std::vector<unsigned>> exps_;
    std::vector<std::complex<double>> coeffs_;
};

}  // namespace fcauchy
