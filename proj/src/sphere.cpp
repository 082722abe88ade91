#include "fcauchy/sphere.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fcauchy/parallel.hpp"

namespace fcauchy {

SphereGrid::SphereGrid(std::size_t n, unsigned resolution) : n_(n), resolution_(resolution) {
    if (n != 2 && n != 3)
        throw std::invalid_argument("sphere grids support n = 2 or n = 3 only, got n = " + std::to_string(n));
    if (resolution < 8)
        throw std::invalid_argument("sphere grid resolution must be >= 8");
}

std::size_t SphereGrid::size() const {
    if (n_ == 2)
        return resolution_;
    return static_cast<std::size_t>(resolution_ + 1) * 2 * resolution_;
}

double SphereGrid::mesh_radius() const {
    const double step = std::numbers::pi / resolution_;
    if (n_ == 2)
        return 2.0 * std::sin(step / 2.0);
    // Half a polar step along the meridian plus at most half an azimuth
    // step along the parallel; the chord is shorter than this path.
    return step / 2.0 + step / 2.0;
}

std::vector<double> SphereGrid::point(std::size_t index) const {
    if (n_ == 2) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(index) / resolution_;
        return {std::cos(t), std::sin(t)};
    }
    const std::size_t azimuths = 2 * static_cast<std::size_t>(resolution_);
    const double theta = std::numbers::pi * static_cast<double>(index / azimuths) / resolution_;
    const double phi = std::numbers::pi * static_cast<double>(index % azimuths) / resolution_;
    return {std::sin(theta) * std::cos(phi), std::sin(theta) * std::sin(phi), std::cos(theta)};
}

GridExtremum grid_extremum(const SphereGrid& grid, const std::function<double(std::span<const double>)>& value,
                           bool maximize) {
    const std::size_t count = grid.size();
    const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(worker_count(), count));
    const std::size_t chunk = (count + chunks - 1) / chunks;
    std::vector<std::pair<double, std::size_t>> best(chunks, {0.0, count});
    parallel_chunks(chunks, [&](std::size_t cb, std::size_t ce) {
        for (std::size_t c = cb; c < ce; ++c) {
            const std::size_t begin = c * chunk;
            const std::size_t end = std::min(count, begin + chunk);
            for (std::size_t i = begin; i < end; ++i) {
                const auto x = grid.point(i);
                const double v = value(x);
                auto& [bv, bi] = best[c];
                if (bi == count || (maximize ? v > bv : v < bv)) {
                    bv = v;
                    bi = i;
                }
            }
        }
    });
    GridExtremum out;
    std::size_t arg = count;
    for (const auto& [v, i] : best) {
        if (i == count)
            continue;
        if (arg == count || (maximize ? v > out.value : v < out.value)) {
            out.value = v;
            arg = i;
        }
    }
    out.point = grid.point(arg);
    return out;
}

double lipschitz_bound(const HomPoly& f) {
    return f.degree() * f.coefficient_l1_norm();
}

double evaluation_slack(const HomPoly& f) {
    return 1e-12 * (1.0 + f.coefficient_l1_norm());
}

FloatPoly::FloatPoly(const HomPoly& f) : n_(f.dimension()) {
    for (const auto& [alpha, c] : f.terms()) {
        exps_.push_back(alpha.exponents());
        coeffs_.push_back(c.to_complex());
    }
}

std::complex<double> FloatPoly::operator()(std::span<const double> x) const {
    std::complex<double> sum = 0;
    for (std::size_t t = 0; t < coeffs_.size(); ++t) {
        double mono = 1;
        for (std::size_t j = 0; j < n_; ++j)
            for (unsigned e = 0; e < exps_[t][j]; ++e)
                mono *= x[j];
        sum += coeffs_[t] * mono;
    }
    return sum;
}

}  // namespace fcauchy
