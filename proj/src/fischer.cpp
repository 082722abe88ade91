#include "fcauchy/fischer.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "fcauchy/sphere.hpp"

namespace fcauchy {
namespace {

void require_same_dimension(std::size_t a, std::size_t b, const char* what) {
    if (a != b)
        throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

// (2t)! / (4^t t!) for t = 0..max_t.
std::vector<BigRational> even_moments(unsigned max_t) {
    std::vector<BigRational> w;
    w.reserve(max_t + 1);
    w.emplace_back(1);
    for (unsigned t = 1; t <= max_t; ++t)
        w.push_back(w.back() * BigRational(2 * t - 1, 2));
    return w;
}

}  // namespace

std::complex<double> RealFischerValue::to_complex() const {
    return rational_part.to_complex() * std::pow(std::numbers::pi, 0.5 * static_cast<double>(n));
}

RealFischerValue& RealFischerValue::operator+=(const RealFischerValue& o) {
    require_same_dimension(n, o.n, "RealFischerValue +");
    rational_part += o.rational_part;
    return *this;
}

bool operator==(const RealFischerValue& a, const RealFischerValue& b) {
    require_same_dimension(a.n, b.n, "RealFischerValue ==");
    return a.rational_part == b.rational_part;
}

int compare(const RealFischerValue& a, const RealFischerValue& b) {
    require_same_dimension(a.n, b.n, "compare");
    if (!a.rational_part.is_real() || !b.rational_part.is_real())
        throw std::invalid_argument("compare: values are not real");
    return cmp(a.rational_part.re(), b.rational_part.re());
}

GaussianRational fischer_inner(const HomPoly& f, const HomPoly& g) {
    require_same_dimension(f.dimension(), g.dimension(), "fischer_inner");
    GaussianRational sum;
    if (f.degree() != g.degree())
        return sum;
    const auto& small = f.term_count() <= g.term_count() ? f : g;
    for (const auto& [alpha, c] : small.terms()) {
        const GaussianRational fc = f.coeff(alpha);
        const GaussianRational gc = g.coeff(alpha);
        if (gc.is_zero() || fc.is_zero())
            continue;
        sum += fc * gc.conj() * GaussianRational(BigRational(alpha.factorial()));
    }
    return sum;
}

GaussianRational fischer_inner(const GradedSeries& f, const GradedSeries& g) {
    require_same_dimension(f.dimension(), g.dimension(), "fischer_inner");
    GaussianRational sum;
    for (const auto& [m, fm] : f.parts()) {
        auto it = g.parts().find(m);
        if (it != g.parts().end())
            sum += fischer_inner(fm, it->second);
    }
    return sum;
}

BigRational gaussian_monomial_moment(std::span<const unsigned> gamma) {
    unsigned max_t = 0;
    for (unsigned e : gamma) {
        if (e % 2 != 0)
            return 0;
        max_t = std::max(max_t, e / 2);
    }
    const auto w = even_moments(max_t);
    BigRational r = 1;
    for (unsigned e : gamma)
        r *= w[e / 2];
    return r;
}

RealFischerValue real_fischer_inner(const HomPoly& f, const HomPoly& g) {
    require_same_dimension(f.dimension(), g.dimension(), "real_fischer_inner");
    const std::size_t n = f.dimension();
    RealFischerValue out{GaussianRational(), n};
    if ((f.degree() + g.degree()) % 2 != 0)
        return out;
    const auto w = even_moments((f.degree() + g.degree()) / 2);
    for (const auto& [alpha, c] : f.terms()) {
        for (const auto& [beta, d] : g.terms()) {
            BigRational moment = 1;
            bool odd = false;
            for (std::size_t j = 0; j < n; ++j) {
                const unsigned e = alpha[j] + beta[j];
                if (e % 2 != 0) {
                    odd = true;
                    break;
                }
                moment *= w[e / 2];
            }
            if (!odd)
                out.rational_part += c * d.conj() * GaussianRational(moment);
        }
    }
    return out;
}

RealFischerValue real_fischer_inner(const GradedSeries& f, const GradedSeries& g) {
    require_same_dimension(f.dimension(), g.dimension(), "real_fischer_inner");
    RealFischerValue out{GaussianRational(), f.dimension()};
    for (const auto& [m, fm] : f.parts())
        for (const auto& [l, gl] : g.parts())
            out += real_fischer_inner(fm, gl);
    return out;
}

GaussianRational norm_sq_F(const HomPoly& f) {
    return fischer_inner(f, f);
}

RealFischerValue norm_sq_rF(const HomPoly& f) {
    return real_fischer_inner(f, f);
}

SphereMaxEstimate sphere_max_estimate(const HomPoly& f, unsigned resolution) {
    const SphereGrid grid(f.dimension(), resolution);
    const FloatPoly fp(f);
    const auto best = grid_extremum(grid, [&](std::span<const double> x) { return std::abs(fp(x)); }, true);
    SphereMaxEstimate out;
    out.lower = best.value;
    out.certified_upper = best.value + lipschitz_bound(f) * grid.mesh_radius() + evaluation_slack(f);
    out.argmax = best.point;
    return out;
}

}  // namespace fcauchy
