#include "fcauchy/ellipticity.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "fcauchy/sphere.hpp"

namespace fcauchy {

std::string to_string(Verdict v) {
    switch (v) {
    case Verdict::elliptic:
        return "elliptic";
    case Verdict::not_elliptic:
        return "not_elliptic";
    case Verdict::inconclusive:
        return "inconclusive";
    }
    return "inconclusive";
}

bool is_real_on_reals(const HomPoly& p) {
    return p.has_real_coefficients();
}

bool verify_orthogonal_for_sigma(const LinearChange& a) {
    return verify_transform(Matrix::identity(a.dimension()), a);
}

bool verify_transform(const Matrix& b, const LinearChange& a) {
    if (b.rows() != a.dimension() || b.cols() != a.dimension())
        throw std::invalid_argument("quadratic form and change of variables differ in dimension");
    return a.matrix().transpose() * b * a.matrix() == Matrix::identity(a.dimension());
}

SphereMin sphere_min_certified(const HomPoly& p, unsigned resolution) {
    if (!is_real_on_reals(p))
        throw std::invalid_argument("sphere_min_certified requires real coefficients");
    const SphereGrid grid(p.dimension(), resolution);
    const FloatPoly fp(p);
    const auto best = grid_extremum(grid, [&](std::span<const double> x) { return fp(x).real(); }, false);
    SphereMin out;
    out.grid_min = best.value;
    out.certified_lower = best.value - lipschitz_bound(p) * grid.mesh_radius() - evaluation_slack(p);
    out.argmin = best.point;
    return out;
}

EllipticityCertificate elliptic_check(const HomPoly& p, unsigned resolution) {
    EllipticityCertificate cert;
    cert.transformed = p;
    cert.resolution = resolution;
    cert.real_on_reals = is_real_on_reals(p);
    if (!cert.real_on_reals) {
        cert.verdict = Verdict::not_elliptic;
        for (const auto& [alpha, c] : p.terms())
            if (!c.is_real()) {
                cert.note = "nonreal coefficient " + c.to_string() + " on " + HomPoly::monomial(alpha).to_string();
                break;
            }
        return cert;
    }
    if (p.degree() % 2 != 0) {
        cert.verdict = Verdict::not_elliptic;
        cert.note = "odd degree: P(-x) = -P(x)";
    }
    const SphereMin m = sphere_min_certified(p, resolution);
    cert.delta_grid_min = m.grid_min;
    cert.delta_lower = m.certified_lower;
    if (m.grid_min <= 0) {
        cert.verdict = Verdict::not_elliptic;
        cert.witness = m.argmin;
        if (cert.note.empty())
            cert.note = "grid point with P <= 0";
    } else if (p.degree() % 2 != 0) {
        cert.verdict = Verdict::not_elliptic;
    } else if (m.certified_lower > 0) {
        cert.verdict = Verdict::elliptic;
    } else {
        cert.verdict = Verdict::inconclusive;
        // mesh radius needed: grid_min / L for the Lipschitz step to stay positive
        const double needed = std::ceil(std::numbers::pi * lipschitz_bound(p) / m.grid_min);
        std::ostringstream os;
        os << "certified bound not positive; resolution of about " << needed << " is needed";
        cert.note = os.str();
    }
    return cert;
}

EllipticityCertificate b_elliptic_check(const HomPoly& p, const Matrix& b, const LinearChange& a,
                                        unsigned resolution) {
    if (p.dimension() != a.dimension())
        throw std::invalid_argument("polynomial and change of variables differ in dimension");
    if (p.degree() % 2 != 0)
        throw std::invalid_argument("B-ellipticity requires an even degree");
    if (!verify_transform(b, a))
        throw TransformInvalid("B(A tau) != Sigma(tau) for the supplied A");
    const HomPoly transformed = substitute_linear(p, a.inverse_transpose());
    EllipticityCertificate cert = elliptic_check(transformed, resolution);
    if (cert.verdict != Verdict::elliptic) {
        const std::string scope = "verdict concerns the supplied A only";
        cert.note = cert.note.empty() ? scope : cert.note + "; " + scope;
    }
    return cert;
}

HomPoly wave_substitution(const HomPoly& p, const std::set<std::size_t>& imaginary_axes) {
    const std::size_t n = p.dimension();
    HomPoly out(n, p.degree());
    for (const auto& [alpha, c] : p.terms()) {
        unsigned power = 0;
        for (std::size_t j : imaginary_axes) {
            if (j >= n)
                throw std::invalid_argument("wave_substitution: axis out of range");
            power += alpha[j];
        }
        GaussianRational factor = 1;
        switch (power % 4) {
        case 1:
            factor = GaussianRational::i();
            break;
        case 2:
            factor = -1;
            break;
        case 3:
            factor = -GaussianRational::i();
            break;
        default:
            break;
        }
        out.add_term(alpha, c * factor);
    }
    return out;
}

}  // namespace fcauchy
