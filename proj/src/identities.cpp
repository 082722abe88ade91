#include "fcauchy/identities.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <stdexcept>

#include "fcauchy/fischer.hpp"
#include "fcauchy/harmonic.hpp"
#include "fcauchy/random.hpp"

namespace fcauchy {

IdentityGrid IdentityGrid::small() {
    IdentityGrid g;
    g.moment_max = 4;
    g.p_max = 2;
    g.s_max = 2;
    g.harmonic_degree = 4;
    g.eigen_m_max = 8;
    g.eigen_n_max = 3;
    g.samples = 30;
    g.degree_max = 6;
    return g;
}

IdentityGrid IdentityGrid::standard() { return IdentityGrid{}; }

IdentityGrid IdentityGrid::full() {
    IdentityGrid g;
    g.moment_max = 10;
    g.p_max = 4;
    g.s_max = 4;
    g.harmonic_degree = 8;
    g.eigen_m_max = 20;
    g.eigen_n_max = 6;
    g.samples = 500;
    g.degree_max = 12;
    return g;
}

IdentityGrid IdentityGrid::named(const std::string& name) {
    if (name == "small")
        return small();
    if (name == "default")
        return standard();
    if (name == "full")
        return full();
    throw std::invalid_argument("unknown grid '" + name + "' (expected small, default or full)");
}

namespace {

class Tally {
public:
    explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) { result_.name = std::move(name); }

    void check(bool ok, const std::function<std::string()>& describe) {
        ++result_.instances;
        if (ok)
            return;
        ++result_.failures;
        if (!result_.counterexample)
            result_.counterexample = describe();
    }

    IdentityResult finish() {
        result_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
        return result_;
    }

private:
    IdentityResult result_;
    std::chrono::steady_clock::time_point start_;
};

std::string describe_poly(const char* label, const HomPoly& f) {
    return std::string(label) + " = " + f.to_string() + " (n=" + std::to_string(f.dimension()) + ")";
}

BigRational power(const BigRational& base, unsigned e) {
    BigRational out = 1;
    for (unsigned i = 0; i < e; ++i)
        out *= base;
    return out;
}

// n cycles through 1..3, degree uniform in [lo, degree_max]
HomPoly sample_form(Sampler& rng, const IdentityGrid& g, unsigned index, unsigned lo, bool complex_coeffs) {
    const std::size_t n = 1 + index % 3;
    const unsigned m = static_cast<unsigned>(rng.uniform_int(lo, std::max(lo, g.degree_max)));
    return rng.random_form(n, m, 5, complex_coeffs);
}

}  // namespace

IdentityResult check_moment_ratios(const IdentityGrid& g) {
    Tally t("moment-ratio");
    for (unsigned m = 1; m <= g.moment_max; ++m)
        for (unsigned k = 1; k <= g.moment_max; ++k)
            for (unsigned j = 1; j <= g.moment_max; ++j)
                for (unsigned n = 1; n <= g.moment_max; ++n) {
                    const SqrtPiScaled q = radial_moment(2 * m + 2 * j * k + n - 1) / radial_moment(2 * m + n - 1);
                    const bool ok = q.sqrt_pi_power == 0 && q.rational == moment_ratio(m, k, j, n);
                    t.check(ok, [&] {
                        std::ostringstream os;
                        os << "m=" << m << " k=" << k << " j=" << j << " n=" << n;
                        return os.str();
                    });
                }
    return t.finish();
}

IdentityResult check_eigen_identity(const IdentityGrid& g) {
    Tally t("eigen-identity");
    Sampler rng(g.seed + 1);
    for (std::size_t n = 2; n <= 3; ++n)
        for (unsigned p = 1; p <= g.p_max; ++p)
            for (unsigned s = 0; s <= g.s_max; ++s)
                for (unsigned m = 0; m <= g.harmonic_degree; ++m) {
                    const HomPoly h = rng.random_harmonic(n, m, (m + s) % 2 == 1);
                    const HomPoly q = HomPoly::radial_power(n, s) * h;
                    const bool ok = apply_F(q, p) == q * GaussianRational(eigenvalue_d(p, s, m, n));
                    t.check(ok, [&] {
                        return "p=" + std::to_string(p) + " s=" + std::to_string(s) + ", " + describe_poly("h", h);
                    });
                }
    return t.finish();
}

IdentityResult check_minimal_eigenvalue(const IdentityGrid& g) {
    Tally t("minimal-eigenvalue");
    for (unsigned p = 1; p <= g.p_max; ++p)
        for (unsigned m = 0; m <= g.eigen_m_max; ++m)
            for (unsigned n = 1; n <= g.eigen_n_max; ++n) {
                const BigRational e = min_eigenvalue_e(p, m, n);
                bool ok = e == eigenvalue_d(p, 0, m, n);
                for (unsigned s = 0; 2 * s <= m; ++s)
                    ok = ok && eigenvalue_d(p, s, m - 2 * s, n) >= e;
                const SqrtPiScaled ratio = radial_moment(2 * m + 2 * p + n - 1) / radial_moment(2 * m + n - 1);
                ok = ok && ratio.sqrt_pi_power == 0 &&
                     e == power(BigRational(4), p) * BigRational(factorial(p)) * ratio.rational;
                t.check(ok, [&] {
                    return "p=" + std::to_string(p) + " m=" + std::to_string(m) + " n=" + std::to_string(n);
                });
            }
    return t.finish();
}

IdentityResult check_laplacian_products(const IdentityGrid& g) {
    Tally t("laplacian-products");
    Sampler rng(g.seed + 2);
    for (unsigned i = 0; i < g.samples; ++i) {
        const HomPoly f = sample_form(rng, g, i, 0, i % 2 == 0);
        const HomPoly lf = laplacian(f);
        const RealFischerValue rf = real_fischer_inner(lf, f);
        const bool ok = fischer_inner(lf, f).is_zero() && rf.rational_part.is_real() &&
                        compare(rf, RealFischerValue{GaussianRational(), f.dimension()}) >= 0;
        t.check(ok, [&] { return describe_poly("f", f); });
    }
    return t.finish();
}

IdentityResult check_derivative_bounds(const IdentityGrid& g) {
    Tally t("derivative-bounds");
    Sampler rng(g.seed + 3);
    for (unsigned i = 0; i < g.samples; ++i) {
        const HomPoly f = sample_form(rng, g, i, 1, i % 2 == 1);
        const std::size_t n = f.dimension();
        const unsigned m = f.degree();
        std::vector<unsigned> e(n, 0);
        for (auto k = rng.uniform_int(1, m); k > 0; --k)
            ++e[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1))];
        const MultiIndex alpha(e);
        const HomPoly d = differentiate(f, alpha);
        const unsigned a = alpha.order();
        const bool ok_f = norm_sq_F(d).re() <= power(BigRational(m), a) * norm_sq_F(f).re();
        const bool ok_rf = compare(norm_sq_rF(d), GaussianRational(power(BigRational(2 * m), a)) * norm_sq_rF(f)) <= 0;
        t.check(ok_f && ok_rf, [&] {
            std::ostringstream os;
            os << describe_poly("f", f) << ", alpha=(";
            for (std::size_t j = 0; j < n; ++j)
                os << (j ? "," : "") << alpha[j];
            os << ")";
            return os.str();
        });
    }
    return t.finish();
}

IdentityResult check_radial_multiplication(const IdentityGrid& g) {
    Tally t("radial-multiplication");
    Sampler rng(g.seed + 4);
    for (unsigned i = 0; i < g.samples; ++i) {
        const HomPoly f = sample_form(rng, g, i, 0, true);
        const unsigned k = 1 + i % 3;
        const unsigned n = static_cast<unsigned>(f.dimension());
        const unsigned m = f.degree();
        const SqrtPiScaled ratio = radial_moment(2 * m + 4 * k + n - 1) / radial_moment(2 * m + n - 1);
        const bool ok = ratio.sqrt_pi_power == 0 &&
                        norm_sq_rF(HomPoly::radial_power(n, k) * f) == GaussianRational(ratio.rational) * norm_sq_rF(f);
        t.check(ok, [&] { return "k=" + std::to_string(k) + ", " + describe_poly("f", f); });
    }
    return t.finish();
}

IdentityResult check_standard_estimate(const IdentityGrid& g) {
    Tally t("standard-estimate");
    Sampler rng(g.seed + 5);
    for (unsigned i = 0; i < g.samples; ++i) {
        const HomPoly f = sample_form(rng, g, i, 0, i % 3 == 0);
        const unsigned p = 1 + i % 2;
        const BigRational e = min_eigenvalue_e(p, f.degree(), f.dimension());
        const bool ok = compare(norm_sq_rF(apply_F(f, p)), GaussianRational(e * e) * norm_sq_rF(f)) >= 0;
        t.check(ok, [&] { return "p=" + std::to_string(p) + ", " + describe_poly("f", f); });
    }
    return t.finish();
}

IdentityResult check_fischer_adjoint(const IdentityGrid& g) {
    Tally t("fischer-adjoint");
    Sampler rng(g.seed + 6);
    for (unsigned i = 0; i < g.samples; ++i) {
        const std::size_t n = 1 + i % 3;
        const unsigned kq = static_cast<unsigned>(rng.uniform_int(0, 2));
        const unsigned m = kq + static_cast<unsigned>(rng.uniform_int(0, std::min(6u, g.degree_max)));
        const HomPoly Q = rng.random_form(n, kq, 3, true);
        const HomPoly f = rng.random_form(n, m, 5, true);
        const HomPoly h = rng.random_form(n, m - kq, 5, true);
        const bool ok = fischer_inner(apply_symbol(Q, f), h) == fischer_inner(f, conjugate_coefficients(Q) * h);
        t.check(ok, [&] { return describe_poly("Q", Q) + ", " + describe_poly("f", f) + ", " + describe_poly("g", h); });
    }
    return t.finish();
}

IdentityResult check_partial_integration(const IdentityGrid& g) {
    Tally t("partial-integration");
    Sampler rng(g.seed + 7);
    for (unsigned i = 0; i < g.samples; ++i) {
        const HomPoly f = sample_form(rng, g, i, 0, false);
        const std::size_t n = f.dimension();
        const HomPoly h = rng.random_form(n, static_cast<unsigned>(rng.uniform_int(0, g.degree_max)));
        const std::size_t j = static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(n) - 1));
        const RealFischerValue lhs = real_fischer_inner(partial(f, j), h) + real_fischer_inner(f, partial(h, j));
        const RealFischerValue rhs = GaussianRational(2) * real_fischer_inner(HomPoly::variable(n, j) * f, h);
        t.check(lhs == rhs, [&] {
            return "j=" + std::to_string(j + 1) + ", " + describe_poly("f", f) + ", " + describe_poly("g", h);
        });
    }
    return t.finish();
}

IdentityResult check_gauss_decomposition(const IdentityGrid& g) {
    Tally t("gauss-decomposition");
    Sampler rng(g.seed + 8);
    for (unsigned i = 0; i < g.samples; ++i) {
        const HomPoly f = sample_form(rng, g, i, 0, i % 2 == 0);
        const GaussDecomposition d = gauss_decompose(f);
        bool ok = d.reconstruct() == f;
        for (const auto& c : d.components)
            ok = ok && laplacian(c.harmonic).is_zero();
        t.check(ok, [&] { return describe_poly("f", f); });
    }
    return t.finish();
}

std::vector<IdentityResult> run_identity_suites(const IdentityGrid& g) {
    return {check_moment_ratios(g),        check_eigen_identity(g),        check_minimal_eigenvalue(g),
            check_laplacian_products(g),   check_derivative_bounds(g),     check_radial_multiplication(g),
            check_standard_estimate(g),    check_fischer_adjoint(g),       check_partial_integration(g),
            check_gauss_decomposition(g)};
}

}  // namespace fcauchy
