#include "fcauchy/harmonic.hpp"

#include <stdexcept>

namespace fcauchy {

HomPoly GaussDecomposition::reconstruct() const {
    HomPoly sum(n, degree);
    for (const auto& c : components)
        if (!c.harmonic.is_zero())
            sum += HomPoly::radial_power(n, c.s) * c.harmonic;
    return sum;
}

std::size_t GaussDecomposition::nonzero_count() const {
    std::size_t k = 0;
    for (const auto& c : components)
        k += c.harmonic.is_zero() ? 0 : 1;
    return k;
}

BigRational laplacian_radial_constant(unsigned s, unsigned deg_h, std::size_t n) {
    if (s == 0)
        return 0;
    return BigRational(2 * s) * BigRational(static_cast<long>(2 * s + 2 * deg_h + n) - 2);
}

GaussDecomposition gauss_decompose(const HomPoly& f) {
    const std::size_t n = f.dimension();
    const unsigned m = f.degree();
    const unsigned top = m / 2;

    // lap[j] = Delta^j f
    std::vector<HomPoly> lap;
    lap.reserve(top + 1);
    lap.push_back(f);
    for (unsigned j = 1; j <= top; ++j)
        lap.push_back(laplacian(lap.back()));

    // c(j, s) = prod_{t=0}^{j-1} laplacian_radial_constant(s - t, m - 2s, n)
    auto coefficient = [&](unsigned j, unsigned s) {
        BigRational c = 1;
        for (unsigned t = 0; t < j; ++t)
            c *= laplacian_radial_constant(s - t, m - 2 * s, n);
        return c;
    };

    std::vector<HomPoly> h(top + 1);
    for (unsigned j = top + 1; j-- > 0;) {
        HomPoly rest = lap[j];
        for (unsigned s = j + 1; s <= top; ++s) {
            if (h[s].is_zero())
                continue;
            rest -= HomPoly::radial_power(n, s - j) * h[s] * GaussianRational(coefficient(j, s));
        }
        const BigRational diag = coefficient(j, j);
        if (sgn(diag) == 0)
            throw std::logic_error("gauss_decompose: vanishing diagonal constant");
        HomPoly hj(n, m - 2 * j);
        hj += rest * GaussianRational(1 / diag);
        h[j] = std::move(hj);
    }

    GaussDecomposition out;
    out.n = n;
    out.degree = m;
    for (unsigned s = 0; s <= top; ++s)
        out.components.push_back({s, std::move(h[s])});
    return out;
}

BigRational eigenvalue_d(unsigned p, unsigned s, unsigned m, std::size_t n) {
    if (p == 0)
        throw std::domain_error("eigenvalue_d requires p >= 1");
    BigInt v = 1;
    v <<= p;
    for (unsigned t = 1; t <= p; ++t)
        v *= s + t;
    for (unsigned t = 0; t < p; ++t)
        v *= static_cast<unsigned long>(2 * s + n + 2 * m + 2 * t);
    return BigRational(v);
}

BigRational min_eigenvalue_e(unsigned p, unsigned m, std::size_t n) {
    if (p == 0)
        throw std::domain_error("min_eigenvalue_e requires p >= 1");
    BigInt v = factorial(p);
    v <<= p;
    for (unsigned t = 0; t < p; ++t)
        v *= static_cast<unsigned long>(2 * m + n + 2 * t);
    return BigRational(v);
}

HomPoly apply_F(const HomPoly& q, unsigned p) {
    if (p == 0)
        throw std::domain_error("apply_F requires p >= 1");
    HomPoly r = laplacian_power(HomPoly::radial_power(q.dimension(), p) * q, p);
    if (r.is_zero())
        return HomPoly(q.dimension(), q.degree());
    return r;
}

}  // namespace fcauchy
