#include "fcauchy/random.hpp"

#include <stdexcept>

#include "fcauchy/harmonic.hpp"

namespace fcauchy {

std::int64_t Sampler::uniform_int(std::int64_t lo, std::int64_t hi) {
    if (hi < lo)
        throw std::invalid_argument("Sampler::uniform_int: empty range");
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<std::int64_t>(engine_() % span);
}

HomPoly Sampler::random_form(std::size_t n, unsigned m, long bound, bool complex_coeffs) {
    const auto basis = monomial_basis(n, m);
    for (;;) {
        HomPoly f(n, m);
        for (const auto& alpha : basis) {
            const long re = uniform_int(-bound, bound);
            const long im = complex_coeffs ? uniform_int(-bound, bound) : 0;
            f.add_term(alpha, GaussianRational(BigRational(re), BigRational(im)));
        }
        if (!f.is_zero())
            return f;
    }
}

HomPoly Sampler::random_harmonic(std::size_t n, unsigned m, bool complex_coeffs) {
    if (n < 2 && m > 1)
        throw std::invalid_argument("no nonzero harmonic forms of degree > 1 in one variable");
    for (;;) {
        HomPoly h = gauss_decompose(random_form(n, m, 5, complex_coeffs)).components.front().harmonic;
        if (!h.is_zero())
            return h;
    }
}

}  // namespace fcauchy
