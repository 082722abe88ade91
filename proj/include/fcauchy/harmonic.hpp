#pragma once

#include <vector>

#include "fcauchy/polynomial.hpp"

namespace fcauchy {

/// f_m = sum_s |x|^(2s) h_(m-2s) with every h harmonic.
struct GaussDecomposition {
    struct Component {
        unsigned s = 0;
        HomPoly harmonic;  ///< degree m - 2s; may be zero
    };

    std::size_t n = 0;
    unsigned degree = 0;
    /// One entry per s = 0 .. floor(m/2), in increasing s.
    std::vector<Component> components;

    /// sum_s |x|^(2s) h_(m-2s).
    HomPoly reconstruct() const;
    std::size_t nonzero_count() const;
};

/// Exact Gauss decomposition. Computes Delta^j f for j = floor(m/2) .. 0 and
/// back-substitutes through the triangular system
///   Delta^j f = sum_{s>=j} c(j,s) |x|^(2(s-j)) h_(m-2s),
/// whose constants come from iterating laplacian_radial_constant.
GaussDecomposition gauss_decompose(const HomPoly& f);

/// Delta(|x|^(2s) h) = c |x|^(2s-2) h for harmonic h: c = 2s(2s - 2 + 2 deg h + n).
BigRational laplacian_radial_constant(unsigned s, unsigned deg_h, std::size_t n);

/// d_p(s,m) = 2^p (s+p)...(s+1) * (2s+2p-2+n+2m)...(2s+n+2m): the eigenvalue of
/// q -> Delta^p(|x|^(2p) q) on |x|^(2s) h with h harmonic of degree m.
BigRational eigenvalue_d(unsigned p, unsigned s, unsigned m, std::size_t n);

/// e_{p,m} = 2^p p! (2m+n)(2m+n+2)...(2m+n+2(p-1)), the smallest eigenvalue on degree m.
BigRational min_eigenvalue_e(unsigned p, unsigned m, std::size_t n);

/// F_{2p}(q) = Delta^p(|x|^(2p) q).
HomPoly apply_F(const HomPoly& q, unsigned p);

}  // namespace fcauchy
