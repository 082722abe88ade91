#pragma once

#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "fcauchy/matrix.hpp"
#include "fcauchy/polynomial.hpp"

namespace fcauchy {

enum class Verdict { elliptic, not_elliptic, inconclusive };

std::string to_string(Verdict v);

/// Certificate for one polynomial (for b_elliptic_check: the transformed
/// polynomial P(A^{-t} x) under the supplied A only).
struct EllipticityCertificate {
    bool real_on_reals = false;
    double delta_grid_min = 0;  ///< min over the grid of P on the unit sphere
    double delta_lower = 0;     ///< certified lower bound for the true minimum
    unsigned resolution = 0;
    Verdict verdict = Verdict::inconclusive;
    /// Grid point with P <= 0 (not_elliptic by value).
    std::optional<std::vector<double>> witness;
    /// Explanation, e.g. the nonreal coefficient or the resolution needed.
    std::string note;
    /// The polynomial the certificate is about.
    HomPoly transformed;
};

/// Raised when B(A tau) != Sigma(tau) for the supplied A.
class TransformInvalid : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// True iff every coefficient is real.
bool is_real_on_reals(const HomPoly& p);

/// Sigma(A tau) = Sigma(tau) as polynomials, i.e. A^T A = I.
bool verify_orthogonal_for_sigma(const LinearChange& a);

/// B(A tau) = Sigma(tau), i.e. A^T B A = I, for a symmetric B.
bool verify_transform(const Matrix& b, const LinearChange& a);

struct SphereMin {
    double grid_min = 0;
    double certified_lower = 0;
    std::vector<double> argmin;
};

/// Requires real coefficients and n in {2,3}; throws std::invalid_argument otherwise.
SphereMin sphere_min_certified(const HomPoly& p, unsigned resolution);

/// Ellipticity of P itself: real coefficients and P >= delta |x|^deg on R^n.
EllipticityCertificate elliptic_check(const HomPoly& p, unsigned resolution);

/// Checks A^T B A = I exactly (TransformInvalid otherwise), forms P(A^{-t} x)
/// exactly and certifies it. A verdict other than elliptic refers to this A
/// only; another A could still exhibit B-ellipticity.
EllipticityCertificate b_elliptic_check(const HomPoly& p, const Matrix& b, const LinearChange& a,
                                        unsigned resolution);

/// x_j -> i x_j for each selected axis (0-based).
HomPoly wave_substitution(const HomPoly& p, const std::set<std::size_t>& imaginary_axes);

}  // namespace fcauchy
