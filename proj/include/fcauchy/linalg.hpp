#pragma once

#include <optional>
#include <span>
#include <vector>

#include "fcauchy/matrix.hpp"

namespace fcauchy {

/// Outcome of an exact square solve. The solution columns are present iff the
/// determinant is nonzero.
struct ExactSolve {
    GaussianRational determinant;
    std::optional<Matrix> solution;

    bool invertible() const { return !determinant.is_zero(); }
};

/// Solves A X = B exactly by fraction-free (Bareiss) elimination.
///
/// Rows of [A | B] are first scaled to Gaussian-integer entries; elimination
/// then runs in Z[i] with exact divisions by the previous pivot, choosing at
/// each step the nonzero pivot of smallest bit height. The determinant is the
/// last pivot (with the row-swap sign) divided by the row scale factors.
/// Throws std::invalid_argument on shape mismatch.
ExactSolve solve_exact(const Matrix& a, const Matrix& b);

/// Single right-hand side convenience overload.
ExactSolve solve_exact(const Matrix& a, std::span<const GaussianRational> rhs);

GaussianRational determinant(const Matrix& a);

/// Exact inverse, or nullopt when singular.
std::optional<Matrix> inverse(const Matrix& a);

}  // namespace fcauchy
