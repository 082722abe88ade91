#include "fcauchy/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace fcauchy {
namespace {

// Element of Z[i].
struct GaussInt {
    BigInt re;
    BigInt im;

    bool is_zero() const { return sgn(re) == 0 && sgn(im) == 0; }
    std::size_t bits() const {
        return mpz_sizeinbase(re.get_mpz_t(), 2) + mpz_sizeinbase(im.get_mpz_t(), 2);
    }
};

GaussInt mul(const GaussInt& a, const GaussInt& b) {
    return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}

GaussInt sub(const GaussInt& a, const GaussInt& b) {
    return {a.re - b.re, a.im - b.im};
}

// a / b where b divides a in Z[i].
GaussInt divexact(const GaussInt& a, const GaussInt& b) {
    if (sgn(b.im) == 0) {
        GaussInt q;
        mpz_divexact(q.re.get_mpz_t(), a.re.get_mpz_t(), b.re.get_mpz_t());
        mpz_divexact(q.im.get_mpz_t(), a.im.get_mpz_t(), b.re.get_mpz_t());
        return q;
    }
    const BigInt norm = b.re * b.re + b.im * b.im;
    GaussInt t = mul(a, GaussInt{b.re, -b.im});
    mpz_divexact(t.re.get_mpz_t(), t.re.get_mpz_t(), norm.get_mpz_t());
    mpz_divexact(t.im.get_mpz_t(), t.im.get_mpz_t(), norm.get_mpz_t());
    return t;
}

}  // namespace

ExactSolve solve_exact(const Matrix& a, const Matrix& b) {
    const std::size_t n = a.rows();
    if (a.cols() != n || b.rows() != n)
        throw std::invalid_argument("solve_exact: shape mismatch");
    const std::size_t r = b.cols();
    const std::size_t width = n + r;

    // Scale each row of [A | B] by the lcm of its denominators.
    std::vector<std::vector<GaussInt>> m(n, std::vector<GaussInt>(width));
    BigInt scale_product = 1;
    for (std::size_t i = 0; i < n; ++i) {
        BigInt lcm = 1;
        auto entry = [&](std::size_t j) -> const GaussianRational& { return j < n ? a(i, j) : b(i, j - n); };
        for (std::size_t j = 0; j < width; ++j) {
            const auto& z = entry(j);
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.re().get_den_mpz_t());
            mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), z.im().get_den_mpz_t());
        }
        for (std::size_t j = 0; j < width; ++j) {
            const auto& z = entry(j);
            m[i][j].re = z.re().get_num() * (lcm / z.re().get_den());
            m[i][j].im = z.im().get_num() * (lcm / z.im().get_den());
        }
        scale_product *= lcm;
    }

    ExactSolve out;
    GaussInt prev{1, 0};
    bool negate = false;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t pivot = n;
        for (std::size_t i = k; i < n; ++i) {
            if (m[i][k].is_zero())
                continue;
            if (pivot == n || m[i][k].bits() < m[pivot][k].bits())
                pivot = i;
        }
        if (pivot == n) {
            out.determinant = 0;
            return out;
        }
        if (pivot != k) {
            std::swap(m[pivot], m[k]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < width; ++j)
                m[i][j] = divexact(sub(mul(m[k][k], m[i][j]), mul(m[i][k], m[k][j])), prev);
            m[i][k] = GaussInt{0, 0};
        }
        prev = m[k][k];
    }

    GaussianRational det = n == 0 ? GaussianRational(1)
                                  : GaussianRational(BigRational(prev.re), BigRational(prev.im));
    det /= GaussianRational(BigRational(scale_product));
    if (negate)
        det = -det;
    out.determinant = det;

    Matrix x(n, r);
    for (std::size_t c = 0; c < r; ++c) {
        for (std::size_t ii = n; ii-- > 0;) {
            GaussianRational acc(BigRational(m[ii][n + c].re), BigRational(m[ii][n + c].im));
            for (std::size_t j = ii + 1; j < n; ++j) {
                if (m[ii][j].is_zero() || x(j, c).is_zero())
                    continue;
                acc -= GaussianRational(BigRational(m[ii][j].re), BigRational(m[ii][j].im)) * x(j, c);
            }
            acc /= GaussianRational(BigRational(m[ii][ii].re), BigRational(m[ii][ii].im));
            x(ii, c) = std::move(acc);
        }
    }
    out.solution = std::move(x);
    return out;
}

ExactSolve solve_exact(const Matrix& a, std::span<const GaussianRational> rhs) {
    Matrix b(rhs.size(), 1);
    for (std::size_t i = 0; i < rhs.size(); ++i)
        b(i, 0) = rhs[i];
    return solve_exact(a, b);
}

GaussianRational determinant(const Matrix& a) {
    return solve_exact(a, Matrix(a.rows(), 0)).determinant;
}

std::optional<Matrix> inverse(const Matrix& a) {
    auto res = solve_exact(a, Matrix::identity(a.rows()));
    return std::move(res.solution);
}

}  // namespace fcauchy
