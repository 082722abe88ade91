#include <doctest.h>

#include "fcauchy/linalg.hpp"
#include "fcauchy/random.hpp"
#include "test_util.hpp"

using namespace fcauchy;
using namespace fcauchy::testing;

namespace {

// Cofactor expansion, independent of the elimination path.
GaussianRational cofactor_det(const Matrix& a) {
    const std::size_t n = a.rows();
    if (n == 0)
        return 1;
    if (n == 1)
        return a(0, 0);
    GaussianRational sum;
    for (std::size_t j = 0; j < n; ++j) {
        Matrix minor(n - 1, n - 1);
        for (std::size_t r = 1; r < n; ++r)
            for (std::size_t c = 0, cc = 0; c < n; ++c)
                if (c != j)
                    minor(r - 1, cc++) = a(r, c);
        const GaussianRational term = a(0, j) * cofactor_det(minor);
        sum += (j % 2 == 0) ? term : -term;
    }
    return sum;
}

}  // namespace

TEST_CASE("determinant of small matrices") {
    CHECK(determinant(Matrix::from_rows({{q(2), q(1)}, {q(1), q(3)}})) == q(5));
    CHECK(determinant(Matrix::from_rows({{q(1), q(2)}, {q(2), q(4)}})).is_zero());
    CHECK(determinant(xi_matrix()) == q(1));
    CHECK(determinant(Matrix::from_rows({{q(0), q(1)}, {q(1), q(0)}})) == q(-1));
    CHECK(determinant(Matrix(0, 0)) == q(1));
}

TEST_CASE("exact solve agrees with cofactor determinant and residual on random matrices") {
    Sampler rng(3);
    for (int trial = 0; trial < 80; ++trial) {
        const std::size_t n = 1 + trial % 5;
        Matrix a(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                // sparse-ish entries so singular cases occur
                if (rng.uniform_int(0, 3) == 0)
                    continue;
                a(i, j) = gi(rng.uniform_int(-4, 4), rng.uniform_int(1, 4), rng.uniform_int(-2, 2), rng.uniform_int(1, 3));
            }
        std::vector<GaussianRational> b(n);
        for (auto& v : b)
            v = q(rng.uniform_int(-9, 9), rng.uniform_int(1, 5));
        const auto res = solve_exact(a, b);
        CHECK(res.determinant == cofactor_det(a));
        CHECK(res.invertible() == res.solution.has_value());
        if (res.solution) {
            for (std::size_t i = 0; i < n; ++i) {
                GaussianRational row;
                for (std::size_t j = 0; j < n; ++j)
                    row += a(i, j) * (*res.solution)(j, 0);
                CHECK(row == b[i]);
            }
        }
    }
}

TEST_CASE("inverse") {
    const Matrix a = xi_matrix();
    const auto inv = inverse(a);
    REQUIRE(inv);
    CHECK(a * *inv == Matrix::identity(2));
    CHECK_FALSE(inverse(Matrix::from_rows({{q(1), q(1)}, {q(1), q(1)}})));
    CHECK_THROWS_AS(solve_exact(Matrix(2, 3), Matrix(2, 1)), std::invalid_argument);
}
