#include <doctest.h>

#include "fcauchy/fischer.hpp"
#include "fcauchy/harmonic.hpp"
#include "fcauchy/random.hpp"
#include "test_util.hpp"

using namespace fcauchy;
using namespace fcauchy::testing;

TEST_CASE("Gauss decomposition examples") {
    const auto d = gauss_decompose(poly({{{2, 0}, 1}}));
    REQUIRE(d.components.size() == 2);
    CHECK(d.components[0].s == 0);
    CHECK(d.components[0].harmonic == poly({{{2, 0}, q(1, 2)}, {{0, 2}, q(-1, 2)}}));
    CHECK(d.components[1].harmonic == HomPoly::constant(2, q(1, 2)));

    const HomPoly h = poly({{{1, 1}, 3}});
    const auto dh = gauss_decompose(h);
    CHECK(dh.nonzero_count() == 1);
    CHECK(dh.components[0].harmonic == h);

    const auto dr = gauss_decompose(HomPoly::sum_of_squares(2));
    CHECK(dr.components[0].harmonic.is_zero());
    CHECK(dr.components[1].harmonic == HomPoly::constant(2, 1));
}

TEST_CASE("Gauss decomposition reconstructs and is harmonic") {
    Sampler rng(41);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const unsigned m = static_cast<unsigned>(rng.uniform_int(0, 10));
        const HomPoly f = rng.random_form(n, m, 5, trial % 2 == 0);
        const auto d = gauss_decompose(f);
        CHECK(d.reconstruct() == f);
        for (const auto& c : d.components) {
            CHECK(c.harmonic.degree() == m - 2 * c.s);
            CHECK(laplacian(c.harmonic).is_zero());
        }
        const auto again = gauss_decompose(d.reconstruct());
        for (std::size_t i = 0; i < d.components.size(); ++i)
            CHECK(again.components[i].harmonic == d.components[i].harmonic);
    }
}

TEST_CASE("radial Laplacian constant") {
    CHECK(laplacian_radial_constant(1, 0, 2) == 4);
    CHECK(laplacian_radial_constant(0, 5, 3) == 0);
    CHECK(laplacian_radial_constant(2, 0, 2) == 16);
    CHECK(laplacian(HomPoly::radial_power(2, 2)) == HomPoly::sum_of_squares(2) * q(16));
    Sampler rng(43);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 2 + trial % 2;
        const unsigned s = static_cast<unsigned>(rng.uniform_int(1, 3));
        const HomPoly h = rng.random_harmonic(n, static_cast<unsigned>(rng.uniform_int(0, 4)));
        const BigRational c = laplacian_radial_constant(s, h.degree(), n);
        CHECK(laplacian(HomPoly::radial_power(n, s) * h) == HomPoly::radial_power(n, s - 1) * h * GaussianRational(c));
    }
}

TEST_CASE("eigenvalue examples") {
    CHECK(eigenvalue_d(1, 0, 2, 2) == 12);
    CHECK(eigenvalue_d(1, 0, 0, 2) == 4);
    CHECK(eigenvalue_d(2, 0, 0, 2) == 64);
    // Delta(|x|^2 * |x|^2) = 16 |x|^2
    CHECK(eigenvalue_d(1, 1, 0, 2) == 16);
    CHECK(apply_F(HomPoly::sum_of_squares(2), 1) == HomPoly::sum_of_squares(2) * q(16));
    CHECK(min_eigenvalue_e(1, 0, 2) == 4);
    CHECK(min_eigenvalue_e(2, 0, 2) == 64);
    CHECK(min_eigenvalue_e(1, 3, 3) == 18);
    CHECK_THROWS(eigenvalue_d(0, 0, 0, 2));
    CHECK_THROWS(min_eigenvalue_e(0, 1, 2));
}

TEST_CASE("apply_F examples") {
    const HomPoly h = poly({{{2, 0}, 1}, {{0, 2}, -1}});
    CHECK(apply_F(h, 1) == h * q(12));
    CHECK(apply_F(HomPoly::constant(2, 1), 2) == HomPoly::constant(2, 64));
    CHECK(apply_F(HomPoly(2, 3), 1).is_zero());
}

TEST_CASE("eigen-identity on random harmonics") {
    Sampler rng(47);
    for (std::size_t n = 2; n <= 3; ++n)
        for (unsigned p = 1; p <= 3; ++p)
            for (unsigned s = 0; s <= 3; ++s)
                for (unsigned m = 0; m <= 6; m += 2 + (s % 2)) {
                    const HomPoly h = rng.random_harmonic(n, m, true);
                    const HomPoly q_in = HomPoly::radial_power(n, s) * h;
                    CHECK(apply_F(q_in, p) == q_in * GaussianRational(eigenvalue_d(p, s, m, n)));
                }
}

TEST_CASE("minimal eigenvalue: attained at s = 0 and moment form") {
    for (unsigned p = 1; p <= 3; ++p)
        for (unsigned m = 0; m <= 12; ++m)
            for (std::size_t n = 1; n <= 4; ++n) {
                const BigRational e = min_eigenvalue_e(p, m, n);
                CHECK(e == eigenvalue_d(p, 0, m, n));
                for (unsigned s = 0; 2 * s <= m; ++s)
                    CHECK(eigenvalue_d(p, s, m - 2 * s, n) >= e);
                BigRational pw = 1;
                for (unsigned i = 0; i < 2 * p; ++i)
                    pw *= 2;
                const auto ratio = radial_moment(2 * m + 2 * p + static_cast<unsigned>(n) - 1) /
                                   radial_moment(2 * m + static_cast<unsigned>(n) - 1);
                CHECK(ratio.sqrt_pi_power == 0);
                CHECK(e == pw * BigRational(factorial(p)) * ratio.rational);
            }
}

TEST_CASE("standard estimate for Delta^p(|x|^(2p) f)") {
    Sampler rng(53);
    for (int trial = 0; trial < 40; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const unsigned p = 1 + trial % 2;
        const unsigned m = static_cast<unsigned>(rng.uniform_int(0, 10));
        const HomPoly f = rng.random_form(n, m, 4, true);
        const BigRational e = min_eigenvalue_e(p, m, n);
        CHECK(compare(norm_sq_rF(apply_F(f, p)), GaussianRational(e * e) * norm_sq_rF(f)) >= 0);
    }
}
