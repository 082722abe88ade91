#include <doctest.h>

#include <cmath>
#include <random>

#include "fcauchy/ellipticity.hpp"
#include "fcauchy/random.hpp"
#include "test_util.hpp"

using namespace fcauchy;
using namespace fcauchy::testing;

TEST_CASE("real on reals") {
    CHECK(is_real_on_reals(poly({{{4, 0}, 1}, {{0, 4}, 1}})));
    CHECK_FALSE(is_real_on_reals(xi_quartic()));
    CHECK_FALSE(is_real_on_reals(poly({{{2, 0}, gi(0, 1, 1, 1)}})));
}

TEST_CASE("orthogonality for Sigma") {
    CHECK(verify_orthogonal_for_sigma(LinearChange::identity(3)));
    CHECK(verify_orthogonal_for_sigma(LinearChange(xi_matrix())));
    CHECK_FALSE(verify_orthogonal_for_sigma(LinearChange(Matrix::from_rows({{q(2), q(0)}, {q(0), q(1, 2)}}))));
}

TEST_CASE("change-of-variables example") {
    const auto cert = b_elliptic_check(xi_quartic(), Matrix::identity(2), LinearChange(xi_matrix()), 4096);
    CHECK(cert.transformed == poly({{{4, 0}, 1}, {{0, 4}, 1}}));
    CHECK(cert.real_on_reals);
    CHECK(cert.verdict == Verdict::elliptic);
    CHECK(cert.delta_grid_min == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(cert.delta_lower > 0);
    CHECK(cert.delta_lower <= 0.5);
}

TEST_CASE("B-ellipticity simple cases") {
    const auto radial = b_elliptic_check(HomPoly::radial_power(2, 2), Matrix::identity(2), LinearChange::identity(2), 1024);
    CHECK(radial.verdict == Verdict::elliptic);
    CHECK(radial.delta_grid_min == doctest::Approx(1.0));

    const auto saddle = b_elliptic_check(poly({{{1, 1}, 1}}), Matrix::identity(2), LinearChange::identity(2), 64);
    CHECK(saddle.verdict == Verdict::not_elliptic);
    REQUIRE(saddle.witness);
    CHECK(poly({{{1, 1}, 1}}).evaluate_float(*saddle.witness).real() <= 0);
    CHECK(saddle.note.find("supplied A only") != std::string::npos);

    CHECK_THROWS_AS(b_elliptic_check(HomPoly::radial_power(2, 1), Matrix::identity(2),
                                     LinearChange(Matrix::from_rows({{q(2), q(0)}, {q(0), q(1)}})), 64),
                    TransformInvalid);
    CHECK_THROWS_AS(b_elliptic_check(poly({{{3, 0}, 1}}), Matrix::identity(2), LinearChange::identity(2), 64),
                    std::invalid_argument);

    // B = diag(4, 1) with A = diag(1/2, 1): A^T B A = I
    const Matrix b = Matrix::from_rows({{q(4), q(0)}, {q(0), q(1)}});
    const LinearChange a(Matrix::from_rows({{q(1, 2), q(0)}, {q(0), q(1)}}));
    CHECK(verify_transform(b, a));
    // the dual form xi^T B^{-1} xi becomes Sigma under A^{-t}
    const auto scaled = b_elliptic_check(poly({{{2, 0}, q(1, 4)}, {{0, 2}, 1}}), b, a, 256);
    CHECK(scaled.transformed == HomPoly::sum_of_squares(2));
}

TEST_CASE("nonreal and sign-changing polynomials") {
    const auto complex = elliptic_check(poly({{{2, 0}, gi(0, 1, 1, 1)}, {{0, 2}, 1}}), 64);
    CHECK(complex.verdict == Verdict::not_elliptic);
    CHECK_FALSE(complex.real_on_reals);
    CHECK(complex.note.find("nonreal") != std::string::npos);

    const auto sign = sphere_min_certified(poly({{{4, 0}, 1}, {{0, 4}, -1}}), 256);
    CHECK(sign.grid_min < 0);
    CHECK(elliptic_check(poly({{{4, 0}, 1}, {{0, 4}, -1}}), 256).verdict == Verdict::not_elliptic);
    CHECK(elliptic_check(poly({{{3, 0}, 1}, {{1, 2}, 1}}), 64).verdict == Verdict::not_elliptic);
}

TEST_CASE("sphere minimum") {
    const auto quartic = sphere_min_certified(poly({{{4, 0}, 1}, {{0, 4}, 1}}), 4096);
    CHECK(quartic.grid_min == doctest::Approx(0.5).epsilon(1e-6));
    CHECK(quartic.certified_lower <= 0.5);
    const auto r4 = sphere_min_certified(HomPoly::radial_power(3, 2), 64);
    CHECK(r4.grid_min == doctest::Approx(1.0));
    CHECK_THROWS_AS(sphere_min_certified(HomPoly::radial_power(4, 1), 64), std::invalid_argument);
    CHECK_THROWS_AS(sphere_min_certified(poly({{{2, 0}, gi(0, 1, 1, 1)}}), 64), std::invalid_argument);
}

TEST_CASE("inconclusive verdict reports a resolution") {
    // min of x1^2 + x2^2/1000 on the circle is 1e-3; a coarse grid cannot certify it
    const HomPoly thin = poly({{{2, 0}, 1}, {{0, 2}, q(1, 1000)}});
    const auto coarse = elliptic_check(thin, 8);
    CHECK(coarse.verdict == Verdict::inconclusive);
    CHECK(coarse.note.find("resolution") != std::string::npos);
    CHECK(elliptic_check(thin, 100000).verdict == Verdict::elliptic);
}

TEST_CASE("certified lower bound is monotone in refinement and sound") {
    const HomPoly f = poly({{{4, 0}, 3}, {{2, 2}, -1}, {{0, 4}, 2}, {{3, 1}, 1}});
    double prev = -1e300;
    for (unsigned res : {64u, 128u, 256u, 512u, 1024u}) {
        const auto c = elliptic_check(f, res);
        CHECK(c.delta_lower >= prev);
        prev = c.delta_lower;
    }
    CHECK(elliptic_check(f, 1024).verdict == Verdict::elliptic);

    std::mt19937_64 gen(99);
    std::normal_distribution<double> normal;
    for (std::size_t n = 2; n <= 3; ++n) {
        const HomPoly g = n == 2 ? f : HomPoly::radial_power(3, 2) + poly({{{4, 0, 0}, q(1, 2)}, {{1, 1, 2}, q(1, 4)}});
        const auto cert = elliptic_check(g, n == 2 ? 1024 : 256);
        REQUIRE(cert.verdict == Verdict::elliptic);
        for (int i = 0; i < 10000; ++i) {
            std::vector<double> x(n);
            double norm = 0;
            for (auto& v : x) {
                v = normal(gen);
                norm += v * v;
            }
            for (auto& v : x)
                v /= std::sqrt(norm);
            REQUIRE(g.evaluate_float(x).real() >= cert.delta_lower - 1e-9);
        }
    }
}

TEST_CASE("wave substitution") {
    const HomPoly wave = poly({{{2, 0}, 1}, {{0, 2}, -1}});
    CHECK(wave_substitution(wave, {1}) == HomPoly::sum_of_squares(2));
    CHECK(wave_substitution(wave, {}) == wave);
    const HomPoly f = poly({{{2, 1}, 1}, {{0, 3}, 2}, {{3, 0}, 5}});
    CHECK(wave_substitution(wave_substitution(f, {1}), {1}) == poly({{{2, 1}, -1}, {{0, 3}, -2}, {{3, 0}, 5}}));
    const HomPoly cone = poly({{{2, 0, 0}, 1}, {{0, 2, 0}, 1}, {{0, 0, 2}, -1}});
    const HomPoly tilde = wave_substitution(cone, {2});
    CHECK(tilde == HomPoly::sum_of_squares(3));
    CHECK(elliptic_check(tilde, 64).verdict == Verdict::elliptic);
    CHECK_THROWS_AS(wave_substitution(wave, {2}), std::invalid_argument);
}
