#include <doctest.h>

#include <cmath>

#include "fcauchy/linalg.hpp"
#include "fcauchy/polynomial.hpp"
#include "fcauchy/random.hpp"
#include "test_util.hpp"

using namespace fcauchy;
using namespace fcauchy::testing;

TEST_CASE("monomial basis is graded-lex and has binomial size") {
    const auto b = monomial_basis(2, 2);
    REQUIRE(b.size() == 3);
    CHECK(b[0] == MultiIndex{2, 0});
    CHECK(b[1] == MultiIndex{1, 1});
    CHECK(b[2] == MultiIndex{0, 2});
    CHECK(monomial_basis(3, 24).size() == binomial(26, 2));
    const auto b3 = monomial_basis(3, 4);
    for (std::size_t i = 1; i < b3.size(); ++i)
        CHECK(GradedLex{}(b3[i - 1], b3[i]));
}

TEST_CASE("multiplication and addition") {
    const HomPoly x1 = HomPoly::variable(2, 0), x2 = HomPoly::variable(2, 1);
    CHECK(multiply(x1, x2) == poly({{{1, 1}, 1}}));
    const HomPoly r2 = HomPoly::sum_of_squares(2);
    CHECK(multiply(r2, r2) == poly({{{4, 0}, 1}, {{2, 2}, 2}, {{0, 4}, 1}}));
    CHECK(add(x1, HomPoly(2, 1)) == x1);
    CHECK_THROWS_AS(add(x1, r2), std::invalid_argument);
    CHECK_THROWS_AS(multiply(x1, HomPoly::variable(3, 0)), std::invalid_argument);
    CHECK((x1 - x1).is_zero());
}

TEST_CASE("differentiate") {
    CHECK(differentiate(poly({{{2, 0}, 1}}), MultiIndex{2, 0}) == HomPoly::constant(2, 2));
    CHECK(differentiate(poly({{{1, 1}, 1}}), MultiIndex{1, 1}) == HomPoly::constant(2, 1));
    const HomPoly f = poly({{{4, 0}, 1}, {{0, 4}, -1}});
    CHECK(laplacian(f) == poly({{{2, 0}, 12}, {{0, 2}, -12}}));
    CHECK(differentiate(poly({{{1, 0}, 1}}), MultiIndex{0, 2}).is_zero());
    CHECK(differentiate(poly({{{1, 0}, 1}}), MultiIndex{0, 2}).degree() == 0);
    CHECK_THROWS_AS(differentiate(f, MultiIndex{1, 0, 0}), std::invalid_argument);
}

TEST_CASE("apply_symbol") {
    const HomPoly lap = HomPoly::sum_of_squares(2);
    CHECK(apply_symbol(lap, HomPoly::radial_power(2, 2)) == 16 * HomPoly::sum_of_squares(2));
    CHECK(apply_symbol(poly({{{2, 0}, 1}}), poly({{{0, 3}, 1}})).is_zero());
    const HomPoly f = poly({{{3, 1}, q(2, 3)}, {{0, 4}, 5}});
    CHECK(apply_symbol(HomPoly::constant(2, q(7)), f) == 7 * f);
    CHECK(apply_symbol(poly({{{3, 0}, 1}}), poly({{{1, 1}, 1}})).is_zero());
}

TEST_CASE("conjugate coefficients") {
    CHECK(conjugate_coefficients(poly({{{1, 0}, gi(0, 1, 1, 1)}})) == poly({{{1, 0}, gi(0, 1, -1, 1)}}));
    const HomPoly real = poly({{{2, 1}, q(3)}, {{0, 3}, q(-1, 2)}});
    CHECK(conjugate_coefficients(real) == real);
    CHECK(conjugate_coefficients(poly({{{1, 1}, gi(1, 1, 1, 1)}})) == poly({{{1, 1}, gi(1, 1, -1, 1)}}));
}

TEST_CASE("evaluate") {
    const std::vector<GaussianRational> p{q(3), q(4)};
    CHECK(HomPoly::sum_of_squares(2).evaluate(p) == q(25));
    const std::vector<GaussianRational> e1{q(1), q(0)};
    CHECK(poly({{{1, 1}, 1}}).evaluate(e1) == q(0));
    const double s = 1.0 / std::sqrt(2.0);
    const std::vector<double> d{s, s};
    CHECK(poly({{{4, 0}, 1}, {{0, 4}, 1}}).evaluate_float(d).real() == doctest::Approx(0.5));
    CHECK_THROWS_AS(HomPoly::sum_of_squares(2).evaluate(std::vector<GaussianRational>{q(1)}), std::invalid_argument);
}

TEST_CASE("substitute_linear with the xi-matrix example") {
    const LinearChange a(xi_matrix());
    CHECK(substitute_linear(HomPoly::sum_of_squares(2), a) == HomPoly::sum_of_squares(2));
    const HomPoly f = poly({{{2, 1}, q(3)}, {{0, 3}, gi(1, 2, 1, 1)}});
    CHECK(substitute_linear(f, LinearChange::identity(2)) == f);
    CHECK(substitute_linear(xi_quartic(), a.inverse_transpose()) == poly({{{4, 0}, 1}, {{0, 4}, 1}}));
    CHECK_THROWS_AS(LinearChange(Matrix::from_rows({{q(1), q(2)}, {q(2), q(4)}})), std::invalid_argument);
}

TEST_CASE("text rendering is canonical graded-lex") {
    const HomPoly f = poly({{{0, 2}, q(-1, 2)}, {{2, 0}, q(1, 2)}});
    CHECK(f.to_string() == "(1/2)*x1^2 + (-1/2)*x2^2");
    CHECK(HomPoly(3, 4).to_string() == "0");
}

TEST_CASE("polynomial properties on random samples") {
    Sampler rng(11);
    for (int trial = 0; trial < 60; ++trial) {
        const std::size_t n = 1 + trial % 3;
        const unsigned m = static_cast<unsigned>(rng.uniform_int(0, 6));
        const HomPoly f = rng.random_form(n, m, 4, true);
        const HomPoly g = rng.random_form(n, m, 4, true);
        const HomPoly h = rng.random_form(n, static_cast<unsigned>(rng.uniform_int(0, 3)), 4, true);
        const HomPoly Q = rng.random_form(n, static_cast<unsigned>(rng.uniform_int(0, 2)), 4, true);

        // linearity of differentiation and of the symbol action
        const auto alpha = monomial_basis(n, std::min(m, 2u)).front();
        CHECK(differentiate(f + g, alpha) == differentiate(f, alpha) + differentiate(g, alpha));
        CHECK(apply_symbol(Q, f + g) == apply_symbol(Q, f) + apply_symbol(Q, g));
        const GaussianRational c = gi(rng.uniform_int(-5, 5), 3, rng.uniform_int(-5, 5), 2);
        CHECK(apply_symbol(Q * c, f) == apply_symbol(Q, f) * c);

        // commutativity and associativity
        CHECK(f * h == h * f);
        CHECK((f * g) * h == f * (g * h));

        // Euler identity
        HomPoly euler(n, m);
        for (std::size_t j = 0; j < n; ++j)
            euler += HomPoly::variable(n, j) * partial(f, j);
        CHECK(euler == f * q(m));

        // substitution round trip with a random invertible rational matrix
        Matrix a(n, n);
        do {
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    a(i, j) = make_rational(rng.uniform_int(-3, 3), rng.uniform_int(1, 3));
        } while (determinant(a).is_zero());
        const LinearChange A(a);
        CHECK(substitute_linear(substitute_linear(f, A), A.inverse()) == f);
    }
}

TEST_CASE("graded series parts and cutoffs") {
    GradedSeries s(2, 3);
    s.set_part(HomPoly::sum_of_squares(2));
    CHECK(s.part(2) == HomPoly::sum_of_squares(2));
    CHECK(s.part(1).is_zero());
    CHECK(s.part(1).degree() == 1);
    CHECK_THROWS_AS(s.part(4), std::out_of_range);
    CHECK(s.max_stored_degree() == 2);
    s.set_part(HomPoly(2, 2));
    CHECK(s.is_zero());
    CHECK(GradedSeries::exact(2).part(100).is_zero());
}
