#include <doctest.h>

#include <random>

#include "fcauchy/numerics.hpp"

using namespace fcauchy;

TEST_CASE("factorial and binomial") {
    CHECK(factorial(0) == 1);
    CHECK(factorial(5) == 120);
    CHECK(binomial(26, 2) == 325);
    CHECK(binomial(5, 7) == 0);
}

TEST_CASE("rational parsing and rendering") {
    CHECK(to_string(parse_rational("6/-4")) == "-3/2");
    CHECK(to_string(parse_rational("+7")) == "7");
    CHECK(to_string(parse_rational("0/5")) == "0");
    CHECK_THROWS_AS(parse_rational("1/0"), std::domain_error);
    CHECK_THROWS_AS(parse_rational("1.5"), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational(""), std::invalid_argument);
    CHECK_THROWS_AS(parse_rational("-"), std::invalid_argument);
}

TEST_CASE("log_abs survives values far outside double range") {
    BigInt big = 1;
    big <<= 5000;
    CHECK(log_abs(BigRational(big)) == doctest::Approx(5000 * std::log(2.0)));
    CHECK(log_abs(make_rational(1, big)) == doctest::Approx(-5000 * std::log(2.0)));
}

TEST_CASE("GaussianRational rendering") {
    CHECK(GaussianRational(make_rational(1, 2), -1).to_string() == "1/2-i");
    CHECK(GaussianRational(0, 3).to_string() == "3i");
    CHECK(GaussianRational(2, make_rational(5, 3)).to_string() == "2+5/3i");
    CHECK(GaussianRational().to_string() == "0");
    CHECK_THROWS_AS(GaussianRational(1) / GaussianRational(), std::domain_error);
}

TEST_CASE("GaussianRational field axioms and conjugation on random samples") {
    std::mt19937_64 rng(7);
    auto r = [&] { return make_rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1); };
    for (int trial = 0; trial < 200; ++trial) {
        const GaussianRational a(r(), r()), b(r(), r()), c(r(), r());
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a * b == b * a);
        if (!b.is_zero())
            CHECK((a / b) * b == a);
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
        CHECK(sgn(a.norm_sq()) >= 0);
        CHECK((a * a.conj()) == GaussianRational(a.norm_sq()));
    }
}

TEST_CASE("radial moments") {
    const auto i0 = radial_moment(0);
    CHECK(i0.rational == make_rational(1, 2));
    CHECK(i0.sqrt_pi_power == 1);
    const auto i1 = radial_moment(1);
    CHECK(i1.rational == make_rational(1, 2));
    CHECK(i1.sqrt_pi_power == 0);
    const auto i4 = radial_moment(4);
    CHECK(i4.rational == make_rational(3, 8));
    CHECK(i4.sqrt_pi_power == 1);
    CHECK(i0.to_double() == doctest::Approx(std::sqrt(std::numbers::pi) / 2));
}

TEST_CASE("radial moment recurrence I_{m+2} = (m+1)/2 I_m") {
    for (unsigned m = 0; m <= 40; ++m) {
        const SqrtPiScaled lhs = radial_moment(m + 2);
        const SqrtPiScaled rhs = SqrtPiScaled{make_rational(m + 1, 2), 0} * radial_moment(m);
        CHECK(lhs == rhs);
    }
}

TEST_CASE("SqrtPiScaled quotient rules") {
    const auto q = radial_moment(6) / radial_moment(4);
    CHECK(q.sqrt_pi_power == 0);
    CHECK(q.rational == make_rational(5, 2));
    CHECK_THROWS_AS(radial_moment(3) / radial_moment(2), std::domain_error);
    CHECK((radial_moment(2) / radial_moment(3)).sqrt_pi_power == 1);
}

TEST_CASE("moment ratio examples") {
    // I_5 / I_3 = (2!/2) / (1!/2)
    CHECK(moment_ratio(1, 1, 1, 2) == 2);
    // I_6 / I_4 = 5/2 by the brute-force quotient
    CHECK(moment_ratio(1, 1, 1, 3) == make_rational(5, 2));
    CHECK((radial_moment(6) / radial_moment(4)).rational == moment_ratio(1, 1, 1, 3));
    CHECK(moment_shift_ratio(9, 0) == 1);
    CHECK_THROWS_AS(moment_ratio(0, 1, 1, 1), std::domain_error);
}

TEST_CASE("moment ratio equals the quotient of radial moments on a grid") {
    for (unsigned m = 1; m <= 6; ++m)
        for (unsigned k = 1; k <= 6; ++k)
            for (unsigned j = 1; j <= 6; ++j)
                for (unsigned n = 1; n <= 6; ++n) {
                    const auto q = radial_moment(2 * m + 2 * j * k + n - 1) / radial_moment(2 * m + n - 1);
                    REQUIRE(q.sqrt_pi_power == 0);
                    CHECK(q.rational == moment_ratio(m, k, j, n));
                    CHECK(moment_shift_ratio(2 * m + n - 1, j * k) == q.rational);
                }
}
