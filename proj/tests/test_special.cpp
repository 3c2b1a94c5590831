#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lagspread/rational.hpp"
#include "lagspread/special.hpp"

#include <cmath>

using namespace lagspread;

TEST_CASE("log_gamma at half-integers and integers") {
    // Gamma(1/2) = sqrt(pi)
    CHECK(log_gamma(0.5) == doctest::Approx(0.57236494292470008707).epsilon(1e-14));
    CHECK(log_gamma(1.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(log_gamma(2.0) == doctest::Approx(0.0).epsilon(1e-15));
    CHECK(log_gamma(6.0) == doctest::Approx(std::log(120.0)).epsilon(1e-14));
    CHECK(log_gamma(13.0) == doctest::Approx(std::log(479001600.0)).epsilon(1e-14));
}

TEST_CASE("log_gamma agrees with the C library") {
    for (double x : {0.03, 0.2, 0.5, 0.9, 1.5, 2.7, 3.14, 7.5, 12.0, 25.5, 60.0,
                     123.4, 500.0}) {
        CAPTURE(x);
        CHECK(log_gamma(x) == doctest::Approx(std::lgamma(x)).epsilon(1e-13));
    }
}

TEST_CASE("log_gamma rejects nonpositive arguments") {
    CHECK_THROWS_AS(log_gamma(0.0), std::domain_error);
    CHECK_THROWS_AS(log_gamma(-1.5), std::domain_error);
}

TEST_CASE("digamma special values") {
    CHECK(digamma(1.0) == doctest::Approx(-euler_gamma).epsilon(1e-13));
    // psi(1/2) = -gamma - 2 ln 2
    CHECK(digamma(0.5) ==
          doctest::Approx(-euler_gamma - 2.0 * std::log(2.0)).epsilon(1e-13));
    // psi(6) = -gamma + 1 + 1/2 + 1/3 + 1/4 + 1/5
    CHECK(digamma(6.0) ==
          doctest::Approx(-euler_gamma + 137.0 / 60.0).epsilon(1e-13));
}

TEST_CASE("digamma recurrence psi(x+1) = psi(x) + 1/x") {
    for (double x : {0.1, 0.7, 1.3, 2.5, 5.9, 11.2, 40.0}) {
        CAPTURE(x);
        CHECK(digamma(x + 1.0) == doctest::Approx(digamma(x) + 1.0 / x).epsilon(1e-12));
    }
}

TEST_CASE("digamma rejects nonpositive arguments") {
    CHECK_THROWS_AS(digamma(0.0), std::domain_error);
    CHECK_THROWS_AS(digamma(-3.0), std::domain_error);
}

TEST_CASE("pochhammer in doubles and rationals") {
    CHECK(pochhammer(0.5, 3) == doctest::Approx(15.0 / 8.0).epsilon(1e-15));
    CHECK(pochhammer(-1.0, 2) == doctest::Approx(0.0));
    CHECK(pochhammer(3.0, 0) == doctest::Approx(1.0));
    CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
    CHECK(pochhammer(Rational(-3), 2) == Rational(6));
    CHECK(pochhammer(Rational(-3), 5) == Rational(0));
}

TEST_CASE("generalized binomial via falling factorials") {
    CHECK(gen_binomial(-1.5, 2) == doctest::Approx(1.875).epsilon(1e-15));
    CHECK(gen_binomial(2.0, 3) == doctest::Approx(0.0));
    CHECK(gen_binomial(7.0, 2) == doctest::Approx(21.0));
    CHECK(gen_binomial(Rational(-3, 2), 2) == Rational(15, 8));
    CHECK(gen_binomial(Rational(5), 2) == Rational(10));
    CHECK(gen_binomial(Rational(2), 5) == Rational(0));
}

TEST_CASE("rational arithmetic basics") {
    CHECK(Rational::factorial(6) == Rational(720));
    CHECK(Rational::binomial(10, 4) == Rational(210));
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
    CHECK(Rational(-8, 18) == Rational(-4, 9));
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);

    const auto root = Rational(49, 4).sqrt_exact();
    REQUIRE(root.has_value());
    CHECK(*root == Rational(7, 2));
    CHECK_FALSE(Rational(2).sqrt_exact().has_value());
    CHECK_FALSE(Rational(-4).sqrt_exact().has_value());

    CHECK(Rational(1, 8).log_abs() == doctest::Approx(std::log(0.125)).epsilon(1e-15));
    CHECK(Rational(-1000).log_abs() ==
          doctest::Approx(std::log(1000.0)).epsilon(1e-15));
    // beyond double range
    const Rational huge = Rational(10).pow(400);
    CHECK(huge.log_abs() == doctest::Approx(400.0 * std::log(10.0)).epsilon(1e-13));
}
