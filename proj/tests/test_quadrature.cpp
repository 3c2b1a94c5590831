#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lagspread/quadrature.hpp"

#include <cmath>

using namespace lagspread;

TEST_CASE("polynomial and trigonometric references") {
    auto sq = [](double x) { return x * x; };
    const QuadResult a = integrate(sq, 0.0, 1.0);
    CHECK(a.converged);
    CHECK(a.value == doctest::Approx(1.0 / 3.0).epsilon(1e-14));

    const double pi = 4.0 * std::atan(1.0);
    const QuadResult b = integrate([](double x) { return std::sin(x); }, 0.0, pi);
    CHECK(b.converged);
    CHECK(b.value == doctest::Approx(2.0).epsilon(1e-13));

    const QuadResult c = integrate([](double x) { return std::exp(-x); }, 0.0, 50.0);
    CHECK(c.value == doctest::Approx(1.0 - std::exp(-50.0)).epsilon(1e-12));
}

TEST_CASE("empty and reversed intervals") {
    auto f = [](double x) { return x; };
    CHECK(integrate(f, 2.0, 2.0).value == 0.0);
    CHECK(integrate(f, 1.0, 0.0).value == doctest::Approx(-0.5).epsilon(1e-14));
}

TEST_CASE("integrable endpoint singularity") {
    // integral of ln(x) over (0, 1] = -1
    const QuadResult q =
        integrate([](double x) { return std::log(x); }, 0.0, 1.0, 1e-12, 1e-12);
    CHECK(q.value == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("piecewise splitting is consistent") {
    auto f = [](double x) { return std::cos(x) * std::exp(-0.3 * x); };
    const QuadResult whole = integrate(f, 0.0, 20.0);
    const QuadResult split = integrate_piecewise(f, {0.0, 1.7, 5.0, 13.1, 20.0});
    CHECK(split.converged);
    CHECK(split.value == doctest::Approx(whole.value).epsilon(1e-12));
}

TEST_CASE("density breakpoints bracket the roots") {
    const PolySpec spec{3, 1.0};
    const auto r = roots(spec);
    const auto pts = density_breakpoints(spec, 30.0);
    REQUIRE(pts.size() == r.size() + 2);
    CHECK(pts.front() == 0.0);
    CHECK(pts.back() == 30.0);
    for (std::size_t i = 0; i < r.size(); ++i)
        CHECK(pts[i + 1] == doctest::Approx(r[i]));
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) CHECK(pts[i] < pts[i + 1]);
}

TEST_CASE("tail bound dominates the true tail") {
    for (double s : {0.0, 2.0, 6.5}) {
        for (double c : {1.0, 2.5}) {
            const double X = 30.0;
            CAPTURE(s);
            CAPTURE(c);
            auto f = [&](double x) { return std::pow(x, s) * std::exp(-c * x); };
            const QuadResult tail = integrate(f, X, X + 200.0, 1e-16, 1e-12);
            const double bound = std::exp(log_tail_bound(s, c, X));
            CHECK(tail.value <= bound * (1.0 + 1e-9));
            CHECK(bound <= 10.0 * tail.value);  // and it is not absurdly loose
        }
    }
    CHECK(std::isinf(log_tail_bound(5.0, 1.0, 4.0)));  // cX <= s: not applicable
}

TEST_CASE("integrate_density reproduces a Gamma integral") {
    // with n = 0 the density is x^a e^{-x} / Gamma(a+1)
    const PolySpec spec{0, 4.0};
    auto f = [&](double x) { return density(spec, x) * x; };  // first moment = a+1
    const QuadResult q = integrate_density(spec, f, 5.0, 1.0, -std::lgamma(5.0));
    CHECK(q.converged);
    CHECK(q.value == doctest::Approx(5.0).epsilon(1e-11));
}
