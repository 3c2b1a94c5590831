#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "lagspread/quadrature.hpp"
#include "lagspread/renyi_algebraic.hpp"
#include "lagspread/renyi_bell.hpp"
#include "lagspread/special.hpp"

#include <cmath>

using namespace lagspread;

namespace {

Rational rising(const Rational& a, int k) {
    Rational p(1);
    for (int t = 0; t < k; ++t) p *= a + Rational(t);
    return p;
}

// Direct recursive enumeration of the tuple sum, an independent rewrite of the
// production odometer loop with none of its incremental-update tricks.
void brute_rec(int n, const Rational& a, int two_q, const Rational& q, int pos,
               int big_j, const Rational& partial, Rational& total) {
    if (pos == two_q) {
        const Rational aq1 = a * q + Rational(1);
        total += rising(aq1, big_j) * partial / q.pow(big_j);
        return;
    }
    for (int j = 0; j <= n; ++j) {
        const Rational f = rising(Rational(-n), j) /
                           (rising(a + Rational(1), j) * Rational::factorial(j));
        brute_rec(n, a, two_q, q, pos + 1, big_j + j, partial * f, total);
    }
}

Rational brute_force_fa(int n, const Rational& a, int two_q) {
    Rational total(0);
    brute_rec(n, a, two_q, Rational(two_q, 2), 0, 0, Rational(1), total);
    return total;
}

// Signed power integral of the density via quadrature, valid for odd 2q too.
double quadrature_w(const PolySpec& spec, int two_q) {
    const double q = 0.5 * two_q;
    const auto f = [&](double x) {
        const double p = evaluate_orthonormal_pair(spec, x).first;
        return std::pow(x, spec.alpha * q) * std::exp(-q * x) *
               std::pow(p * p, 0.5 * two_q) * (p < 0.0 && two_q % 2 ? -1.0 : 1.0);
    };
    const double log_k =
        -q * (log_gamma(spec.n + 1.0) + log_gamma(spec.n + spec.alpha + 1.0));
    const QuadResult r = integrate_density(spec, f, q * (spec.alpha + 2.0 * spec.n),
                                           q, log_k, 1e-14, 1e-12);
    REQUIRE(r.converged);
    return r.value;
}

}  // namespace

TEST_CASE("theta0 worked values") {
    const Theta0Value t = lauricella_theta0(PolySpec{1, 0.0}, 4);
    CHECK(t.fa_exact == Rational(1, 2));
    REQUIRE(t.exact.has_value());
    CHECK(*t.exact == Rational(1, 2));  // Gamma(1) * binom(1,1)^4 * F
    CHECK(t.value == doctest::Approx(0.5).epsilon(1e-13));
    CHECK(t.terms == 16);

    // odd 2q keeps the sign of the cubed polynomial
    const Theta0Value odd = lauricella_theta0(PolySpec{1, 0.0}, 3);
    CHECK(odd.fa_exact == Rational(-1, 9));
    CHECK(odd.value < 0.0);
}

TEST_CASE("theta0 at n = 0 is the prefactor gamma") {
    const Theta0Value g1 = lauricella_theta0(PolySpec{0, 0.0}, 4);
    CHECK(g1.fa_exact == Rational(1));
    CHECK(*g1.exact == Rational(1));

    const Theta0Value g24 = lauricella_theta0(PolySpec{0, 2.0}, 4);
    CHECK(*g24.exact == Rational(24));  // Gamma(5)

    const Theta0Value gh = lauricella_theta0(PolySpec{0, 1.0}, 3);
    CHECK(gh.fa_exact == Rational(1));
    CHECK_FALSE(gh.exact.has_value());  // aq = 3/2, Gamma(5/2) is irrational
    CHECK(gh.value == doctest::Approx(std::exp(log_gamma(2.5))).epsilon(1e-13));
}

TEST_CASE("theta0 against a brute-force tuple enumeration") {
    std::vector<Rational> alphas{Rational(0), Rational(1), Rational(3),
                                 Rational(1, 2)};
    for (int n = 0; n <= 3; ++n) {
        for (const Rational& a : alphas) {
            for (int two_q : {3, 4, 5}) {
                CAPTURE(n);
                CAPTURE(a.to_double());
                CAPTURE(two_q);
                const Theta0Value t =
                    lauricella_theta0(PolySpec{n, a.to_double()}, two_q);
                CHECK(t.fa_exact == brute_force_fa(n, a, two_q));
            }
        }
    }
}

TEST_CASE("entropic moments and lengths, worked values") {
    const RenyiResult w10 = entropic_moment_algebraic(PolySpec{1, 0.0}, 4);
    REQUIRE(w10.s_exact.has_value());
    CHECK(*w10.s_exact == Rational(1, 2));
    CHECK(*w10.w_exact == Rational(1, 4));
    CHECK(w10.length == doctest::Approx(4.0));
    CHECK(w10.engine == RenyiEngine::algebraic);

    const RenyiResult l2 = renyi_length_algebraic(PolySpec{0, 0.0}, 4);
    CHECK(*l2.w_exact == Rational(1, 2));
    CHECK(l2.length == doctest::Approx(2.0));

    // 2q = 3: W = 2/3 and L = W^{-2}
    const RenyiResult l32 = renyi_length_algebraic(PolySpec{0, 0.0}, 3);
    REQUIRE(l32.w_exact.has_value());
    CHECK(*l32.w_exact == Rational(2, 3));
    REQUIRE(l32.length_exact.has_value());
    CHECK(*l32.length_exact == Rational(9, 4));
    CHECK(l32.length == doctest::Approx(2.25));
}

TEST_CASE("closed forms agree with both engines") {
    for (int n : {0, 1}) {
        for (double alpha : {0.0, 0.5, 1.0, 2.0, 5.0}) {
            for (int two_q : {3, 4, 5, 6}) {
                CAPTURE(n);
                CAPTURE(alpha);
                CAPTURE(two_q);
                const PolySpec spec{n, alpha};
                const RenyiResult closed = n == 0 ? closed_form_n0(spec, two_q)
                                                  : closed_form_n1(spec, two_q);
                const RenyiResult alg = entropic_moment_algebraic(spec, two_q);
                const RenyiResult bell = entropic_moment_bell(spec, two_q);
                REQUIRE(closed.s_exact.has_value());
                CHECK(*closed.s_exact == *alg.s_exact);
                CHECK(*closed.s_exact == *bell.s_exact);
                CHECK(closed.w == doctest::Approx(alg.w).epsilon(1e-13).scale(1e-300));
            }
        }
    }
}

TEST_CASE("the two engines agree exactly") {
    for (int n = 0; n <= 4; ++n) {
        for (double alpha : {0.0, 0.5, 1.0, 2.0, 2.5, 5.0}) {
            for (int two_q : {3, 4, 5, 6}) {
                CAPTURE(n);
                CAPTURE(alpha);
                CAPTURE(two_q);
                const PolySpec spec{n, alpha};
                const RenyiResult alg = entropic_moment_algebraic(spec, two_q);
                const RenyiResult bell = entropic_moment_bell(spec, two_q);
                REQUIRE(alg.s_exact.has_value());
                REQUIRE(bell.s_exact.has_value());
                CHECK(*alg.s_exact == *bell.s_exact);
            }
        }
    }
}

TEST_CASE("both engines match signed quadrature") {
    for (int n : {0, 1, 2, 4, 6, 8}) {
        for (double alpha : {0.0, 0.5, 1.5, 2.0}) {
            for (int two_q : {3, 4, 6}) {
                CAPTURE(n);
                CAPTURE(alpha);
                CAPTURE(two_q);
                const PolySpec spec{n, alpha};
                const double ref = quadrature_w(spec, two_q);
                const RenyiResult alg = entropic_moment_algebraic(spec, two_q);
                const RenyiResult bell = entropic_moment_bell(spec, two_q);
                CHECK(alg.w == doctest::Approx(ref).epsilon(1e-9).scale(1e-12));
                CHECK(bell.w == doctest::Approx(ref).epsilon(1e-9).scale(1e-12));
            }
        }
    }
}

TEST_CASE("term budget guard") {
    CHECK_THROWS_AS(entropic_moment_algebraic(PolySpec{200, 0.0}, 6),
                    TermBudgetError);
    try {
        lauricella_theta0(PolySpec{3, 0.0}, 4, 10);
        FAIL("expected a budget error");
    } catch (const TermBudgetError& e) {
        CHECK(e.required == 256);
        CHECK(e.cap == 10);
    }
    // raising the cap admits the same call
    CHECK_NOTHROW(lauricella_theta0(PolySpec{3, 0.0}, 4, 256));
}

TEST_CASE("length ordering across q at even 2q") {
    for (int n : {0, 1, 3, 6}) {
        for (double alpha : {0.0, 2.0, 5.0}) {
            CAPTURE(n);
            CAPTURE(alpha);
            const PolySpec spec{n, alpha};
            const RenyiResult l2 = renyi_length_algebraic(spec, 4);
            const RenyiResult l3 = renyi_length_algebraic(spec, 6);
            CHECK(l2.w > 0.0);
            CHECK(l3.w > 0.0);
            CHECK(l2.length >= l3.length);
        }
    }
    // for n = 0 the polynomial never changes sign, so odd 2q joins the chain
    for (double alpha : {0.0, 2.0, 5.0}) {
        const PolySpec spec{0, alpha};
        double prev = std::numeric_limits<double>::infinity();
        for (int two_q : {3, 4, 5, 6}) {
            const double len = renyi_length_algebraic(spec, two_q).length;
            CHECK(len > 0.0);
            CHECK(len <= prev);
            prev = len;
        }
    }
}
