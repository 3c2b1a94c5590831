#include "lagspread/renyi.hpp"

#include "lagspread/special.hpp"

#include <cmath>
#include <limits>

namespace lagspread {

namespace {

void check_two_q(int two_q) {
    if (two_q < 2) throw std::invalid_argument("renyi: requires 2q >= 2");
}

}  // namespace

double renyi_prefactor_log(const PolySpec& spec, int two_q) {
    check_two_q(two_q);
    const double q = 0.5 * two_q;
    const double aq = spec.alpha * q;
    if (aq + 1.0 <= 0.0)
        throw std::domain_error("renyi: x^{alpha q} is not integrable at 0");
    const double log_r = log_gamma(spec.n + spec.alpha + 1.0) - log_gamma(spec.n + 1.0);
    return log_gamma(aq + 1.0) - (aq + 1.0) * std::log(q) - q * log_r;
}

std::optional<Rational> renyi_prefactor_exact(const PolySpec& spec, int two_q) {
    check_two_q(two_q);
    if (!spec.alpha_is_integer()) return std::nullopt;
    const long a = spec.alpha_int();
    if ((a * two_q) % 2 != 0) return std::nullopt;  // aq not an integer
    const long aq = a * two_q / 2;

    // r = Gamma(n+a+1)/n! = (n+1)(n+2)...(n+a)
    Rational r(1);
    for (long t = 1; t <= a; ++t) r *= Rational(spec.n + t);

    Rational r_pow_q;
    if (two_q % 2 == 0) {
        r_pow_q = r.pow(two_q / 2);
    } else {
        const auto root = r.sqrt_exact();
        if (!root) return std::nullopt;  // r^q irrational
        r_pow_q = root->pow(two_q);
    }

    const Rational q(two_q, 2);
    return Rational::factorial(static_cast<unsigned long>(aq)) /
           (q.pow(aq + 1) * r_pow_q);
}

double renyi_length_from_w(double w, int two_q) {
    const double nan = std::numeric_limits<double>::quiet_NaN();
    if (two_q <= 2) return nan;
    if (two_q == 3) return 1.0 / (w * w);
    if (two_q == 4) return 1.0 / w;
    if (w <= 0.0) return nan;
    return std::pow(w, -2.0 / (two_q - 2.0));
}

RenyiResult package_renyi(const PolySpec& spec, int two_q, RenyiEngine engine,
                          double w_hint, std::optional<Rational> s_exact,
                          long terms) {
    check_two_q(two_q);
    RenyiResult res{spec, two_q, engine, 0.0, 0.0, std::move(s_exact),
                    std::nullopt, std::nullopt, terms};

    if (res.s_exact) {
        if (const auto pref = renyi_prefactor_exact(spec, two_q))
            res.w_exact = *pref * *res.s_exact;
        if (res.w_exact) {
            res.w = res.w_exact->to_double();
        } else if (res.s_exact->is_zero()) {
            res.w = 0.0;
        } else {
            const double lw = renyi_prefactor_log(spec, two_q) + res.s_exact->log_abs();
            res.w = res.s_exact->sign() * std::exp(lw);
        }
    } else {
        res.w = w_hint;
    }

    res.length = renyi_length_from_w(res.w, two_q);
    if (res.w_exact && !res.w_exact->is_zero()) {
        if (two_q == 3) res.length_exact = res.w_exact->pow(-2);
        if (two_q == 4) res.length_exact = res.w_exact->pow(-1);
    }
    return res;
}

}  // namespace lagspread
