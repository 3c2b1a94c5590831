#include "lagspread/moments.hpp"

#include "lagspread/quadrature.hpp"
#include "lagspread/special.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace lagspread {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// binom(k, m) for integer k of either sign
Rational rational_gen_binomial(long k, unsigned m) {
    Rational num(1);
    for (unsigned i = 0; i < m; ++i) num *= Rational(k - static_cast<long>(i));
    return num / Rational::factorial(m);
}

double log_binomial(long top, long bottom) {
    return log_gamma(static_cast<double>(top) + 1.0) -
           log_gamma(static_cast<double>(bottom) + 1.0) -
           log_gamma(static_cast<double>(top - bottom) + 1.0);
}

// log of the envelope constant in |Ln~(x)|^2 <= x^{2n} / (n! Gamma(n+a+1))
double log_envelope(const PolySpec& spec) {
    return -(log_gamma(spec.n + 1.0) + log_gamma(spec.n + spec.alpha + 1.0));
}

}  // namespace

MomentValue moment(const PolySpec& spec, long k) {
    MomentValue mv;
    if (static_cast<double>(k) + spec.alpha + 1.0 <= 0.0) {
        mv.value = kInf;
        return mv;
    }
    mv.convergent = true;

    const int n = spec.n;
    if (spec.alpha_is_integer()) {
        const long a = spec.alpha_int();
        Rational sum(0);
        for (int r = 0; r <= n; ++r) {
            Rational t = rational_gen_binomial(k, static_cast<unsigned>(n - r));
            t *= t;
            t *= Rational::binomial(static_cast<unsigned long>(k + a + r),
                                    static_cast<unsigned long>(r));
            sum += t;
        }
        // n! Gamma(k+a+1) / Gamma(n+a+1)
        Rational pref = Rational::factorial(static_cast<unsigned long>(n)) *
                        Rational::factorial(static_cast<unsigned long>(k + a)) /
                        Rational::factorial(static_cast<unsigned long>(n + a));
        mv.exact = pref * sum;
        mv.value = mv.exact->to_double();
    } else {
        const double a = spec.alpha;
        double sum = 0.0;
        for (int r = 0; r <= n; ++r) {
            const double gb = gen_binomial<double>(static_cast<double>(k),
                                                   static_cast<unsigned>(n - r));
            sum += gb * gb *
                   gen_binomial<double>(static_cast<double>(k) + a + r,
                                        static_cast<unsigned>(r));
        }
        mv.value = std::exp(log_gamma(n + 1.0) + log_gamma(k + a + 1.0) -
                            log_gamma(n + a + 1.0)) *
                   sum;
    }
    return mv;
}

double moment_real(const PolySpec& spec, double p) {
    if (p + spec.alpha + 1.0 <= 0.0) return kInf;
    auto f = [&](double x) { return std::pow(x, p) * density(spec, x); };
    const QuadResult q = integrate_density(
        spec, f, spec.alpha + 2.0 * spec.n + p, 1.0, log_envelope(spec));
    return q.value;
}

double log_power_moment(const PolySpec& spec, long k) {
    if (k < 0) throw std::domain_error("log_power_moment: requires k >= 0");
    const int n = spec.n;
    const double a = spec.alpha;
    // log-sum-exp over the closed-form series; every term is positive
    std::vector<double> logs;
    logs.reserve(n + 1);
    double peak = -kInf;
    for (int r = 0; r <= n; ++r) {
        if (n - r > k) continue;  // binom(k, n-r) vanishes
        const double lt =
            2.0 * log_binomial(k, n - r) +
            (log_gamma(k + a + r + 1.0) - log_gamma(r + 1.0) - log_gamma(k + a + 1.0));
        logs.push_back(lt);
        peak = std::max(peak, lt);
    }
    double acc = 0.0;
    for (double lt : logs) acc += std::exp(lt - peak);
    return log_gamma(n + 1.0) + log_gamma(k + a + 1.0) - log_gamma(n + a + 1.0) +
           peak + std::log(acc);
}

double log_moment(const PolySpec& spec) {
    auto f = [&](double x) { return density(spec, x) * std::log(x); };
    const QuadResult q = integrate_density(
        spec, f, spec.alpha + 2.0 * spec.n + 1.0, 1.0, log_envelope(spec));
    return q.value;
}

double mean(const PolySpec& spec) { return 2.0 * spec.n + spec.alpha + 1.0; }

double variance(const PolySpec& spec) {
    const double n = spec.n;
    return 2.0 * n * n + 2.0 * (spec.alpha + 1.0) * n + spec.alpha + 1.0;
}

double standard_deviation(const PolySpec& spec) { return std::sqrt(variance(spec)); }

double fisher_information(const PolySpec& spec) {
    const double a = spec.alpha;
    if (a == 0.0) return 4.0 * spec.n + 1.0;
    if (a <= 1.0) return kInf;  // the x^{a-2} singularity is not integrable
    return ((2.0 * spec.n + 1.0) * a + 1.0) / (a * a - 1.0);
}

double fisher_length(const PolySpec& spec) {
    const double f = fisher_information(spec);
    return std::isinf(f) ? 0.0 : 1.0 / std::sqrt(f);
}

}  // namespace lagspread
