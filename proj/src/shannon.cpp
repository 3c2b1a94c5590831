#include "lagspread/shannon.hpp"

#include "lagspread/moments.hpp"
#include "lagspread/quadrature.hpp"
#include "lagspread/special.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

namespace lagspread {

namespace {

constexpr int kMaxB = 64;

// Cached ingredients of the bound for one (n, alpha): log<x^b> and <ln x>.
struct BoundCache {
    std::vector<double> log_mom;  // [b], b = 1..kMaxB
    double log_x;

    explicit BoundCache(const PolySpec& spec) : log_mom(kMaxB + 1, 0.0) {
        for (int b = 1; b <= kMaxB; ++b) log_mom[b] = log_power_moment(spec, b);
        log_x = log_moment(spec);
    }

    double log_bound(int b, double m) const {
        const double beta = (1.0 + m) / b;
        return log_gamma(beta) + beta - beta * std::log(beta) -
               std::log(static_cast<double>(b)) + beta * log_mom[b] - m * log_x;
    }
};

double golden_minimize(const std::function<double(double)>& f, double lo,
                       double hi, double tol) {
    constexpr double gr = 0.61803398874989484820458683436564;
    double c = hi - gr * (hi - lo);
    double d = lo + gr * (hi - lo);
    double fc = f(c), fd = f(d);
    while (hi - lo > tol) {
        if (fc < fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - gr * (hi - lo);
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + gr * (hi - lo);
            fd = f(d);
        }
    }
    return 0.5 * (lo + hi);
}

}  // namespace

EntropyResult entropy_E(const PolySpec& spec) {
    auto f = [&](double x) {
        const double v = evaluate_orthonormal(spec, x);
        const double t = v * v;
        if (t <= 0.0) return 0.0;  // t ln t -> 0 at the polynomial roots
        return -std::pow(x, spec.alpha) * std::exp(-x) * t * std::log(t);
    };
    const double log_env =
        -(log_gamma(spec.n + 1.0) + log_gamma(spec.n + spec.alpha + 1.0));
    const double log_k = log_env + std::log(2.0 * spec.n + std::abs(log_env) + 1.0);
    const QuadResult q = integrate_density(
        spec, f, spec.alpha + 2.0 * spec.n + 1.0, 1.0, log_k, 1e-12, 1e-11);
    return EntropyResult{q.value, q.error, q.converged};
}

double entropy_J(const PolySpec& spec) {
    return 2.0 * spec.n + spec.alpha + 1.0 -
           spec.alpha * digamma(spec.alpha + spec.n + 1.0);
}

ShannonReport shannon(const PolySpec& spec) {
    const EntropyResult e = entropy_E(spec);
    ShannonReport rep;
    rep.e = e.value;
    rep.j = entropy_J(spec);
    rep.s = rep.e + rep.j;
    rep.length = std::exp(rep.s);
    rep.error = e.error;
    return rep;
}

double shannon_length(const PolySpec& spec) { return shannon(spec).length; }

double shannon_asymptotic(const PolySpec& spec) {
    if (spec.n == 0) return 0.0;
    const double n = spec.n;
    const double a = spec.alpha;
    return 2.0 * std::numbers::pi / std::numbers::e * std::pow(n, a + 1.0) /
           std::pow(n + a + 1.0, a);
}

double shannon_bound(const PolySpec& spec, int b, double m) {
    if (b < 1) throw std::invalid_argument("shannon_bound: requires b >= 1");
    if (m <= -1.0) throw std::invalid_argument("shannon_bound: requires m > -1");
    const double beta = (1.0 + m) / b;
    return std::exp(log_gamma(beta) + beta - beta * std::log(beta) -
                    std::log(static_cast<double>(b)) +
                    beta * log_power_moment(spec, b) - m * log_moment(spec));
}

double shannon_bound_with_scale(const PolySpec& spec, int b, double m, double a) {
    if (b < 1) throw std::invalid_argument("shannon_bound_with_scale: requires b >= 1");
    if (m <= -1.0 || a <= 0.0)
        throw std::invalid_argument("shannon_bound_with_scale: requires m > -1, a > 0");
    const double beta = (1.0 + m) / b;
    const double mom_b = std::exp(log_power_moment(spec, b));
    return std::exp(log_gamma(beta) - std::log(static_cast<double>(b)) -
                    beta * std::log(a) + a * mom_b - m * log_moment(spec));
}

BoundResult optimize_bound(const PolySpec& spec, BoundMode mode) {
    const BoundCache cache(spec);

    BoundResult best;
    double best_log = std::numeric_limits<double>::infinity();

    const double m_lo = -1.0 + 1e-6;
    const double m_hi = 3.0 * spec.alpha + 6.0;

    for (int b = 1; b <= kMaxB; ++b) {
        double m = 0.0;
        if (mode == BoundMode::joint) {
            // presample to bracket the (convex in m) minimum, then refine
            constexpr int kGrid = 17;
            int arg = 0;
            double fmin = std::numeric_limits<double>::infinity();
            std::vector<double> ms(kGrid);
            for (int i = 0; i < kGrid; ++i) {
                ms[i] = m_lo + (m_hi - m_lo) * i / (kGrid - 1);
                const double fv = cache.log_bound(b, ms[i]);
                if (fv < fmin) {
                    fmin = fv;
                    arg = i;
                }
            }
            const double lo = ms[std::max(0, arg - 1)];
            const double hi = ms[std::min(kGrid - 1, arg + 1)];
            m = golden_minimize([&](double t) { return cache.log_bound(b, t); },
                                lo, hi, 1e-6);
        }
        const double lv = cache.log_bound(b, m);
        if (lv < best_log) {
            best_log = lv;
            best = BoundResult{b, m, (1.0 + m) / b, std::exp(lv)};
        }
    }
    return best;
}

}  // namespace lagspread
