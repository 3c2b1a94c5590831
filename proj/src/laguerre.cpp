#include "lagspread/laguerre.hpp"

#include "lagspread/special.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>

namespace lagspread {

std::vector<Rational> scaled_coefficients(const PolySpec& spec) {
    const int n = spec.n;
    const Rational alpha = spec.alpha_rational();
    std::vector<Rational> s(n + 1);
    // from the top coefficient (-1)^n/n! down, via
    // |s_{k-1}| / |s_k| = k (alpha+k) / (n-k+1)
    s[n] = Rational((n & 1) ? -1 : 1) / Rational::factorial(static_cast<unsigned long>(n));
    for (int k = n; k > 0; --k)
        s[k - 1] = -(s[k] * Rational(k) * (alpha + Rational(k))) / Rational(n - k + 1);
    return s;
}

CoefficientVector coefficients(const PolySpec& spec) {
    const int n = spec.n;
    CoefficientVector cv{spec, spec.alpha_is_integer(), scaled_coefficients(spec),
                         Rational(1), {}};
    cv.c.resize(n + 1);

    if (cv.exact) {
        // norm_sq = Gamma(n+a+1)/n! = (n+1)(n+2)...(n+a)
        Rational r(1);
        for (long t = 1; t <= spec.alpha_int(); ++t) r *= Rational(n + t);
        cv.norm_sq = r;
    }
    const double half_log_norm =
        0.5 * (log_gamma(n + spec.alpha + 1.0) - log_gamma(n + 1.0));
    for (int k = 0; k <= n; ++k)
        cv.c[k] = cv.scaled[k].sign() *
                  std::exp(cv.scaled[k].log_abs() - half_log_norm);
    return cv;
}

std::pair<double, double> evaluate_orthonormal_pair(const PolySpec& spec, double x) {
    const double a = spec.alpha;
    double p0 = std::exp(-0.5 * log_gamma(a + 1.0));
    if (spec.n == 0) return {p0, 0.0};
    double p1 = (a + 1.0 - x) * std::exp(-0.5 * log_gamma(a + 2.0));
    for (int k = 1; k < spec.n; ++k) {
        const double d = (k + 1.0) * (k + 1.0 + a);
        const double p2 = (2.0 * k + 1.0 + a - x) / std::sqrt(d) * p1 -
                          std::sqrt(k * (k + a) / d) * p0;
        p0 = p1;
        p1 = p2;
    }
    return {p1, p0};
}

double evaluate_orthonormal(const PolySpec& spec, double x) {
    return evaluate_orthonormal_pair(spec, x).first;
}

double evaluate_orthonormal_derivative(const PolySpec& spec, double x) {
    if (x <= 0.0) throw std::domain_error("evaluate_orthonormal_derivative: requires x > 0");
    if (spec.n == 0) return 0.0;
    auto [pn, pm] = evaluate_orthonormal_pair(spec, x);
    const double n = spec.n;
    return (n * pn - std::sqrt(n * (n + spec.alpha)) * pm) / x;
}

double density(const PolySpec& spec, double x) {
    if (x < 0.0) throw std::domain_error("density: requires x >= 0");
    const double v = evaluate_orthonormal(spec, x);
    return std::pow(x, spec.alpha) * std::exp(-x) * v * v;
}

std::vector<double> roots(const PolySpec& spec) {
    const int n = spec.n;
    if (n == 0) return {};
    const double a = spec.alpha;

    Eigen::VectorXd diag(n), sub(std::max(n - 1, 1));
    for (int k = 0; k < n; ++k) diag[k] = 2.0 * k + a + 1.0;
    for (int k = 1; k < n; ++k) sub[k - 1] = std::sqrt(k * (k + a));

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub.head(std::max(n - 1, 0)),
                                  Eigen::EigenvaluesOnly);
    std::vector<double> r(solver.eigenvalues().data(),
                          solver.eigenvalues().data() + n);
    std::sort(r.begin(), r.end());

    // one Newton polish through the recurrence
    for (double& x : r) {
        const double f = evaluate_orthonormal(spec, x);
        const double df = evaluate_orthonormal_derivative(spec, x);
        if (df != 0.0) {
            const double step = f / df;
            if (std::abs(step) < 1e-3 * std::max(1.0, x)) x -= step;
        }
    }
    return r;
}

double x_max(const PolySpec& spec) {
    const auto r = roots(spec);
    const double last = r.empty() ? 0.0 : r.back();
    return last + 40.0 + 10.0 * std::log(1.0 + spec.n + std::abs(spec.alpha));
}

}  // namespace lagspread
