#include "lagspread/renyi_bell.hpp"

#include "lagspread/special.hpp"

#include <algorithm>
#include <cmath>

namespace lagspread {

namespace {

// Core of the partition enumeration: sums prod_s (b_s)^{c_s} / c_s! over all
// partitions of m into exactly l parts with part sizes <= b.size(), where
// b_s = a_s / s!. B_{m,l}(a) = m! * core(m, l, b). Parts are chosen from the
// largest size down, c copies at a time.
template <typename T>
void partition_core(unsigned m, unsigned l, unsigned smax, const T& partial,
                    const std::vector<T>& b, T& total, long& leaves) {
    if (l == 0) {
        if (m == 0) {
            total += partial;
            ++leaves;
        }
        return;
    }
    if (smax == 0 || m < l || m > l * smax) return;
    partition_core<T>(m, l, smax - 1, partial, b, total, leaves);
    T t = partial;
    const unsigned cmax = std::min(l, m / smax);
    for (unsigned c = 1; c <= cmax; ++c) {
        t = t * b[smax - 1] / T(c);
        partition_core<T>(m - smax * c, l - c, smax - 1, t, b, total, leaves);
    }
}

template <typename T>
T bell_core(unsigned m, unsigned l, const std::vector<T>& b, long& leaves) {
    if (l == 0) return T(m == 0 ? 1 : 0);
    T total(0);
    const unsigned smax =
        static_cast<unsigned>(std::min<std::size_t>(b.size(), m - l + 1));
    partition_core<T>(m, l, smax, T(1), b, total, leaves);
    return total;
}

template <typename T>
std::vector<T> divide_by_factorials(const std::vector<T>& args) {
    std::vector<T> b(args.size());
    T f(1);
    for (std::size_t i = 0; i < args.size(); ++i) {
        f = f * T(static_cast<long>(i) + 1);
        b[i] = args[i] / f;
    }
    return b;
}

}  // namespace

Rational bell_polynomial(unsigned m, unsigned l, const std::vector<Rational>& args) {
    long leaves = 0;
    return Rational::factorial(m) *
           bell_core<Rational>(m, l, divide_by_factorials(args), leaves);
}

double bell_polynomial(unsigned m, unsigned l, const std::vector<double>& args) {
    long leaves = 0;
    return std::exp(log_gamma(m + 1.0)) *
           bell_core<double>(m, l, divide_by_factorials(args), leaves);
}

long bell_partition_count(unsigned m, unsigned l, unsigned max_part) {
    long leaves = 0;
    const std::vector<double> ones(max_part, 1.0);
    bell_core<double>(m, l, ones, leaves);
    return leaves;
}

PowerCoefficients polynomial_power_coefficients(const PolySpec& spec, int p) {
    if (p < 1) throw std::invalid_argument("polynomial_power_coefficients: requires p >= 1");
    const std::vector<Rational> base = scaled_coefficients(spec);
    const int n = spec.n;
    const int degree = n * p;

    PowerCoefficients pc{spec, p, {}, {}, 0};
    pc.scaled.resize(degree + 1);
    pc.values.resize(degree + 1);

    // With a_i = i! * f_{i-1} the divided arguments b_i are the coefficients
    // themselves, and p!/(k+p)! * B_{k+p,p} collapses to p! * core(k+p, p).
    const Rational pfac = Rational::factorial(static_cast<unsigned long>(p));
    const double log_r =
        log_gamma(n + spec.alpha + 1.0) - log_gamma(n + 1.0);
    for (int k = 0; k <= degree; ++k) {
        pc.scaled[k] = pfac * bell_core<Rational>(k + p, p, base, pc.terms);
        pc.values[k] =
            pc.scaled[k].is_zero()
                ? 0.0
                : pc.scaled[k].sign() *
                      std::exp(pc.scaled[k].log_abs() - 0.5 * p * log_r);
    }
    return pc;
}

RenyiResult entropic_moment_bell(const PolySpec& spec, int two_q) {
    if (two_q < 2) throw std::invalid_argument("entropic_moment_bell: requires 2q >= 2");
    const PowerCoefficients pc = polynomial_power_coefficients(spec, two_q);
    const int degree = spec.n * two_q;

    const Rational aq1 = spec.alpha_rational() * Rational(two_q, 2) + Rational(1);
    const Rational inv_q(2, two_q);
    Rational s(0), weight(1);
    for (int k = 0; k <= degree; ++k) {
        s += pc.scaled[k] * weight;
        weight = weight * (aq1 + Rational(k)) * inv_q;
    }
    return package_renyi(spec, two_q, RenyiEngine::bell, 0.0, s, pc.terms);
}

RenyiResult renyi_length_bell(const PolySpec& spec, int two_q) {
    return entropic_moment_bell(spec, two_q);
}

RenyiResult onicescu(const PolySpec& spec) { return entropic_moment_bell(spec, 4); }

}  // namespace lagspread
