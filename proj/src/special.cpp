#include "lagspread/special.hpp"

#include <cmath>

namespace lagspread {

// Lanczos approximation, g = 7, 9 coefficients. Arguments below 0.5 are
// lifted through ln Gamma(x) = ln Gamma(x+1) - ln x.
double log_gamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("log_gamma: requires x > 0");

    static const double c[9] = {
        0.99999999999980993,
        676.5203681218851,
        -1259.1392167224028,
        771.32342877765313,
        -176.61502916214059,
        12.507343278686905,
        -0.13857109526572012,
        9.9843695780195716e-6,
        1.5056327351493116e-7,
    };

    double shift = 0.0;
    while (x < 0.5) {
        shift -= std::log(x);
        x += 1.0;
    }

    const double z = x - 1.0;
    double sum = c[0];
    for (int i = 1; i < 9; ++i) sum += c[i] / (z + i);
    const double base = z + 7.5;
    return shift + 0.5 * log_2pi + (z + 0.5) * std::log(base) - base + std::log(sum);
}

// Shift to x >= 10, then the asymptotic series
// psi(x) ~ ln x - 1/(2x) - sum B_2k / (2k x^2k).
double digamma(double x) {
    if (!(x > 0.0)) throw std::domain_error("digamma: requires x > 0");

    double acc = 0.0;
    while (x < 10.0) {
        acc -= 1.0 / x;
        x += 1.0;
    }

    static const double b[7] = {
        1.0 / 12.0,   -1.0 / 120.0,    1.0 / 252.0, -1.0 / 240.0,
        1.0 / 132.0,  -691.0 / 32760.0, 1.0 / 12.0,
    };
    const double inv2 = 1.0 / (x * x);
    double p = inv2;
    double tail = 0.0;
    for (int k = 0; k < 7; ++k) {
        tail += b[k] * p;
        p *= inv2;
    }
    return acc + std::log(x) - 0.5 / x - tail;
}

}  // namespace lagspread
