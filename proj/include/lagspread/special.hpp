#pragma once

// Scalar special functions: log-gamma, digamma, Pochhammer symbols and
// generalized binomial coefficients (real and exact-rational flavors).

#include "lagspread/rational.hpp"

#include <stdexcept>

namespace lagspread {

inline constexpr double euler_gamma = 0.5772156649015328606065120900824024310;
inline constexpr double log_2pi     = 1.8378770664093454835606594728112352797;

// ln Gamma(x) for x > 0, relative accuracy ~1e-14.
double log_gamma(double x);

// psi(x) for x > 0, absolute accuracy ~1e-13.
double digamma(double x);

// Rising factorial (a)_n = a (a+1) ... (a+n-1); (a)_0 = 1.
template <typename Scalar>
Scalar pochhammer(Scalar a, unsigned n) {
    Scalar acc(1);
    for (unsigned i = 0; i < n; ++i) {
        acc *= a;
        a += Scalar(1);
    }
    return acc;
}

// Generalized binomial binom(a, k) = a (a-1) ... (a-k+1) / k! via the
// falling-factorial product, valid for any real/rational a. An integer
// a with 0 <= a < k yields an exact zero.
template <typename Scalar>
Scalar gen_binomial(Scalar a, unsigned k) {
    Scalar num(1);
    for (unsigned i = 0; i < k; ++i) {
        num *= a;
        a -= Scalar(1);
    }
    Scalar den(1);
    for (unsigned i = 2; i <= k; ++i) den *= Scalar(static_cast<long>(i));
    return num / den;
}

}  // namespace lagspread
