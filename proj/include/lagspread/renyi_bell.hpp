#pragma once

#include "lagspread/renyi.hpp"

#include <vector>

namespace lagspread {

// Partial Bell polynomial B_{m,l}(a_1, ..., a_{m-l+1}) by direct enumeration of
// the partitions of m into exactly l parts. Arguments beyond args.size() are
// treated as zero, which prunes every partition with a larger part.
Rational bell_polynomial(unsigned m, unsigned l, const std::vector<Rational>& args);
double bell_polynomial(unsigned m, unsigned l, const std::vector<double>& args);

// How many partitions of m into exactly l parts (each <= max_part) the
// enumeration visits; comparable against an independent partition counter.
long bell_partition_count(unsigned m, unsigned l, unsigned max_part);

// Coefficients of the p-th power of the polynomial, via the Bell identity
//   coeff_k(f^p) = p!/(k+p)! * B_{k+p,p}(1! f_0, 2! f_1, ...).
struct PowerCoefficients {
    PolySpec spec;
    int p;
    std::vector<Rational> scaled;  // coefficients of [L_n]^p (classic normalization)
    std::vector<double> values;    // coefficients of the orthonormal power
    long terms = 0;                // partitions enumerated
};

PowerCoefficients polynomial_power_coefficients(const PolySpec& spec, int p);

RenyiResult entropic_moment_bell(const PolySpec& spec, int two_q);
RenyiResult renyi_length_bell(const PolySpec& spec, int two_q);

// Onicescu disequilibrium <rho> = W_2 (the 2q = 4 moment).
RenyiResult onicescu(const PolySpec& spec);

}  // namespace lagspread
