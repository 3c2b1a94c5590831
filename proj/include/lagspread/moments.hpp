#pragma once

#include "lagspread/laguerre.hpp"

#include <optional>

namespace lagspread {

struct MomentValue {
    double value = 0.0;  // +inf when the integral diverges
    bool convergent = false;
    std::optional<Rational> exact;  // populated for integer alpha when convergent
};

// <x^k> for integer k (negative allowed). Diverges unless k + alpha + 1 > 0.
MomentValue moment(const PolySpec& spec, long k);

// <x^p> for real p > -(alpha + 1), by quadrature.
double moment_real(const PolySpec& spec, double p);

// log <x^k> for integer k >= 0, evaluated in log space (safe for large k).
double log_power_moment(const PolySpec& spec, long k);

// <ln x>, by quadrature.
double log_moment(const PolySpec& spec);

double mean(const PolySpec& spec);                // 2n + alpha + 1
double variance(const PolySpec& spec);            // 2n^2 + 2(alpha+1)n + alpha + 1
double standard_deviation(const PolySpec& spec);

// Fisher information of the density. Finite only for alpha = 0 or alpha > 1.
double fisher_information(const PolySpec& spec);

// 1/sqrt(F); zero when the information diverges.
double fisher_length(const PolySpec& spec);

}  // namespace lagspread
