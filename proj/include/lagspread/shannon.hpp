#pragma once

#include "lagspread/laguerre.hpp"

namespace lagspread {

struct EntropyResult {
    double value = 0.0;
    double error = 0.0;
    bool converged = false;
};

// E_n = -integral of w(x) Ln~(x)^2 ln Ln~(x)^2, by root-split quadrature.
EntropyResult entropy_E(const PolySpec& spec);

// J_n = 2n + alpha + 1 - alpha psi(alpha + n + 1), the weight-part of the entropy.
double entropy_J(const PolySpec& spec);

struct ShannonReport {
    double e = 0.0;
    double j = 0.0;
    double s = 0.0;       // S = E + J
    double length = 0.0;  // N = exp(S)
    double error = 0.0;   // quadrature error carried by E
};

ShannonReport shannon(const PolySpec& spec);
double shannon_length(const PolySpec& spec);

// Leading large-n behavior of N: (2 pi / e) n^{alpha+1} / (n+alpha+1)^alpha.
double shannon_asymptotic(const PolySpec& spec);

// Upper bound on N from the Gibbs inequality with comparison densities
// proportional to x^m exp(-a x^b):
//   ln B = ln Gamma(beta) + beta - beta ln beta - ln b + beta ln<x^b> - m<ln x>,
// with beta = (1+m)/b and the scale a already at its optimum (1+m)/(b <x^b>).
double shannon_bound(const PolySpec& spec, int b, double m);

// Same bound with the scale a left free, for probing stationarity.
double shannon_bound_with_scale(const PolySpec& spec, int b, double m, double a);

enum class BoundMode { m_zero, joint };

struct BoundResult {
    int b = 1;
    double m = 0.0;
    double beta = 0.0;
    double value = 0.0;
};

// Minimizes the bound over integer b in [1, 64] and, in joint mode, over
// m in (-1, 3 alpha + 6]. Ties between b values resolve to the smaller b.
BoundResult optimize_bound(const PolySpec& spec, BoundMode mode);

}  // namespace lagspread
