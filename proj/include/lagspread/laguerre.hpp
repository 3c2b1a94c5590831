#pragma once

// Orthonormal Laguerre polynomials L~_n^(alpha), their Rakhmanov density
// rho(x) = x^alpha e^-x [L~_n^(alpha)(x)]^2, coefficient vectors and roots.

#include "lagspread/rational.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lagspread {

struct PolySpec {
    int n = 0;
    double alpha = 0.0;

    PolySpec(int n_, double alpha_) : n(n_), alpha(alpha_) {
        if (n < 0) throw std::domain_error("PolySpec: n must be >= 0");
        if (!(alpha > -1.0)) throw std::domain_error("PolySpec: alpha must be > -1");
    }

    // true when alpha is a (necessarily non-negative) integer, the regime where
    // the normalization Gamma(n+alpha+1)/n! is rational too
    bool alpha_is_integer() const {
        return alpha == std::floor(alpha);
    }
    long alpha_int() const { return static_cast<long>(alpha); }

    // alpha as the rational it is; a double is always an exact binary rational
    Rational alpha_rational() const { return Rational::from_double(alpha); }
};

// Monomial coefficients split into an exact part and a shared normalization:
// the orthonormal coefficient is scaled[k] * norm_sq^(-1/2), where
// norm_sq = Gamma(n+alpha+1)/n!. The scaled part equals the classic L_n^(alpha)
// coefficient (-1)^k binom(n+alpha, n-k)/k! and is rational for every alpha;
// norm_sq is rational only for integer alpha, which is what `exact` flags.
// The float view c[] is always populated.
struct CoefficientVector {
    PolySpec spec;
    bool exact = false;
    std::vector<Rational> scaled;
    Rational norm_sq;
    std::vector<double> c;
};

CoefficientVector coefficients(const PolySpec& spec);

// The classic coefficients (-1)^k binom(n+alpha, n-k)/k! alone, exact for any
// alpha.
std::vector<Rational> scaled_coefficients(const PolySpec& spec);

// Value of the orthonormal polynomial by the three-term recurrence.
double evaluate_orthonormal(const PolySpec& spec, double x);

// (L~_n, L~_{n-1}) pair; second component is 0 for n = 0.
std::pair<double, double> evaluate_orthonormal_pair(const PolySpec& spec, double x);

// d/dx L~_n at x > 0, via x L' = n L~_n - sqrt(n(n+alpha)) L~_{n-1}.
double evaluate_orthonormal_derivative(const PolySpec& spec, double x);

// Rakhmanov density; throws std::domain_error for x < 0.
double density(const PolySpec& spec, double x);

// The n simple positive roots, ascending. Symmetric tridiagonal Jacobi-matrix
// eigenvalues polished by one Newton step.
std::vector<double> roots(const PolySpec& spec);

// Upper integration cutoff: largest root + 40 + 10 log(1 + n + |alpha|).
double x_max(const PolySpec& spec);

}  // namespace lagspread
