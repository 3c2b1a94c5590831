#pragma once

#include "lagspread/laguerre.hpp"

#include <functional>
#include <vector>

namespace lagspread {

struct QuadResult {
    double value = 0.0;
    double error = 0.0;  // estimated absolute error
    bool converged = false;
    long evals = 0;
};

// Globally adaptive Gauss(7)/Kronrod(15) integration of f over [a, b].
// Nodes are strictly interior, so f is never called at a or b.
QuadResult integrate(const std::function<double(double)>& f, double a, double b,
                     double abs_tol = 1e-13, double rel_tol = 1e-11,
                     int max_intervals = 4000);

// Integrates over consecutive segments [p[0],p[1]], [p[1],p[2]], ... and sums.
QuadResult integrate_piecewise(const std::function<double(double)>& f,
                               const std::vector<double>& points,
                               double abs_tol = 1e-13, double rel_tol = 1e-11);

// {0, interior polynomial roots below `upper`, upper}, strictly increasing.
// Splitting at the roots keeps each segment free of sign changes of the
// polynomial factor and of the near-zeros of the density.
std::vector<double> density_breakpoints(const PolySpec& spec, double upper);

// log of an upper bound for the tail integral of x^s * exp(-c*x) over [X, inf).
// Requires c*X > s; returns +inf when the bound is not applicable.
double log_tail_bound(double s, double c, double X);

// Integrates f over [0, inf) where |f(x)| <= exp(tail_log_k) * x^tail_s * e^{-tail_c x}
// for x beyond the largest polynomial root. The cutoff starts at x_max(spec) and is
// extended until the analytic tail bound drops below the absolute tolerance.
QuadResult integrate_density(const PolySpec& spec,
                             const std::function<double(double)>& f,
                             double tail_s, double tail_c, double tail_log_k,
                             double abs_tol = 1e-13, double rel_tol = 1e-11);

}  // namespace lagspread
