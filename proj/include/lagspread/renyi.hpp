#pragma once

#include "lagspread/laguerre.hpp"

#include <optional>

namespace lagspread {

enum class RenyiEngine { algebraic, bell };

// Entropic moment W_q = integral of rho^q and the Renyi length L_q = W_q^{-1/(q-1)}.
//
// Both engines factor the moment as
//   W_q = Gamma(aq+1) / (q^{aq+1} r^q) * S,
// where r = Gamma(n+a+1)/n! is the squared norm of the classic polynomial and S
// collects the series part. S is a rational function of alpha and q, and a
// double alpha is itself an exact binary rational, so both engines evaluate S
// in exact arithmetic for every input and are compared with zero tolerance;
// floating point enters only through the Gamma/power prefactor. The series
// terms alternate violently in sign, so this is a matter of correctness, not
// luxury: a double-precision evaluation of S loses all digits already around
// n = 8 for 2q = 6.
struct RenyiResult {
    PolySpec spec;
    int two_q;  // 2q; values >= 3 define a length, 2 is the normalization case
    RenyiEngine engine;
    double w = 0.0;
    double length = 0.0;
    std::optional<Rational> s_exact;       // series factor S; always set by the engines
    std::optional<Rational> w_exact;       // full moment, when the prefactor is rational
    std::optional<Rational> length_exact;  // when the exponent -2/(2q-2) is an integer
    long terms = 0;                        // enumeration size inside the engine
};

// log of Gamma(aq+1) / (q^{aq+1} r^q); throws when aq+1 <= 0 (divergent moment).
double renyi_prefactor_log(const PolySpec& spec, int two_q);

// The same prefactor as an exact rational. Requires integer alpha, integer aq,
// and a rational r^q (q integral, or r a perfect square).
std::optional<Rational> renyi_prefactor_exact(const PolySpec& spec, int two_q);

// L_q = W^{-2/(2q-2)}. NaN for 2q = 2, and for nonpositive W with a fractional
// exponent; W < 0 occurs for odd 2q, where the power integral is signed.
double renyi_length_from_w(double w, int two_q);

// Shared assembly of a RenyiResult from an engine's series factor. When s_exact
// is present it is authoritative and w_hint is ignored.
RenyiResult package_renyi(const PolySpec& spec, int two_q, RenyiEngine engine,
                          double w_hint, std::optional<Rational> s_exact,
                          long terms);

}  // namespace lagspread
