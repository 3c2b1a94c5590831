#pragma once

#include "lagspread/renyi.hpp"

#include <stdexcept>

namespace lagspread {

inline constexpr unsigned long kDefaultTermCap = 100000000UL;

// The algebraic route enumerates all (n+1)^{2q} index tuples of the terminating
// hypergeometric sum; this guards against accidentally huge enumerations.
struct TermBudgetError : std::runtime_error {
    TermBudgetError(unsigned long required_, unsigned long cap_);
    unsigned long required;
    unsigned long cap;
};

struct Theta0Value {
    double value = 0.0;        // Gamma(aq+1) * binom(n+a, n)^{2q} * F
    Rational fa_exact;         // the bare hypergeometric sum F, exact for any alpha
    std::optional<Rational> exact;  // full value, when Gamma(aq+1) is rational too
    long terms = 0;
};

// F = sum over (j_1..j_{2q}) in {0..n}^{2q} of
//     (aq+1)_J * prod_i [ (-n)_{j_i} / ((a+1)_{j_i} j_i!) ] * q^{-J},  J = sum j_i.
Theta0Value lauricella_theta0(const PolySpec& spec, int two_q,
                              unsigned long term_cap = kDefaultTermCap);

RenyiResult entropic_moment_algebraic(const PolySpec& spec, int two_q,
                                      unsigned long term_cap = kDefaultTermCap);

RenyiResult renyi_length_algebraic(const PolySpec& spec, int two_q,
                                   unsigned long term_cap = kDefaultTermCap);

// Degenerate cases with closed forms, used as independent referees: the series
// factor is S = 1 for n = 0 and, for n = 1,
//   S = (1+a)^{2q} * sum_{k=0}^{2q} binom(2q,k) (aq+1)_k (-1/(q(1+a)))^k.
RenyiResult closed_form_n0(const PolySpec& spec, int two_q);
RenyiResult closed_form_n1(const PolySpec& spec, int two_q);

}  // namespace lagspread
