#include "lagspread/renyi_algebraic.hpp"

#include "lagspread/special.hpp"

#include <cmath>
#include <string>
#include <vector>

namespace lagspread {

namespace {

std::string budget_message(unsigned long required, unsigned long cap) {
    return "renyi_algebraic: enumeration needs " + std::to_string(required) +
           " tuples, cap is " + std::to_string(cap);
}

unsigned long required_tuples(const PolySpec& spec, int two_q, unsigned long cap) {
    const long double need = std::pow(static_cast<long double>(spec.n + 1), two_q);
    if (need > static_cast<long double>(cap)) {
        const auto req = need > 1e18L ? ~0UL : static_cast<unsigned long>(need);
        throw TermBudgetError(req, cap);
    }
    return static_cast<unsigned long>(need + 0.5L);
}

// Enumerates the tuples in lexicographic order with an odometer; pp[i] holds
// the running product of the per-index factors of the first i digits, so a
// carry at digit `pos` only recomputes the suffix.
Rational tuple_sum(int n, int two_q, const std::vector<Rational>& factor,
                   const std::vector<Rational>& weight, long& terms) {
    std::vector<int> idx(two_q, 0);
    std::vector<Rational> pp(two_q + 1, Rational(1));
    long total_degree = 0;

    Rational sum(0);
    terms = 0;
    for (;;) {
        sum += weight[total_degree] * pp[two_q];
        ++terms;

        int pos = two_q - 1;
        while (pos >= 0 && idx[pos] == n) {
            total_degree -= idx[pos];
            idx[pos] = 0;
            --pos;
        }
        if (pos < 0) break;
        ++idx[pos];
        ++total_degree;
        for (int i = pos; i < two_q; ++i) pp[i + 1] = pp[i] * factor[idx[i]];
    }
    return sum;
}

// factor[j] = (-n)_j / ((a+1)_j j!) and weight[J] = (aq+1)_J q^{-J}
Rational fa_sum(const PolySpec& spec, int two_q, long& terms) {
    const int n = spec.n;
    const Rational a = spec.alpha_rational();
    const Rational aq1 = a * Rational(two_q, 2) + Rational(1);
    const Rational inv_q(2, two_q);

    std::vector<Rational> factor(n + 1), weight(n * two_q + 1);
    factor[0] = Rational(1);
    for (int j = 0; j < n; ++j)
        factor[j + 1] = factor[j] * Rational(-(n - static_cast<long>(j))) /
                        ((a + Rational(1 + j)) * Rational(j + 1));
    weight[0] = Rational(1);
    for (int J = 0; J < n * two_q; ++J)
        weight[J + 1] = weight[J] * (aq1 + Rational(J)) * inv_q;

    return tuple_sum(n, two_q, factor, weight, terms);
}

// binom(n+a, n) = (a+1)(a+2)...(a+n)/n!, exact for any alpha
Rational central_binomial(const PolySpec& spec) {
    const Rational a = spec.alpha_rational();
    Rational b(1);
    for (int i = 1; i <= spec.n; ++i) b *= (a + Rational(i)) / Rational(i);
    return b;
}

double signed_exp(const Rational& s, double log_scale) {
    if (s.is_zero()) return 0.0;
    return s.sign() * std::exp(log_scale + s.log_abs());
}

}  // namespace

TermBudgetError::TermBudgetError(unsigned long required_, unsigned long cap_)
    : std::runtime_error(budget_message(required_, cap_)),
      required(required_),
      cap(cap_) {}

Theta0Value lauricella_theta0(const PolySpec& spec, int two_q,
                              unsigned long term_cap) {
    if (two_q < 2) throw std::invalid_argument("lauricella_theta0: requires 2q >= 2");
    required_tuples(spec, two_q, term_cap);

    const double q = 0.5 * two_q;
    const double aq = spec.alpha * q;
    const double log_mag = log_gamma(aq + 1.0) +
                           two_q * (log_gamma(spec.n + spec.alpha + 1.0) -
                                    log_gamma(spec.n + 1.0) -
                                    log_gamma(spec.alpha + 1.0));

    Theta0Value out;
    out.fa_exact = fa_sum(spec, two_q, out.terms);
    if (spec.alpha_is_integer() && (spec.alpha_int() * two_q) % 2 == 0) {
        const long aqi = spec.alpha_int() * two_q / 2;
        out.exact = Rational::factorial(static_cast<unsigned long>(aqi)) *
                    central_binomial(spec).pow(two_q) * out.fa_exact;
    }
    out.value = signed_exp(out.fa_exact, log_mag);
    return out;
}

RenyiResult entropic_moment_algebraic(const PolySpec& spec, int two_q,
                                      unsigned long term_cap) {
    if (two_q < 2) throw std::invalid_argument("entropic_moment_algebraic: requires 2q >= 2");
    required_tuples(spec, two_q, term_cap);

    long terms = 0;
    const Rational fa = fa_sum(spec, two_q, terms);
    const Rational s = central_binomial(spec).pow(two_q) * fa;
    return package_renyi(spec, two_q, RenyiEngine::algebraic, 0.0, s, terms);
}

RenyiResult renyi_length_algebraic(const PolySpec& spec, int two_q,
                                   unsigned long term_cap) {
    return entropic_moment_algebraic(spec, two_q, term_cap);
}

RenyiResult closed_form_n0(const PolySpec& spec, int two_q) {
    if (spec.n != 0) throw std::invalid_argument("closed_form_n0: requires n = 0");
    return package_renyi(spec, two_q, RenyiEngine::algebraic, 0.0, Rational(1), 1);
}

RenyiResult closed_form_n1(const PolySpec& spec, int two_q) {
    if (spec.n != 1) throw std::invalid_argument("closed_form_n1: requires n = 1");
    const long terms = two_q + 1;

    const Rational a = spec.alpha_rational();
    const Rational aq1 = a * Rational(two_q, 2) + Rational(1);
    const Rational x = Rational(-2) / (Rational(two_q) * (a + Rational(1)));
    Rational sum(0), bin(1), poch(1), xp(1);
    for (int k = 0; k <= two_q; ++k) {
        sum += bin * poch * xp;
        bin = bin * Rational(two_q - k) / Rational(k + 1);
        poch *= aq1 + Rational(k);
        xp *= x;
    }
    const Rational s = (a + Rational(1)).pow(two_q) * sum;
    return package_renyi(spec, two_q, RenyiEngine::algebraic, 0.0, s, terms);
}

}  // namespace lagspread
