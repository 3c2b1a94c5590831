#pragma once

// Exact rational scalar on top of GMP mpq_t. Values are kept canonical
// (reduced, denominator > 0) after every operation.

#include <gmp.h>

#include <cmath>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace lagspread {

class Rational {
public:
    Rational() { mpq_init(v_); }

    Rational(long num) {
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
    }

    Rational(long num, long den) {
        if (den == 0) throw std::domain_error("Rational: zero denominator");
        mpq_init(v_);
        mpq_set_si(v_, num, 1);
        mpq_t d;
        mpq_init(d);
        mpq_set_si(d, den, 1);
        mpq_div(v_, v_, d);
        mpq_clear(d);
    }

    Rational(const Rational& o) {
        mpq_init(v_);
        mpq_set(v_, o.v_);
    }

    Rational(Rational&& o) noexcept {
        mpq_init(v_);
        mpq_swap(v_, o.v_);
    }

    Rational& operator=(const Rational& o) {
        if (this != &o) mpq_set(v_, o.v_);
        return *this;
    }

    Rational& operator=(Rational&& o) noexcept {
        if (this != &o) mpq_swap(v_, o.v_);
        return *this;
    }

    ~Rational() { mpq_clear(v_); }

    static Rational factorial(unsigned long n) {
        Rational r;
        mpz_fac_ui(mpq_numref(r.v_), n);
        return r;
    }

    static Rational binomial(unsigned long n, unsigned long k) {
        Rational r;
        mpz_bin_uiui(mpq_numref(r.v_), n, k);
        return r;
    }

    // the exact value of the binary double, e.g. 0.5 -> 1/2, 0.1 -> a 2^-55 grid point
    static Rational from_double(double x) {
        if (!std::isfinite(x)) throw std::domain_error("Rational: non-finite double");
        Rational r;
        mpq_set_d(r.v_, x);
        return r;
    }

    Rational& operator+=(const Rational& o) { mpq_add(v_, v_, o.v_); return *this; }
    Rational& operator-=(const Rational& o) { mpq_sub(v_, v_, o.v_); return *this; }
    Rational& operator*=(const Rational& o) { mpq_mul(v_, v_, o.v_); return *this; }

    Rational& operator/=(const Rational& o) {
        if (o.is_zero()) throw std::domain_error("Rational: division by zero");
        mpq_div(v_, v_, o.v_);
        return *this;
    }

    friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
    friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
    friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
    friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

    Rational operator-() const {
        Rational r(*this);
        mpq_neg(r.v_, r.v_);
        return r;
    }

    friend bool operator==(const Rational& a, const Rational& b) { return mpq_equal(a.v_, b.v_) != 0; }
    friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
    friend bool operator<(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) < 0; }
    friend bool operator<=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) <= 0; }
    friend bool operator>(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) > 0; }
    friend bool operator>=(const Rational& a, const Rational& b) { return mpq_cmp(a.v_, b.v_) >= 0; }

    bool is_zero() const { return mpq_sgn(v_) == 0; }
    int sign() const { return mpq_sgn(v_); }

    Rational abs() const {
        Rational r(*this);
        mpq_abs(r.v_, r.v_);
        return r;
    }

    // e may be negative; 0^negative throws.
    Rational pow(long e) const {
        if (e == 0) return Rational(1);
        if (is_zero()) {
            if (e < 0) throw std::domain_error("Rational: 0 to negative power");
            return Rational(0);
        }
        Rational base(*this);
        if (e < 0) {
            base = Rational(1) / base;
            e = -e;
        }
        Rational acc(1);
        while (e > 0) {
            if (e & 1) acc *= base;
            base *= base;
            e >>= 1;
        }
        return acc;
    }

    // exact square root if both numerator and denominator are perfect squares
    std::optional<Rational> sqrt_exact() const {
        if (sign() < 0) return std::nullopt;
        if (!mpz_perfect_square_p(mpq_numref(v_)) || !mpz_perfect_square_p(mpq_denref(v_)))
            return std::nullopt;
        Rational r;
        mpz_sqrt(mpq_numref(r.v_), mpq_numref(v_));
        mpz_sqrt(mpq_denref(r.v_), mpq_denref(v_));
        return r;
    }

    double to_double() const { return mpq_get_d(v_); }

    // natural log of the absolute value, safe for values outside double range
    double log_abs() const {
        if (is_zero()) throw std::domain_error("Rational: log of zero");
        long en = 0, ed = 0;
        const double mn = mpz_get_d_2exp(&en, mpq_numref(v_));
        const double md = mpz_get_d_2exp(&ed, mpq_denref(v_));
        constexpr double ln2 = 0.6931471805599453094172321214581766;
        return std::log(std::abs(mn)) - std::log(md) + ln2 * (en - ed);
    }

    std::string to_string() const {
        char* s = mpq_get_str(nullptr, 10, v_);
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    std::string numerator_str() const {
        char* s = mpz_get_str(nullptr, 10, mpq_numref(v_));
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    std::string denominator_str() const {
        char* s = mpz_get_str(nullptr, 10, mpq_denref(v_));
        std::string out(s);
        void (*freefn)(void*, size_t);
        mp_get_memory_functions(nullptr, nullptr, &freefn);
        freefn(s, out.size() + 1);
        return out;
    }

    const mpq_t& raw() const { return v_; }

private:
    mpq_t v_;
};

}  // namespace lagspread
