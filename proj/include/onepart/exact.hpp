#pragma once

/// \file exact.hpp
/// Exact rational scalars and the number-theoretic primitives built on them:
/// factorials, binomials, Bernoulli numbers and polynomials, and the
/// Faulhaber closed form for power sums.
///
/// Every value is an exact rational in lowest terms with a positive
/// denominator. There is no floating-point path anywhere in the library.

#include <gmpxx.h>

#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <vector>

namespace onepart {

using Integer = mpz_class;
using Rational = mpq_class;

inline Rational make_rational(const Integer& num, const Integer& den) {
    if (den == 0)
        throw std::domain_error("rational with zero denominator");
    Rational r(num, den);
    r.canonicalize();
    return r;
}

inline Rational make_rational(long num, long den = 1) {
    return make_rational(Integer(num), Integer(den));
}

/// "p/q", or "n" when the denominator is 1.
inline std::string to_string(const Rational& r) { return r.get_str(10); }

inline std::string to_string(const Integer& z) { return z.get_str(10); }

/// Parses "p/q" or "n"; throws std::invalid_argument on malformed input.
inline Rational parse_rational(const std::string& text) {
    Rational r;
    if (text.empty() || r.set_str(text, 10) != 0)
        throw std::invalid_argument("not a rational: '" + text + "'");
    if (r.get_den() == 0)
        throw std::invalid_argument("zero denominator: '" + text + "'");
    r.canonicalize();
    return r;
}

inline Integer factorial(long n) {
    if (n < 0)
        throw std::domain_error("factorial of a negative integer");
    Integer out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
    return out;
}

/// C(n, k); zero outside 0 <= k <= n, and defined for negative upper index
/// only through that convention (the formulas here never need the
/// extension).
inline Integer binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n)
        return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
}

/// Integer power with a non-negative exponent.
inline Integer ipow(const Integer& base, long exponent) {
    if (exponent < 0)
        throw std::domain_error("negative exponent for an integer power");
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exponent));
    return out;
}

/// Rational power; negative exponents invert (base must then be nonzero).
/// 0^0 = 1.
inline Rational pow(const Rational& base, long exponent) {
    if (exponent < 0) {
        if (base == 0)
            throw std::domain_error("zero raised to a negative power");
        return pow(Rational(1) / base, -exponent);
    }
    Rational out(ipow(base.get_num(), exponent), ipow(base.get_den(), exponent));
    out.canonicalize();
    return out;
}

namespace detail {

// Memoized Bernoulli table, grown on demand. B_1 = -1/2.
class BernoulliTable {
public:
    Rational get(long m) {
        std::lock_guard<std::mutex> lock(mutex_);
        while (static_cast<long>(values_.size()) <= m)
            extend();
        return values_[static_cast<std::size_t>(m)];
    }

    static BernoulliTable& instance() {
        static BernoulliTable table;
        return table;
    }

private:
    BernoulliTable() { values_.emplace_back(1); }

    // sum_{k=0}^{m} C(m+1, k) B_k = 0
    void extend() {
        const long m = static_cast<long>(values_.size());
        if (m >= 3 && m % 2 == 1) {
            values_.emplace_back(0);
            return;
        }
        Rational acc = 0;
        for (long k = 0; k < m; ++k)
            acc += Rational(binomial(m + 1, k)) * values_[static_cast<std::size_t>(k)];
        Rational bm = -acc / Rational(m + 1);
        bm.canonicalize();
        values_.push_back(bm);
    }

    std::mutex mutex_;
    std::vector<Rational> values_;
};

}  // namespace detail

/// B_m with the convention B_1 = -1/2.
inline Rational bernoulli_number(long m) {
    if (m < 0)
        throw std::domain_error("Bernoulli index must be non-negative");
    return detail::BernoulliTable::instance().get(m);
}

/// B_m^+: identical to B_m except B_1^+ = +1/2, i.e. the coefficients of
/// x / (1 - e^{-x}).
inline Rational bernoulli_plus(long m) {
    if (m == 1)
        return make_rational(1, 2);
    return bernoulli_number(m);
}

/// B_m(x) = sum_k C(m,k) B_k x^{m-k}.
inline Rational bernoulli_poly(long m, const Rational& x) {
    if (m < 0)
        throw std::domain_error("Bernoulli index must be non-negative");
    Rational acc = 0;
    Rational xpow = 1;  // x^{m-k}, filled from k = m downwards
    for (long k = m; k >= 0; --k) {
        acc += Rational(binomial(m, k)) * bernoulli_number(k) * xpow;
        xpow *= x;
    }
    return acc;
}

/// (1/(2g)!) * (1^{2g} + ... + N^{2g}) via
/// sum_{k=0}^{2g} (B_k^+ / k!) N^{2g+1-k} / (2g+1-k)!.
inline Rational faulhaber(long two_g, long n) {
    if (two_g < 2 || two_g % 2 != 0)
        throw std::domain_error("faulhaber expects an even exponent >= 2");
    if (n < 0)
        throw std::domain_error("faulhaber expects N >= 0");
    Rational acc = 0;
    const Integer big_n(n);
    for (long k = 0; k <= two_g; ++k) {
        Rational term = bernoulli_plus(k) / Rational(factorial(k));
        term *= Rational(ipow(big_n, two_g + 1 - k)) / Rational(factorial(two_g + 1 - k));
        acc += term;
    }
    return acc;
}

/// Sum of k^e for k = first, first + step, ..., while k <= last.
inline Integer power_sum_progression(long exponent, long first, long last, long step = 1) {
    if (step <= 0)
        throw std::domain_error("progression step must be positive");
    Integer acc = 0;
    for (long k = first; k <= last; k += step)
        acc += ipow(Integer(k), exponent);
    return acc;
}

}  // namespace onepart
