#pragma once

/// \file series.hpp
/// Truncated formal power series with exact rational coefficients.
///
/// Series1 is univariate and dense; SeriesN is multivariate, sparse, and
/// carries an independent degree cap per variable. Caps are always explicit.
/// A coefficient beyond the cap is unknown, so asking for one throws rather
/// than returning zero.

#include "onepart/exact.hpp"

#include <algorithm>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace onepart {

class SeriesCapError : public std::out_of_range {
public:
    using std::out_of_range::out_of_range;
};

class Series1 {
public:
    explicit Series1(int cap) : coeffs_(checked_size(cap)) {}

    Series1(std::vector<Rational> coeffs, int cap) : coeffs_(checked_size(cap)) {
        const std::size_t n = std::min(coeffs.size(), coeffs_.size());
        for (std::size_t i = 0; i < n; ++i)
            coeffs_[i] = std::move(coeffs[i]);
    }

    static Series1 constant(const Rational& c, int cap) {
        Series1 s(cap);
        s.coeffs_[0] = c;
        return s;
    }

    /// c * t^degree; dropped if degree > cap.
    static Series1 monomial(int degree, const Rational& c, int cap) {
        Series1 s(cap);
        if (degree < 0)
            throw std::domain_error("negative monomial degree");
        if (degree <= cap)
            s.coeffs_[static_cast<std::size_t>(degree)] = c;
        return s;
    }

    int cap() const { return static_cast<int>(coeffs_.size()) - 1; }

    const Rational& coeff(int degree) const {
        if (degree < 0 || degree > cap())
            throw SeriesCapError("coefficient of t^" + std::to_string(degree) +
                                 " requested beyond truncation order " + std::to_string(cap()));
        return coeffs_[static_cast<std::size_t>(degree)];
    }

    std::span<const Rational> coefficients() const { return coeffs_; }

    Series1 truncated(int new_cap) const {
        if (new_cap > cap())
            throw SeriesCapError("cannot raise the truncation order of a series");
        return Series1(std::vector<Rational>(coeffs_.begin(), coeffs_.begin() + new_cap + 1), new_cap);
    }

    Series1 operator-() const {
        Series1 out(*this);
        for (auto& c : out.coeffs_)
            c = -c;
        return out;
    }

    friend Series1 operator+(const Series1& a, const Series1& b) {
        Series1 out(std::min(a.cap(), b.cap()));
        for (int i = 0; i <= out.cap(); ++i)
            out.coeffs_[static_cast<std::size_t>(i)] = a.coeffs_[static_cast<std::size_t>(i)] +
                                                       b.coeffs_[static_cast<std::size_t>(i)];
        return out;
    }

    friend Series1 operator-(const Series1& a, const Series1& b) { return a + (-b); }

    friend Series1 operator*(const Series1& a, const Series1& b) {
        Series1 out(std::min(a.cap(), b.cap()));
        const int cap = out.cap();
        for (int i = 0; i <= cap; ++i) {
            const Rational& ai = a.coeffs_[static_cast<std::size_t>(i)];
            if (ai == 0)
                continue;
            for (int j = 0; i + j <= cap; ++j)
                out.coeffs_[static_cast<std::size_t>(i + j)] += ai * b.coeffs_[static_cast<std::size_t>(j)];
        }
        return out;
    }

    friend Series1 operator*(const Rational& c, const Series1& s) {
        Series1 out(s);
        for (auto& x : out.coeffs_)
            x *= c;
        return out;
    }

    friend bool operator==(const Series1& a, const Series1& b) { return a.coeffs_ == b.coeffs_; }

    Series1 pow(int exponent) const {
        if (exponent < 0)
            return invert().pow(-exponent);
        Series1 result = constant(1, cap());
        Series1 base = *this;
        while (exponent > 0) {
            if (exponent & 1)
                result = result * base;
            exponent >>= 1;
            if (exponent > 0)
                base = base * base;
        }
        return result;
    }

    /// Multiplicative inverse through the same cap; the constant term must be
    /// nonzero.
    Series1 invert() const {
        const Rational& c0 = coeffs_[0];
        if (c0 == 0)
            throw std::domain_error("series with zero constant term is not invertible");
        Series1 out(cap());
        out.coeffs_[0] = Rational(1) / c0;
        for (int k = 1; k <= cap(); ++k) {
            Rational acc = 0;
            for (int j = 1; j <= k; ++j)
                acc += coeffs_[static_cast<std::size_t>(j)] * out.coeffs_[static_cast<std::size_t>(k - j)];
            out.coeffs_[static_cast<std::size_t>(k)] = -acc / c0;
        }
        return out;
    }

    /// f(t) -> f(c t).
    Series1 rescaled(const Rational& c) const {
        Series1 out(*this);
        Rational factor = 1;
        for (auto& x : out.coeffs_) {
            x *= factor;
            factor *= c;
        }
        return out;
    }

    /// f(t) -> t^k f(t), keeping the same cap.
    Series1 shifted(int k) const {
        if (k < 0)
            throw std::domain_error("negative shift");
        Series1 out(cap());
        for (int i = 0; i + k <= cap(); ++i)
            out.coeffs_[static_cast<std::size_t>(i + k)] = coeffs_[static_cast<std::size_t>(i)];
        return out;
    }

    /// Evaluates the truncated polynomial at x.
    Rational evaluate(const Rational& x) const {
        Rational acc = 0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * x + *it;
        return acc;
    }

private:
    static std::size_t checked_size(int cap) {
        if (cap < 0)
            throw std::domain_error("truncation order must be non-negative");
        return static_cast<std::size_t>(cap) + 1;
    }

    std::vector<Rational> coeffs_;
};

inline const Rational& coeff(const Series1& s, int degree) { return s.coeff(degree); }

inline Series1 invert(const Series1& s) { return s.invert(); }

/// S(scale * t) with S(x) = sinh(x/2)/(x/2) = sum_k x^{2k} / (4^k (2k+1)!).
inline Series1 s_kernel(const Rational& scale, int cap) {
    if (cap < 0)
        throw std::domain_error("truncation order must be non-negative");
    std::vector<Rational> coeffs(static_cast<std::size_t>(cap) + 1);
    Rational scale_pow = 1;
    for (int deg = 0; deg <= cap; ++deg) {
        if (deg % 2 == 0) {
            const int k = deg / 2;
            coeffs[static_cast<std::size_t>(deg)] =
                scale_pow / Rational(ipow(Integer(4), k) * factorial(2 * k + 1));
        }
        scale_pow *= scale;
    }
    return Series1(std::move(coeffs), cap);
}

/// Sparse multivariate truncated series. Exponent vectors have a fixed
/// length (the variable count) and never exceed the per-variable caps.
class SeriesN {
public:
    using Exponents = std::vector<int>;

    explicit SeriesN(std::vector<int> caps) : caps_(std::move(caps)) {
        for (int c : caps_)
            if (c < 0)
                throw std::domain_error("truncation order must be non-negative");
    }

    static SeriesN constant(const Rational& c, std::vector<int> caps) {
        SeriesN s(std::move(caps));
        if (c != 0)
            s.terms_[Exponents(s.caps_.size(), 0)] = c;
        return s;
    }

    /// f(z_var).
    static SeriesN in_variable(const Series1& f, std::size_t var, std::vector<int> caps) {
        SeriesN s(std::move(caps));
        if (var >= s.caps_.size())
            throw std::out_of_range("variable index out of range");
        const int cap = s.caps_[var];
        if (f.cap() < cap)
            throw SeriesCapError("univariate factor truncated below the variable cap");
        for (int k = 0; k <= cap; ++k) {
            if (f.coeff(k) == 0)
                continue;
            Exponents e(s.caps_.size(), 0);
            e[var] = k;
            s.terms_[e] = f.coeff(k);
        }
        return s;
    }

    /// f(z_1 + ... + z_b), each power of the sum distributed by multinomial
    /// coefficients and clipped at the caps during the distribution.
    static SeriesN in_sum(const Series1& f, std::vector<int> caps) {
        SeriesN s(std::move(caps));
        int total = 0;
        for (int c : s.caps_)
            total += c;
        if (f.cap() < total)
            throw SeriesCapError("univariate factor truncated below the total degree of the caps");
        Exponents e(s.caps_.size(), 0);
        for (int k = 0; k <= total; ++k) {
            if (f.coeff(k) == 0)
                continue;
            const Rational scale = f.coeff(k) * Rational(factorial(k));
            s.distribute(e, 0, k, scale);
        }
        return s;
    }

    std::size_t variables() const { return caps_.size(); }
    const std::vector<int>& caps() const { return caps_; }
    const std::map<Exponents, Rational>& terms() const { return terms_; }

    const Rational& coeff(const Exponents& e) const {
        check_within_caps(e);
        static const Rational zero = 0;
        const auto it = terms_.find(e);
        return it == terms_.end() ? zero : it->second;
    }

    friend SeriesN operator*(const SeriesN& a, const SeriesN& b) {
        if (a.caps_.size() != b.caps_.size())
            throw std::invalid_argument("variable count mismatch");
        std::vector<int> caps(a.caps_.size());
        for (std::size_t i = 0; i < caps.size(); ++i)
            caps[i] = std::min(a.caps_[i], b.caps_[i]);
        SeriesN out(caps);
        Exponents e(caps.size());
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                bool fits = true;
                for (std::size_t i = 0; i < caps.size() && fits; ++i) {
                    e[i] = ea[i] + eb[i];
                    fits = e[i] <= caps[i];
                }
                if (fits)
                    out.terms_[e] += ca * cb;
            }
        }
        out.prune();
        return out;
    }

    friend SeriesN operator+(const SeriesN& a, const SeriesN& b) {
        if (a.caps_.size() != b.caps_.size())
            throw std::invalid_argument("variable count mismatch");
        std::vector<int> caps(a.caps_.size());
        for (std::size_t i = 0; i < caps.size(); ++i)
            caps[i] = std::min(a.caps_[i], b.caps_[i]);
        SeriesN out(caps);
        for (const auto* src : {&a, &b})
            for (const auto& [e, c] : src->terms_)
                if (out.within_caps(e))
                    out.terms_[e] += c;
        out.prune();
        return out;
    }

    friend SeriesN operator*(const Rational& c, const SeriesN& s) {
        SeriesN out(s);
        for (auto& [e, v] : out.terms_)
            v *= c;
        out.prune();
        return out;
    }

    friend bool operator==(const SeriesN& a, const SeriesN& b) {
        return a.caps_ == b.caps_ && a.terms_ == b.terms_;
    }

private:
    // Adds scale * z^e / e! over all e with sum = remaining, from variable i on.
    void distribute(Exponents& e, std::size_t i, int remaining, const Rational& scale) {
        if (i + 1 == caps_.size()) {
            if (remaining > caps_[i])
                return;
            e[i] = remaining;
            Rational c = scale;
            for (int x : e)
                c /= Rational(factorial(x));
            terms_[e] += c;
            e[i] = 0;
            return;
        }
        if (caps_.empty())
            return;
        for (int k = 0; k <= std::min(remaining, caps_[i]); ++k) {
            e[i] = k;
            distribute(e, i + 1, remaining - k, scale);
        }
        e[i] = 0;
    }

    bool within_caps(const Exponents& e) const {
        if (e.size() != caps_.size())
            return false;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] < 0 || e[i] > caps_[i])
                return false;
        return true;
    }

    void check_within_caps(const Exponents& e) const {
        if (e.size() != caps_.size())
            throw std::invalid_argument("exponent vector has the wrong length");
        if (!within_caps(e))
            throw SeriesCapError("multivariate coefficient requested beyond truncation caps");
    }

    void prune() {
        std::erase_if(terms_, [](const auto& kv) { return kv.second == 0; });
    }

    std::vector<int> caps_;
    std::map<Exponents, Rational> terms_;
};

inline const Rational& multi_extract(const SeriesN& s, const SeriesN::Exponents& e) {
    return s.coeff(e);
}

}  // namespace onepart
