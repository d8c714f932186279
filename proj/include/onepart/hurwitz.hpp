#pragma once

/// \file hurwitz.hpp
/// One-part double Hurwitz numbers and their relatives, computed without
/// enumerating permutations:
///
///  - one_part: the hyperbolic generating series
///        h_{g;mu} = d^{2g-2+n} [t^{2g}] prod_i S(mu_i t) / S(t);
///  - one_part_polynomial: the same quantity as a symmetric polynomial in
///    mu_1^2, ..., mu_n^2 in the monomial basis;
///  - double_cutjoin: arbitrary double Hurwitz numbers by iterating the
///    transposition class in the centre of Q[S_d] and taking the connected
///    part with the exponential formula;
///  - spin_one_part: the r-spin generalisation through the multivariate
///    S-series.

#include "onepart/exact.hpp"
#include "onepart/factor_oracle.hpp"
#include "onepart/partitions.hpp"
#include "onepart/series.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace onepart {

/// Symmetric polynomial in mu_1, ..., mu_n written in the monomial basis
/// m_lambda. A key lists the nonzero exponents in weakly decreasing order,
/// so {4, 2} stands for sum over ordered pairs i != j of mu_i^4 mu_j^2 and
/// {2, 2} for sum over i < j of mu_i^2 mu_j^2. Monomials with more parts than
/// variables vanish and are never stored.
class SymmetricPoly {
public:
    using Key = std::vector<int>;

    explicit SymmetricPoly(int variables) : n_(variables) {
        if (n_ < 0)
            throw std::invalid_argument("negative variable count");
    }

    int variables() const { return n_; }

    void add(Key exponents, const Rational& c) {
        for (int e : exponents)
            if (e < 1)
                throw std::invalid_argument("monomial exponents must be positive");
        std::sort(exponents.begin(), exponents.end(), std::greater<>());
        if (static_cast<int>(exponents.size()) > n_ || c == 0)
            return;
        Rational& slot = terms_[exponents];
        slot += c;
        if (slot == 0)
            terms_.erase(exponents);
    }

    Rational coefficient(Key exponents) const {
        std::sort(exponents.begin(), exponents.end(), std::greater<>());
        const auto it = terms_.find(exponents);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    const std::map<Key, Rational>& terms() const { return terms_; }

    /// Highest total degree among nonzero monomials; -1 for the zero
    /// polynomial.
    int total_degree() const {
        int deg = -1;
        for (const auto& [k, c] : terms_)
            deg = std::max(deg, std::accumulate(k.begin(), k.end(), 0));
        return deg;
    }

    bool even_exponents_only() const {
        for (const auto& [k, c] : terms_)
            for (int e : k)
                if (e % 2 != 0)
                    return false;
        return true;
    }

    /// Same coefficients, viewed in fewer or more variables.
    SymmetricPoly restricted(int variables) const {
        SymmetricPoly out(variables);
        for (const auto& [k, c] : terms_)
            out.add(k, c);
        return out;
    }

    Rational evaluate(std::span<const Rational> point) const {
        if (static_cast<int>(point.size()) != n_)
            throw std::invalid_argument("evaluation point has the wrong dimension");
        Rational acc = 0;
        for (const auto& [k, c] : terms_) {
            Rational m = 0;
            for_each_arrangement(k, [&](const std::vector<int>& e) {
                Rational term = 1;
                for (int i = 0; i < n_; ++i)
                    if (e[static_cast<std::size_t>(i)] != 0)
                        term *= pow(point[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
                m += term;
            });
            acc += c * m;
        }
        return acc;
    }

    /// Fully expanded polynomial in mu_1..mu_n as a SeriesN with the given
    /// per-variable caps.
    SeriesN expanded(std::vector<int> caps) const {
        if (static_cast<int>(caps.size()) != n_)
            throw std::invalid_argument("cap vector has the wrong length");
        SeriesN out(caps);
        for (const auto& [k, c] : terms_) {
            for_each_arrangement(k, [&](const std::vector<int>& e) {
                for (int i = 0; i < n_; ++i)
                    if (e[static_cast<std::size_t>(i)] > caps[static_cast<std::size_t>(i)])
                        return;  // truncated away
                SeriesN mono = SeriesN::constant(c, caps);
                for (int i = 0; i < n_; ++i) {
                    const auto ui = static_cast<std::size_t>(i);
                    if (e[ui] != 0)
                        mono = mono * SeriesN::in_variable(Series1::monomial(e[ui], 1, caps[ui]), ui, caps);
                }
                out = out + mono;
            });
        }
        return out;
    }

    /// Least common denominator of the coefficients.
    Integer common_denominator() const {
        Integer l = 1;
        for (const auto& [k, c] : terms_)
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        return l;
    }

    friend bool operator==(const SymmetricPoly& a, const SymmetricPoly& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    // Visits every distinct placement of the exponents of k into n slots.
    template <class F>
    void for_each_arrangement(const Key& k, F&& f) const {
        std::vector<int> e(static_cast<std::size_t>(n_), 0);
        std::copy(k.begin(), k.end(), e.begin());
        std::sort(e.begin(), e.end());
        do {
            f(e);
        } while (std::next_permutation(e.begin(), e.end()));
    }

    int n_;
    std::map<Key, Rational> terms_;
};

/// Human-readable form in the style "d^(n+2)/5760 * (3 sum mu_i^4 + ...)".
inline std::string appendix_notation(const SymmetricPoly& p, int genus) {
    const Integer den = p.common_denominator();
    std::string out = "h_{" + std::to_string(genus) + ";mu} = d^(n";
    const int shift = 2 * genus - 2;
    if (shift > 0)
        out += "+" + std::to_string(shift);
    else if (shift < 0)
        out += std::to_string(shift);
    out += ")";
    if (den != 1)
        out += "/" + den.get_str();
    out += " * (";
    static const char* kIndex[] = {"i", "j", "k", "l", "m", "p", "q", "r", "s", "t"};
    bool first = true;
    // Highest degree first, as in the printed tables.
    std::vector<std::pair<SymmetricPoly::Key, Rational>> ordered(p.terms().begin(), p.terms().end());
    std::stable_sort(ordered.begin(), ordered.end(), [](const auto& a, const auto& b) {
        const int da = std::accumulate(a.first.begin(), a.first.end(), 0);
        const int db = std::accumulate(b.first.begin(), b.first.end(), 0);
        if (da != db)
            return da > db;
        return a.first > b.first;
    });
    for (const auto& [k, c] : ordered) {
        const Integer scaled = Rational(c * Rational(den)).get_num();
        const bool negative = scaled < 0;
        const Integer magnitude = negative ? Integer(-scaled) : scaled;
        if (first)
            out += negative ? "-" : "";
        else
            out += negative ? " - " : " + ";
        first = false;
        if (k.empty()) {
            out += magnitude.get_str();
            continue;
        }
        if (magnitude != 1)
            out += magnitude.get_str() + " ";
        out += "sum ";
        for (std::size_t i = 0; i < k.size(); ++i) {
            if (i)
                out += " ";
            out += "mu_" + std::string(i < 10 ? kIndex[i] : "x") + "^" + std::to_string(k[i]);
        }
    }
    if (first)
        out += "0";
    out += ")";
    return out;
}

namespace detail {

// [t^{2j}] S(t) and [t^{2j}] 1/S(t) for j = 0..g.
inline std::pair<std::vector<Rational>, std::vector<Rational>> kernel_coefficients(int g) {
    const Series1 s = s_kernel(1, 2 * g);
    const Series1 inv = s.invert();
    std::vector<Rational> a, b;
    for (int j = 0; j <= g; ++j) {
        a.push_back(s.coeff(2 * j));
        b.push_back(inv.coeff(2 * j));
    }
    return {a, b};
}

inline void partitions_bounded(int remaining, int max_part, int max_len, std::vector<int>& prefix,
                               const std::function<void(const std::vector<int>&)>& visit) {
    if (remaining == 0) {
        visit(prefix);
        return;
    }
    if (static_cast<int>(prefix.size()) == max_len)
        return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_bounded(remaining - p, p, max_len, prefix, visit);
        prefix.pop_back();
    }
}

}  // namespace detail

/// h^{one-part}_{g;mu} through the generating series.
inline Rational one_part(int genus, const Partition& mu) {
    if (genus < 0)
        throw std::invalid_argument("negative genus");
    if (mu.empty())
        throw std::invalid_argument("empty partition");
    const int cap = 2 * genus;
    Series1 acc = s_kernel(1, cap).invert();
    for (int part : mu)
        acc = acc * s_kernel(part, cap);
    const int n = mu.length();
    const int d = mu.size();
    return pow(Rational(d), 2 * genus - 2 + n) * acc.coeff(cap);
}

/// P_{g,n} with h_{g;mu} = d^{2g-2+n} P_{g,n}(mu_1^2, ..., mu_n^2), expressed
/// in the monomial basis of the mu_i (all exponents even).
inline SymmetricPoly one_part_polynomial(int genus, int n) {
    if (genus < 0 || n < 1 || 2 * genus - 2 + n <= 0)
        throw std::invalid_argument("one_part_polynomial needs 2g - 2 + n > 0");
    const auto [s, inv] = detail::kernel_coefficients(genus);
    SymmetricPoly out(n);
    for (int h = 0; h <= genus; ++h) {
        std::vector<int> prefix;
        detail::partitions_bounded(h, h, n, prefix, [&](const std::vector<int>& lambda) {
            Rational c = inv[static_cast<std::size_t>(genus - h)];
            SymmetricPoly::Key key;
            for (int part : lambda) {
                c *= s[static_cast<std::size_t>(part)];
                key.push_back(2 * part);
            }
            out.add(key, c);
        });
    }
    return out;
}

/// d^{2g-2+n} P_{g,n}(mu^2).
inline Rational evaluate_one_part(const SymmetricPoly& poly, int genus, const Partition& mu) {
    const std::vector<Rational> point = to_rationals(mu);
    return pow(Rational(mu.size()), 2 * genus - 2 + mu.length()) * poly.restricted(mu.length()).evaluate(point);
}

namespace detail {

// Multiset helpers over weakly decreasing vectors.
inline std::vector<int> merge_desc(const std::vector<int>& a, const std::vector<int>& b) {
    std::vector<int> out;
    out.reserve(a.size() + b.size());
    std::merge(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), std::greater<>());
    return out;
}

inline bool is_submultiset(const std::vector<int>& small, const std::vector<int>& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end(), std::greater<>());
}

inline std::vector<std::vector<int>> nonempty_submultisets(const Partition& p) {
    std::vector<std::pair<int, int>> mult;
    for (const auto& [part, m] : p.multiplicities())
        mult.emplace_back(part, m);
    std::vector<std::vector<int>> out;
    std::vector<int> choice(mult.size(), 0);
    while (true) {
        std::size_t i = 0;
        while (i < mult.size() && choice[i] == mult[i].second) {
            choice[i] = 0;
            ++i;
        }
        if (i == mult.size())
            break;
        ++choice[i];
        std::vector<int> sub;
        for (std::size_t j = 0; j < mult.size(); ++j)
            sub.insert(sub.end(), static_cast<std::size_t>(choice[j]), mult[j].first);
        std::sort(sub.begin(), sub.end(), std::greater<>());
        out.push_back(std::move(sub));
    }
    return out;
}

// Left multiplication by the sum of all transpositions, on class-indexed
// vectors over the partitions of d.
class TranspositionClassOperator {
public:
    explicit TranspositionClassOperator(int d) : classes_(all_partitions(d)) {
        for (std::size_t i = 0; i < classes_.size(); ++i)
            index_[classes_[i].parts()] = i;
        rows_.resize(classes_.size());
        for (std::size_t i = 0; i < classes_.size(); ++i) {
            const auto& parts = classes_[i].parts();
            std::map<std::size_t, long> row;
            // join two distinct cycles: len_a * len_b transpositions
            for (std::size_t a = 0; a < parts.size(); ++a)
                for (std::size_t b = a + 1; b < parts.size(); ++b) {
                    std::vector<int> next;
                    for (std::size_t c = 0; c < parts.size(); ++c)
                        if (c != a && c != b)
                            next.push_back(parts[c]);
                    next.push_back(parts[a] + parts[b]);
                    row[lookup(next)] += static_cast<long>(parts[a]) * parts[b];
                }
            // cut one cycle of length k into {j, k - j}
            for (std::size_t a = 0; a < parts.size(); ++a) {
                const int k = parts[a];
                for (int j = 1; 2 * j <= k; ++j) {
                    std::vector<int> next;
                    for (std::size_t c = 0; c < parts.size(); ++c)
                        if (c != a)
                            next.push_back(parts[c]);
                    next.push_back(j);
                    next.push_back(k - j);
                    row[lookup(next)] += (2 * j == k) ? k / 2 : k;
                }
            }
            rows_[i].assign(row.begin(), row.end());
        }
    }

    const std::vector<Partition>& classes() const { return classes_; }

    std::size_t index_of(const std::vector<int>& parts) const { return index_.at(parts); }

    std::vector<Integer> apply(const std::vector<Integer>& v) const {
        std::vector<Integer> out(v.size(), Integer(0));
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0)
                continue;
            for (const auto& [j, mult] : rows_[i])
                out[j] += v[i] * mult;
        }
        return out;
    }

private:
    std::size_t lookup(std::vector<int> parts) const {
        std::sort(parts.begin(), parts.end(), std::greater<>());
        return index_.at(parts);
    }

    std::vector<Partition> classes_;
    std::map<std::vector<int>, std::size_t> index_;
    std::vector<std::vector<std::pair<std::size_t, long>>> rows_;
};

}  // namespace detail

/// Number of (possibly disconnected) tuples (sigma_0, tau_1..tau_m) with
/// sigma_0 of type nu and tau_m ... tau_1 sigma_0 of type mu.
inline Integer disconnected_count(const Partition& mu, const Partition& nu, int m) {
    if (mu.size() != nu.size())
        throw std::invalid_argument("profiles have different sizes");
    if (m < 0)
        return 0;
    const detail::TranspositionClassOperator op(mu.size());
    std::vector<Integer> v(op.classes().size(), Integer(0));
    v[op.index_of(nu.parts())] = nu.class_size();
    for (int step = 0; step < m; ++step)
        v = op.apply(v);
    return v[op.index_of(mu.parts())];
}

/// Connected double Hurwitz number with the |Aut(mu)| / (d! m!) weight,
/// computed in the class algebra. `budget` bounds the size of the
/// exponential-formula expansion.
inline Rational double_cutjoin(int genus, const Partition& mu, const Partition& nu,
                               std::uint64_t budget = kDefaultOracleBudget) {
    if (mu.empty() || nu.empty())
        throw std::invalid_argument("profiles must be nonempty");
    if (mu.size() != nu.size())
        throw std::invalid_argument("profiles have different sizes");
    const int m = 2 * genus - 2 + mu.length() + nu.length();
    if (m < 0)
        return 0;

    using Key = std::tuple<std::vector<int>, std::vector<int>, int>;
    std::map<Key, Rational> series;  // disconnected counts / (d'! m'!)

    const auto mu_subs = detail::nonempty_submultisets(mu);
    const auto nu_subs = detail::nonempty_submultisets(nu);
    std::map<int, detail::TranspositionClassOperator> ops;
    for (const auto& nu_sub : nu_subs) {
        const int size = std::accumulate(nu_sub.begin(), nu_sub.end(), 0);
        auto it = ops.find(size);
        if (it == ops.end())
            it = ops.emplace(size, detail::TranspositionClassOperator(size)).first;
        const auto& op = it->second;
        std::vector<Integer> v(op.classes().size(), Integer(0));
        v[op.index_of(nu_sub)] = Partition(nu_sub).class_size();
        for (int step = 0; step <= m; ++step) {
            for (const auto& mu_sub : mu_subs) {
                if (std::accumulate(mu_sub.begin(), mu_sub.end(), 0) != size)
                    continue;
                const Integer& count = v[op.index_of(mu_sub)];
                if (count != 0)
                    series[{mu_sub, nu_sub, step}] = make_rational(count, factorial(size) * factorial(step));
            }
            if (step < m)
                v = op.apply(v);
        }
    }

    const Integer cost = Integer(static_cast<unsigned long>(series.size())) *
                         Integer(static_cast<unsigned long>(series.size())) * mu.length();
    if (cost > Integer(static_cast<unsigned long>(budget)))
        throw BudgetExceeded("cut-and-join expansion for g=" + std::to_string(genus) + " mu=(" + mu.to_string() +
                             ") nu=(" + nu.to_string() + ") exceeds the budget");

    // log(1 + A) = sum_k (-1)^{k+1} A^k / k, truncated to sub-multisets of
    // (mu, nu) and at most m transpositions.
    const Key target{mu.parts(), nu.parts(), m};
    Rational connected = 0;
    std::map<Key, Rational> power = series;
    for (int k = 1; !power.empty(); ++k) {
        const auto it = power.find(target);
        if (it != power.end())
            connected += (k % 2 == 1 ? Rational(1) : Rational(-1)) * it->second / Rational(k);
        std::map<Key, Rational> next;
        for (const auto& [ka, ca] : power) {
            for (const auto& [kb, cb] : series) {
                const int steps = std::get<2>(ka) + std::get<2>(kb);
                if (steps > m)
                    continue;
                auto merged_mu = detail::merge_desc(std::get<0>(ka), std::get<0>(kb));
                if (!detail::is_submultiset(merged_mu, mu.parts()))
                    continue;
                auto merged_nu = detail::merge_desc(std::get<1>(ka), std::get<1>(kb));
                if (!detail::is_submultiset(merged_nu, nu.parts()))
                    continue;
                next[{std::move(merged_mu), std::move(merged_nu), steps}] += ca * cb;
            }
        }
        std::erase_if(next, [](const auto& kv) { return kv.second == 0; });
        power = std::move(next);
    }
    // connected = C / (d! m!) where C is the connected tuple count.
    return Rational(mu.aut_order()) * connected;
}

struct SpinValue {
    Rational value;
    /// False when b = (2g - 1 + n) / r is not a positive integer; value is 0.
    bool divisible = true;
};

/// [z_1^r ... z_b^r] prod_j S(d z_j) prod_i S(mu_i z) z^{n-1} / S(z), with
/// z = z_1 + ... + z_b and b = (2g - 1 + n) / r.
inline SpinValue spin_extraction(int genus, const Partition& mu, int r) {
    if (r < 1)
        throw std::invalid_argument("spin order r must be positive");
    if (genus < 0 || mu.empty())
        throw std::invalid_argument("invalid spin query");
    const int n = mu.length();
    const int d = mu.size();
    const int total = 2 * genus - 1 + n;
    if (total < r || total % r != 0)
        return {0, false};
    const int b = total / r;

    Series1 f = s_kernel(1, total).invert();
    for (int part : mu)
        f = f * s_kernel(part, total);
    f = f.shifted(n - 1);

    const std::vector<int> caps(static_cast<std::size_t>(b), r);
    SeriesN acc = SeriesN::in_sum(f, caps);
    const Series1 leg = s_kernel(d, r);
    for (int j = 0; j < b; ++j)
        acc = acc * SeriesN::in_variable(leg, static_cast<std::size_t>(j), caps);
    return {acc.coeff(caps), true};
}

/// One-part r-spin Hurwitz number
///     (r!)^b / b! * d^{b-1} * spin_extraction(g, mu, r).
/// The (r!)^b / b! factor converts the wedge-product coefficient into the
/// (r!)^m / m! weighted count; at r = 1 the result is one_part(g, mu).
inline SpinValue spin_one_part(int genus, const Partition& mu, int r) {
    SpinValue raw = spin_extraction(genus, mu, r);
    if (!raw.divisible)
        return raw;
    const int b = (2 * genus - 1 + mu.length()) / r;
    const Rational norm = make_rational(ipow(factorial(r), b), factorial(b));
    return {norm * pow(Rational(mu.size()), b - 1) * raw.value, true};
}

}  // namespace onepart
