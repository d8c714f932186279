#pragma once

/// \file moduli.hpp
/// Scalar intersection numbers on moduli spaces of curves: psi integrals in
/// genus 0 and 1, the Witten-Kontsevich numbers through the DVV recursion,
/// linear Hodge integrals, degree-one Chiodo class data, and closed
/// evaluations of Chiodo integrals.
///
/// Scaled classes: Chiodo^{[x]} multiplies the degree-k part by x^k. For an
/// integrand of top degree D = 3g - 3 + n,
///     int Chiodo^{[x]} / prod (1 - w_i psi_i) = x^D int Chiodo / prod (1 - (w_i / x) psi_i),
/// which scale_chiodo_integral implements.

#include "onepart/exact.hpp"
#include "onepart/hurwitz.hpp"
#include "onepart/partitions.hpp"
#include "onepart/series.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace onepart::moduli {

/// int_{M_{0,n}} psi_1^{a_1} ... psi_n^{a_n} = (n-3)! / prod a_i!, or 0 when
/// sum a_i != n - 3.
inline Rational psi_genus0(std::span<const int> exponents) {
    const long n = static_cast<long>(exponents.size());
    if (n < 3)
        throw std::domain_error("psi_genus0 needs at least three marked points");
    long total = 0;
    for (int a : exponents) {
        if (a < 0)
            throw std::invalid_argument("negative psi exponent");
        total += a;
    }
    if (total != n - 3)
        return 0;
    Integer den = 1;
    for (int a : exponents)
        den *= factorial(a);
    return make_rational(factorial(n - 3), den);
}

inline Rational psi_genus0(std::initializer_list<int> exponents) {
    const std::vector<int> v(exponents);
    return psi_genus0(std::span<const int>(v));
}

namespace detail {

inline Integer double_factorial_odd(long k) {  // k!! for odd k >= -1
    Integer out = 1;
    for (long j = k; j > 1; j -= 2)
        out *= j;
    return out;
}

}  // namespace detail

/// Witten-Kontsevich intersection numbers <tau_{a_1} ... tau_{a_n}>_g by the
/// DVV (Virasoro) recursion, memoized per instance.
class PsiIntersections {
public:
    Rational operator()(int genus, std::vector<int> exponents) {
        if (genus < 0)
            throw std::invalid_argument("negative genus");
        for (int a : exponents)
            if (a < 0)
                throw std::invalid_argument("negative psi exponent");
        std::sort(exponents.begin(), exponents.end(), std::greater<>());
        return evaluate(genus, exponents);
    }

    std::size_t memo_size() const { return memo_.size(); }

private:
    // exponents sorted decreasingly
    Rational evaluate(int g, const std::vector<int>& e) {
        const int n = static_cast<int>(e.size());
        if (2 * g - 2 + n <= 0)
            return 0;
        const int total = std::accumulate(e.begin(), e.end(), 0);
        if (total != 3 * g - 3 + n)
            return 0;
        if (g == 0 && n == 3)
            return 1;
        if (g == 1 && n == 1)
            return make_rational(1, 24);

        const auto key = std::make_pair(g, e);
        if (const auto it = memo_.find(key); it != memo_.end())
            return it->second;

        // Remove the largest exponent k + 1 (it is >= 1 here).
        const int k = e[0] - 1;
        const std::vector<int> rest(e.begin() + 1, e.end());
        Rational acc = 0;

        for (std::size_t j = 0; j < rest.size(); ++j) {
            std::vector<int> next = rest;
            next[j] += k;
            std::sort(next.begin(), next.end(), std::greater<>());
            const Rational coeff = make_rational(detail::double_factorial_odd(2 * k + 2 * rest[j] + 1),
                                                 detail::double_factorial_odd(2 * rest[j] - 1));
            acc += coeff * evaluate(g, next);
        }

        for (int a = 0; a <= k - 1; ++a) {
            const int b = k - 1 - a;
            const Rational weight = Rational(detail::double_factorial_odd(2 * a + 1) *
                                             detail::double_factorial_odd(2 * b + 1)) / 2;
            if (g >= 1) {
                std::vector<int> next = rest;
                next.push_back(a);
                next.push_back(b);
                std::sort(next.begin(), next.end(), std::greater<>());
                acc += weight * evaluate(g - 1, next);
            }
            const std::size_t m = rest.size();
            for (unsigned long mask = 0; mask < (1UL << m); ++mask) {
                std::vector<int> left{a}, right{b};
                for (std::size_t i = 0; i < m; ++i)
                    ((mask >> i) & 1UL ? left : right).push_back(rest[i]);
                std::sort(left.begin(), left.end(), std::greater<>());
                std::sort(right.begin(), right.end(), std::greater<>());
                for (int g1 = 0; g1 <= g; ++g1) {
                    const Rational l = evaluate(g1, left);
                    if (l == 0)
                        continue;
                    acc += weight * l * evaluate(g - g1, right);
                }
            }
        }

        const Rational value = acc / Rational(detail::double_factorial_odd(2 * k + 3));
        memo_.emplace(key, value);
        return value;
    }

    std::map<std::pair<int, std::vector<int>>, Rational> memo_;
};

inline Rational psi_dvv(int genus, const std::vector<int>& exponents) {
    thread_local PsiIntersections table;
    return table(genus, exponents);
}

/// int_{M_{1,n}} prod_i (1 - w_i psi_i)^{-1}
///   = (1/24) [ d^n - sum_{j=2}^n (j-2)! d^{n-j} e_j(w) ],   d = sum w_i.
inline Rational genus1_weighted(std::span<const Rational> weights) {
    const long n = static_cast<long>(weights.size());
    if (n < 1)
        throw std::domain_error("genus1_weighted needs at least one marked point");
    const Rational d = std::accumulate(weights.begin(), weights.end(), Rational(0));
    Rational acc = pow(d, n);
    for (long j = 2; j <= n; ++j)
        acc -= Rational(factorial(j - 2)) * pow(d, n - j) * elementary_symmetric(static_cast<int>(j), weights);
    return acc / 24;
}

inline Rational genus1_weighted(const std::vector<Rational>& weights) {
    return genus1_weighted(std::span<const Rational>(weights));
}

/// int_{M_{0,n}} prod_i (1 - w_i psi_i)^{-1}
///   = (n-3)! sum_{a_1 + ... + a_n = n-3} prod w_i^{a_i} / a_i!.
inline Rational genus0_weighted(std::span<const Rational> weights) {
    const int n = static_cast<int>(weights.size());
    if (n < 3)
        throw std::domain_error("genus0_weighted needs at least three marked points");
    const int top = n - 3;
    // f[rem] over the suffix of weights processed so far
    std::vector<Rational> f(static_cast<std::size_t>(top) + 1, Rational(0));
    f[0] = 1;
    for (const Rational& w : weights) {
        std::vector<Rational> next(f.size(), Rational(0));
        for (int rem = 0; rem <= top; ++rem) {
            Rational wpow = 1;
            for (int a = 0; a <= rem; ++a) {
                next[static_cast<std::size_t>(rem)] +=
                    wpow / Rational(factorial(a)) * f[static_cast<std::size_t>(rem - a)];
                wpow *= w;
            }
        }
        f = std::move(next);
    }
    return Rational(factorial(top)) * f[static_cast<std::size_t>(top)];
}

inline Rational genus0_weighted(const std::vector<Rational>& weights) {
    return genus0_weighted(std::span<const Rational>(weights));
}

/// Unstable conventions: 1/x^2 on M_{0,1} and 1/(x + y) on M_{0,2}.
inline Rational unstable_psi(std::span<const Rational> weights) {
    if (weights.size() == 1) {
        if (weights[0] == 0)
            throw std::domain_error("unstable_psi weight must be nonzero");
        return 1 / (weights[0] * weights[0]);
    }
    if (weights.size() == 2) {
        const Rational s = weights[0] + weights[1];
        if (s == 0)
            throw std::domain_error("unstable_psi weights must not sum to zero");
        return 1 / s;
    }
    throw std::domain_error("unstable_psi is defined only for one or two marked points in genus zero");
}

inline Rational unstable_psi(const std::vector<Rational>& weights) {
    return unstable_psi(std::span<const Rational>(weights));
}

/// int_{M_{g,1}} sum_k (-1)^k lambda_k / (1 - d psi_1)
///   = (1/d^2) [t^{2g}] S(dt)^{d-1};
/// at g = 0 this is the unstable value 1/d^2.
inline Rational linear_hodge(int genus, int d) {
    if (genus < 0 || d < 1)
        throw std::invalid_argument("linear_hodge needs g >= 0 and d >= 1");
    const Series1 s = s_kernel(d, 2 * genus).pow(d - 1);
    return s.coeff(2 * genus) / Rational(d * d);
}

struct ChiodoSpec {
    int r = 1;
    int s = 1;
    std::vector<int> residues;  // a_1..a_n, taken mod r
    Rational x = 1;             // scaling of Chiodo^{[x]}
};

/// Coefficients of kappa_1, psi_i and the boundary pushforwards j_{a*} 1
/// (a = 0..r-1) in a degree-one class.
struct Degree1ChiodoData {
    Rational kappa1;
    std::vector<Rational> psi;
    std::map<int, Rational> boundary;
};

namespace detail {

inline int normalized_residue(int a, int r) {
    int v = a % r;
    if (v <= 0)
        v += r;
    return v;  // 1..r
}

inline void check_chiodo_spec(int genus, const ChiodoSpec& spec) {
    if (spec.r < 1)
        throw std::invalid_argument("Chiodo parameter r must be positive");
    if (spec.s < 1 || spec.s > spec.r)
        throw std::invalid_argument("Chiodo parameter s must lie in 1..r");
    if (spec.residues.empty())
        throw std::invalid_argument("Chiodo class needs at least one marked point");
    if (spec.x == 0)
        throw std::invalid_argument("Chiodo scaling must be nonzero");
    const long n = static_cast<long>(spec.residues.size());
    long sum = 0;
    for (int a : spec.residues)
        sum += normalized_residue(a, spec.r);
    const long target = (2L * genus - 2 + n) * spec.s;
    if (((sum - target) % spec.r + spec.r) % spec.r != 0)
        throw std::domain_error("residues violate the existence condition sum a_i = (2g-2+n)s mod r");
}

}  // namespace detail

/// First Chern character ch_1 of the Chiodo class:
///   kappa_1: B_2(s/r)/2,   psi_i: -B_2(a_i/r)/2,   j_a: (r/2) B_2(a/r)/2.
/// spec.x does not enter here; see chiodo_degree1.
inline Degree1ChiodoData chiodo_ch1(const ChiodoSpec& spec, int genus) {
    detail::check_chiodo_spec(genus, spec);
    const Rational r(spec.r);
    Degree1ChiodoData out;
    out.kappa1 = bernoulli_poly(2, Rational(spec.s) / r) / 2;
    for (int a : spec.residues)
        out.psi.push_back(-bernoulli_poly(2, Rational(detail::normalized_residue(a, spec.r)) / r) / 2);
    for (int a = 0; a < spec.r; ++a)
        out.boundary[a] = r / 2 * bernoulli_poly(2, Rational(a) / r) / 2;
    return out;
}

/// Degree-one part of Chiodo^{[x]} = exp(sum_k (-1)^k (k-1)! x^k ch_k),
/// i.e. -x ch_1.
inline Degree1ChiodoData chiodo_degree1(const ChiodoSpec& spec, int genus) {
    Degree1ChiodoData out = chiodo_ch1(spec, genus);
    const Rational factor = -spec.x;
    out.kappa1 *= factor;
    for (auto& c : out.psi)
        c *= factor;
    for (auto& [a, c] : out.boundary)
        c *= factor;
    return out;
}

/// h^0 - h^1 = ((2g-2+n)s - sum a_i)/r - g + 1, residues taken in 1..r.
inline long rr_rank(int genus, const ChiodoSpec& spec) {
    detail::check_chiodo_spec(genus, spec);
    const long n = static_cast<long>(spec.residues.size());
    long numerator = (2L * genus - 2 + n) * spec.s;
    for (int a : spec.residues)
        numerator -= detail::normalized_residue(a, spec.r);
    if (numerator % spec.r != 0)
        throw std::logic_error("non-integral Riemann-Roch rank");
    return numerator / spec.r - genus + 1;
}

/// Genus-zero one-part Chiodo integral: the class has rank zero, so it is 1,
/// and the pushforward contributes 1/d:
///   (1/d) int_{M_{0,n}} prod (1 - mu_i psi_i)^{-1}.
inline Rational chiodo_g0_one_part_rhs(const Partition& mu) {
    if (mu.length() < 3)
        throw std::domain_error("chiodo_g0_one_part_rhs needs n >= 3");
    return genus0_weighted(to_rationals(mu)) / Rational(mu.size());
}

/// The five summands of the degree-zero and degree-one contribution to
/// int_{M_{1,d}} eps_* Chiodo^{[d]}_{1,d}(d, d; -1, ..., -1) / prod (1 - psi_i).
struct G1Deg01Parts {
    Rational summand0;   // degree zero
    Rational summand1;   // kappa_1
    Rational summand2;   // psi
    Rational summand3a;  // separating edge, genus 1 and genus 0 vertices
    Rational summand3b;  // loop on a genus 0 vertex
    Rational total() const { return summand0 + summand1 + summand2 + summand3a + summand3b; }
};

/// Pushforward from the spin moduli space to M_{g,n} for a stable graph
/// Gamma multiplies by r^{2g-1-h^1(Gamma)}; r = d and g = 1 here.
inline Rational g1_pushforward_factor(int d, int loops) { return pow(Rational(d), 1 - loops); }

inline G1Deg01Parts chiodo_g1_deg01_parts(int d) {
    if (d < 1)
        throw std::invalid_argument("chiodo_g1_deg01 needs d >= 1");
    const Rational dd(d);
    const ChiodoSpec spec{d, d, std::vector<int>(static_cast<std::size_t>(d), d - 1), dd};
    const Degree1ChiodoData c1 = chiodo_degree1(spec, 1);
    const Rational push_smooth = g1_pushforward_factor(d, 0);  // d
    const Rational push_loop = g1_pushforward_factor(d, 1);    // 1

    const std::vector<Rational> ones(static_cast<std::size_t>(d), Rational(1));
    std::vector<Rational> first_zero = ones;
    first_zero[0] = 0;

    G1Deg01Parts p;
    p.summand0 = push_smooth * genus1_weighted(ones);

    // int kappa_1 / prod (1 - psi_i) on M_{1,d} = [w^2] int_{M_{1,d+1}} with
    // weights (1, ..., 1, w). Evaluate the genus-one formula as a polynomial in w.
    {
        const int n = d + 1;
        const Series1 total = Series1::constant(dd, 2) + Series1::monomial(1, 1, 2);
        // e_j(1^d, w) = C(d, j) + C(d, j-1) w
        Series1 acc = total.pow(n);
        for (int j = 2; j <= n; ++j) {
            const Series1 ej = Series1::constant(Rational(binomial(d, j)), 2) +
                               Series1::monomial(1, Rational(binomial(d, j - 1)), 2);
            acc = acc - Rational(factorial(j - 2)) * (total.pow(n - j) * ej);
        }
        const Rational kappa_integral = acc.coeff(2) / 24;
        // The kappa_1 class picks up an additional factor d from the
        // pushforward.
        p.summand1 = c1.kappa1 * push_smooth * kappa_integral;
    }

    // sum_i psi_i: by symmetry d times the psi_1 term, and
    // psi_1 / prod (1 - psi_i) = 1/prod(1 - psi_i) - 1/prod_{i>1}(1 - psi_i).
    {
        Rational psi_sum = 0;
        for (const Rational& c : c1.psi)
            psi_sum += c;
        p.summand2 = psi_sum * push_smooth * (genus1_weighted(ones) - genus1_weighted(first_zero));
    }

    for (int a = 0; a <= d - 2; ++a) {
        std::vector<Rational> g1_weights(static_cast<std::size_t>(a), Rational(1));
        g1_weights.push_back(0);
        std::vector<Rational> g0_weights(static_cast<std::size_t>(d - a), Rational(1));
        g0_weights.push_back(0);
        p.summand3a += c1.boundary.at(a) * push_smooth * Rational(binomial(d, a)) * genus1_weighted(g1_weights) *
                       genus0_weighted(g0_weights);
    }

    {
        std::vector<Rational> g0_weights = ones;
        g0_weights.push_back(0);
        g0_weights.push_back(0);
        const Rational vertex = genus0_weighted(g0_weights);
        for (int a = 0; a <= d - 1; ++a)
            p.summand3b += c1.boundary.at(a) * push_loop * vertex;
    }
    return p;
}

inline Rational chiodo_g1_deg01(int d) { return chiodo_g1_deg01_parts(d).total(); }

/// int_{M_{g,d}} eps_* Chiodo(d, d; -1, ..., -1) / prod (1 - psi_i / d)
///   = (1/d) [t^{2g}] S(t)^{d-1}.
/// The formula is also used for the unstable (0,1), (0,2).
inline Rational chiodo_integral_allones(int genus, int d) {
    if (genus < 0 || d < 1)
        throw std::invalid_argument("chiodo_integral_allones needs g >= 0 and d >= 1");
    return s_kernel(1, 2 * genus).pow(d - 1).coeff(2 * genus) / Rational(d);
}

/// The closed evaluation E(g, d) / d with
///   E(g, d) = (1/(2g)!) sum_{k=-(d-1)/2}^{(d-1)/2} k^{2g},
/// through power sums of 1..(d-1)/2 (odd d) or of the odd numbers below d
/// (even d). Since (2g)! [t^{2g}] S(dt)/S(t) = E(g, d) / d, the integral
/// int_{M_{g,1}} eps_* Chiodo(d, d; d) / (1 - psi_1) equals this value
/// divided by d, not the value itself.
inline Rational chiodo_integral_single(int genus, int d) {
    if (genus < 1 || d < 1)
        throw std::invalid_argument("chiodo_integral_single needs g >= 1 and d >= 1");
    const Rational norm = Rational(factorial(2 * genus)) * Rational(d);
    if (d % 2 == 1)
        return Rational(2 * power_sum_progression(2 * genus, 1, (d - 1) / 2)) / norm;
    return pow(Rational(2), 1 - 2 * genus) * Rational(power_sum_progression(2 * genus, 1, d - 1, 2)) / norm;
}

/// Same integral through the Bernoulli closed forms.
inline Rational chiodo_integral_single_faulhaber(int genus, int d) {
    if (genus < 1 || d < 1)
        throw std::invalid_argument("chiodo_integral_single needs g >= 1 and d >= 1");
    const long two_g = 2L * genus;
    Rational acc = 0;
    for (long k = 0; k <= two_g; ++k) {
        const Rational lead = bernoulli_plus(k) / Rational(factorial(k)) / Rational(factorial(two_g + 1 - k));
        if (d % 2 == 1)
            acc += lead * pow(Rational(d - 1), two_g + 1 - k) / pow(Rational(2), two_g - k);
        else
            acc += lead * pow(Rational(d), two_g + 1 - k) * (1 - pow(Rational(2), k - 1)) / pow(Rational(2), two_g - 1);
    }
    return acc / Rational(d);
}

/// int_{M_{g,n}} eps_* Chiodo^{[dr]}(dr, d; -mu) / prod (1 - mu_i psi_i)
///   = (r!)^b / b! * d^{3g-4+n} / r^{1-g+b} * spin_extraction(g, mu, r).
inline Rational chiodo_integral_spin(int genus, const Partition& mu, int r) {
    const int n = mu.length();
    if (2 * genus - 2 + n <= 0)
        throw std::domain_error("chiodo_integral_spin needs 2g - 2 + n > 0");
    const SpinValue x = spin_extraction(genus, mu, r);
    if (!x.divisible)
        throw std::domain_error("(2g - 1 + n) / r is not a positive integer");
    const int b = (2 * genus - 1 + n) / r;
    const Rational norm = make_rational(ipow(factorial(r), b), factorial(b));
    return norm * pow(Rational(mu.size()), 3 * genus - 4 + n) / pow(Rational(r), 1 - genus + b) * x.value;
}

struct ScaledIntegral {
    Rational value;
    std::vector<Rational> weights;
};

/// Re-expresses int Chiodo^{[x_from]} / prod (1 - w_i psi_i) as
/// int Chiodo^{[x_to]} / prod (1 - w'_i psi_i) with w' = w x_to / x_from.
/// The value scales by (x_to / x_from)^{3g-3+n}.
inline ScaledIntegral scale_chiodo_integral(const Rational& value_at_x, const Rational& x_from, const Rational& x_to,
                                            int genus, const std::vector<Rational>& weights) {
    if (x_from == 0 || x_to == 0)
        throw std::domain_error("Chiodo scaling must be nonzero");
    const int n = static_cast<int>(weights.size());
    const int top = 3 * genus - 3 + n;
    const Rational ratio = x_to / x_from;
    ScaledIntegral out{value_at_x * pow(ratio, top), {}};
    for (const Rational& w : weights)
        out.weights.push_back(w * ratio);
    return out;
}

}  // namespace onepart::moduli
