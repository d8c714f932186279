#pragma once

/// \file relations.hpp
/// Verification suites: each one evaluates two sides of an identity by
/// different routes over a parameter grid and records every point.
///
/// Points are labelled by kind:
///   "identity"  the two sides come from independent computations;
///   "smoke"     both sides share an internal formula, so agreement only
///               checks prefactor bookkeeping;
///   "structure" a structural property of a single object.
/// Reports are assembled in a fixed loop order and contain no timing, so
/// they are reproducible byte for byte.

#include "onepart/appendix_data.hpp"
#include "onepart/exact.hpp"
#include "onepart/factor_oracle.hpp"
#include "onepart/hurwitz.hpp"
#include "onepart/moduli.hpp"
#include "onepart/partitions.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace onepart::verify {

enum class Status { pass, fail, skip };

inline const char* to_string(Status s) {
    switch (s) {
    case Status::pass:
        return "pass";
    case Status::fail:
        return "fail";
    case Status::skip:
        return "skip";
    }
    return "?";
}

struct CheckPoint {
    std::string identity;
    std::vector<std::pair<std::string, std::string>> params;
    std::string kind = "identity";
    Status status = Status::pass;
    std::string lhs;
    std::string rhs;
    std::string note;
};

struct VerificationReport {
    std::string suite;
    std::vector<std::pair<std::string, long>> grid;
    std::vector<CheckPoint> points;
    /// Filled by callers that time the run; not part of the deterministic
    /// content.
    std::optional<long long> elapsed_micros;

    std::size_t count(Status s) const {
        std::size_t c = 0;
        for (const auto& p : points)
            c += p.status == s;
        return c;
    }

    bool passed() const { return count(Status::fail) == 0; }

    void append(const VerificationReport& other) {
        points.insert(points.end(), other.points.begin(), other.points.end());
    }
};

namespace detail {

using Params = std::vector<std::pair<std::string, std::string>>;

inline CheckPoint compare(std::string identity, Params params, const Rational& lhs, const Rational& rhs,
                          std::string kind = "identity", std::string note = {}) {
    CheckPoint p;
    p.identity = std::move(identity);
    p.params = std::move(params);
    p.kind = std::move(kind);
    p.lhs = onepart::to_string(lhs);
    p.rhs = onepart::to_string(rhs);
    p.status = lhs == rhs ? Status::pass : Status::fail;
    p.note = std::move(note);
    return p;
}

inline CheckPoint skipped(std::string identity, Params params, std::string note, std::string kind = "identity") {
    CheckPoint p;
    p.identity = std::move(identity);
    p.params = std::move(params);
    p.kind = std::move(kind);
    p.status = Status::skip;
    p.note = std::move(note);
    return p;
}

inline std::string str(long v) { return std::to_string(v); }

inline std::vector<int> divisors(int d) {
    std::vector<int> out;
    for (int k = 1; k <= d; ++k)
        if (d % k == 0)
            out.push_back(k);
    return out;
}

// A double Hurwitz number by the oracle when affordable, otherwise nullopt.
inline std::optional<Rational> oracle_or_none(const HurwitzQuery& q, const OracleOptions& opts) {
    if (q.branch_points() >= 0 && oracle_cost(q) > Integer(static_cast<unsigned long>(opts.budget)))
        return std::nullopt;
    return double_hurwitz(q, opts);
}

}  // namespace detail

/// Linear Hodge integral against the all-ones Chiodo integral:
///   int_{M_{g,1}} Lambda(-1) / (1 - d psi) = d^{-(d+g-2)} int eps_* Chiodo^{[d]}(d,d;-1^d) / prod(1 - psi).
/// Also records the genus-zero rank argument, the genus-one anchor and the
/// degree-at-most-one evaluation at (g, d) = (1, 1).
inline VerificationReport verify_thm_comparison(int g_max, int d_max) {
    VerificationReport r{"comparison", {{"gmax", g_max}, {"dmax", d_max}}, {}, {}};
    for (int g = 0; g <= g_max; ++g) {
        for (int d = 1; d <= d_max; ++d) {
            const detail::Params params{{"g", detail::str(g)}, {"d", detail::str(d)}};
            const Rational dd(d);
            const Rational lhs = g == 0 ? moduli::unstable_psi(std::vector<Rational>{dd}) : moduli::linear_hodge(g, d);
            const std::vector<Rational> weights(static_cast<std::size_t>(d), 1 / dd);
            const auto scaled =
                moduli::scale_chiodo_integral(moduli::chiodo_integral_allones(g, d), 1, dd, g, weights);
            r.points.push_back(detail::compare("hodge-vs-chiodo", params, lhs, scaled.value / pow(dd, d + g - 2)));

            if (g == 0 && d >= 3) {
                const Rational rhs =
                    moduli::chiodo_g0_one_part_rhs(Partition::uniform(1, d)) / pow(dd, d - 2);
                r.points.push_back(detail::compare("genus0-rank-zero", params, lhs, rhs));
            }
            if (g == 1)
                r.points.push_back(
                    detail::compare("genus1-anchor", params, moduli::linear_hodge(1, d), make_rational(d - 1, 24)));
            if (g == 1 && d == 1)
                r.points.push_back(detail::compare("genus1-degree01", params,
                                                   pow(dd, d - 1) * moduli::linear_hodge(1, d),
                                                   moduli::chiodo_g1_deg01(d)));
        }
    }
    return r;
}

/// h^{q-orb}_{g;(p^{d/p})} / (d/p)! = h^{p-orb}_{g;(q^{d/q})} / (d/q)!, by the
/// oracle (when within budget) and by cut-and-join, plus the agreement of
/// the two routes on each side. When an orbifold order equals d the
/// corresponding side is a one-part number and the series route is added.
inline VerificationReport verify_exchange(int g, int p, int q, int d, const OracleOptions& opts = {}) {
    if (p < 1 || q < 1 || d % p != 0 || d % q != 0)
        throw std::invalid_argument("exchange needs p | d and q | d");
    VerificationReport r{"exchange", {{"g", g}, {"p", p}, {"q", q}, {"d", d}}, {}, {}};
    const detail::Params params{
        {"g", detail::str(g)}, {"p", detail::str(p)}, {"q", detail::str(q)}, {"d", detail::str(d)}};
    const Partition ps = Partition::uniform(p, d / p);
    const Partition qs = Partition::uniform(q, d / q);
    const HurwitzQuery left{g, ps, qs};
    const HurwitzQuery right{g, qs, ps};
    const Rational lnorm(factorial(d / p));
    const Rational rnorm(factorial(d / q));

    const auto lo = detail::oracle_or_none(left, opts);
    const auto ro = detail::oracle_or_none(right, opts);
    const Rational lc = double_cutjoin(g, ps, qs, opts.budget);
    const Rational rc = double_cutjoin(g, qs, ps, opts.budget);

    if (lo && ro)
        r.points.push_back(detail::compare("exchange-oracle", params, *lo / lnorm, *ro / rnorm));
    else
        r.points.push_back(detail::skipped("exchange-oracle", params,
                                           "oracle budget exceeded: " + oracle_cost(left).get_str() + " / " +
                                               oracle_cost(right).get_str() + " candidate tuples"));
    r.points.push_back(detail::compare("exchange-cutjoin", params, lc / lnorm, rc / rnorm));
    if (lo)
        r.points.push_back(detail::compare("oracle-vs-cutjoin-left", params, *lo, lc));
    if (ro)
        r.points.push_back(detail::compare("oracle-vs-cutjoin-right", params, *ro, rc));
    if (q == d)
        r.points.push_back(detail::compare("series-vs-cutjoin-left", params, one_part(g, ps), lc));
    if (p == d)
        r.points.push_back(detail::compare("series-vs-cutjoin-right", params, one_part(g, qs), rc));
    return r;
}

/// verify_exchange over g <= g_max, d <= d_max and divisors p <= q of d.
inline VerificationReport verify_exchange_grid(int g_max, int d_max, const OracleOptions& opts = {}) {
    VerificationReport r{"exchange", {{"gmax", g_max}, {"dmax", d_max}}, {}, {}};
    for (int g = 0; g <= g_max; ++g)
        for (int d = 1; d <= d_max; ++d)
            for (int p : detail::divisors(d))
                for (int q : detail::divisors(d))
                    if (p <= q)
                        r.append(verify_exchange(g, p, q, d, opts));
    return r;
}

/// Computed one-part polynomials against the published table, as exact
/// SymmetricPoly equality, for g <= g_max and n <= n_max.
inline VerificationReport verify_appendix(int g_max = 5, int n_max = 5) {
    if (g_max > 5)
        throw std::invalid_argument("the published table stops at genus five");
    VerificationReport r{"appendix", {{"gmax", g_max}, {"nmax", n_max}}, {}, {}};
    for (int g = 0; g <= g_max; ++g) {
        for (int n = 1; n <= n_max; ++n) {
            const detail::Params params{{"g", detail::str(g)}, {"n", detail::str(n)}};
            if (2 * g - 2 + n <= 0) {
                r.points.push_back(detail::skipped("published-polynomial", params, "unstable (g, n)"));
                continue;
            }
            const SymmetricPoly computed = one_part_polynomial(g, n);
            const SymmetricPoly printed = appendix::published_polynomial(g, n);
            CheckPoint p;
            p.identity = "published-polynomial";
            p.params = params;
            p.lhs = appendix_notation(computed, g);
            p.rhs = appendix_notation(printed, g);
            p.status = computed == printed ? Status::pass : Status::fail;
            if (p.status == Status::fail) {
                std::string diff;
                for (const auto& [key, c] : computed.terms()) {
                    if (printed.coefficient(key) == c)
                        continue;
                    std::string k = "{";
                    for (std::size_t i = 0; i < key.size(); ++i)
                        k += (i ? "," : "") + std::to_string(key[i]);
                    k += "}";
                    diff += (diff.empty() ? "" : "; ") + k + " computed " + onepart::to_string(c) + " published " +
                            onepart::to_string(printed.coefficient(key));
                }
                for (const auto& [key, c] : printed.terms())
                    if (computed.coefficient(key) == 0)
                        diff += (diff.empty() ? "" : "; ") + std::string("extra published monomial");
                p.note = diff;
            }
            r.points.push_back(std::move(p));
        }
    }
    return r;
}

/// Only even exponents, and total degree exactly 2g, for g <= g_max and
/// n <= n_max.
inline VerificationReport verify_polynomial_structure(int g_max, int n_max) {
    VerificationReport r{"structure", {{"gmax", g_max}, {"nmax", n_max}}, {}, {}};
    for (int g = 0; g <= g_max; ++g) {
        for (int n = 1; n <= n_max; ++n) {
            if (2 * g - 2 + n <= 0)
                continue;
            const detail::Params params{{"g", detail::str(g)}, {"n", detail::str(n)}};
            const SymmetricPoly poly = one_part_polynomial(g, n);
            CheckPoint even;
            even.identity = "even-exponents";
            even.params = params;
            even.kind = "structure";
            even.lhs = poly.even_exponents_only() ? "even" : "odd exponent present";
            even.rhs = "even";
            even.status = poly.even_exponents_only() ? Status::pass : Status::fail;
            r.points.push_back(even);
            r.points.push_back(detail::compare("total-degree", params, poly.total_degree(), 2 * g, "structure"));
        }
    }
    return r;
}

/// (a) one_part(g, 1^d) = d^{2-g} int Chiodo^{[d]} from the all-ones series,
///     and the same series in the t -> dt normalisation;
/// (b) power-sum and Bernoulli evaluations of chiodo_integral_single agree,
///     and one_part(g, (d)) = d^{2-g} int Chiodo^{[d]}(d,d;d)/(1 - d psi) with
///     the integral taken as chiodo_integral_single / d.
inline VerificationReport verify_prop_chiodo_series(int g_max, int d_max) {
    VerificationReport r{"chiodo", {{"gmax", g_max}, {"dmax", d_max}}, {}, {}};
    for (int g = 0; g <= g_max; ++g) {
        for (int d = 1; d <= d_max; ++d) {
            if (2 * g - 2 + d <= 0)
                continue;
            const detail::Params params{{"g", detail::str(g)}, {"d", detail::str(d)}};
            const Rational dd(d);
            const std::vector<Rational> weights(static_cast<std::size_t>(d), 1 / dd);
            const auto scaled =
                moduli::scale_chiodo_integral(moduli::chiodo_integral_allones(g, d), 1, dd, g, weights);
            r.points.push_back(detail::compare("all-ones", params, one_part(g, Partition::uniform(1, d)),
                                               pow(dd, 2 - g) * scaled.value));
            const Rational series = s_kernel(dd, 2 * g).pow(d - 1).coeff(2 * g);
            r.points.push_back(
                detail::compare("all-ones-rescaled-series", params, series, scaled.value / pow(dd, d + g - 4)));
        }
    }
    for (int g = 1; g <= g_max; ++g) {
        for (int d = 1; d <= d_max; ++d) {
            const detail::Params params{{"g", detail::str(g)}, {"d", detail::str(d)}};
            const Rational dd(d);
            const Rational single = moduli::chiodo_integral_single(g, d);
            r.points.push_back(detail::compare(d % 2 ? "single-bernoulli-odd" : "single-bernoulli-even", params,
                                               single, moduli::chiodo_integral_single_faulhaber(g, d)));
            if (d % 2 == 0) {
                const long big_n = d / 2;
                const Rational odd_sum = Rational(power_sum_progression(2 * g, 1, d - 1, 2));
                const Rational via_faulhaber =
                    Rational(factorial(2 * g)) * (faulhaber(2 * g, 2 * big_n) - pow(Rational(2), 2 * g) * faulhaber(2 * g, big_n));
                r.points.push_back(detail::compare("odd-power-sum", params, odd_sum, via_faulhaber));
            } else if (d > 1) {
                const long big_n = (d - 1) / 2;
                r.points.push_back(detail::compare("power-sum-faulhaber", params,
                                                   Rational(power_sum_progression(2 * g, 1, big_n)),
                                                   Rational(factorial(2 * g)) * faulhaber(2 * g, big_n)));
            }
            const auto scaled =
                moduli::scale_chiodo_integral(single / dd, 1, dd, g, std::vector<Rational>{Rational(1)});
            r.points.push_back(
                detail::compare("one-part-single", params, one_part(g, Partition{d}), pow(dd, 2 - g) * scaled.value));
        }
    }
    return r;
}

/// (reduction) spin_one_part(g, mu, 1) = one_part(g, mu);
/// (c) spin_one_part(g, mu, r) = r^{2g-2+n} (dr)^{b-(3g-3+n)} int Chiodo^{[dr]}(dr, d; -mu) / prod(1 - mu psi);
///     at r = 1 the integral is also compared with one_part / d^{2-g};
/// (d) the one-part side of the exchange relation through the r = 1 spin
///     route, against the oracle (or cut-and-join beyond the budget).
inline VerificationReport verify_spin(int g_max, int d_max, int r_max, const OracleOptions& opts = {}) {
    VerificationReport r{"spin", {{"gmax", g_max}, {"dmax", d_max}, {"rmax", r_max}}, {}, {}};
    for (int g = 0; g <= g_max; ++g) {
        for (int d = 1; d <= d_max; ++d) {
            for (const Partition& mu : all_partitions(d)) {
                const detail::Params params{{"g", detail::str(g)}, {"mu", mu.to_string()}};
                if (g == 0 && mu.length() == 1) {
                    r.points.push_back(detail::skipped("spin-reduction", params, "b = 0"));
                    continue;
                }
                r.points.push_back(
                    detail::compare("spin-reduction", params, spin_one_part(g, mu, 1).value, one_part(g, mu)));
            }
        }
    }
    for (int rr = 1; rr <= r_max; ++rr) {
        for (int g = 0; g <= g_max; ++g) {
            for (int d = 1; d <= d_max; ++d) {
                for (const Partition& mu : all_partitions(d)) {
                    const int n = mu.length();
                    if (2 * g - 2 + n <= 0)
                        continue;
                    const detail::Params params{
                        {"g", detail::str(g)}, {"mu", mu.to_string()}, {"r", detail::str(rr)}};
                    const SpinValue h = spin_one_part(g, mu, rr);
                    if (!h.divisible) {
                        r.points.push_back(detail::skipped("spin-chiodo-prefactor", params,
                                                           "2g - 1 + n not divisible by r", "smoke"));
                        continue;
                    }
                    const int b = (2 * g - 1 + n) / rr;
                    const Rational integral = moduli::chiodo_integral_spin(g, mu, rr);
                    const Rational prefactor =
                        pow(Rational(rr), 2 * g - 2 + n) * pow(Rational(d * rr), b - (3 * g - 3 + n));
                    r.points.push_back(
                        detail::compare("spin-chiodo-prefactor", params, h.value, prefactor * integral, "smoke"));
                    if (rr == 1)
                        r.points.push_back(detail::compare("spin-chiodo-r1", params, integral,
                                                           one_part(g, mu) / pow(Rational(d), 2 - g)));
                }
            }
        }
    }
    for (int g = 0; g <= g_max; ++g) {
        for (int d = 1; d <= d_max; ++d) {
            for (int p : detail::divisors(d)) {
                const detail::Params params{{"g", detail::str(g)}, {"p", detail::str(p)}, {"d", detail::str(d)}};
                const Partition ps = Partition::uniform(p, d / p);
                if (2 * g - 1 + ps.length() < 1) {
                    r.points.push_back(detail::skipped("spin-exchange", params, "b = 0"));
                    continue;
                }
                const Rational lhs = spin_one_part(g, ps, 1).value / Rational(factorial(d / p));
                const HurwitzQuery other{g, Partition{d}, ps};
                const auto oracle = detail::oracle_or_none(other, opts);
                if (oracle)
                    r.points.push_back(detail::compare("spin-exchange", params, lhs, *oracle, "identity",
                                                       "oracle route"));
                else
                    r.points.push_back(detail::compare("spin-exchange", params, lhs,
                                                       double_cutjoin(g, Partition{d}, ps, opts.budget), "identity",
                                                       "cut-and-join route"));
            }
        }
    }
    return r;
}

}  // namespace onepart::verify
