#pragma once

/// \file factor_oracle.hpp
/// Ground truth by exhaustive enumeration: transitive factorizations
/// sigma_inf * tau_m * ... * tau_1 * sigma_0 = id in S_d, with sigma_0 of
/// cycle type nu, sigma_inf of cycle type mu, and every tau_i a
/// transposition.
///
/// Only one representative sigma_0 per conjugacy class is enumerated; the
/// count is conjugation invariant, so the total is the representative count
/// times the class size. The search keeps the running product and its cycle
/// count, and prunes branches that can no longer reach l(mu) cycles or a
/// single orbit in the remaining steps. Subtree counts are cached by
/// (product, orbits, depth); the budget still refers to the nominal number of
/// tuples class_size(nu) * C(d,2)^m, not to the work actually done.
///
/// Weighting convention: mu is the profile over infinity and carries the
/// |Aut(mu)| factor. |Aut(nu)| does not enter the weight.

#include "onepart/exact.hpp"
#include "onepart/partitions.hpp"

#include <algorithm>
#include <array>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <numeric>
#include <stdexcept>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

namespace onepart {

struct HurwitzQuery {
    int genus = 0;
    Partition mu;  // over infinity
    Partition nu;  // over zero

    /// Riemann-Hurwitz count of simple branch points,
    /// m = 2g - 2 + l(mu) + l(nu).
    int branch_points() const { return 2 * genus - 2 + mu.length() + nu.length(); }

    std::string to_string() const {
        return "g=" + std::to_string(genus) + " mu=(" + mu.to_string() + ") nu=(" + nu.to_string() + ")";
    }
};

/// Thrown when a query would exceed the enumeration budget.
class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

inline constexpr std::uint64_t kDefaultOracleBudget = 1'000'000'000ULL;

struct OracleOptions {
    /// Refuse queries with class_size(nu) * C(d,2)^m above this.
    std::uint64_t budget = kDefaultOracleBudget;
    unsigned threads = 1;
};

namespace detail {

inline constexpr int kMaxOracleDegree = 16;

using Perm = std::array<std::int8_t, kMaxOracleDegree>;

struct Transposition {
    std::int8_t a;
    std::int8_t b;
};

class FactorizationCounter {
public:
    FactorizationCounter(int d, int steps, const Partition& mu, const Partition& nu)
        : d_(d), steps_(steps), target_cycles_(mu.length()), target_type_(mu.parts()) {
        for (int a = 0; a < d; ++a)
            for (int b = a + 1; b < d; ++b)
                transpositions_.push_back({static_cast<std::int8_t>(a), static_cast<std::int8_t>(b)});

        // Canonical sigma_0: consecutive cycles (0 1 ... k-1)(k ...) ...
        int start = 0;
        for (int len : nu) {
            for (int i = 0; i < len; ++i) {
                start_perm_[static_cast<std::size_t>(start + i)] =
                    static_cast<std::int8_t>(start + (i + 1) % len);
                start_comp_[static_cast<std::size_t>(start + i)] = static_cast<std::int8_t>(start);
            }
            start += len;
        }
        start_cycles_ = nu.length();
    }

    std::uint64_t count(unsigned threads) const {
        if (steps_ == 0)
            return leaf_ok(start_perm_, start_cycles_, start_comp_, start_cycles_) ? 1 : 0;

        const std::size_t branches = transpositions_.size();
        threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(branches)));
        std::vector<std::uint64_t> partial(threads, 0);
        auto worker = [&](unsigned id) {
            std::uint64_t acc = 0;
            Memo memo;
            for (std::size_t t = id; t < branches; t += threads) {
                Perm perm = start_perm_;
                Perm comp = start_comp_;
                int cycles = start_cycles_;
                int comps = start_cycles_;
                apply(perm, cycles, comp, comps, transpositions_[t]);
                acc += search(perm, cycles, comp, comps, 1, memo);
            }
            partial[id] = acc;
        };
        if (threads == 1) {
            worker(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned id = 0; id < threads; ++id)
                pool.emplace_back(worker, id);
            for (auto& th : pool)
                th.join();
        }
        return std::accumulate(partial.begin(), partial.end(), std::uint64_t{0});
    }

private:
    // The number of completions below a node depends only on the current
    // product, the orbit labels (always the smallest element of the orbit)
    // and the depth, so subtrees met twice are counted once.
    struct NodeKey {
        std::uint64_t perm;
        std::uint64_t comp;
        int depth;
        bool operator==(const NodeKey&) const = default;
    };
    struct NodeHash {
        std::size_t operator()(const NodeKey& k) const {
            return std::hash<std::uint64_t>{}(k.perm * 0x9e3779b97f4a7c15ULL ^ k.comp) ^
                   static_cast<std::size_t>(k.depth);
        }
    };
    using Memo = std::unordered_map<NodeKey, std::uint64_t, NodeHash>;
    static constexpr std::size_t kMemoLimit = std::size_t{1} << 22;

    NodeKey key(const Perm& perm, const Perm& comp, int depth) const {
        NodeKey k{0, 0, depth};
        for (int i = 0; i < d_; ++i) {
            k.perm |= static_cast<std::uint64_t>(perm[static_cast<std::size_t>(i)]) << (4 * i);
            k.comp |= static_cast<std::uint64_t>(comp[static_cast<std::size_t>(i)]) << (4 * i);
        }
        return k;
    }

    std::uint64_t search(const Perm& perm, int cycles, const Perm& comp, int comps, int depth, Memo& memo) const {
        const int remaining = steps_ - depth;
        if (std::abs(cycles - target_cycles_) > remaining || comps - 1 > remaining)
            return 0;
        if (remaining == 0)
            return leaf_ok(perm, cycles, comp, comps) ? 1 : 0;
        const bool memoize = remaining >= 2;
        NodeKey k{};
        if (memoize) {
            k = key(perm, comp, depth);
            if (auto it = memo.find(k); it != memo.end())
                return it->second;
        }
        std::uint64_t acc = 0;
        for (const auto& t : transpositions_) {
            Perm next = perm;
            Perm next_comp = comp;
            int next_cycles = cycles;
            int next_comps = comps;
            apply(next, next_cycles, next_comp, next_comps, t);
            acc += search(next, next_cycles, next_comp, next_comps, depth + 1, memo);
        }
        if (memoize && memo.size() < kMemoLimit)
            memo.emplace(k, acc);
        return acc;
    }

    // perm <- (a b) o perm, tracking the cycle count and the orbit labels.
    void apply(Perm& perm, int& cycles, Perm& comp, int& comps, Transposition t) const {
        bool same_cycle = false;
        for (int x = perm[static_cast<std::size_t>(t.a)];; x = perm[static_cast<std::size_t>(x)]) {
            if (x == t.b) {
                same_cycle = true;
                break;
            }
            if (x == t.a)
                break;
        }
        cycles += same_cycle ? 1 : -1;
        for (int i = 0; i < d_; ++i) {
            auto& v = perm[static_cast<std::size_t>(i)];
            if (v == t.a)
                v = t.b;
            else if (v == t.b)
                v = t.a;
        }
        const auto ca = comp[static_cast<std::size_t>(t.a)];
        const auto cb = comp[static_cast<std::size_t>(t.b)];
        if (ca != cb) {
            const auto keep = std::min(ca, cb);
            const auto drop = std::max(ca, cb);
            for (int i = 0; i < d_; ++i)
                if (comp[static_cast<std::size_t>(i)] == drop)
                    comp[static_cast<std::size_t>(i)] = keep;
            --comps;
        }
    }

    bool leaf_ok(const Perm& perm, int cycles, const Perm&, int comps) const {
        if (comps != 1 || cycles != target_cycles_)
            return false;
        std::array<bool, kMaxOracleDegree> seen{};
        std::vector<int> type;
        for (int i = 0; i < d_; ++i) {
            if (seen[static_cast<std::size_t>(i)])
                continue;
            int len = 0;
            for (int x = i; !seen[static_cast<std::size_t>(x)]; x = perm[static_cast<std::size_t>(x)]) {
                seen[static_cast<std::size_t>(x)] = true;
                ++len;
            }
            type.push_back(len);
        }
        std::sort(type.begin(), type.end(), std::greater<>());
        return type == target_type_;
    }

    int d_;
    int steps_;
    int target_cycles_;
    std::vector<int> target_type_;
    std::vector<Transposition> transpositions_;
    Perm start_perm_{};
    Perm start_comp_{};
    int start_cycles_ = 0;
};

}  // namespace detail

/// Nominal enumeration size class_size(nu) * C(d,2)^m used by the budget.
inline Integer oracle_cost(const HurwitzQuery& q) {
    const int d = q.mu.size();
    const int m = q.branch_points();
    if (m < 0)
        return 0;
    return q.nu.class_size() * ipow(binomial(d, 2), m);
}

/// Number of tuples (sigma_0, tau_1, ..., tau_m, sigma_inf) as described at
/// the top of this file, with the generated subgroup transitive.
inline Integer raw_count(const HurwitzQuery& q, const OracleOptions& opts = {}) {
    const int d = q.mu.size();
    if (q.mu.empty() || q.nu.empty())
        throw std::invalid_argument("profiles must be nonempty");
    if (d != q.nu.size())
        throw std::invalid_argument("profiles have different sizes: " + q.to_string());
    if (d > detail::kMaxOracleDegree)
        throw BudgetExceeded("degree " + std::to_string(d) + " is beyond the oracle's range");
    const int m = q.branch_points();
    if (m < 0)
        return 0;
    const Integer cost = oracle_cost(q);
    if (cost > Integer(static_cast<unsigned long>(opts.budget)))
        throw BudgetExceeded("oracle refuses " + q.to_string() + ": " + cost.get_str() +
                             " candidate tuples exceed the budget of " + std::to_string(opts.budget));
    detail::FactorizationCounter counter(d, m, q.mu, q.nu);
    const std::uint64_t per_rep = counter.count(opts.threads);
    return q.nu.class_size() * Integer(static_cast<unsigned long>(per_rep));
}

/// |Aut(mu)| * raw_count / (d! * m!).
inline Rational double_hurwitz(const HurwitzQuery& q, const OracleOptions& opts = {}) {
    const Integer raw = raw_count(q, opts);
    const int m = q.branch_points();
    if (m < 0)
        return 0;
    return make_rational(q.mu.aut_order() * raw, factorial(q.mu.size()) * factorial(m));
}

/// nu = (d).
inline Rational one_part_oracle(int genus, const Partition& mu, const OracleOptions& opts = {}) {
    return double_hurwitz({genus, mu, Partition{mu.size()}}, opts);
}

/// nu = (q, ..., q); q must divide d.
inline Rational orbifold_oracle(int genus, const Partition& mu, int q_order, const OracleOptions& opts = {}) {
    const int d = mu.size();
    if (q_order < 1 || d % q_order != 0)
        throw std::invalid_argument("orbifold order " + std::to_string(q_order) + " does not divide " +
                                    std::to_string(d));
    return double_hurwitz({genus, mu, Partition::uniform(q_order, d / q_order)}, opts);
}

}  // namespace onepart
