#pragma once

/// \file partitions.hpp
/// Integer partitions (ramification profiles), their automorphism and
/// centralizer orders, and the two symmetric functions the formulas use.

#include "onepart/exact.hpp"

#include <algorithm>
#include <compare>
#include <functional>
#include <map>
#include <span>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace onepart {

/// A weakly decreasing list of positive parts. Ordering is imposed at
/// construction, so two partitions of the same multiset compare equal.
class Partition {
public:
    Partition() = default;

    explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
        for (int p : parts_)
            if (p < 1)
                throw std::invalid_argument("partition parts must be positive");
        std::sort(parts_.begin(), parts_.end(), std::greater<>());
    }

    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// `count` copies of `part`.
    static Partition uniform(int part, int count) {
        return Partition(std::vector<int>(static_cast<std::size_t>(count), part));
    }

    /// Comma-separated positive integers, e.g. "3,2,1".
    static Partition parse(const std::string& text) {
        std::vector<int> parts;
        std::stringstream in(text);
        std::string item;
        while (std::getline(in, item, ',')) {
            std::size_t used = 0;
            int value = 0;
            try {
                value = std::stoi(item, &used);
            } catch (const std::exception&) {
                throw std::invalid_argument("not a partition: '" + text + "'");
            }
            if (used != item.size() || value < 1)
                throw std::invalid_argument("not a partition: '" + text + "'");
            parts.push_back(value);
        }
        if (parts.empty())
            throw std::invalid_argument("empty partition");
        return Partition(std::move(parts));
    }

    const std::vector<int>& parts() const { return parts_; }
    auto begin() const { return parts_.begin(); }
    auto end() const { return parts_.end(); }
    int operator[](std::size_t i) const { return parts_[i]; }

    /// |mu|
    int size() const {
        int s = 0;
        for (int p : parts_)
            s += p;
        return s;
    }

    /// l(mu)
    int length() const { return static_cast<int>(parts_.size()); }

    bool empty() const { return parts_.empty(); }

    /// part -> multiplicity
    std::map<int, int> multiplicities() const {
        std::map<int, int> m;
        for (int p : parts_)
            ++m[p];
        return m;
    }

    /// |Aut(mu)| = prod_k (multiplicity of k)!
    Integer aut_order() const {
        Integer out = 1;
        for (const auto& [part, mult] : multiplicities())
            out *= factorial(mult);
        return out;
    }

    /// Centralizer order z_mu = prod mu_i * |Aut(mu)|.
    Integer centralizer_order() const {
        Integer out = aut_order();
        for (int p : parts_)
            out *= p;
        return out;
    }

    /// Number of permutations of cycle type mu in S_|mu|.
    Integer class_size() const { return factorial(size()) / centralizer_order(); }

    std::string to_string() const {
        std::string out;
        for (std::size_t i = 0; i < parts_.size(); ++i) {
            if (i)
                out += ',';
            out += std::to_string(parts_[i]);
        }
        return out;
    }

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

namespace detail {

inline void partitions_into(int remaining, int max_part, std::vector<int>& prefix,
                            std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        prefix.push_back(p);
        partitions_into(remaining - p, p, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace detail

/// All partitions of d in reverse-lexicographic order:
/// (d), (d-1,1), (d-2,2), (d-2,1,1), ..., (1,...,1).
inline std::vector<Partition> all_partitions(int d) {
    if (d < 1)
        throw std::invalid_argument("all_partitions expects d >= 1");
    std::vector<Partition> out;
    std::vector<int> prefix;
    detail::partitions_into(d, d, prefix, out);
    return out;
}

/// e_j(values); e_0 = 1 and e_j = 0 for j > length.
inline Rational elementary_symmetric(int j, std::span<const Rational> values) {
    if (j < 0)
        throw std::domain_error("negative elementary symmetric degree");
    if (j > static_cast<int>(values.size()))
        return 0;
    // e[k] holds e_k of the prefix processed so far.
    std::vector<Rational> e(static_cast<std::size_t>(j) + 1, Rational(0));
    e[0] = 1;
    for (const Rational& v : values)
        for (int k = j; k >= 1; --k)
            e[static_cast<std::size_t>(k)] += v * e[static_cast<std::size_t>(k - 1)];
    return e[static_cast<std::size_t>(j)];
}

/// p_k(values) = sum v^k.
inline Rational power_sum(int k, std::span<const Rational> values) {
    Rational acc = 0;
    for (const Rational& v : values)
        acc += pow(v, k);
    return acc;
}

inline std::vector<Rational> to_rationals(const Partition& p) {
    std::vector<Rational> out;
    out.reserve(p.parts().size());
    for (int x : p)
        out.emplace_back(x);
    return out;
}

}  // namespace onepart
