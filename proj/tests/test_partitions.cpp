#include "onepart/partitions.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <map>
#include <numeric>

using namespace onepart;

namespace {

// Euler's pentagonal recurrence.
std::vector<long> partition_counts(int n) {
    std::vector<long> p(static_cast<std::size_t>(n) + 1, 0);
    p[0] = 1;
    for (int m = 1; m <= n; ++m) {
        for (int k = 1;; ++k) {
            const int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > m)
                break;
            const long sign = k % 2 ? 1 : -1;
            p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g1)];
            if (g2 <= m)
                p[static_cast<std::size_t>(m)] += sign * p[static_cast<std::size_t>(m - g2)];
        }
    }
    return p;
}

std::vector<int> cycle_type(const std::vector<int>& perm) {
    std::vector<bool> seen(perm.size());
    std::vector<int> type;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        int len = 0;
        for (std::size_t x = i; !seen[x]; x = static_cast<std::size_t>(perm[x])) {
            seen[x] = true;
            ++len;
        }
        if (len)
            type.push_back(len);
    }
    std::sort(type.rbegin(), type.rend());
    return type;
}

}  // namespace

TEST(Partitions, CountsMatchPentagonalRecurrence) {
    const auto p = partition_counts(20);
    for (int d = 1; d <= 20; ++d)
        EXPECT_EQ(static_cast<long>(all_partitions(d).size()), p[static_cast<std::size_t>(d)]) << d;
}

TEST(Partitions, ClassSizesMatchEnumeration) {
    for (int d = 1; d <= 7; ++d) {
        std::vector<int> perm(static_cast<std::size_t>(d));
        std::iota(perm.begin(), perm.end(), 0);
        std::map<std::vector<int>, long> counted;
        do
            ++counted[cycle_type(perm)];
        while (std::next_permutation(perm.begin(), perm.end()));
        for (const Partition& mu : all_partitions(d))
            EXPECT_EQ(mu.class_size(), Integer(counted[mu.parts()])) << mu.to_string();
    }
}

TEST(Partitions, NewtonIdentities) {
    const std::vector<Rational> x = {3, make_rational(1, 2), -2, 5, make_rational(-7, 3)};
    for (int k = 1; k <= 5; ++k) {
        Rational rhs = 0;
        for (int i = 1; i <= k; ++i)
            rhs += (i % 2 ? 1 : -1) * elementary_symmetric(k - i, x) * power_sum(i, x);
        EXPECT_EQ(k * elementary_symmetric(k, x), rhs) << k;
    }
}

TEST(Partitions, Basics) {
    const Partition p = Partition::parse("1,2,1");
    EXPECT_EQ(p.to_string(), "2,1,1");
    EXPECT_EQ(p.size(), 4);
    EXPECT_EQ(p.length(), 3);
    EXPECT_EQ(p.aut_order(), Integer(2));
    EXPECT_EQ(Partition::uniform(2, 3), (Partition{2, 2, 2}));
    EXPECT_THROW(Partition::parse("2,0"), std::invalid_argument);
    EXPECT_THROW(Partition::parse("a"), std::invalid_argument);
}
