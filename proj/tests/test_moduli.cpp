#include "onepart/hurwitz.hpp"
#include "onepart/moduli.hpp"

#include <gtest/gtest.h>

#include <functional>

using namespace onepart;
using namespace onepart::moduli;

namespace {

// All exponent vectors of length n with the given sum.
void compositions(int n, int total, const std::function<void(const std::vector<int>&)>& f) {
    std::vector<int> e(static_cast<std::size_t>(n), 0);
    std::function<void(int, int)> rec = [&](int i, int rem) {
        if (i == n - 1) {
            e[static_cast<std::size_t>(i)] = rem;
            f(e);
            return;
        }
        for (int k = 0; k <= rem; ++k) {
            e[static_cast<std::size_t>(i)] = k;
            rec(i + 1, rem - k);
        }
    };
    if (n > 0)
        rec(0, total);
}

// Coefficients c_0..c_deg of the polynomial through (x_i, y_i), by exact
// Gaussian elimination on the Vandermonde system.
std::vector<Rational> interpolate(const std::vector<Rational>& xs, const std::vector<Rational>& ys) {
    const std::size_t n = xs.size();
    std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j)
            a[i][j] = pow(xs[i], static_cast<long>(j));
        a[i][n] = ys[i];
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = c;
        while (a[piv][c] == 0)
            ++piv;
        std::swap(a[c], a[piv]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c] == 0)
                continue;
            const Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k <= n; ++k)
                a[r][k] -= f * a[c][k];
        }
    }
    std::vector<Rational> out(n);
    for (std::size_t i = 0; i < n; ++i)
        out[i] = a[i][n] / a[i][i];
    return out;
}

Rational binom(long n, long k) { return Rational(k < 0 || k > n ? Integer(0) : binomial(n, k)); }

}  // namespace

TEST(Psi, GenusZeroClosedForm) {
    EXPECT_EQ(psi_genus0({1, 0, 0, 0}), 1);
    EXPECT_EQ(psi_genus0({2, 0, 0, 0, 0}), 1);
    EXPECT_EQ(psi_genus0({1, 1, 0, 0, 0}), 2);
    EXPECT_EQ(psi_genus0({1, 0, 0, 0, 0}), 0);
    for (int d = 3; d <= 8; ++d) {
        Rational sum = 0;
        compositions(d, d - 3, [&](const std::vector<int>& e) { sum += psi_genus0(std::span<const int>(e)); });
        EXPECT_EQ(sum, pow(Rational(d), d - 3));
    }
}

TEST(Psi, RecursionMatchesGenusZero) {
    for (int n = 3; n <= 7; ++n)
        compositions(n, n - 3, [&](const std::vector<int>& e) {
            EXPECT_EQ(psi_dvv(0, e), psi_genus0(std::span<const int>(e)));
        });
}

TEST(Psi, KnownValues) {
    EXPECT_EQ(psi_dvv(1, {1}), make_rational(1, 24));
    EXPECT_EQ(psi_dvv(2, {4}), make_rational(1, 1152));
    EXPECT_EQ(psi_dvv(2, {2, 3}), make_rational(29, 5760));
    EXPECT_EQ(psi_dvv(3, {7}), make_rational(1, 82944));
    EXPECT_EQ(psi_dvv(1, {1, 1, 1, 1}), make_rational(6, 24));
    // string and dilaton equations
    EXPECT_EQ(psi_dvv(2, {4, 0}), psi_dvv(2, {3}));
    EXPECT_EQ(psi_dvv(2, {4, 1}), 3 * psi_dvv(2, {4}));
}

TEST(Weighted, GenusOneMatchesExpansion) {
    const std::vector<std::vector<Rational>> cases = {
        {1}, {2, 3}, {1, 1, 1}, {make_rational(1, 2), 2, 5}, {1, 0, 2, 3}, {1, 2, 3, 4, 5}};
    for (const auto& w : cases) {
        const int n = static_cast<int>(w.size());
        Rational sum = 0;
        compositions(n, n, [&](const std::vector<int>& e) {
            Rational term = psi_dvv(1, e);
            for (int i = 0; i < n; ++i)
                term *= pow(w[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
            sum += term;
        });
        EXPECT_EQ(genus1_weighted(w), sum) << n;
    }
    EXPECT_EQ(genus1_weighted(std::vector<Rational>{1}), make_rational(1, 24));
}

TEST(Weighted, GenusOneAllOnes) {
    for (int d = 1; d <= 8; ++d) {
        Rational ones = pow(Rational(d), d), zero_first = pow(Rational(d - 1), d);
        for (int j = 2; j <= d; ++j) {
            ones -= Rational(factorial(j - 2)) * pow(Rational(d), d - j) * binom(d, j);
            zero_first -= Rational(factorial(j - 2)) * pow(Rational(d - 1), d - j) * binom(d - 1, j);
        }
        std::vector<Rational> w(static_cast<std::size_t>(d), 1);
        EXPECT_EQ(genus1_weighted(w), ones / 24);
        w[0] = 0;
        EXPECT_EQ(genus1_weighted(w), zero_first / 24);
    }
}

TEST(Weighted, GenusZeroMatchesExpansion) {
    const std::vector<Rational> w = {1, 2, make_rational(1, 3), 4, 5, 6};
    for (int n = 3; n <= 6; ++n) {
        const std::vector<Rational> ws(w.begin(), w.begin() + n);
        Rational sum = 0;
        compositions(n, n - 3, [&](const std::vector<int>& e) {
            Rational term = psi_genus0(std::span<const int>(e));
            for (int i = 0; i < n; ++i)
                term *= pow(ws[static_cast<std::size_t>(i)], e[static_cast<std::size_t>(i)]);
            sum += term;
        });
        EXPECT_EQ(genus0_weighted(ws), sum);
    }
}

TEST(Weighted, UnstableConventions) {
    EXPECT_EQ(unstable_psi(std::vector<Rational>{5}), make_rational(1, 25));
    EXPECT_EQ(unstable_psi(std::vector<Rational>{1, 1}), make_rational(1, 2));
    EXPECT_EQ(unstable_psi(std::vector<Rational>{1}), 1);
    EXPECT_THROW(unstable_psi(std::vector<Rational>{1, 2, 3}), std::domain_error);
}

// Coefficients in d of int Lambda(-1)/(1 - d psi) are (-1)^k int lambda_k
// psi^{3g-2-k}: the top one is <tau_{3g-2}> = 1/(24^g g!) and the lowest is
// (-1)^g int lambda_g psi^{2g-2} = (-1)^g (2^{2g-1} - 1)|B_{2g}| / (2^{2g-1} (2g)!).
TEST(LinearHodge, PolynomialInD) {
    EXPECT_EQ(linear_hodge(0, 7), make_rational(1, 49));
    for (int d = 1; d <= 9; ++d)
        EXPECT_EQ(linear_hodge(1, d), make_rational(d - 1, 24));
    for (int g = 1; g <= 4; ++g) {
        EXPECT_EQ(linear_hodge(g, 1), 0);
        const int deg = 3 * g - 2;
        std::vector<Rational> xs, ys;
        for (int d = 1; d <= deg + 1; ++d) {
            xs.emplace_back(d);
            ys.push_back(linear_hodge(g, d));
        }
        const auto c = interpolate(xs, ys);
        for (int d = deg + 2; d <= deg + 12; ++d) {
            Rational v = 0;
            for (int k = deg; k >= 0; --k)
                v = v * d + c[static_cast<std::size_t>(k)];
            EXPECT_EQ(v, linear_hodge(g, d)) << "g=" << g << " d=" << d;
        }
        EXPECT_EQ(c[static_cast<std::size_t>(deg)], 1 / Rational(ipow(Integer(24), g) * factorial(g)));
        EXPECT_EQ(c[static_cast<std::size_t>(deg)], psi_dvv(g, {deg}));
        const Rational p = pow(Rational(2), 2 * g - 1);
        Rational lowest = (p - 1) * abs(bernoulli_number(2 * g)) / (p * Rational(factorial(2 * g)));
        if (g % 2)
            lowest = -lowest;
        EXPECT_EQ(c[static_cast<std::size_t>(2 * g - 2)], lowest) << g;
        for (int k = 0; k < 2 * g - 2; ++k)
            EXPECT_EQ(c[static_cast<std::size_t>(k)], 0);
    }
}

TEST(Chiodo, FirstChernCharacter) {
    for (int d = 1; d <= 7; ++d) {
        const Rational dd(d);
        const ChiodoSpec spec{d, d, std::vector<int>(static_cast<std::size_t>(d), d - 1), 1};
        const auto ch = chiodo_ch1(spec, 0);
        EXPECT_EQ(ch.kappa1, make_rational(1, 12));
        for (const auto& c : ch.psi)
            EXPECT_EQ(c, -(dd * dd - 6 * dd + 6) / (12 * dd * dd));
        for (int a = 0; a < d; ++a)
            EXPECT_EQ(ch.boundary.at(a), dd / 4 * (dd * dd - 6 * a * dd + 6 * a * a) / (6 * dd * dd));
        const auto deg1 = chiodo_degree1(ChiodoSpec{d, d, spec.residues, make_rational(3, 2)}, 0);
        EXPECT_EQ(deg1.kappa1, -make_rational(3, 2) * ch.kappa1);
    }
    EXPECT_EQ(chiodo_ch1({1, 1, {1}, 1}, 1).psi.at(0), make_rational(-1, 12));
    EXPECT_THROW(chiodo_ch1({3, 3, {1, 1}, 1}, 0), std::domain_error);
}

TEST(Chiodo, RiemannRochRank) {
    for (int d = 3; d <= 8; ++d) {
        EXPECT_EQ(rr_rank(0, {d, d, std::vector<int>(static_cast<std::size_t>(d), d - 1), 1}), 0);
        for (const Partition& mu : all_partitions(d)) {
            if (mu.length() < 3)
                continue;
            std::vector<int> a;
            for (int m : mu)
                a.push_back(d - m);
            EXPECT_EQ(rr_rank(0, {d, d, a, 1}), 0);
        }
    }
    EXPECT_EQ(rr_rank(1, {1, 1, {1, 1, 1}, 1}), 0);
}

TEST(Chiodo, GenusZeroRankZero) {
    EXPECT_EQ(chiodo_g0_one_part_rhs({1, 1, 1}), make_rational(1, 3));
    for (int d = 3; d <= 12; ++d)
        EXPECT_EQ(chiodo_g0_one_part_rhs(Partition::uniform(1, d)) / pow(Rational(d), d - 2),
                  1 / Rational(d * d));
    // the one-part number through the genus-zero Chiodo integral
    for (int d = 3; d <= 7; ++d)
        for (const Partition& mu : all_partitions(d))
            if (mu.length() >= 3)
                EXPECT_EQ(one_part(0, mu), Rational(d * d) * chiodo_g0_one_part_rhs(mu));
}

TEST(Chiodo, GenusOneSummandsMatchClosedForms) {
    for (int d = 1; d <= 8; ++d) {
        const Rational dd(d);
        const auto fact = [](long k) { return Rational(factorial(k)); };
        const auto p = [](const Rational& x, long k) { return pow(x, k); };
        Rational s0 = p(dd, d);
        for (int j = 2; j <= d; ++j)
            s0 -= fact(j - 2) * p(dd, d - j) * binom(d, j);
        s0 *= dd / 24;

        Rational s1 = binom(d + 1, 2) * p(dd, d - 1);
        for (int j = 2; j <= d + 1; ++j) {
            Rational inner = binom(d + 1 - j, 1) * p(dd, d - j) * binom(d, j - 1);
            if (d - 1 - j >= 0)
                inner += binom(d + 1 - j, 2) * p(dd, d - 1 - j) * binom(d, j);
            s1 -= fact(j - 2) * inner;
        }
        s1 *= -dd * dd / (12 * 24);

        Rational s2 = p(dd, d) - p(dd - 1, d);
        for (int j = 2; j <= d; ++j)
            s2 -= fact(j - 2) * (p(dd, d - j) * binom(d, j) - p(dd - 1, d - j) * binom(d - 1, j));
        s2 *= dd * (dd * dd - 6 * dd + 6) / (12 * 24);

        Rational s3a = 0;
        for (int a = 0; a <= d - 2; ++a) {
            const Rational aa(a);
            Rational g1 = p(aa, a + 1);
            for (int j = 2; j <= a + 1; ++j)
                g1 -= fact(j - 2) * p(aa, a + 1 - j) * binom(a, j);
            g1 /= 24;  // genus-one vertex integral, weights (1, ..., 1, 0)
            s3a += (dd * dd - 6 * a * dd + 6 * aa * aa) * binom(d, a) * g1 * p(dd - a, d - a - 2);
        }
        s3a *= -dd / 24;

        const auto parts = chiodo_g1_deg01_parts(d);
        EXPECT_EQ(parts.summand0, s0) << d;
        EXPECT_EQ(parts.summand1, s1) << d;
        EXPECT_EQ(parts.summand2, s2) << d;
        EXPECT_EQ(parts.summand3a, s3a) << d;
        EXPECT_EQ(parts.summand3b, -p(dd, d) / 24) << d;
    }
    const auto one = chiodo_g1_deg01_parts(1);
    EXPECT_EQ(one.summand0, make_rational(1, 24));
    EXPECT_EQ(one.summand1, make_rational(-1, 288));
    EXPECT_EQ(one.summand2, make_rational(1, 288));
    EXPECT_EQ(one.summand3b, make_rational(-1, 24));
    EXPECT_EQ(chiodo_g1_deg01(1), 0);
}

TEST(Chiodo, ClosedEvaluations) {
    for (int d = 1; d <= 9; ++d)
        EXPECT_EQ(chiodo_integral_allones(1, d), make_rational(d - 1, 24 * d));
    EXPECT_EQ(chiodo_integral_single(1, 3), make_rational(1, 3));
    for (int g = 1; g <= 4; ++g)
        for (int d = 1; d <= 9; ++d) {
            EXPECT_EQ(chiodo_integral_single(g, d), chiodo_integral_single_faulhaber(g, d));
            // literal symmetric sum over k = -(d-1)/2 .. (d-1)/2 in steps of one
            Rational e = 0;
            for (int twice_k = -(d - 1); twice_k <= d - 1; twice_k += 2)
                e += pow(make_rational(twice_k, 2), 2 * g);
            e /= Rational(factorial(2 * g));
            EXPECT_EQ(chiodo_integral_single(g, d), e / d);
            // the one-part number of (d) is d^{2g-2} E
            EXPECT_EQ(one_part(g, {d}), pow(Rational(d), 2 * g - 2) * e);
        }
}

TEST(Chiodo, SpinIntegralAtROne) {
    for (int g = 0; g <= 3; ++g)
        for (int d = 1; d <= 5; ++d)
            for (const Partition& mu : all_partitions(d))
                if (2 * g - 2 + mu.length() > 0)
                    EXPECT_EQ(chiodo_integral_spin(g, mu, 1), one_part(g, mu) / pow(Rational(d), 2 - g));
    EXPECT_THROW(chiodo_integral_spin(1, {2}, 3), std::domain_error);
}

TEST(Chiodo, Scaling) {
    const std::vector<Rational> w = {1, 2};
    const auto same = scale_chiodo_integral(make_rational(5, 7), 3, 3, 1, w);
    EXPECT_EQ(same.value, make_rational(5, 7));
    EXPECT_EQ(same.weights, w);
    const auto there = scale_chiodo_integral(make_rational(5, 7), 1, 3, 1, w);
    EXPECT_EQ(there.value, make_rational(5, 7) * 9);
    const auto back = scale_chiodo_integral(there.value, 3, 1, 1, there.weights);
    EXPECT_EQ(back.value, make_rational(5, 7));
    EXPECT_EQ(back.weights, w);
}
