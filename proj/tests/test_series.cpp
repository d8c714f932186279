#include "onepart/series.hpp"

#include <gtest/gtest.h>

using namespace onepart;

TEST(Series, KernelCoefficients) {
    const Series1 s = s_kernel(1, 6);
    EXPECT_EQ(s.coeff(0), 1);
    EXPECT_EQ(s.coeff(1), 0);
    EXPECT_EQ(s.coeff(2), make_rational(1, 24));
    EXPECT_EQ(s.coeff(4), make_rational(1, 1920));
    EXPECT_EQ(s.coeff(6), make_rational(1, 322560));
}

TEST(Series, InverseKernel) {
    const Series1 inv = s_kernel(1, 6).invert();
    EXPECT_EQ(inv.coeff(2), make_rational(-1, 24));
    EXPECT_EQ(inv.coeff(4), make_rational(7, 5760));
    EXPECT_EQ(inv.coeff(6), make_rational(-31, 967680));
    EXPECT_EQ(inv * s_kernel(1, 6), Series1::constant(1, 6));
}

TEST(Series, PowerIsRepeatedProduct) {
    const Series1 s = s_kernel(make_rational(3, 2), 8);
    Series1 acc = Series1::constant(1, 8);
    for (int k = 0; k <= 5; ++k) {
        EXPECT_EQ(s.pow(k), acc);
        acc = acc * s;
    }
    EXPECT_EQ(s_kernel(2, 8), s_kernel(1, 8).rescaled(2));
}

TEST(Series, SumSubstitutionAgainstBinomialExpansion) {
    const Series1 f = s_kernel(1, 9);
    const std::vector<int> caps = {4, 3, 2};
    const SeriesN s = SeriesN::in_sum(f, caps);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 3; ++b)
            for (int c = 0; c <= 2; ++c) {
                const int k = a + b + c;
                const Rational expected = f.coeff(k) * Rational(binomial(k, a) * binomial(k - a, b));
                EXPECT_EQ(multi_extract(s, {a, b, c}), expected) << a << b << c;
            }
}

TEST(Series, ProductOfSingleVariableFactors) {
    const std::vector<int> caps = {4, 4};
    const Series1 f = s_kernel(3, 4), g = s_kernel(5, 4);
    const SeriesN p = SeriesN::in_variable(f, 0, caps) * SeriesN::in_variable(g, 1, caps);
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b)
            EXPECT_EQ(multi_extract(p, {a, b}), f.coeff(a) * g.coeff(b));
}

TEST(Series, CapsAreEnforced) {
    EXPECT_THROW(SeriesN::in_variable(s_kernel(1, 2), 0, {4}), SeriesCapError);
    EXPECT_THROW(Series1(-1), std::domain_error);
}
