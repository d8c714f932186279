#pragma once

/// \file appendix_data.hpp
/// Published table of one-part polynomials, transcribed term by term:
///     h_{g;mu} = d^{2g-2+n} / denominator * sum numerator * m_key(mu),
/// where m_key is the monomial symmetric function with the listed exponents
/// (e.g. {4, 2} is sum over i != j of mu_i^4 mu_j^2, {2, 2} is sum over i < j
/// of mu_i^2 mu_j^2). Nothing is added or corrected here.

#include "onepart/exact.hpp"
#include "onepart/hurwitz.hpp"

#include <utility>
#include <vector>

namespace onepart::appendix {

struct PublishedPolynomial {
    int genus;
    long denominator;
    std::vector<std::pair<std::vector<int>, long>> terms;
};

inline const std::vector<PublishedPolynomial>& published_table() {
    static const std::vector<PublishedPolynomial> table = {
        {0, 1, {{{}, 1}}},
        {1, 24, {{{2}, 1}, {{}, -1}}},
        {2, 5760, {{{4}, 3}, {{2, 2}, 10}, {{2}, -10}, {{}, 7}}},
        {3,
         967680,
         {{{6}, 3}, {{4, 2}, 21}, {{2, 2, 2}, 70}, {{4}, -21}, {{2, 2}, -70}, {{2}, 49}, {{}, -31}}},
        {4,
         464486400,
         {{{8}, 5},
          {{6, 2}, 60},
          {{4, 4}, 126},
          {{6}, -60},
          {{4, 2}, -420},
          {{4}, 294},
          {{2, 2}, 980},
          {{2}, -620},
          {{}, 381}}},
        {5,
         122624409600,
         {{{10}, 3},
          {{8, 2}, 55},
          {{6, 4}, 198},
          {{8}, -55},
          {{6, 2}, -660},
          {{4, 4}, -1386},
          {{6}, 462},
          {{4, 2}, 3234},
          {{4}, -2046},
          {{2, 2}, -6820},
          {{2}, 4191},
          {{}, -2555}}},
    };
    return table;
}

inline const PublishedPolynomial& published(int genus) {
    for (const auto& p : published_table())
        if (p.genus == genus)
            return p;
    throw std::out_of_range("no published polynomial for genus " + std::to_string(genus));
}

/// The published polynomial as a SymmetricPoly in n variables.
inline SymmetricPoly published_polynomial(int genus, int n) {
    const PublishedPolynomial& p = published(genus);
    SymmetricPoly out(n);
    for (const auto& [key, num] : p.terms)
        out.add(key, make_rational(num, p.denominator));
    return out;
}

}  // namespace onepart::appendix
