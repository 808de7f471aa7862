#include "ctori/series.hpp"

#include <gtest/gtest.h>

using namespace ctori;

namespace {

Series random_laurent(const GaloisField* f, std::mt19937_64& rng, long prec) {
    const long shift = static_cast<long>(rng() % 4);
    return Series::random(f, prec - shift, rng, true).shifted(shift);
}

}  // namespace

TEST(Series, ValuationIsAdditive) {
    const auto f = GaloisField::get(3, 2);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 200; ++t) {
        const Series x = random_laurent(f.get(), rng, 12), y = random_laurent(f.get(), rng, 12);
        const Series xy = x * y;
        ASSERT_TRUE(xy.valuation());
        EXPECT_EQ(*xy.valuation(), *x.valuation() + *y.valuation());
        const Series s = x + y;
        if (s.valuation()) EXPECT_GE(*s.valuation(), std::min(*x.valuation(), *y.valuation()));
        if (*x.valuation() != *y.valuation()) EXPECT_EQ(*s.valuation(), std::min(*x.valuation(), *y.valuation()));
    }
}

TEST(Series, PrecisionRules) {
    const auto f = GaloisField::get(2, 3);
    const Series a = Series::monomial(f.get(), 1, 2, 10);  // w^2 + O(w^10)
    const Series b = Series::monomial(f.get(), 1, 1, 6);   // w + O(w^6)
    EXPECT_EQ((a + b).precision(), 6);
    EXPECT_EQ((a * b).precision(), 8);  // min(10 + 1, 6 + 2)
    EXPECT_EQ(Series::from_coeffs(f.get(), 0, {1, 1, 1, 1}, 2).coeffs().size(), 2u);
    EXPECT_EQ(a.truncated(3).precision(), 3);
    EXPECT_EQ(a.shifted(-2).valuation(), 0);
}

TEST(Series, InverseAndFrobenius) {
    const auto f = GaloisField::get(5, 2);
    std::mt19937_64 rng(2);
    for (int t = 0; t < 100; ++t) {
        const Series x = random_laurent(f.get(), rng, 10), y = random_laurent(f.get(), rng, 10);
        const Series one = x * x.inverse();
        EXPECT_EQ(one.valuation(), 0);
        EXPECT_EQ(one.coeff(0), 1u);
        for (long e = 1; e < one.precision(); ++e) EXPECT_EQ(one.coeff(e), 0u);
        const Series lhs = (x * y).frobenius(1), rhs = x.frobenius(1) * y.frobenius(1);
        EXPECT_TRUE((lhs - rhs).is_zero());
        EXPECT_TRUE((x.frobenius(2) - x).is_zero());
    }
    EXPECT_THROW(Series(f.get(), 5).inverse(), std::domain_error);
}

TEST(Series, RingLaws) {
    const auto f = GaloisField::get(2, 4);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 100; ++t) {
        const Series x = random_laurent(f.get(), rng, 9), y = random_laurent(f.get(), rng, 9),
                     z = random_laurent(f.get(), rng, 9);
        EXPECT_TRUE((x * (y + z) - (x * y + x * z)).is_zero());
        EXPECT_TRUE(((x * y) * z - x * (y * z)).is_zero());
        EXPECT_TRUE((x + (-x)).is_zero());
    }
}
