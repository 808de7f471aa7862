#include "ctori/affine_weyl.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ctori;

namespace {

ExtAffineElement random_element(const RootDatum& d, const WeylGroup& g, std::mt19937_64& rng) {
    SmallVec l(d.rank);
    for (auto& x : l) x = static_cast<long long>(rng() % 7) - 3;
    return {l, g[rng() % g.size()]};
}

}  // namespace

TEST(ExtendedAffine, GroupLaws) {
    const RootDatum d = build_root_datum(Family::C, 3);
    const WeylGroup g = WeylGroup::generate(d);
    std::mt19937_64 rng(1);
    for (int t = 0; t < 100; ++t) {
        const auto a = random_element(d, g, rng), b = random_element(d, g, rng), c = random_element(d, g, rng);
        EXPECT_EQ(multiply(multiply(a, b), c), multiply(a, multiply(b, c)));
        EXPECT_EQ(multiply(a, inverse(d, a)), translation(SmallVec(d.rank, 0)));
    }
}

TEST(Newton, TranslationInGLn) {
    const RootDatum d = build_root_datum(Family::A, 3);
    const RatVec nu = newton_point(d, translation({0, 2, -1}));
    EXPECT_EQ(nu, (RatVec{2, 0, -1}));
    EXPECT_FALSE(is_basic(d, translation({1, 0, 0})));
    EXPECT_TRUE(is_basic(d, translation({1, 1, 1})));
}

TEST(Newton, MultiplierInvariance) {
    std::mt19937_64 rng(2);
    for (Family f : {Family::A2, Family::D2, Family::B}) {
        const RootDatum d = build_root_datum(f, 4);
        const WeylGroup g = WeylGroup::generate(d);
        for (int t = 0; t < 30; ++t) {
            const auto x = random_element(d, g, rng);
            EXPECT_EQ(newton_point(d, x), newton_point(d, x, 3));
        }
    }
}

TEST(Newton, SigmaConjugationInvariance) {
    std::mt19937_64 rng(3);
    const RootDatum d = build_root_datum(Family::A2, 5);
    const WeylGroup g = WeylGroup::generate(d);
    for (int t = 0; t < 40; ++t) {
        const auto x = random_element(d, g, rng), h = random_element(d, g, rng);
        const auto y = sigma_conjugate(d, h, x);
        EXPECT_EQ(newton_point(d, x), newton_point(d, y));
        EXPECT_EQ(kottwitz_class(d, x), kottwitz_class(d, y));
    }
}

TEST(Newton, TypeACoxeterLiftIsIsoclinic) {
    for (int n = 2; n <= 8; ++n) {
        const RootDatum d = build_root_datum(Family::A, n);
        for (int k : kappa_range(Family::A, n)) {
            const RatVec nu = newton_point(d, coxeter_lift(d, Family::A, n, k));
            EXPECT_EQ(nu, RatVec(static_cast<std::size_t>(n), Rational(k, n)));
        }
    }
}

TEST(Kottwitz, AdditiveOnTranslationsInGLn) {
    const RootDatum d = build_root_datum(Family::A, 4);
    const IntVec a = kottwitz_class(d, translation({1, 0, 0, 0}));
    const IntVec b = kottwitz_class(d, translation({2, -1, 3, 0}));
    ASSERT_EQ(a.size(), 1u);
    EXPECT_EQ(b[0], 4 * a[0]);
    EXPECT_EQ(abs(a[0]), 1);
}

TEST(Lifts, MonomialMatrixRoundTrip) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::A2, Family::D2})
        for (int n = min_rank(f); n <= 6; ++n) {
            const RootDatum d = build_root_datum(f, n);
            for (int k : kappa_range(f, n)) {
                const MonomialMatrix m = coxeter_lift_matrix(f, n, k);
                std::vector<std::size_t> sorted = m.perm;
                std::sort(sorted.begin(), sorted.end());
                for (std::size_t i = 0; i < sorted.size(); ++i) EXPECT_EQ(sorted[i], i);
                EXPECT_EQ(from_monomial(d, m), coxeter_lift(d, f, n, k));
            }
        }
}

TEST(Lifts, BetaMapIsWellDefined) {
    for (Family f : {Family::A, Family::C, Family::D2}) {
        const RootDatum d = build_root_datum(f, 4);
        const WeylElement c = special_coxeter(d, f, 4);
        EXPECT_TRUE(beta_map(d, c).well_defined());
        // The coroot part is finite for elliptic c, so the free part is the central torus.
        EXPECT_TRUE(lifts_mod_kernel(build_root_datum(f, 4, Isogeny::Adjoint),
                                     special_coxeter(build_root_datum(f, 4, Isogeny::Adjoint), f, 4))
                        .is_finite());
    }
    const RootDatum gl = build_root_datum(Family::A, 5);
    EXPECT_EQ(lifts_mod_kernel(gl, special_coxeter(gl, Family::A, 5)).describe(), "Z");
}
