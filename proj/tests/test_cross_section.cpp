#include "ctori/cross_section.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace ctori;

namespace {

bool stated_passes(Family f, int n) {
    const RootDatum d = build_root_datum(f, n);
    return verify_filtration(d, special_coxeter(d, f, n), build_filtration(d, f, n)).pass();
}

}  // namespace

TEST(Filtration, StatedPartitionsThatVerify) {
    for (int n = 2; n <= 9; ++n) EXPECT_TRUE(stated_passes(Family::A, n)) << n;
    for (int m = 2; m <= 9; ++m) EXPECT_TRUE(stated_passes(Family::C, m)) << m;
    for (int m = 4; m <= 9; ++m) EXPECT_TRUE(stated_passes(Family::D2, m)) << m;
    for (int n = 3; n <= 9; n += 2) EXPECT_TRUE(stated_passes(Family::A2, n)) << n;
    EXPECT_TRUE(stated_passes(Family::B, 2));
}

TEST(Filtration, StatedPartitionsWithViolations) {
    for (int m = 3; m <= 8; ++m) {
        const RootDatum d = build_root_datum(Family::B, m);
        const auto rep = verify_filtration(d, special_coxeter(d, Family::B, m), build_filtration(d, Family::B, m));
        ASSERT_FALSE(rep.violations.empty());
        for (const auto& v : rep.violations) EXPECT_EQ(v.condition, 2);
    }
    for (int m = 4; m <= 8; ++m) EXPECT_FALSE(stated_passes(Family::D, m));
    for (int n = 4; n <= 8; n += 2) EXPECT_FALSE(stated_passes(Family::A2, n));
}

TEST(Filtration, LengthsAndEndpoints) {
    const RootDatum d = build_root_datum(Family::A2, 7);
    const WeylElement c = special_coxeter(d, Family::A2, 7);
    const RootFiltration f = build_filtration(d, Family::A2, 7);
    EXPECT_EQ(f.r(), 5u);
    EXPECT_EQ(f.psi(1), d.positive_roots());
    std::vector<std::size_t> flipped;
    for (std::size_t a : d.positive_roots())
        if (!d.is_positive(act_on_root(d, c, a))) flipped.push_back(a);
    EXPECT_EQ(f.psi(f.r()), flipped);
}

TEST(Filtration, CorrectedPartitionsVerify) {
    for (Family f : {Family::D, Family::A2})
        for (int n = 4; n <= 9; ++n) {
            if (f == Family::A2 && n % 2) continue;
            const RootDatum d = build_root_datum(f, n);
            const auto fixed = corrected_filtration(d, f, n);
            ASSERT_TRUE(fixed);
            EXPECT_TRUE(verify_filtration(d, special_coxeter(d, f, n), *fixed).pass()) << d.name;
            EXPECT_EQ(static_cast<int>(fixed->r()), filtration_length(f, n));
        }
    EXPECT_FALSE(corrected_filtration(build_root_datum(Family::B, 4), Family::B, 4));
}

TEST(Filtration, LeastFiltrationExistsForEveryType) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::A2, Family::D2})
        for (int n = min_rank(f); n <= 8; ++n) {
            const RootDatum d = build_root_datum(f, n);
            const WeylElement c = special_coxeter(d, f, n);
            const auto least = least_filtration(d, c);
            ASSERT_TRUE(least) << d.name;
            EXPECT_TRUE(verify_filtration(d, c, *least).pass()) << d.name;
        }
}

TEST(Filtration, LevelsRoundTrip) {
    const RootDatum d = build_root_datum(Family::C, 5);
    const RootFiltration f = build_filtration(d, Family::C, 5);
    EXPECT_EQ(RootFiltration::from_levels(f.levels(d.num_roots()), f.r()).chain, f.chain);
}

TEST(Filtration, SingleDisplacementsAreDetected) {
    std::mt19937_64 rng(12);
    for (Family f : {Family::A, Family::C, Family::D2}) {
        const RootDatum d = build_root_datum(f, 6);
        const WeylElement c = special_coxeter(d, f, 6);
        const MutationStats ms = mutation_test(d, c, build_filtration(d, f, 6), 300, rng);
        EXPECT_EQ(ms.trials, 300u);
        EXPECT_GE(ms.rate(), 0.99) << d.name;
    }
}

TEST(Filtration, CoxeterActionIsAPermutation) {
    const RootDatum d = build_root_datum(Family::D2, 5);
    const auto act = coxeter_action_on_roots(d, special_coxeter(d, Family::D2, 5));
    std::set<std::size_t> images;
    for (const auto& a : act) images.insert(a.c_image);
    EXPECT_EQ(images.size(), act.size());
}
