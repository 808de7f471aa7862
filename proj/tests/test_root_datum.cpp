#include "ctori/root_datum.hpp"
#include "ctori/weyl.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ctori;

namespace {

const std::vector<Family> kFamilies{Family::A, Family::B, Family::C, Family::D, Family::A2, Family::D2};

std::size_t expected_roots(Family f, int n) {
    switch (f) {
        case Family::A:
        case Family::A2: return static_cast<std::size_t>(n * (n - 1));
        case Family::B:
        case Family::C: return static_cast<std::size_t>(2 * n * n);
        case Family::D:
        case Family::D2: return static_cast<std::size_t>(2 * n * (n - 1));
    }
    return 0;
}

long long det(const SmallMatrix& m) {
    RatMatrix r(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
    Rational d = 1;
    for (std::size_t c = 0; c < r.rows(); ++c) {
        std::size_t p = c;
        while (p < r.rows() && r(p, c) == 0) ++p;
        if (p == r.rows()) return 0;
        if (p != c) {
            r.swap_rows(p, c);
            d = -d;
        }
        d *= r(c, c);
        for (std::size_t i = c + 1; i < r.rows(); ++i) r.add_row(i, c, -r(i, c) / r(c, c));
    }
    return static_cast<long long>(numerator(d));
}

}  // namespace

TEST(RootDatum, RootCountsAndSimpleRoots) {
    for (Family f : kFamilies)
        for (int n = min_rank(f); n <= 7; ++n) {
            const RootDatum d = build_root_datum(f, n);
            EXPECT_EQ(d.num_roots(), expected_roots(f, n)) << d.name;
            EXPECT_EQ(d.positive_roots().size() * 2, d.num_roots());
            const int ss = (f == Family::A || f == Family::A2) ? n - 1 : n;
            EXPECT_EQ(d.simple.size(), static_cast<std::size_t>(ss));
            for (std::size_t i = 0; i < d.num_roots(); ++i) EXPECT_EQ(d.pair(i, d.coroots[i]), 2);
        }
}

TEST(RootDatum, CartanDeterminant) {
    for (int n = 3; n <= 7; ++n) {
        EXPECT_EQ(det(cartan_matrix(build_root_datum(Family::A, n))), n);
        EXPECT_EQ(det(cartan_matrix(build_root_datum(Family::B, n))), 2);
        EXPECT_EQ(det(cartan_matrix(build_root_datum(Family::C, n))), 2);
        if (n >= 4) EXPECT_EQ(det(cartan_matrix(build_root_datum(Family::D, n))), 4);
    }
}

TEST(RootDatum, HighestRootHeight) {
    auto max_height = [](const RootDatum& d) { return *std::max_element(d.heights.begin(), d.heights.end()); };
    for (int n = 4; n <= 8; ++n) {
        EXPECT_EQ(max_height(build_root_datum(Family::A, n)), n - 1);
        EXPECT_EQ(max_height(build_root_datum(Family::B, n)), 2 * n - 1);
        EXPECT_EQ(max_height(build_root_datum(Family::C, n)), 2 * n - 1);
        EXPECT_EQ(max_height(build_root_datum(Family::D, n)), 2 * n - 3);
    }
}

TEST(RootDatum, FrobeniusPermutesSimpleRoots) {
    for (Family f : kFamilies)
        for (int n = min_rank(f); n <= 7; ++n) {
            const RootDatum d = build_root_datum(f, n);
            std::set<std::size_t> simple(d.simple.begin(), d.simple.end()), image;
            for (std::size_t s : d.simple) image.insert(d.sigma_root(s));
            EXPECT_EQ(simple, image) << d.name;
            EXPECT_EQ(d.sigma * d.sigma_inv, SmallMatrix::identity(d.rank));
        }
    EXPECT_EQ(build_root_datum(Family::A2, 6).simple_orbits().size(), 3u);
    EXPECT_EQ(build_root_datum(Family::A2, 7).simple_orbits().size(), 3u);
    EXPECT_EQ(build_root_datum(Family::D2, 5).simple_orbits().size(), 4u);
    EXPECT_EQ(diagram_order(build_root_datum(Family::D2, 5)), 2);
}

TEST(RootDatum, FundamentalGroupsOfIsogenies) {
    for (Family f : kFamilies)
        for (int n = min_rank(f); n <= 6; ++n) {
            EXPECT_TRUE(fundamental_group(build_root_datum(f, n, Isogeny::SimplyConnected)).is_trivial());
            const FinAbGroup ad = fundamental_group(build_root_datum(f, n, Isogeny::Adjoint));
            EXPECT_TRUE(ad.isomorphic(adjoint_fundamental_group(build_root_datum(f, n), false)));
        }
    EXPECT_EQ(fundamental_group(build_root_datum(Family::A, 5)).describe(), "Z");
    EXPECT_EQ(fundamental_group(sl2_squared_mod_mu2()).describe(), "Z/2");
}

TEST(RootDatum, ConstructionsCompose) {
    const RootDatum a = build_root_datum(Family::A, 3, Isogeny::Adjoint);
    const RootDatum r = restriction_of_scalars(a, 3);
    EXPECT_EQ(r.rank, 3 * a.rank);
    EXPECT_EQ(r.num_roots(), 3 * a.num_roots());
    EXPECT_EQ(r.simple_orbits().size(), a.simple_orbits().size());
    const RootDatum p = product(a, build_root_datum(Family::C, 2));
    EXPECT_EQ(p.num_roots(), a.num_roots() + 8);
    EXPECT_EQ(fundamental_group(p).describe(), "Z/3 x Z");
}

TEST(RootDatum, ConfigValidation) {
    EXPECT_THROW(parse_family("E"), ConfigError);
    EXPECT_EQ(parse_family("2A"), Family::A2);
    EXPECT_EQ(family_name(Family::D2), "2D");
    EXPECT_THROW(build_root_datum(Family::D, 3), ConfigError);
    EXPECT_THROW(build_root_datum(Family::A, 1), ConfigError);
    EXPECT_EQ(kappa_range(Family::A, 5).size(), 5u);
    EXPECT_EQ(kappa_range(Family::D, 6).size(), 3u);
    EXPECT_EQ(kappa_range(Family::B, 4).size(), 2u);
}
