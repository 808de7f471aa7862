#include "ctori/lattice.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace ctori;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, int lo, int hi) {
    IntMatrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) m(i, j) = lo + static_cast<long long>(rng() % static_cast<unsigned>(hi - lo + 1));
    return m;
}

}  // namespace

TEST(Smith, FactorizationAndDivisibility) {
    std::mt19937_64 rng(3);
    for (int t = 0; t < 300; ++t) {
        const std::size_t r = 1 + rng() % 5, c = 1 + rng() % 5;
        const IntMatrix a = random_matrix(rng, r, c, -6, 6);
        const SmithForm s = smith_normal_form(a);
        EXPECT_EQ(s.u * a * s.v, s.d);
        EXPECT_EQ(s.u * s.u_inv, IntMatrix::identity(r));
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < c; ++j)
                if (i != j) EXPECT_EQ(s.d(i, j), 0);
        const auto diag = s.diagonal();
        for (std::size_t i = 0; i + 1 < s.rank; ++i) EXPECT_EQ(diag[i + 1] % diag[i], 0);
        EXPECT_EQ(s.rank, rank(RatMatrix([&] {
                      RatMatrix q(r, c);
                      for (std::size_t i = 0; i < r; ++i)
                          for (std::size_t j = 0; j < c; ++j) q(i, j) = Rational(a(i, j));
                      return q;
                  }())));
    }
}

TEST(Smith, Deterministic) {
    std::mt19937_64 rng(5);
    const IntMatrix a = random_matrix(rng, 4, 4, -3, 3);
    const SmithForm s1 = smith_normal_form(a), s2 = smith_normal_form(a);
    EXPECT_EQ(s1.u, s2.u);
    EXPECT_EQ(s1.v, s2.v);
}

TEST(Coinvariants, SmallExamples) {
    EXPECT_EQ(coinvariants(IntMatrix{{0, -1}, {1, 0}}).describe(), "Z/2");
    EXPECT_EQ(coinvariants(IntMatrix{{-1, 0}, {0, -1}}).describe(), "Z/2 x Z/2");
    EXPECT_EQ(coinvariants(IntMatrix::identity(3)).describe(), "Z x Z x Z");
    EXPECT_EQ(coinvariants(IntMatrix{{0, 1}, {1, 0}}).describe(), "Z");
    // Rotation of order 3 on the A2 root lattice.
    EXPECT_EQ(coinvariants(IntMatrix{{0, -1}, {1, -1}}).describe(), "Z/3");
}

TEST(FinAbGroup, ElementsMatchOrder) {
    std::mt19937_64 rng(8);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix a = random_matrix(rng, 3, 3, -3, 3);
        const FinAbGroup g = FinAbGroup::quotient(3, a);
        if (!g.is_finite()) continue;
        const auto el = g.elements();
        EXPECT_EQ(BigInt(el.size()), g.order());
        for (const auto& x : el) EXPECT_EQ(g.add(x, g.negate(x)), g.zero());
    }
}

TEST(FinAbGroup, ProjectionKillsRelations) {
    std::mt19937_64 rng(9);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix a = random_matrix(rng, 3, 2, -4, 4);
        const FinAbGroup g = FinAbGroup::quotient(3, a);
        for (std::size_t j = 0; j < a.cols(); ++j) EXPECT_TRUE(g.is_zero(g.project(a.column(j))));
        const IntVec x{BigInt(static_cast<long long>(rng() % 9)), 2, -1};
        EXPECT_EQ(g.project(g.lift(g.project(x))), g.project(x));
    }
}

TEST(IntegerLinearAlgebra, KernelAndSolve) {
    std::mt19937_64 rng(10);
    for (int t = 0; t < 50; ++t) {
        const IntMatrix a = random_matrix(rng, 2, 4, -3, 3);
        const IntMatrix k = integer_kernel(a);
        EXPECT_EQ(a * k, IntMatrix(2, k.cols()));
        IntVec x(4);
        for (auto& v : x) v = static_cast<long long>(rng() % 7) - 3;
        const IntVec b = a * x;
        const auto sol = solve_integer(a, b);
        ASSERT_TRUE(sol);
        EXPECT_EQ(a * *sol, b);
    }
    EXPECT_FALSE(solve_integer(IntMatrix{{2}}, IntVec{1}));
}

TEST(AbelianMap, DoublingOnZ4) {
    const FinAbGroup z4 = FinAbGroup::cyclic(4);
    const AbelianMap m(z4, z4, IntMatrix{{2}});
    EXPECT_TRUE(m.well_defined());
    EXPECT_EQ(m.image().group.describe(), "Z/2");
    EXPECT_EQ(m.image().torsion_elements.size(), 2u);
    EXPECT_EQ(m.kernel().describe(), "Z/2");
    EXPECT_FALSE(m.is_injective());
    EXPECT_FALSE(m.is_surjective());
}
