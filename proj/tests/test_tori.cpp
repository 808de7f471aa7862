#include "ctori/tori.hpp"

#include <gtest/gtest.h>

using namespace ctori;

TEST(Tori, SL2SquaredModMu2) {
    const RootDatum d = sl2_squared_mod_mu2();
    const WeylGroup g = WeylGroup::generate(d);
    const WeylElement c = some_twisted_coxeter(d);
    const FinAbGroup pi = fundamental_group_coinvariants(d);
    ASSERT_EQ(pi.describe(), "Z/2");
    for (const auto& k : pi.torsion_elements()) {
        const RationalClasses rc = rational_classes(d, g, c, basic_label(d, k));
        EXPECT_EQ(rc.fiber.members.size(), 2u);
        EXPECT_EQ(rc.count(), pi.is_zero(k) ? 2u : 1u);
        EXPECT_EQ(rc.action_trivial, pi.is_zero(k));
    }
}

TEST(Tori, AdjointA3CoxeterHasOneClassPerBasicB) {
    const RootDatum d = build_root_datum(Family::A, 3, Isogeny::Adjoint);
    const WeylGroup g = WeylGroup::generate(d);
    const WeylElement c = some_twisted_coxeter(d);
    const auto labels = basic_labels(d);
    EXPECT_EQ(labels.size(), 3u);
    for (const auto& b : labels) EXPECT_EQ(rational_classes(d, g, c, b).count(), 1u);
}

TEST(Tori, FibersAreTorsors) {
    for (Family f : {Family::A, Family::B, Family::C, Family::D, Family::A2, Family::D2})
        for (Isogeny iso : {Isogeny::Model, Isogeny::SimplyConnected, Isogeny::Adjoint}) {
            const int n = min_rank(f) + 1;
            const RootDatum d = build_root_datum(f, n, iso);
            const WeylElement c = some_twisted_coxeter(d);
            const std::size_t im = beta_map(d, c).image().torsion_elements.size();
            for (const auto& b : basic_labels(d)) {
                const Fiber fib = basic_fiber(d, c, b);
                EXPECT_TRUE(fib.torsor_law) << d.name;
                EXPECT_EQ(fib.members.size(), im) << d.name;
                const LiftTorsor t = lift_torsor(d, c);
                for (const auto& m : fib.members) {
                    EXPECT_EQ(kottwitz_of(d, t, m), b.kottwitz);
                    EXPECT_TRUE(nonemptiness_predicate(d, t, m, b));
                }
            }
        }
}

TEST(Tori, IdentityActsTrivially) {
    const RootDatum d = build_root_datum(Family::C, 3);
    const WeylElement c = some_twisted_coxeter(d);
    const LiftTorsor t = lift_torsor(d, c);
    for (const auto& b : basic_labels(d))
        for (const auto& m : basic_fiber(d, c, b).members)
            EXPECT_EQ(centralizer_action(d, t, SmallMatrix::identity(d.rank), m, SmallVec(d.rank, 0)), m);
}

TEST(Tori, RepresentativesRoundTrip) {
    const RootDatum d = build_root_datum(Family::D2, 4);
    const WeylElement c = some_twisted_coxeter(d);
    const LiftTorsor t = lift_torsor(d, c);
    for (const auto& cls : t.group.torsion_elements()) EXPECT_EQ(class_of(t, representative(t, cls).lambda), cls);
}
