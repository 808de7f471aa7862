// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/affine_weyl.hpp"

#include <vector>

namespace ctori {

/// A basic sigma-conjugacy class, labelled by its Kottwitz class in pi_1(G)_sigma
/// (canonical coordinates) together with its (central) Newton point.
struct BasicLabel {
    IntVec kottwitz;
    RatVec newton;
    bool operator==(const BasicLabel& o) const { return kottwitz == o.kottwitz && newton == o.newton; }
};

/// The label of the basic class with the given Kottwitz class. The Newton point is read off
/// from a representative t^lambda c with c twisted Coxeter.
BasicLabel basic_label(const RootDatum& d, const IntVec& kottwitz);
/// All basic labels; free coordinates of pi_1(G)_sigma range over [-free_radius, free_radius].
std::vector<BasicLabel> basic_labels(const RootDatum& d, long long free_radius = 1);

/// Canonical coordinates in X_*(T)_{sigma_w} of the class of t^lambda w modulo ker kappa_w.
using LiftClass = IntVec;

struct LiftTorsor {
    WeylElement w;
    FinAbGroup group;  // X_*(T)_{sigma_w}
};
LiftTorsor lift_torsor(const RootDatum& d, const WeylElement& w);
LiftClass class_of(const LiftTorsor& t, const SmallVec& lambda);
ExtAffineElement representative(const LiftTorsor& t, const LiftClass& c);
/// kappa^w of a class: the image in pi_1(G)_sigma.
IntVec kottwitz_of(const RootDatum& d, const LiftTorsor& t, const LiftClass& c);
/// Necessary condition for the cover attached to (class, b) to be nonempty.
bool nonemptiness_predicate(const RootDatum& d, const LiftTorsor& t, const LiftClass& c, const BasicLabel& b);

struct Fiber {
    std::vector<LiftClass> members;         // sorted
    std::vector<LiftClass> torsor_group;    // im(beta_w)_tors, target coordinates
    long long box_radius = 0;
    /// Size is 0 or |im(beta_w)_tors| and the set is stable under im(beta_w)_tors.
    bool torsor_law = false;
};
constexpr std::size_t kDefaultFiberGuard = 2'000'000;
/// {classes with Newton point and Kottwitz class equal to the label}, by a box sweep.
Fiber basic_fiber(const RootDatum& d, const WeylElement& w, const BasicLabel& b,
                  std::size_t guard = kDefaultFiberGuard);

/// Action of v in C_W(w sigma) through the lift (mu, v): class of (mu,v)^{-1} (lambda,w) sigma((mu,v)).
LiftClass centralizer_action(const RootDatum& d, const LiftTorsor& t, const WeylElement& v, const LiftClass& c,
                             const SmallVec& mu);

struct RationalClasses {
    Fiber fiber;
    std::size_t centralizer_order = 0;
    std::vector<std::vector<std::size_t>> orbits;  // indices into fiber.members
    bool action_trivial = true;
    std::size_t count() const { return orbits.size(); }
};
RationalClasses rational_classes(const RootDatum& d, const WeylGroup& g, const WeylElement& w, const BasicLabel& b);

}  // namespace ctori
