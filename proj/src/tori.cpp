// SPDX-License-Identifier: MIT
#include "ctori/tori.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ctori {

BasicLabel basic_label(const RootDatum& d, const IntVec& kottwitz) {
    FinAbGroup pi = fundamental_group_coinvariants(d);
    IntVec k = pi.reduce(kottwitz);
    ExtAffineElement rep{to_small(pi.lift(k)), some_twisted_coxeter(d)};
    return {k, newton_point(d, rep)};
}

std::vector<BasicLabel> basic_labels(const RootDatum& d, long long free_radius) {
    FinAbGroup pi = fundamental_group_coinvariants(d);
    std::vector<IntVec> elems = pi.torsion_elements();
    for (std::size_t i = 0; i < pi.num_generators(); ++i) {
        if (pi.invariants()[i] != 0) continue;
        std::vector<IntVec> next;
        for (const auto& e : elems)
            for (long long k = -free_radius; k <= free_radius; ++k) {
                IntVec f = e;
                f[i] = k;
                next.push_back(f);
            }
        elems = std::move(next);
    }
    std::sort(elems.begin(), elems.end());
    std::vector<BasicLabel> out;
    out.reserve(elems.size());
    for (const auto& e : elems) out.push_back(basic_label(d, e));
    return out;
}

LiftTorsor lift_torsor(const RootDatum& d, const WeylElement& w) { return {w, lifts_mod_kernel(d, w)}; }

LiftClass class_of(const LiftTorsor& t, const SmallVec& lambda) { return t.group.project(to_big(lambda)); }

ExtAffineElement representative(const LiftTorsor& t, const LiftClass& c) {
    return {to_small(t.group.lift(c)), t.w};
}

IntVec kottwitz_of(const RootDatum& d, const LiftTorsor& t, const LiftClass& c) {
    return fundamental_group_coinvariants(d).project(t.group.lift(c));
}

bool nonemptiness_predicate(const RootDatum& d, const LiftTorsor& t, const LiftClass& c, const BasicLabel& b) {
    return kottwitz_of(d, t, c) == fundamental_group_coinvariants(d).reduce(b.kottwitz);
}

Fiber basic_fiber(const RootDatum& d, const WeylElement& w, const BasicLabel& b, std::size_t guard) {
    const LiftTorsor t = lift_torsor(d, w);
    const FinAbGroup& g = t.group;
    const FinAbGroup pi = fundamental_group_coinvariants(d);
    const IntVec target = pi.reduce(b.kottwitz);

    Fiber f;
    f.box_radius = 2 * (g.torsion_exponent().convert_to<long long>() + 1);
    f.torsor_group = beta_map(d, w).image().torsion_elements;

    // Sweep a box around a lift of the Kottwitz class.
    const IntVec centre = g.project(pi.lift(target));
    std::vector<std::pair<long long, long long>> ranges;
    std::size_t total = 1;
    for (const auto& inv : g.invariants()) {
        if (inv == 0)
            ranges.emplace_back(-f.box_radius, f.box_radius);
        else
            ranges.emplace_back(0, inv.convert_to<long long>() - 1);
        total *= static_cast<std::size_t>(ranges.back().second - ranges.back().first + 1);
        if (total > guard) throw ResourceLimit("fiber sweep exceeds its guard");
    }
    std::set<LiftClass> found;
    IntVec offset(ranges.size());
    for (std::size_t i = 0; i < ranges.size(); ++i) offset[i] = ranges[i].first;
    for (std::size_t step = 0; step < total; ++step) {
        LiftClass c = g.add(centre, offset);
        if (pi.project(g.lift(c)) == target && newton_point(d, representative(t, c)) == b.newton) found.insert(c);
        for (std::size_t i = 0; i < ranges.size(); ++i) {
            if (offset[i] < ranges[i].second) {
                ++offset[i];
                break;
            }
            offset[i] = ranges[i].first;
        }
    }
    f.members.assign(found.begin(), found.end());

    f.torsor_law = f.members.empty() || f.members.size() == f.torsor_group.size();
    for (const auto& m : f.members)
        for (const auto& x : f.torsor_group)
            if (!found.count(g.add(m, x))) f.torsor_law = false;
    return f;
}

LiftClass centralizer_action(const RootDatum& d, const LiftTorsor& t, const WeylElement& v, const LiftClass& c,
                             const SmallVec& mu) {
    ExtAffineElement img = sigma_conjugate(d, ExtAffineElement{mu, v}, representative(t, c));
    if (img.w != t.w) throw std::invalid_argument("centralizer_action: v does not centralize w sigma");
    return class_of(t, img.lambda);
}

RationalClasses rational_classes(const RootDatum& d, const WeylGroup& g, const WeylElement& w, const BasicLabel& b) {
    RationalClasses r;
    r.fiber = basic_fiber(d, w, b);
    const LiftTorsor t = lift_torsor(d, w);
    const auto& members = r.fiber.members;
    std::vector<std::size_t> parent(members.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    const auto cent = twisted_centralizer(d, g, w);
    r.centralizer_order = cent.size();
    const SmallVec zero(d.rank, 0);
    for (std::size_t vi : cent)
        for (std::size_t i = 0; i < members.size(); ++i) {
            LiftClass img = centralizer_action(d, t, g[vi], members[i], zero);
            auto it = std::lower_bound(members.begin(), members.end(), img);
            if (it == members.end() || *it != img) throw std::logic_error("centralizer action leaves the fiber");
            const std::size_t j = static_cast<std::size_t>(it - members.begin());
            if (j != i) r.action_trivial = false;
            parent[find(i)] = find(j);
        }
    std::vector<std::vector<std::size_t>> groups(members.size());
    for (std::size_t i = 0; i < members.size(); ++i) groups[find(i)].push_back(i);
    for (auto& grp : groups)
        if (!grp.empty()) r.orbits.push_back(std::move(grp));
    std::sort(r.orbits.begin(), r.orbits.end());
    return r;
}

}  // namespace ctori
