// SPDX-License-Identifier: MIT
#include "ctori/report.hpp"

#include "ctori/apartment.hpp"
#include "ctori/cross_section.hpp"
#include "ctori/isocrystal.hpp"
#include "ctori/lang_lift.hpp"
#include "ctori/tori.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

namespace ctori {

namespace {

Check make(std::string id, std::string ref, std::string prov, Json expected, Json computed, bool pass) {
    return {std::move(id), std::move(ref), std::move(prov), std::move(expected), std::move(computed), pass};
}

int lo(const ReportConfig& cfg, Family f) { return std::max(cfg.min_rank, min_rank(f)); }

std::vector<int> kappas(const ReportConfig& cfg, Family f, int n) {
    std::vector<int> ks = kappa_range(f, n);
    if (cfg.kappa) {
        if (std::find(ks.begin(), ks.end(), *cfg.kappa) == ks.end()) return {};
        return {*cfg.kappa};
    }
    return ks;
}

std::string k_tag(int kappa) { return ".k" + std::to_string(kappa); }

Json int_vec(const IntVec& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(x.convert_to<long long>());
    return a;
}

std::string cyclic(long long n) { return n == 1 ? "0" : "Z/" + std::to_string(n); }

}  // namespace

std::string rational_string(const Rational& r) { return r.str(); }

Json rationals(const std::vector<Rational>& v) {
    Json a = Json::array();
    for (const auto& x : v) a.push_back(rational_string(x));
    return a;
}

std::string type_tag(Family f, int n) { return family_name(f) + std::to_string(n); }

const std::vector<Preset>& presets() {
    static const std::vector<Preset> p = [] {
        std::vector<Preset> out;
        const std::vector<std::pair<Family, int>> reps{{Family::A, 4},  {Family::B, 3},  {Family::C, 3},
                                                       {Family::D, 4},  {Family::A2, 4}, {Family::A2, 5},
                                                       {Family::D2, 4}};
        for (auto [f, n] : reps)
            for (int k : kappa_range(f, n))
                out.push_back({family_name(f) + std::to_string(n) + "-k" + std::to_string(k),
                               "special Coxeter lift with kappa = " + std::to_string(k) + " in type " + family_name(f) +
                                   " of rank " + std::to_string(n),
                               f, n, k});
        out.push_back({"sl2xsl2-mu2", "(SL2 x SL2)/mu2 with a Coxeter element, both basic classes", std::nullopt, 2, 0});
        return out;
    }();
    return p;
}

const Preset& find_preset(const std::string& name) {
    for (const auto& p : presets())
        if (p.name == name) return p;
    throw ConfigError("unknown preset '" + name + "' (see --list-presets)");
}

std::vector<Check> checks_fundamental_groups(const ReportConfig& cfg) {
    std::vector<Check> out;
    for (Family f : cfg.types)
        for (int n = lo(cfg, f); n <= cfg.max_rank; ++n) {
            std::string ad, ads;
            switch (f) {
                case Family::A: ad = ads = cyclic(n); break;
                case Family::A2: ad = cyclic(n); ads = cyclic(std::gcd(n, 2)); break;
                case Family::B:
                case Family::C: ad = ads = "Z/2"; break;
                case Family::D:
                case Family::D2:
                    ad = n % 2 == 0 ? "Z/2 x Z/2" : "Z/4";
                    ads = f == Family::D ? ad : "Z/2";
                    break;
            }
            const RootDatum d = build_root_datum(f, n);
            const std::string cad = adjoint_fundamental_group(d, false).describe();
            const std::string cads = adjoint_fundamental_group(d, true).describe();
            out.push_back(make("pi1." + type_tag(f, n), "fundamental group of the adjoint group and its coinvariants",
                               "published", Json{{"adjoint", ad}, {"adjoint_coinvariants", ads}},
                               Json{{"adjoint", cad}, {"adjoint_coinvariants", cads}}, cad == ad && cads == ads));
        }
    return out;
}

namespace {

Rational expected_slope(Family f, int n, int kappa) {
    switch (f) {
        case Family::A: return Rational(kappa, n);
        case Family::C:
        case Family::D2: return Rational(kappa, 2);
        case Family::D: return kappa == 2 ? Rational(1, 2) : Rational(0);
        case Family::B:
        case Family::A2: return 0;
    }
    return 0;
}

// A random Coxeter element: one reflection per sigma-orbit, orbits in random order.
WeylElement random_coxeter(const RootDatum& d, std::mt19937_64& rng) {
    auto orbits = d.simple_orbits();
    std::shuffle(orbits.begin(), orbits.end(), rng);
    WeylElement w = SmallMatrix::identity(d.rank);
    for (const auto& o : orbits) {
        std::uniform_int_distribution<std::size_t> pick(0, o.size() - 1);
        w = w * simple_reflection(d, o[pick(rng)]);
    }
    return w;
}

}  // namespace

std::vector<Check> checks_newton(const ReportConfig& cfg) {
    std::vector<Check> out;
    for (Family f : cfg.types)
        for (int n = lo(cfg, f); n <= cfg.max_rank; ++n) {
            const RootDatum d = build_root_datum(f, n);
            for (int k : kappas(cfg, f, n)) {
                const ExtAffineElement x = coxeter_lift(d, f, n, k);
                const RatVec nu = newton_point(d, x);
                const auto slope = central_slope(d, nu);
                const bool basic = is_basic(d, x);
                const Rational want = expected_slope(f, n, k);
                out.push_back(make("newton." + type_tag(f, n) + k_tag(k), "isoclinic slope of the special Coxeter lift",
                                   f == Family::A2 ? "derived" : "published",
                                   Json{{"basic", true}, {"slope", rational_string(want)}},
                                   Json{{"basic", basic}, {"slope", slope ? Json(rational_string(*slope)) : Json()},
                                        {"newton_point", rationals(nu)}},
                                   basic && slope && *slope == want));
            }
            if (cfg.random_lifts == 0) continue;
            std::mt19937_64 rng(cfg.seed * 7919 + static_cast<std::uint64_t>(n) * 31 + static_cast<std::uint64_t>(f));
            std::uniform_int_distribution<long long> coord(-3, 3);
            std::size_t basic = 0;
            for (std::size_t t = 0; t < cfg.random_lifts; ++t) {
                SmallVec lambda(d.rank);
                for (auto& c : lambda) c = coord(rng);
                if (is_basic(d, ExtAffineElement{lambda, random_coxeter(d, rng)})) ++basic;
            }
            out.push_back(make("newton_random_lifts." + type_tag(f, n), "every lift of a Coxeter element is basic",
                               "published", Json{{"basic", cfg.random_lifts}},
                               Json{{"basic", basic}, {"trials", cfg.random_lifts}}, basic == cfg.random_lifts));
        }
    return out;
}

std::vector<Check> checks_kottwitz(const ReportConfig& cfg) {
    std::vector<Check> out;
    for (Family f : cfg.types)
        for (int n = lo(cfg, f); n <= cfg.max_rank; ++n) {
            const RootDatum d = build_root_datum(f, n);
            std::map<IntVec, int> seen;
            for (int k : kappa_range(f, n)) {
                const IntVec cls = kottwitz_class(d, coxeter_lift(d, f, n, k));
                const bool zero = std::all_of(cls.begin(), cls.end(), [](const BigInt& c) { return c == 0; });
                const bool fresh = seen.emplace(cls, k).second;
                if (cfg.kappa && *cfg.kappa != k) continue;
                out.push_back(make("kottwitz." + type_tag(f, n) + k_tag(k),
                                   "Kottwitz class of the special Coxeter lift", "derived",
                                   Json{{"zero", k == 0}, {"distinct_from_smaller_kappa", true}},
                                   Json{{"zero", zero}, {"distinct_from_smaller_kappa", fresh}, {"class", int_vec(cls)},
                                        {"group", fundamental_group_coinvariants(d).describe()}},
                                   zero == (k == 0) && fresh));
            }
        }
    return out;
}

std::vector<Check> checks_fixed_points(const ReportConfig& cfg) {
    std::vector<Check> out;
    for (Family f : cfg.types)
        for (int n = lo(cfg, f); n <= cfg.max_rank; ++n) {
            const RootDatum d = build_root_datum(f, n);
            for (int k : kappas(cfg, f, n)) {
                const ExtAffineElement x = coxeter_lift(d, f, n, k);
                const ApartmentPoint want = project_to_adjoint(d, reference_fixed_point(f, n, k));
                const ApartmentPoint got = fixed_point(d, x);
                const bool fixed = is_fixed(d, x, got);
                out.push_back(make("fixed_point." + type_tag(f, n) + k_tag(k), "fixed point of the special Coxeter lift",
                                   f == Family::D && k == 2 ? "derived" : "published",
                                   Json{{"cocharacter", rationals(reference_fixed_point(f, n, k))},
                                        {"simple_root_pairings", rationals(want.adjoint)}},
                                   Json{{"cocharacter", rationals(got.coords)},
                                        {"simple_root_pairings", rationals(got.adjoint)},
                                        {"fixed", fixed}},
                                   fixed && got == want));
            }
        }
    return out;
}

std::vector<Check> checks_bounds(const ReportConfig& cfg) {
    std::vector<Check> out;
    for (Family f : cfg.types)
        for (int n = lo(cfg, f); n <= cfg.max_rank; ++n)
            for (int k : kappas(cfg, f, n)) {
                const ReferenceTable ref = reference_bound_table(f, n, k);
                const std::vector<Rational> table = cross_section_bound_table(f, n, k);
                std::vector<Rational> shown = table;
                if (ref.integral)
                    for (auto& v : shown) v = ceil(v);
                out.push_back(make("bounds." + type_tag(f, n) + k_tag(k), "valuation bounds on the cross-section coordinates",
                                   "published", Json{{"bounds", rationals(ref.values)}, {"integral", ref.integral}},
                                   Json{{"bounds", rationals(shown)}, {"pairings", rationals(table)}},
                                   table_matches(table, ref)));
                if (!tropical_supported(f, n)) continue;
                const std::vector<Rational> trop = tropical_bound_derivation(f, n, k);
                out.push_back(make("bounds_tropical." + type_tag(f, n) + k_tag(k),
                                   "valuation bounds from the cyclic relation", "published",
                                   Json{{"bounds", rationals(ref.values)}},
                                   Json{{"bounds", rationals(trop)}, {"apartment", rationals(table)}},
                                   trop == ref.values && trop == table));
            }
    return out;
}

namespace {

Json violation_summary(const RootDatum& d, const FiltrationReport& rep) {
    Json a = Json::array();
    for (std::size_t i = 0; i < rep.violations.size() && i < 3; ++i) {
        const auto& v = rep.violations[i];
        std::string s = "condition " + std::to_string(v.condition) + " at level " + std::to_string(v.level) + ": " + v.what;
        for (auto r : v.roots) s += " " + d.root_name(r);
        a.push_back(s);
    }
    return a;
}

}  // namespace

std::vector<Check> checks_filtrations(const ReportConfig& cfg) {
    std::vector<Check> out;
    for (Family f : cfg.types)
        for (int n = lo(cfg, f); n <= cfg.max_rank; ++n) {
            const RootDatum d = build_root_datum(f, n);
            const WeylElement c = special_coxeter(d, f, n);
            const RootFiltration stated = build_filtration(d, f, n);
            const FiltrationReport rep = verify_filtration(d, c, stated);
            const std::string tag = type_tag(f, n);
            out.push_back(make("filtration." + tag, "closed filtration for the cross-section", "published",
                               Json{{"pass", true}, {"r", filtration_length(f, n)}},
                               Json{{"pass", rep.pass()}, {"r", stated.r()}, {"violations", rep.violations.size()},
                                    {"first_violations", violation_summary(d, rep)}},
                               rep.pass() && static_cast<int>(stated.r()) == filtration_length(f, n)));

            const auto least = least_filtration(d, c);
            const bool least_ok = least && verify_filtration(d, c, *least).pass();
            out.push_back(make("filtration_least." + tag, "existence of a closed filtration", "derived",
                               Json{{"exists", true}, {"pass", true}},
                               Json{{"exists", least.has_value()}, {"pass", least_ok},
                                    {"r", least ? Json(least->r()) : Json()}},
                               least_ok));

            const auto corrected = corrected_filtration(d, f, n);
            if (corrected && !rep.pass()) {
                const FiltrationReport crep = verify_filtration(d, c, *corrected);
                out.push_back(make("filtration_corrected." + tag, "closed filtration after a one-level correction",
                                   "derived", Json{{"pass", true}},
                                   Json{{"pass", crep.pass()}, {"first_violations", violation_summary(d, crep)}},
                                   crep.pass()));
            }
            if (rep.pass() && cfg.mutation_trials > 0) {
                std::mt19937_64 rng(cfg.seed * 104729 + static_cast<std::uint64_t>(n) * 131 + static_cast<std::uint64_t>(f));
                const MutationStats ms = mutation_test(d, c, stated, cfg.mutation_trials, rng);
                out.push_back(make("filtration_mutation." + tag, "single-root displacements are rejected", "derived",
                                   Json{{"min_detection_rate", "99/100"}},
                                   Json{{"detected", ms.detected}, {"trials", ms.trials}},
                                   ms.detected * 100 >= ms.trials * 99));
            }
        }
    return out;
}

std::vector<Check> checks_cross_section(const ReportConfig& cfg) {
    std::vector<Check> out;
    for (Family f : cfg.types)
        for (int n = lo(cfg, f); n <= cfg.max_rank; ++n) {
            const RootDatum d = build_root_datum(f, n);
            const WeylElement c = special_coxeter(d, f, n);
            const auto roots = cross_section_roots(d, c);
            std::vector<std::size_t> labelled;
            for (const auto& l : cross_section_labels(f, n)) labelled.push_back(d.root_by_label(l));
            std::sort(labelled.begin(), labelled.end());
            const std::size_t orbits = num_sigma_orbits(d);
            const int len = length(d, c);
            out.push_back(make("cross_section." + type_tag(f, n), "size of c(Phi+) n Phi-", "published",
                               Json{{"size", orbits}, {"length", orbits}, {"sigma_orbits", orbits}},
                               Json{{"size", roots.size()}, {"length", len}, {"sigma_orbits", orbits},
                                    {"matches_labels", roots == labelled}},
                               roots.size() == orbits && static_cast<std::size_t>(len) == orbits && roots == labelled &&
                                   is_twisted_coxeter(d, c)));
        }
    return out;
}

namespace {

std::size_t image_order(const RootDatum& d, const WeylElement& w) {
    const auto img = beta_map(d, w).image();
    return img.group.is_finite() ? img.group.order().convert_to<std::size_t>() : img.torsion_elements.size();
}

}  // namespace

std::vector<Check> checks_tori(const ReportConfig& cfg) {
    std::vector<Check> out;
    if (cfg.tori_example) {
        const RootDatum d = sl2_squared_mod_mu2();
        const WeylGroup g = WeylGroup::generate(d);
        const WeylElement c = some_twisted_coxeter(d);
        const FinAbGroup pi = fundamental_group_coinvariants(d);
        for (const auto& k : pi.torsion_elements()) {
            const bool trivial = pi.is_zero(k);
            const RationalClasses rc = rational_classes(d, g, c, basic_label(d, k));
            const std::size_t want = trivial ? 2 : 1;
            out.push_back(make(std::string("tori.sl2xsl2_mu2.") + (trivial ? "b_trivial" : "b_nontrivial"),
                               "rational classes of Coxeter tori in (SL2 x SL2)/mu2", "published",
                               Json{{"rational_classes", want}},
                               Json{{"rational_classes", rc.count()}, {"fiber", rc.fiber.members.size()},
                                    {"action_trivial", rc.action_trivial}},
                               rc.count() == want));
        }
    }
    for (Family f : cfg.types)
        for (int n = lo(cfg, f); n <= std::min(cfg.max_rank, cfg.tori_max_rank); ++n) {
            for (Isogeny iso : {Isogeny::Model, Isogeny::Adjoint, Isogeny::SimplyConnected}) {
                const RootDatum d = build_root_datum(f, n, iso);
                const WeylElement c = some_twisted_coxeter(d);
                const std::size_t want = image_order(d, c);
                std::size_t labels = 0, sized = 0, nonempty = 0;
                bool torsor = true;
                for (const auto& b : basic_labels(d, 1)) {
                    const Fiber fib = basic_fiber(d, c, b);
                    ++labels;
                    if (!fib.members.empty()) ++nonempty;
                    if (fib.members.size() == want) ++sized;
                    torsor = torsor && fib.torsor_law;
                }
                out.push_back(make("tori_fiber." + type_tag(f, n) + "." + isogeny_name(iso),
                                   "fibers over basic classes are im(beta_c)-torsors", "published",
                                   Json{{"fiber_size", want}, {"labels_with_that_size", labels}},
                                   Json{{"labels", labels}, {"labels_with_that_size", sized}, {"nonempty", nonempty},
                                        {"torsor_law", torsor}},
                                   sized == labels && torsor));
                if (iso == Isogeny::Model) continue;
                // Almost simple groups: every basic class; otherwise only b = 1.
                const WeylGroup g = WeylGroup::generate(d);
                bool trivial = true;
                std::size_t classes = 0;
                for (const auto& b : basic_labels(d, 1)) {
                    const RationalClasses rc = rational_classes(d, g, c, b);
                    trivial = trivial && rc.action_trivial;
                    classes += rc.count();
                }
                out.push_back(make("tori_action." + type_tag(f, n) + "." + isogeny_name(iso),
                                   "trivial action of the twisted centralizer", "published",
                                   Json{{"action_trivial", true}},
                                   Json{{"action_trivial", trivial}, {"rational_classes", classes},
                                        {"centralizer_order", twisted_centralizer(d, g, c).size()}},
                                   trivial));
            }
        }
    return out;
}

std::vector<Check> checks_isocrystal(const ReportConfig& cfg) {
    std::vector<Check> out;
    if (!cfg.isocrystal) return out;
    for (std::uint64_t q : cfg.qs)
        for (int n = 1; n <= cfg.isocrystal_max_n; ++n)
            for (int k = 0; k < std::max(n, 1); ++k) {
                if (std::gcd(n, k) != 1) continue;
                const LemmaReport r = verify_isocrystal_lemma(n, k, cfg.isocrystal_trials,
                                                              cfg.seed * 1000003 + q * 1009 + n * 37 + k, q, cfg.precision);
                out.push_back(make("isocrystal.q" + std::to_string(q) + ".slope" + std::to_string(k) + "_" +
                                       std::to_string(n),
                                   "ord A_i >= (n - i) slope for cyclic vectors", "published",
                                   Json{{"passed", cfg.isocrystal_trials}},
                                   Json{{"passed", r.passed}, {"failed", r.failed}, {"uncertified", r.uncertified},
                                        {"failures", r.failures}},
                                   r.pass()));
            }
    return out;
}

std::vector<Check> checks_lang_lift(const ReportConfig& cfg) {
    std::vector<Check> out;
    if (!cfg.lang_lift) return out;
    for (bool torus : {false, true}) {
        LangLiftConfig lc;
        lc.torus = torus;
        const LangLiftReport r = lang_lift_experiment(lc, cfg.lang_lift_trials, cfg.seed);
        out.push_back(make(std::string("lang_lift.") + (torus ? "torus" : "unipotent") + ".q2",
                           "level-by-level solution of g^-1 sigma_b(g) = y", "derived",
                           Json{{"solved", cfg.lang_lift_trials}, {"max_tower_degree_at_most", lc.degree_bound}},
                           Json{{"solved", r.solved}, {"residual_ok", r.residual_ok},
                                {"max_tower_degree", r.max_tower_degree}, {"failures", r.failures}},
                           r.pass() && r.max_tower_degree <= lc.degree_bound));
    }
    return out;
}

std::vector<Check> run_report(const ReportConfig& cfg) {
    std::vector<Check> all;
    for (auto fn : {checks_fundamental_groups, checks_newton, checks_kottwitz, checks_fixed_points, checks_bounds,
                    checks_filtrations, checks_cross_section, checks_tori, checks_isocrystal, checks_lang_lift}) {
        auto part = fn(cfg);
        all.insert(all.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    }
    std::stable_sort(all.begin(), all.end(), [](const Check& a, const Check& b) { return a.id < b.id; });
    return all;
}

Json config_json(const ReportConfig& cfg) {
    Json types = Json::array();
    for (Family f : cfg.types) types.push_back(family_name(f));
    Json qs = Json::array();
    for (auto q : cfg.qs) qs.push_back(q);
    return Json{{"types", types},
                {"min_rank", cfg.min_rank},
                {"max_rank", cfg.max_rank},
                {"kappa", cfg.kappa ? Json(*cfg.kappa) : Json()},
                {"seed", cfg.seed},
                {"q", qs},
                {"precision", cfg.precision},
                {"isocrystal_trials", cfg.isocrystal_trials},
                {"mutation_trials", cfg.mutation_trials},
                {"random_lifts", cfg.random_lifts},
                {"lang_lift_trials", cfg.lang_lift_trials}};
}

Json report_json(const std::vector<Check>& checks, const Json& config) {
    Json arr = Json::array();
    std::size_t passed = 0;
    for (const auto& c : checks) {
        arr.push_back(Json{{"id", c.id},
                           {"paper_ref", c.paper_ref},
                           {"provenance", c.provenance},
                           {"expected", c.expected},
                           {"computed", c.computed},
                           {"pass", c.pass}});
        if (c.pass) ++passed;
    }
    return Json{{"version", kReportVersion},
                {"config", config},
                {"checks", arr},
                {"summary", Json{{"total", checks.size()}, {"passed", passed}, {"failed", checks.size() - passed}}}};
}

std::string report_table(const std::vector<Check>& checks) {
    std::size_t w = 2;
    for (const auto& c : checks) w = std::max(w, c.id.size());
    std::ostringstream os;
    std::size_t passed = 0;
    for (const auto& c : checks) {
        os << (c.pass ? "PASS  " : "FAIL  ") << c.id << std::string(w + 2 - c.id.size(), ' ')
           << "expected " << c.expected.dump() << "  computed " << c.computed.dump() << "\n";
        if (c.pass) ++passed;
    }
    os << passed << "/" << checks.size() << " checks passed\n";
    return os.str();
}

std::vector<Check> compare_golden(const std::vector<Check>& checks, const Json& golden) {
    std::map<std::string, const Check*> by_id;
    for (const auto& c : checks) by_id[c.id] = &c;
    std::vector<Check> out;
    if (!golden.contains("checks") || !golden["checks"].is_array()) {
        out.push_back(make("golden.format", "stored report", "derived", "checks array", Json(), false));
        return out;
    }
    for (const auto& g : golden["checks"]) {
        const std::string id = g.value("id", std::string());
        auto it = by_id.find(id);
        if (it == by_id.end()) {
            out.push_back(make("golden." + id, "stored report", "derived", g.value("computed", Json()), "missing", false));
            continue;
        }
        const Check& c = *it->second;
        const Json want{{"expected", g.value("expected", Json())}, {"computed", g.value("computed", Json())},
                        {"pass", g.value("pass", false)}};
        const Json got{{"expected", c.expected}, {"computed", c.computed}, {"pass", c.pass}};
        if (want != got) out.push_back(make("golden." + id, "stored report", "derived", want, got, false));
    }
    return out;
}

}  // namespace ctori
