// SPDX-License-Identifier: MIT
#include "ctori/cross_section.hpp"

#include <algorithm>

namespace ctori {

std::size_t RootFiltration::level(std::size_t root) const {
    std::size_t l = 0;
    for (std::size_t i = 0; i < chain.size(); ++i)
        if (std::binary_search(chain[i].begin(), chain[i].end(), root)) l = i + 1;
    return l;
}

RootFiltration RootFiltration::from_levels(const std::vector<std::size_t>& levels, std::size_t r) {
    RootFiltration f;
    f.chain.assign(r, {});
    for (std::size_t root = 0; root < levels.size(); ++root)
        for (std::size_t i = 1; i <= levels[root] && i <= r; ++i) f.chain[i - 1].push_back(root);
    return f;
}

std::vector<std::size_t> RootFiltration::levels(std::size_t num_roots) const {
    std::vector<std::size_t> out(num_roots, 0);
    for (std::size_t i = 0; i < chain.size(); ++i)
        for (std::size_t root : chain[i]) out[root] = std::max(out[root], i + 1);
    return out;
}

std::vector<CoxeterImage> coxeter_action_on_roots(const RootDatum& d, const WeylElement& c) {
    const WeylElement sc = d.sigma * c;
    std::vector<CoxeterImage> out;
    for (std::size_t i : d.positive_roots()) out.push_back({i, act_on_root(d, c, i), act_on_root(d, sc, i)});
    return out;
}

namespace {

class Builder {
public:
    Builder(const RootDatum& d, std::size_t r) : d_(d), chain_(r) {}
    // Add the root with label (a, b) to Psi_i.
    void add(std::size_t i, int a, int b) { chain_.at(i - 1).push_back(d_.root_by_label({a, b})); }
    void add_all(std::size_t i, const std::vector<std::size_t>& roots) {
        chain_.at(i - 1).insert(chain_.at(i - 1).end(), roots.begin(), roots.end());
    }
    const std::vector<std::size_t>& at(std::size_t i) const { return chain_.at(i - 1); }
    void finish_level(std::size_t i) {
        auto& s = chain_.at(i - 1);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
    }
    RootFiltration done() {
        for (std::size_t i = 1; i <= chain_.size(); ++i) finish_level(i);
        return {chain_};
    }

private:
    const RootDatum& d_;
    std::vector<std::vector<std::size_t>> chain_;
};

RootFiltration filtration_a(const RootDatum& d, int n) {
    Builder b(d, n - 1);
    for (int i = 1; i <= n - 1; ++i)
        for (int p = 1; p <= n; ++p)
            for (int q = std::max(p + 1, i + 1); q <= n; ++q) b.add(i, p, -q);
    return b.done();
}

RootFiltration filtration_c(const RootDatum& d, int m) {
    Builder b(d, m + 1);
    for (int i = 1; i < m; ++i) b.add(m + 1, i, m);
    b.add(m + 1, m, m);
    for (int i = 1; i <= m; ++i) {
        for (int j = i + 1; j <= m; ++j) b.add(m, i, j);
        b.add(m, i, i);
    }
    b.finish_level(m);
    for (int i0 = 1; i0 <= m - 1; ++i0) {
        b.add_all(i0, b.at(m));
        for (int i = 1; i <= m; ++i)
            for (int j = std::max(i + 1, i0 + 1); j <= m; ++j) b.add(i0, i, -j);
    }
    return b.done();
}

RootFiltration filtration_d(const RootDatum& d, int m) {
    Builder b(d, m + 1);
    for (int i = 1; i <= m - 2; ++i) b.add(m + 1, i, m - 1);
    b.add(m + 1, m - 1, -m);
    b.add(m + 1, m - 1, m);
    for (int i = 1; i <= m; ++i)
        for (int j = i + 1; j <= m; ++j) b.add(m, i, j);
    b.add(m, m - 1, -m);
    b.finish_level(m);
    b.add_all(m - 1, b.at(m));
    for (int i = 1; i <= m - 2; ++i) {
        b.add(m - 1, i, -m);
        b.add(m - 1, i, m);
    }
    b.finish_level(m - 1);
    for (int i0 = 1; i0 <= m - 2; ++i0) {
        b.add_all(i0, b.at(m - 1));
        for (int i = 1; i <= m - 1; ++i)
            for (int j = std::max(i + 1, i0 + 1); j <= m - 1; ++j) b.add(i0, i, -j);
    }
    return b.done();
}

RootFiltration filtration_2a(const RootDatum& d, int n) {
    const int m = n / 2;
    Builder b(d, m + 2);
    for (int j = 1; j <= m; ++j) b.add(m + 2, j, -(m + 1));
    b.finish_level(m + 2);
    b.add_all(m + 1, b.at(m + 2));
    for (int i = 1; i <= m; ++i)
        for (int j = m + 2; j <= n; ++j) b.add(m + 1, i, -j);
    b.finish_level(m + 1);
    for (int i0 = m; i0 >= 2; --i0) {
        b.add_all(i0, b.at(i0 + 1));
        for (int i = 1; i < i0; ++i) b.add(i0, i, -i0);
        for (int j = n - i0 + 1; j <= n; ++j) b.add(i0, n - i0, -j);
        b.finish_level(i0);
    }
    b.add_all(1, d.positive_roots());
    return b.done();
}

RootFiltration filtration_2d(const RootDatum& d, int m) {
    Builder b(d, m + 1);
    for (int i = 1; i < m; ++i) b.add(m + 1, i, -m);
    b.finish_level(m + 1);
    b.add_all(m, b.at(m + 1));
    for (int i = 1; i < m; ++i)
        for (int j = i + 1; j < m; ++j) b.add(m, i, j);
    b.finish_level(m);
    b.add_all(m - 1, b.at(m));
    for (int i = 1; i < m; ++i) b.add(m - 1, i, m);
    b.finish_level(m - 1);
    for (int i0 = m - 2; i0 >= 1; --i0) {
        b.add_all(i0, b.at(i0 + 1));
        for (int i = 1; i < i0 + 1; ++i) b.add(i0, i, -(i0 + 1));
        b.finish_level(i0);
    }
    return b.done();
}

}  // namespace

RootFiltration dual_filtration(const RootDatum& from, const RootDatum& to, const RootFiltration& filt,
                               const SmallMatrix& restrict_rows) {
    RootFiltration out;
    for (const auto& level : filt.chain) {
        std::vector<std::size_t> img;
        for (std::size_t root : level) {
            SmallVec chi = restrict_rows * from.coroots[root];
            auto j = to.find_root(chi);
            if (!j) throw std::invalid_argument("dual_filtration: coroot is not a root of the target");
            img.push_back(*j);
        }
        std::sort(img.begin(), img.end());
        out.chain.push_back(std::move(img));
    }
    return out;
}

RootFiltration build_filtration(const RootDatum& model, Family f, int n) {
    switch (f) {
        case Family::A: return filtration_a(model, n);
        case Family::C: return filtration_c(model, n);
        case Family::B: {
            // Coroots of GSp_{2m}, with the similitude coordinate dropped, are the roots of SO_{2m+1}.
            RootDatum c = build_root_datum(Family::C, n);
            SmallMatrix drop(n, n + 1);
            for (int i = 0; i < n; ++i) drop(i, i + 1) = 1;
            return dual_filtration(c, model, filtration_c(c, n), drop);
        }
        case Family::D: return filtration_d(model, n);
        case Family::A2: return filtration_2a(model, n);
        case Family::D2: return filtration_2d(model, n);
    }
    throw std::logic_error("unknown family");
}

std::optional<RootFiltration> corrected_filtration(const RootDatum& model, Family f, int n) {
    RootFiltration filt = build_filtration(model, f, n);
    if (f == Family::B && n >= 3) return std::nullopt;
    if (f != Family::D && !(f == Family::A2 && n % 2 == 0)) return filt;
    auto lv = filt.levels(model.num_roots());
    if (f == Family::D) {
        for (int i = 1; i <= n - 2; ++i) lv[model.root_by_label({i, n})] = static_cast<std::size_t>(n - 1);
    } else {
        const int m = n / 2;
        for (int j = m + 2; j <= n; ++j) lv[model.root_by_label({m, -j})] = static_cast<std::size_t>(m);
    }
    return RootFiltration::from_levels(lv, filt.r());
}

namespace {

struct SumTable {
    // sum[a][b] = index of roots[a] + roots[b], or npos.
    std::vector<std::vector<std::size_t>> sum;
    static constexpr std::size_t npos = static_cast<std::size_t>(-1);
    explicit SumTable(const RootDatum& d) : sum(d.num_roots(), std::vector<std::size_t>(d.num_roots(), npos)) {
        for (std::size_t a = 0; a < d.num_roots(); ++a)
            for (std::size_t b = 0; b < d.num_roots(); ++b) {
                SmallVec s = d.roots[a];
                for (std::size_t k = 0; k < s.size(); ++k) s[k] += d.roots[b][k];
                if (auto j = d.find_root(s)) sum[a][b] = *j;
            }
    }
};

std::vector<char> mask(std::size_t n, const std::vector<std::size_t>& s) {
    std::vector<char> m(n, 0);
    for (std::size_t x : s) m[x] = 1;
    return m;
}

}  // namespace

FiltrationReport verify_filtration(const RootDatum& d, const WeylElement& c, const RootFiltration& filt) {
    FiltrationReport rep;
    const std::size_t nr = d.num_roots();
    const std::size_t r = filt.r();
    if (r == 0) {
        rep.violations.push_back({0, 0, {}, "empty filtration"});
        return rep;
    }
    const SumTable st(d);
    const WeylElement sc = d.sigma * c;

    std::vector<std::size_t> phi_b;
    for (std::size_t i : d.positive_roots())
        if (!d.is_positive(act_on_root(d, c, i))) phi_b.push_back(i);
    if (filt.psi(1) != d.positive_roots()) rep.violations.push_back({0, 1, {}, "Psi_1 differs from the positive roots"});
    if (filt.psi(r) != phi_b)
        rep.violations.push_back({0, r, {}, "Psi_r differs from the positive roots made negative by c"});

    std::vector<std::vector<char>> m;
    for (std::size_t i = 1; i <= r; ++i) m.push_back(mask(nr, filt.psi(i)));
    const auto& last = m[r - 1];
    for (std::size_t i = 1; i < r; ++i)
        for (std::size_t a : filt.psi(i + 1))
            if (!m[i - 1][a]) rep.violations.push_back({4, i + 1, {a}, "Psi_{i+1} is not contained in Psi_i"});

    for (std::size_t i = 1; i <= r; ++i) {
        const auto& mi = m[i - 1];
        const auto& s = filt.psi(i);
        for (std::size_t a : s)
            for (std::size_t b : s) {
                if (b < a) continue;
                const std::size_t ab = st.sum[a][b];
                if (ab == SumTable::npos) continue;
                if (!mi[ab]) rep.violations.push_back({1, i, {a, b, ab}, "Psi_i is not closed"});
                if (!last[a] && !last[b] && (!mi[ab] || last[ab]))
                    rep.violations.push_back({1, i, {a, b, ab}, "Psi_i minus Psi_r is not closed"});
                if (i < r && !m[i][ab]) rep.violations.push_back({2, i, {a, b, ab}, "sum does not drop a level"});
                if (i < r && !m[i][a] && !m[i][b] && !m[i][ab]) rep.graded_pieces_abelian = false;
            }
        for (std::size_t a : s) {
            if (last[a]) continue;
            const std::size_t img = act_on_root(d, sc, a);
            if (!mi[img]) rep.violations.push_back({3, i, {a, img}, "sigma c leaves Psi_i"});
        }
    }

    for (std::size_t i = 1; i < r; ++i) {
        LambdaMap lm{i, {}};
        std::vector<int> hits(nr, 0);
        for (std::size_t a : filt.psi(i)) {
            if (m[i][a]) continue;
            const std::size_t img = act_on_root(d, sc, a);
            std::optional<std::size_t> target;
            if (m[i - 1][img] && !m[i][img]) {
                target = img;
                if (++hits[img] > 1) rep.lambda_fibers_at_most_one = false;
            }
            lm.images.emplace_back(a, target);
        }
        rep.lambda.push_back(std::move(lm));
    }
    return rep;
}

std::optional<RootFiltration> least_filtration(const RootDatum& d, const WeylElement& c) {
    const std::size_t nr = d.num_roots();
    const SumTable st(d);
    const WeylElement sc = d.sigma * c;
    const auto pos = d.positive_roots();
    std::vector<char> in_b(nr, 0);
    for (std::size_t i : pos)
        if (!d.is_positive(act_on_root(d, c, i))) in_b[i] = 1;
    // Levels of roots outside Psi_r; roots of Psi_r sit above everything.
    std::vector<std::size_t> lv(nr, 0);
    for (std::size_t i : pos) lv[i] = 1;
    const std::size_t cap = pos.size() + 1;
    bool changed = true;
    while (changed) {
        changed = false;
        auto raise = [&](std::size_t root, std::size_t to) {
            if (in_b[root] || lv[root] >= to) return;
            lv[root] = to;
            changed = true;
        };
        for (std::size_t a : pos) {
            if (!in_b[a]) raise(act_on_root(d, sc, a), lv[a]);
            for (std::size_t b : pos) {
                const std::size_t ab = st.sum[a][b];
                if (ab == SumTable::npos || (in_b[a] && in_b[b])) continue;
                const std::size_t lo = in_b[a] ? lv[b] : (in_b[b] ? lv[a] : std::min(lv[a], lv[b]));
                raise(ab, lo + 1);
            }
        }
        for (std::size_t i : pos)
            if (!in_b[i] && lv[i] >= cap) return std::nullopt;
    }
    std::size_t top = 0;
    for (std::size_t i : pos)
        if (!in_b[i]) top = std::max(top, lv[i]);
    const std::size_t r = top + 1;
    for (std::size_t i : pos)
        if (in_b[i]) lv[i] = r;
    return RootFiltration::from_levels(lv, r);
}

RootFiltration displace_root(const RootFiltration& filt, std::size_t num_roots, std::size_t root) {
    auto lv = filt.levels(num_roots);
    if (lv[root] == 0 || lv[root] >= filt.r()) throw std::invalid_argument("displace_root: root cannot move up");
    ++lv[root];
    return RootFiltration::from_levels(lv, filt.r());
}

MutationStats mutation_test(const RootDatum& d, const WeylElement& c, const RootFiltration& filt, std::size_t trials,
                            std::mt19937_64& rng) {
    MutationStats st;
    const auto lv = filt.levels(d.num_roots());
    std::vector<std::size_t> movable;
    for (std::size_t i = 0; i < lv.size(); ++i)
        if (lv[i] > 0 && lv[i] < filt.r()) movable.push_back(i);
    if (movable.empty()) return st;
    std::uniform_int_distribution<std::size_t> pick(0, movable.size() - 1);
    for (std::size_t t = 0; t < trials; ++t) {
        RootFiltration mutant = displace_root(filt, d.num_roots(), movable[pick(rng)]);
        FiltrationReport rep = verify_filtration(d, c, mutant);
        ++st.trials;
        if (!rep.pass()) {
            ++st.detected;
            bool seen[5] = {false, false, false, false, false};
            for (const auto& v : rep.violations) seen[v.condition] = true;
            for (int k = 0; k < 5; ++k) st.by_condition[k] += seen[k];
        }
    }
    return st;
}

}  // namespace ctori
