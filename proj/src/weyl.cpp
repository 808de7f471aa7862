// SPDX-License-Identifier: MIT
#include "ctori/weyl.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ctori {

WeylElement reflection(const RootDatum& d, std::size_t root) {
    WeylElement m = SmallMatrix::identity(d.rank);
    for (std::size_t i = 0; i < d.rank; ++i)
        for (std::size_t j = 0; j < d.rank; ++j) m(i, j) -= d.coroots[root][i] * d.roots[root][j];
    return m;
}

WeylElement simple_reflection(const RootDatum& d, std::size_t pos) { return reflection(d, d.simple.at(pos)); }

WeylElement word_matrix(const RootDatum& d, const Word& w) {
    WeylElement m = SmallMatrix::identity(d.rank);
    for (std::size_t p : w) m = m * simple_reflection(d, p);
    return m;
}

WeylElement sigma_twist(const RootDatum& d, const WeylElement& w) { return d.sigma * w * d.sigma_inv; }

std::size_t act_on_root(const RootDatum& d, const WeylElement& w, std::size_t root) {
    auto j = d.find_coroot(w * d.coroots[root]);
    if (!j) throw std::invalid_argument("matrix does not permute the coroots");
    return *j;
}

bool is_weyl_element(const RootDatum& d, const WeylElement& w) {
    if (w.rows() != d.rank || w.cols() != d.rank) return false;
    for (std::size_t i = 0; i < d.num_roots(); ++i)
        if (!d.find_coroot(w * d.coroots[i])) return false;
    // Strip descents; a Weyl element reduces to the identity.
    WeylElement cur = w;
    for (int guard = 0; guard < 100000; ++guard) {
        bool found = false;
        for (std::size_t p = 0; p < d.simple.size(); ++p) {
            std::size_t img = d.find_coroot(cur * d.coroots[d.simple[p]]).value_or(d.num_roots());
            if (img == d.num_roots()) return false;
            if (!d.is_positive(img)) {
                cur = cur * simple_reflection(d, p);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    return cur == SmallMatrix::identity(d.rank);
}

int length(const RootDatum& d, const WeylElement& w) {
    int l = 0;
    for (std::size_t i = 0; i < d.num_roots(); ++i)
        if (d.is_positive(i) && !d.is_positive(act_on_root(d, w, i))) ++l;
    return l;
}

Word reduced_word(const RootDatum& d, const WeylElement& w) {
    Word rev;
    WeylElement cur = w;
    while (true) {
        bool found = false;
        for (std::size_t p = 0; p < d.simple.size(); ++p) {
            if (!d.is_positive(act_on_root(d, cur, d.simple[p]))) {
                cur = cur * simple_reflection(d, p);
                rev.push_back(p);
                found = true;
                break;
            }
        }
        if (!found) break;
    }
    if (cur != SmallMatrix::identity(d.rank)) throw std::invalid_argument("reduced_word: not a Weyl group element");
    return Word(rev.rbegin(), rev.rend());
}

WeylElement weyl_inverse(const RootDatum& d, const WeylElement& w) {
    Word word = reduced_word(d, w);
    std::reverse(word.begin(), word.end());
    return word_matrix(d, word);
}

std::size_t num_sigma_orbits(const RootDatum& d) { return d.simple_orbits().size(); }

bool is_twisted_coxeter(const RootDatum& d, const WeylElement& w) {
    Word word = reduced_word(d, w);
    auto orbits = d.simple_orbits();
    if (word.size() != orbits.size()) return false;
    std::vector<int> hits(orbits.size(), 0);
    for (std::size_t p : word)
        for (std::size_t o = 0; o < orbits.size(); ++o)
            if (std::find(orbits[o].begin(), orbits[o].end(), p) != orbits[o].end()) ++hits[o];
    return std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; });
}

Word special_coxeter_word(Family f, int n) {
    Word w;
    switch (f) {
        case Family::A:
            for (int i = 0; i + 1 < n; ++i) w.push_back(i);
            break;
        case Family::A2:
            for (int i = 0; i < n / 2; ++i) w.push_back(i);
            break;
        case Family::B:
        case Family::C:
        case Family::D:
            for (int i = 0; i < n; ++i) w.push_back(i);
            break;
        case Family::D2:
            for (int i = 0; i + 1 < n; ++i) w.push_back(i);
            break;
    }
    return w;
}

WeylElement special_coxeter(const RootDatum& d, Family f, int n) {
    return word_matrix(d, special_coxeter_word(f, n));
}

WeylElement some_twisted_coxeter(const RootDatum& d) {
    Word w;
    for (const auto& orbit : d.simple_orbits()) w.push_back(orbit.front());
    return word_matrix(d, w);
}

std::vector<std::size_t> inversion_set(const RootDatum& d, const WeylElement& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.num_roots(); ++i)
        if (d.is_positive(i) && !d.is_positive(act_on_root(d, w, i))) out.push_back(i);
    return out;
}

namespace {

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

BigInt component_order(const SmallMatrix& cartan, const std::vector<std::size_t>& nodes) {
    const std::size_t l = nodes.size();
    if (l == 1) return 2;
    std::vector<int> degree(l, 0);
    int max_mult = 1;
    std::size_t multi_a = 0, multi_b = 0;
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = i + 1; j < l; ++j) {
            long long m = cartan(nodes[i], nodes[j]) * cartan(nodes[j], nodes[i]);
            if (m == 0) continue;
            ++degree[i];
            ++degree[j];
            if (m > max_mult) {
                max_mult = static_cast<int>(m);
                multi_a = i;
                multi_b = j;
            }
        }
    if (max_mult == 3) return 12;
    if (max_mult == 2) {
        if (l == 4 && degree[multi_a] == 2 && degree[multi_b] == 2) return 1152;
        return (BigInt(1) << static_cast<unsigned>(l)) * factorial(static_cast<int>(l));
    }
    auto branch = std::find(degree.begin(), degree.end(), 3);
    if (branch == degree.end()) return factorial(static_cast<int>(l) + 1);
    // Arm lengths from the branch node.
    std::size_t b = static_cast<std::size_t>(branch - degree.begin());
    std::vector<int> arms;
    for (std::size_t j = 0; j < l; ++j) {
        if (j == b || cartan(nodes[b], nodes[j]) == 0) continue;
        int len = 1;
        std::size_t prev = b, cur = j;
        while (true) {
            std::size_t next = l;
            for (std::size_t k = 0; k < l; ++k)
                if (k != prev && k != cur && cartan(nodes[cur], nodes[k]) != 0) next = k;
            if (next == l) break;
            prev = cur;
            cur = next;
            ++len;
        }
        arms.push_back(len);
    }
    std::sort(arms.begin(), arms.end());
    if (arms[0] == 1 && arms[1] == 1) return (BigInt(1) << static_cast<unsigned>(l - 1)) * factorial(static_cast<int>(l));
    if (arms == std::vector<int>{1, 2, 2}) return 51840;
    if (arms == std::vector<int>{1, 2, 3}) return 2903040;
    if (arms == std::vector<int>{1, 2, 4}) return 696729600;
    throw std::logic_error("unrecognised Dynkin diagram");
}

}  // namespace

BigInt weyl_group_order(const RootDatum& d) {
    SmallMatrix cartan = cartan_matrix(d);
    const std::size_t l = d.simple.size();
    std::vector<int> comp(l, -1);
    BigInt order = 1;
    int next = 0;
    for (std::size_t s = 0; s < l; ++s) {
        if (comp[s] >= 0) continue;
        std::vector<std::size_t> nodes;
        std::deque<std::size_t> q{s};
        comp[s] = next;
        while (!q.empty()) {
            std::size_t x = q.front();
            q.pop_front();
            nodes.push_back(x);
            for (std::size_t y = 0; y < l; ++y)
                if (comp[y] < 0 && cartan(x, y) != 0) {
                    comp[y] = next;
                    q.push_back(y);
                }
        }
        std::sort(nodes.begin(), nodes.end());
        order *= component_order(cartan, nodes);
        ++next;
    }
    return order;
}

WeylGroup WeylGroup::generate(const RootDatum& d, std::size_t guard) {
    BigInt expected = weyl_group_order(d);
    if (expected > guard)
        throw ResourceLimit("Weyl group of " + d.name + " has " + expected.str() + " elements, above the guard of " +
                            std::to_string(guard));
    WeylGroup g;
    std::vector<WeylElement> gens;
    for (std::size_t p = 0; p < d.simple.size(); ++p) gens.push_back(simple_reflection(d, p));
    WeylElement id = SmallMatrix::identity(d.rank);
    g.elements_.push_back(id);
    g.index_.emplace(id.data(), 0);
    for (std::size_t i = 0; i < g.elements_.size(); ++i)
        for (const auto& s : gens) {
            WeylElement w = g.elements_[i] * s;
            if (g.index_.emplace(w.data(), g.elements_.size()).second) g.elements_.push_back(std::move(w));
        }
    if (g.elements_.size() != expected)
        throw std::logic_error("Weyl group enumeration disagrees with the Dynkin order");
    return g;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
    auto it = index_.find(w.data());
    if (it == index_.end()) throw std::out_of_range("element not in the Weyl group");
    return it->second;
}

bool WeylGroup::contains(const WeylElement& w) const { return index_.count(w.data()) > 0; }

std::vector<std::vector<std::size_t>> sigma_conjugacy_classes(const RootDatum& d, const WeylGroup& g) {
    std::vector<WeylElement> left, right;
    for (std::size_t p = 0; p < d.simple.size(); ++p) {
        left.push_back(simple_reflection(d, p));
        right.push_back(sigma_twist(d, left.back()));
    }
    std::vector<int> cls(g.size(), -1);
    std::vector<std::vector<std::size_t>> classes;
    for (std::size_t start = 0; start < g.size(); ++start) {
        if (cls[start] >= 0) continue;
        const int id = static_cast<int>(classes.size());
        std::vector<std::size_t> members{start};
        cls[start] = id;
        for (std::size_t k = 0; k < members.size(); ++k)
            for (std::size_t p = 0; p < left.size(); ++p) {
                std::size_t j = g.index_of(left[p] * g[members[k]] * right[p]);
                if (cls[j] < 0) {
                    cls[j] = id;
                    members.push_back(j);
                }
            }
        std::sort(members.begin(), members.end());
        classes.push_back(std::move(members));
    }
    return classes;
}

std::vector<std::size_t> twisted_centralizer(const RootDatum& d, const WeylGroup& g, const WeylElement& w) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < g.size(); ++i) {
        const WeylElement& v = g[i];
        // v^{-1} w sigma(v) == w  <=>  w sigma(v) == v w
        if (w * sigma_twist(d, v) == v * w) out.push_back(i);
    }
    return out;
}

int diagram_order(const RootDatum& d) {
    int order = 1;
    for (const auto& orbit : d.simple_orbits()) order = std::lcm(order, static_cast<int>(orbit.size()));
    return order;
}

WeylElement twisted_power(const RootDatum& d, const WeylElement& w) {
    WeylElement acc = SmallMatrix::identity(d.rank);
    WeylElement cur = w;
    for (int i = 0; i < diagram_order(d); ++i) {
        acc = acc * cur;
        cur = sigma_twist(d, cur);
    }
    return acc;
}

}  // namespace ctori
