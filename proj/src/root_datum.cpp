// SPDX-License-Identifier: MIT
#include "ctori/root_datum.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>

namespace ctori {

std::string family_name(Family f) {
    switch (f) {
        case Family::A: return "A";
        case Family::B: return "B";
        case Family::C: return "C";
        case Family::D: return "D";
        case Family::A2: return "2A";
        case Family::D2: return "2D";
    }
    return "?";
}

Family parse_family(const std::string& s) {
    if (s == "A") return Family::A;
    if (s == "B") return Family::B;
    if (s == "C") return Family::C;
    if (s == "D") return Family::D;
    if (s == "2A" || s == "A2") return Family::A2;
    if (s == "2D" || s == "D2") return Family::D2;
    throw ConfigError("unknown group type '" + s + "' (expected A, B, C, D, 2A or 2D)");
}

Isogeny parse_isogeny(const std::string& s) {
    if (s == "model") return Isogeny::Model;
    if (s == "adjoint") return Isogeny::Adjoint;
    if (s == "sc" || s == "simply-connected") return Isogeny::SimplyConnected;
    throw ConfigError("unknown isogeny '" + s + "' (expected model, adjoint or sc)");
}

std::string isogeny_name(Isogeny i) {
    switch (i) {
        case Isogeny::Model: return "model";
        case Isogeny::Adjoint: return "adjoint";
        case Isogeny::SimplyConnected: return "sc";
    }
    return "?";
}

int min_rank(Family f) {
    switch (f) {
        case Family::A: return 2;
        case Family::A2: return 3;
        case Family::B:
        case Family::C: return 2;
        case Family::D:
        case Family::D2: return 4;
    }
    return 0;
}

std::vector<int> kappa_range(Family f, int n) {
    std::vector<int> k;
    switch (f) {
        case Family::A:
            k.resize(n);
            std::iota(k.begin(), k.end(), 0);
            break;
        case Family::B:
        case Family::C:
        case Family::D2: k = {0, 1}; break;
        case Family::D: k = {0, 1, 2}; break;
        case Family::A2: k = n % 2 ? std::vector<int>{0} : std::vector<int>{0, 1}; break;
    }
    return k;
}

int filtration_length(Family f, int n) {
    switch (f) {
        case Family::A: return n - 1;
        case Family::A2: return n / 2 + 2;
        default: return n + 1;
    }
}

std::string to_string(const RootLabel& l) {
    auto sgn = [](int x) { return x < 0 ? std::string("-") : std::string(); };
    const int a = std::abs(l.a), b = std::abs(l.b);
    if (l.b == 0) return "alpha_{" + sgn(l.a) + std::to_string(a) + "}";
    if (l.a == l.b) return "alpha_{" + sgn(l.a) + "2*" + std::to_string(a) + "}";
    if (l.a > 0 && l.b < 0) return "alpha_{" + std::to_string(a) + "-" + std::to_string(b) + "}";
    if (l.a > 0 && l.b > 0) return "alpha_{" + std::to_string(a) + "+" + std::to_string(b) + "}";
    if (l.a < 0 && l.b < 0) return "alpha_{-" + std::to_string(a) + "-" + std::to_string(b) + "}";
    return "alpha_{-" + std::to_string(a) + "+" + std::to_string(b) + "}";
}

// ---------------------------------------------------------------------------

std::vector<std::size_t> RootDatum::positive_roots() const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < roots.size(); ++i)
        if (is_positive(i)) out.push_back(i);
    return out;
}

std::optional<std::size_t> RootDatum::find_root(const SmallVec& chi) const {
    auto it = root_index.find(chi);
    if (it == root_index.end()) return std::nullopt;
    return it->second;
}

std::optional<std::size_t> RootDatum::find_coroot(const SmallVec& cochar) const {
    auto it = coroot_index.find(cochar);
    if (it == coroot_index.end()) return std::nullopt;
    return it->second;
}

std::size_t RootDatum::root_by_label(const RootLabel& l) const {
    for (std::size_t i = 0; i < labels.size(); ++i)
        if (labels[i] == l) return i;
    throw std::out_of_range("no root labelled " + to_string(l) + " in " + name);
}

std::string RootDatum::root_name(std::size_t i) const {
    if (i < labels.size()) return to_string(labels[i]);
    return "r" + std::to_string(i) + to_string(roots[i]);
}

long long RootDatum::pair(std::size_t root, const SmallVec& cochar) const {
    long long s = 0;
    for (std::size_t k = 0; k < rank; ++k) s += roots[root][k] * cochar[k];
    return s;
}

Rational RootDatum::pair(std::size_t root, const RatVec& cochar) const {
    Rational s = 0;
    for (std::size_t k = 0; k < rank; ++k) s += roots[root][k] * cochar[k];
    return s;
}

std::size_t RootDatum::sigma_root(std::size_t i) const {
    auto j = find_coroot(sigma * coroots[i]);
    if (!j) throw std::logic_error("sigma does not preserve the coroots of " + name);
    return *j;
}

std::vector<std::vector<std::size_t>> RootDatum::simple_orbits() const {
    std::vector<std::vector<std::size_t>> orbits;
    std::vector<bool> seen(simple.size(), false);
    for (std::size_t p = 0; p < simple.size(); ++p) {
        if (seen[p]) continue;
        std::vector<std::size_t> orbit;
        std::size_t q = p;
        while (!seen[q]) {
            seen[q] = true;
            orbit.push_back(q);
            std::size_t img = sigma_root(simple[q]);
            auto it = std::find(simple.begin(), simple.end(), img);
            q = static_cast<std::size_t>(it - simple.begin());
        }
        orbits.push_back(orbit);
    }
    return orbits;
}

RootDatum make_root_datum(std::string name, std::size_t rank, std::vector<SmallVec> roots,
                          std::vector<SmallVec> coroots, std::vector<std::size_t> simple,
                          SmallMatrix sigma, std::vector<RootLabel> labels, SmallMatrix weights) {
    RootDatum d;
    d.name = std::move(name);
    d.rank = rank;
    d.roots = std::move(roots);
    d.coroots = std::move(coroots);
    d.simple = std::move(simple);
    d.sigma = std::move(sigma);
    d.labels = std::move(labels);
    d.weights = std::move(weights);

    if (d.roots.size() != d.coroots.size()) throw std::invalid_argument("roots and coroots differ in number");
    if (!d.labels.empty() && d.labels.size() != d.roots.size()) throw std::invalid_argument("label count mismatch");
    if (d.sigma.rows() != rank || d.sigma.cols() != rank) throw std::invalid_argument("sigma has wrong shape");
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (d.roots[i].size() != rank || d.coroots[i].size() != rank)
            throw std::invalid_argument("root vector has wrong length");
        if (!d.root_index.emplace(d.roots[i], i).second) throw std::invalid_argument("duplicate root");
        if (!d.coroot_index.emplace(d.coroots[i], i).second) throw std::invalid_argument("duplicate coroot");
    }
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        if (d.pair(i, d.coroots[i]) != 2) throw std::invalid_argument("<alpha, alpha^v> != 2 for " + d.root_name(i));
        for (std::size_t j = 0; j < d.roots.size(); ++j) {
            long long c = d.pair(j, d.coroots[i]);
            SmallVec r = d.roots[j];
            for (std::size_t k = 0; k < rank; ++k) r[k] -= c * d.roots[i][k];
            if (!d.find_root(r)) throw std::invalid_argument("roots not stable under reflections");
        }
    }

    RatMatrix s = d.sigma.cast<Rational>();
    RatMatrix si = inverse(s);
    d.sigma_inv = SmallMatrix(rank, rank);
    for (std::size_t i = 0; i < rank; ++i)
        for (std::size_t j = 0; j < rank; ++j) {
            if (denominator(si(i, j)) != 1) throw std::invalid_argument("sigma is not unimodular");
            d.sigma_inv(i, j) = numerator(si(i, j)).convert_to<long long>();
        }

    // Heights: coordinates of each root in the basis of simple roots.
    RatMatrix basis(rank, d.simple.size());
    for (std::size_t p = 0; p < d.simple.size(); ++p)
        for (std::size_t k = 0; k < rank; ++k) basis(k, p) = d.roots[d.simple[p]][k];
    d.heights.resize(d.roots.size());
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        RatVec c = solve_rational(basis, to_rational(d.roots[i]));
        bool pos = true, neg = true;
        Rational h = 0;
        for (const auto& x : c) {
            if (denominator(x) != 1) throw std::invalid_argument("simple roots do not form a base");
            pos = pos && x >= 0;
            neg = neg && x <= 0;
            h += x;
        }
        if (!pos && !neg) throw std::invalid_argument("simple roots do not form a base");
        d.heights[i] = numerator(h).convert_to<long long>();
    }

    for (std::size_t i = 0; i < d.roots.size(); ++i) d.sigma_root(i);
    for (std::size_t p : d.simple) {
        std::size_t q = d.sigma_root(p);
        if (std::find(d.simple.begin(), d.simple.end(), q) == d.simple.end())
            throw std::invalid_argument("sigma does not preserve the simple roots");
    }
    return d;
}

// ---------------------------------------------------------------------------

namespace {

int sgn(int x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

std::vector<RootLabel> family_labels(Family f, int n) {
    std::vector<RootLabel> out;
    const bool gl = f == Family::A || f == Family::A2;
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (i != j) out.push_back({i, -j});
    if (gl) return out;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            out.push_back({i, j});
            out.push_back({-i, -j});
        }
    if (f == Family::C)
        for (int i = 1; i <= n; ++i) {
            out.push_back({i, i});
            out.push_back({-i, -i});
        }
    if (f == Family::B)
        for (int i = 1; i <= n; ++i) {
            out.push_back({i, 0});
            out.push_back({-i, 0});
        }
    return out;
}

// Character of a labelled root. GL-type: coordinates beta_1..beta_n. B: e_1..e_m.
// C, D, 2D: e_0, e_1..e_m where e_0 is the similitude cocharacter.
SmallVec label_character(Family f, int n, const RootLabel& l) {
    const bool gl = f == Family::A || f == Family::A2;
    const bool has_e0 = f == Family::C || f == Family::D || f == Family::D2;
    const std::size_t rank = gl ? n : (has_e0 ? n + 1 : n);
    const int off = has_e0 ? 0 : -1;
    SmallVec chi(rank, 0);
    chi[std::abs(l.a) + off] += sgn(l.a);
    if (l.b != 0) chi[std::abs(l.b) + off] += sgn(l.b);
    if (has_e0) chi[0] = (sgn(l.a) + sgn(l.b)) / 2;
    return chi;
}

SmallVec label_cocharacter(Family f, int n, const RootLabel& l) {
    const bool gl = f == Family::A || f == Family::A2;
    const bool has_e0 = f == Family::C || f == Family::D || f == Family::D2;
    const std::size_t rank = gl ? n : (has_e0 ? n + 1 : n);
    const int off = has_e0 ? 0 : -1;
    SmallVec v(rank, 0);
    if (l.b == 0) {
        v[std::abs(l.a) + off] = 2 * sgn(l.a);
    } else if (l.a == l.b) {
        v[std::abs(l.a) + off] = sgn(l.a);
    } else {
        v[std::abs(l.a) + off] += sgn(l.a);
        v[std::abs(l.b) + off] += sgn(l.b);
    }
    return v;
}

std::vector<RootLabel> simple_labels(Family f, int n) {
    std::vector<RootLabel> s;
    for (int i = 1; i < n; ++i) s.push_back({i, -(i + 1)});
    switch (f) {
        case Family::B: s.push_back({n, 0}); break;
        case Family::C: s.push_back({n, n}); break;
        case Family::D:
        case Family::D2: s.push_back({n - 1, n}); break;
        default: break;
    }
    return s;
}

SmallMatrix family_weights(Family f, int n) {
    switch (f) {
        case Family::A:
        case Family::A2: return SmallMatrix::identity(n);
        case Family::B: {
            SmallMatrix w(2 * n + 1, n);
            for (int p = 1; p <= n; ++p) {
                w(p - 1, p - 1) = 1;
                w(2 * n + 1 - p, p - 1) = -1;
            }
            return w;
        }
        default: {
            SmallMatrix w(2 * n, n + 1);
            for (int p = 1; p <= n; ++p) {
                w(p - 1, 0) = 1;
                w(p - 1, p) = 1;
                w(2 * n - p, p) = -1;
            }
            return w;
        }
    }
}

SmallMatrix family_sigma(Family f, int n) {
    switch (f) {
        case Family::A2: {
            SmallMatrix s(n, n);
            for (int i = 0; i < n; ++i) s(n - 1 - i, i) = -1;
            return s;
        }
        case Family::D2: {
            SmallMatrix s = SmallMatrix::identity(n + 1);
            s(n, 0) = -1;
            s(n, n) = -1;
            return s;
        }
        case Family::B: return SmallMatrix::identity(n);
        case Family::A: return SmallMatrix::identity(n);
        default: return SmallMatrix::identity(n + 1);
    }
}

std::string model_name(Family f, int n) {
    switch (f) {
        case Family::A: return "GL_" + std::to_string(n);
        case Family::B: return "SO_" + std::to_string(2 * n + 1);
        case Family::C: return "GSp_" + std::to_string(2 * n);
        case Family::D: return "GSO_" + std::to_string(2 * n);
        case Family::A2: return "GU_" + std::to_string(n);
        case Family::D2: return "GSO^*_" + std::to_string(2 * n);
    }
    return "?";
}

SmallVec row_times(const SmallVec& row, const IntMatrix& m) {
    SmallVec out(m.cols(), 0);
    for (std::size_t j = 0; j < m.cols(); ++j) {
        BigInt s = 0;
        for (std::size_t k = 0; k < row.size(); ++k) s += row[k] * m(k, j);
        out[j] = s.convert_to<long long>();
    }
    return out;
}

}  // namespace

RootDatum build_root_datum(Family f, int n, Isogeny iso) {
    if (n < min_rank(f))
        throw ConfigError("rank " + std::to_string(n) + " is below the minimum " + std::to_string(min_rank(f)) +
                          " for type " + family_name(f));
    const bool gl = f == Family::A || f == Family::A2;
    const bool has_e0 = f == Family::C || f == Family::D || f == Family::D2;
    const std::size_t rank = gl ? n : (has_e0 ? n + 1 : n);

    std::vector<RootLabel> labels = family_labels(f, n);
    std::vector<SmallVec> roots, coroots;
    for (const auto& l : labels) {
        roots.push_back(label_character(f, n, l));
        coroots.push_back(label_cocharacter(f, n, l));
    }
    std::vector<std::size_t> simple;
    for (const auto& l : simple_labels(f, n))
        simple.push_back(static_cast<std::size_t>(std::find(labels.begin(), labels.end(), l) - labels.begin()));

    RootDatum d = make_root_datum(model_name(f, n), rank, roots, coroots, simple, family_sigma(f, n), labels,
                                  family_weights(f, n));
    switch (iso) {
        case Isogeny::Model: return d;
        case Isogeny::Adjoint: return adjoint_quotient(d);
        case Isogeny::SimplyConnected: return simply_connected_cover(d);
    }
    return d;
}

IntMatrix sc_sublattice(const RootDatum& d) {
    IntMatrix gens(d.rank, d.coroots.size());
    for (std::size_t j = 0; j < d.coroots.size(); ++j)
        for (std::size_t i = 0; i < d.rank; ++i) gens(i, j) = d.coroots[j][i];
    return lattice_basis(gens);
}

IntMatrix center_cocharacters(const RootDatum& d) {
    IntMatrix r(d.roots.size(), d.rank);
    for (std::size_t i = 0; i < d.roots.size(); ++i)
        for (std::size_t k = 0; k < d.rank; ++k) r(i, k) = d.roots[i][k];
    return integer_kernel(r);
}

RootDatum simply_connected_cover(const RootDatum& d) {
    IntMatrix b = sc_sublattice(d);
    const std::size_t k = b.cols();
    std::vector<SmallVec> roots, coroots;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        roots.push_back(row_times(d.roots[i], b));
        auto y = solve_integer(b, to_big(d.coroots[i]));
        if (!y) throw std::logic_error("coroot outside the coroot lattice");
        coroots.push_back(to_small(*y));
    }
    IntMatrix sb = to_big(d.sigma) * b;
    SmallMatrix sigma(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto y = solve_integer(b, sb.column(j));
        if (!y) throw std::logic_error("sigma does not preserve the coroot lattice");
        for (std::size_t i = 0; i < k; ++i) sigma(i, j) = (*y)[i].convert_to<long long>();
    }
    SmallMatrix weights;
    if (!d.weights.empty()) weights = to_small(to_big(d.weights) * b);
    return make_root_datum(d.name + "^sc", k, roots, coroots, d.simple, sigma, d.labels, weights);
}

RootDatum adjoint_quotient(const RootDatum& d) {
    IntMatrix c = center_cocharacters(d);
    if (c.cols() == 0) {
        RootDatum a = d;
        a.name = d.name + "^ad";
        return a;
    }
    SmithForm s = smith_normal_form(c);
    const std::size_t z = c.cols();
    const std::size_t k = d.rank - z;
    std::vector<SmallVec> roots, coroots;
    for (std::size_t i = 0; i < d.roots.size(); ++i) {
        SmallVec full = row_times(d.roots[i], s.u_inv);
        for (std::size_t t = 0; t < z; ++t)
            if (full[t] != 0) throw std::logic_error("root does not vanish on the center");
        roots.emplace_back(full.begin() + z, full.end());
        IntVec cv = s.u * to_big(d.coroots[i]);
        coroots.push_back(to_small(IntVec(cv.begin() + z, cv.end())));
    }
    IntMatrix sig = s.u * to_big(d.sigma) * s.u_inv;
    SmallMatrix sigma(k, k);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) sigma(i, j) = sig(z + i, z + j).convert_to<long long>();
    return make_root_datum(d.name + "^ad", k, roots, coroots, d.simple, sigma, d.labels);
}

RootDatum product(const RootDatum& a, const RootDatum& b) {
    const std::size_t r = a.rank + b.rank;
    std::vector<SmallVec> roots, coroots;
    std::vector<RootLabel> labels;
    auto embed = [r](const SmallVec& v, std::size_t off) {
        SmallVec out(r, 0);
        for (std::size_t i = 0; i < v.size(); ++i) out[off + i] = v[i];
        return out;
    };
    for (std::size_t i = 0; i < a.roots.size(); ++i) {
        roots.push_back(embed(a.roots[i], 0));
        coroots.push_back(embed(a.coroots[i], 0));
    }
    for (std::size_t i = 0; i < b.roots.size(); ++i) {
        roots.push_back(embed(b.roots[i], a.rank));
        coroots.push_back(embed(b.coroots[i], a.rank));
    }
    std::vector<std::size_t> simple = a.simple;
    for (std::size_t p : b.simple) simple.push_back(p + a.roots.size());
    SmallMatrix sigma(r, r);
    for (std::size_t i = 0; i < a.rank; ++i)
        for (std::size_t j = 0; j < a.rank; ++j) sigma(i, j) = a.sigma(i, j);
    for (std::size_t i = 0; i < b.rank; ++i)
        for (std::size_t j = 0; j < b.rank; ++j) sigma(a.rank + i, a.rank + j) = b.sigma(i, j);
    return make_root_datum(a.name + " x " + b.name, r, roots, coroots, simple, sigma);
}

RootDatum restriction_of_scalars(const RootDatum& d, int k) {
    if (k < 1) throw ConfigError("restriction of scalars needs degree >= 1");
    RootDatum p = d;
    for (int i = 1; i < k; ++i) p = product(p, d);
    const std::size_t r = d.rank;
    SmallMatrix sigma(r * k, r * k);
    // (x_1, ..., x_k) -> (sigma(x_k), x_1, ..., x_{k-1})
    for (int b = 0; b + 1 < k; ++b)
        for (std::size_t i = 0; i < r; ++i) sigma((b + 1) * r + i, b * r + i) = 1;
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j) sigma(i, (k - 1) * r + j) = d.sigma(i, j);
    return make_root_datum("Res_" + std::to_string(k) + "(" + d.name + ")", r * k, p.roots, p.coroots, p.simple,
                           sigma);
}

RootDatum sl2_squared_mod_mu2() {
    // Basis f1 = (e1 + e2)/2, f2 = (e1 - e2)/2 of X_*(T); e1 = f1 + f2, e2 = f1 - f2.
    std::vector<SmallVec> roots = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    std::vector<SmallVec> coroots = {{1, 1}, {-1, -1}, {1, -1}, {-1, 1}};
    return make_root_datum("(SL_2 x SL_2)/mu_2", 2, roots, coroots, {0, 2}, SmallMatrix::identity(2));
}

FinAbGroup fundamental_group(const RootDatum& d) { return FinAbGroup::quotient(d.rank, sc_sublattice(d)); }

FinAbGroup fundamental_group_coinvariants(const RootDatum& d) {
    IntMatrix rel = sc_sublattice(d).hcat(to_big(d.sigma) - IntMatrix::identity(d.rank));
    return FinAbGroup::quotient(d.rank, rel);
}

FinAbGroup adjoint_fundamental_group(const RootDatum& d, bool sigma_coinvariants) {
    IntMatrix rel = sc_sublattice(d).hcat(center_cocharacters(d));
    if (sigma_coinvariants) rel = rel.hcat(to_big(d.sigma) - IntMatrix::identity(d.rank));
    return FinAbGroup::quotient(d.rank, rel);
}

AbelianMap center_map_on_coinvariants(const RootDatum& d) {
    IntMatrix c = center_cocharacters(d);
    const std::size_t z = c.cols();
    IntMatrix sc = to_big(d.sigma) * c;
    IntMatrix sz(z, z);
    for (std::size_t j = 0; j < z; ++j) {
        auto y = solve_integer(c, sc.column(j));
        if (!y) throw std::logic_error("sigma does not preserve the center");
        for (std::size_t i = 0; i < z; ++i) sz(i, j) = (*y)[i];
    }
    FinAbGroup source = FinAbGroup::quotient(z, sz - IntMatrix::identity(z));
    return AbelianMap(source, fundamental_group_coinvariants(d), c);
}

SmallMatrix cartan_matrix(const RootDatum& d) {
    const std::size_t l = d.simple.size();
    SmallMatrix m(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) m(i, j) = d.pair(d.simple[i], d.coroots[d.simple[j]]);
    return m;
}

}  // namespace ctori
