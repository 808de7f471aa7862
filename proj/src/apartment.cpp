// SPDX-License-Identifier: MIT
#include "ctori/apartment.hpp"

#include <algorithm>

namespace ctori {

namespace {

RatVec simple_pairings(const RootDatum& d, const RatVec& v) {
    RatVec y(d.simple.size());
    for (std::size_t p = 0; p < d.simple.size(); ++p) y[p] = d.pair(d.simple[p], v);
    return y;
}

// Representative in the span of the simple coroots with prescribed simple-root pairings.
RatVec from_adjoint(const RootDatum& d, const RatVec& y) {
    SmallMatrix cartan = cartan_matrix(d);
    const std::size_t l = d.simple.size();
    RatMatrix a(l, l);
    for (std::size_t i = 0; i < l; ++i)
        for (std::size_t j = 0; j < l; ++j) a(i, j) = cartan(i, j);
    RatVec c = solve_rational(a, y);
    RatVec x(d.rank, 0);
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t k = 0; k < d.rank; ++k) x[k] += c[j] * d.coroots[d.simple[j]][k];
    return x;
}

}  // namespace

ApartmentPoint project_to_adjoint(const RootDatum& d, const RatVec& cochar) {
    RatVec y = simple_pairings(d, cochar);
    return {from_adjoint(d, y), y};
}

ApartmentPoint fixed_point(const RootDatum& d, const ExtAffineElement& x) {
    // Unknown x = sum_j c_j alpha_j^v; impose <alpha_i, x - F x> = <alpha_i, lambda> for simple alpha_i.
    const SmallMatrix f = x.w * d.sigma;
    const std::size_t l = d.simple.size();
    RatMatrix a(l, l);
    RatVec rhs(l);
    for (std::size_t j = 0; j < l; ++j) {
        const SmallVec& cj = d.coroots[d.simple[j]];
        const SmallVec fcj = f * cj;
        for (std::size_t i = 0; i < l; ++i) a(i, j) = d.pair(d.simple[i], cj) - d.pair(d.simple[i], fcj);
    }
    for (std::size_t i = 0; i < l; ++i) rhs[i] = d.pair(d.simple[i], x.lambda);
    if (rank(a) != l) throw NotElliptic("w sigma has eigenvalue 1 on the adjoint apartment");
    RatVec c = solve_rational(a, rhs);
    RatVec v(d.rank, 0);
    for (std::size_t j = 0; j < l; ++j)
        for (std::size_t k = 0; k < d.rank; ++k) v[k] += c[j] * d.coroots[d.simple[j]][k];
    return project_to_adjoint(d, v);
}

bool is_fixed(const RootDatum& d, const ExtAffineElement& x, const ApartmentPoint& p) {
    RatVec img(d.rank, 0);
    const SmallMatrix f = x.w * d.sigma;
    for (std::size_t i = 0; i < d.rank; ++i) {
        img[i] = x.lambda[i];
        for (std::size_t j = 0; j < d.rank; ++j) img[i] += Rational(f(i, j)) * p.coords[j];
    }
    return simple_pairings(d, img) == p.adjoint;
}

Rational mp_bound(const RootDatum& d, std::size_t root, const ApartmentPoint& x) { return d.pair(root, x.coords); }

std::vector<std::size_t> cross_section_roots(const RootDatum& d, const WeylElement& c) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < d.num_roots(); ++i) {
        if (!d.is_positive(i)) continue;
        std::size_t j = act_on_root(d, c, i);
        if (!d.is_positive(j)) out.push_back(j);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<RootLabel> cross_section_labels(Family f, int n) {
    std::vector<RootLabel> out;
    switch (f) {
        case Family::A:
            for (int i = 1; i < n; ++i) out.push_back({i + 1, -1});
            break;
        case Family::A2:
            for (int i = 1; i <= n / 2; ++i) out.push_back({i + 1, -1});
            break;
        case Family::B:
        case Family::C:
        case Family::D:
        case Family::D2:
            for (int i = 2; i <= n; ++i) out.push_back({i, -1});
            if (f == Family::B) out.push_back({-1, 0});
            if (f == Family::C) out.push_back({-1, -1});
            if (f == Family::D) out.push_back({-1, -n});
            break;
    }
    return out;
}

std::vector<Rational> cross_section_bound_table(Family f, int n, int kappa) {
    RootDatum d = build_root_datum(f, n);
    ApartmentPoint x = fixed_point(d, coxeter_lift(d, f, n, kappa));
    std::vector<Rational> out;
    for (const auto& l : cross_section_labels(f, n)) out.push_back(mp_bound(d, d.root_by_label(l), x));
    return out;
}

ReferenceTable reference_bound_table(Family f, int n, int kappa) {
    auto ks = kappa_range(f, n);
    if (std::find(ks.begin(), ks.end(), kappa) == ks.end())
        throw ConfigError("kappa " + std::to_string(kappa) + " is not admissible for type " + family_name(f));
    ReferenceTable t;
    auto& v = t.values;
    switch (f) {
        case Family::A:
            for (int i = 1; i < n; ++i) v.push_back(Rational(-kappa * i, n));
            break;
        case Family::C:
            for (int i = 1; i <= n; ++i) v.push_back(Rational(kappa * i, 2));
            break;
        case Family::B:
            v.assign(n - 1, Rational(0));
            v.push_back(Rational(kappa, 2));
            break;
        case Family::D:
            if (kappa == 2) {
                for (int i = 1; i <= n - 2; ++i) v.push_back(Rational(i, 2));
                v.push_back(Rational(n - 2, 4));
                v.push_back(Rational(n, 4));
            } else {
                v.assign(n - 1, Rational(0));
                v.push_back(Rational(kappa));
                t.integral = kappa == 1;
            }
            break;
        case Family::A2:
            v.assign(n / 2, Rational(0));
            t.integral = kappa == 1;
            break;
        case Family::D2:
            for (int i = 1; i < n; ++i) v.push_back(Rational(kappa * i, 2));
            break;
    }
    return t;
}

Rational ceil(const Rational& r) {
    BigInt q = numerator(r) / denominator(r);  // truncates toward zero
    if (q * denominator(r) < numerator(r)) ++q;
    return Rational(q);
}

bool table_matches(const std::vector<Rational>& computed, const ReferenceTable& ref) {
    if (computed.size() != ref.values.size()) return false;
    for (std::size_t i = 0; i < computed.size(); ++i)
        if ((ref.integral ? ceil(computed[i]) : computed[i]) != ref.values[i]) return false;
    return true;
}

RatVec reference_fixed_point(Family f, int n, int kappa) {
    auto ks = kappa_range(f, n);
    if (std::find(ks.begin(), ks.end(), kappa) == ks.end())
        throw ConfigError("kappa " + std::to_string(kappa) + " is not admissible for type " + family_name(f));
    const bool has_e0 = f == Family::C || f == Family::D || f == Family::D2;
    const std::size_t rank = has_e0 ? n + 1 : n;
    const int off = has_e0 ? 0 : -1;  // coordinate of e_i is i + off
    RatVec x(rank, 0);
    if (kappa == 0) return x;
    switch (f) {
        case Family::A:
            for (int i = 1; i <= n; ++i) x[i - 1] = Rational(-(i - 1) * kappa, n);
            break;
        case Family::C:
            for (int i = 1; i <= n; ++i) x[i + off] = Rational(-n, 4) + Rational(i - 1, 2);
            break;
        case Family::B:
            for (int i = 1; i <= n; ++i) x[i + off] = Rational(-1, 2);
            break;
        case Family::D:
            if (kappa == 1) {
                x[n + off] = Rational(-1, 2);
            } else {
                for (int i = 1; i < n; ++i) x[i + off] = Rational(-(n - 1), 4) + Rational(i - 1, 2);
                x[n + off] = Rational(-1, 4);
            }
            break;
        case Family::A2: {
            const int m = n / 2;
            for (int i = 1; i <= m; ++i) x[i - 1] = Rational(1, 2);
            for (int i = m + 2; i <= n; ++i) x[i - 1] = Rational(-1, 2);
            break;
        }
        case Family::D2:
            for (int i = 1; i <= n; ++i) x[i + off] = Rational(-n, 4) + Rational(i, 2);
            break;
    }
    return x;
}

}  // namespace ctori
