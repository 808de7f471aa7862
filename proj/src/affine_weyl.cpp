// SPDX-License-Identifier: MIT
#include "ctori/affine_weyl.hpp"

#include <algorithm>
#include <set>

namespace ctori {

ExtAffineElement multiply(const ExtAffineElement& a, const ExtAffineElement& b) {
    SmallVec l = a.w * b.lambda;
    for (std::size_t i = 0; i < l.size(); ++i) l[i] += a.lambda[i];
    return {l, a.w * b.w};
}

ExtAffineElement inverse(const RootDatum& d, const ExtAffineElement& x) {
    WeylElement wi = weyl_inverse(d, x.w);
    SmallVec l = wi * x.lambda;
    for (auto& v : l) v = -v;
    return {l, wi};
}

ExtAffineElement sigma_twist(const RootDatum& d, const ExtAffineElement& x) {
    return {d.sigma * x.lambda, sigma_twist(d, x.w)};
}

ExtAffineElement sigma_conjugate(const RootDatum& d, const ExtAffineElement& g, const ExtAffineElement& x) {
    return multiply(multiply(inverse(d, g), x), sigma_twist(d, g));
}

ExtAffineElement translation(const SmallVec& lambda) {
    return {lambda, SmallMatrix::identity(lambda.size())};
}

ExtAffineElement finite(const RootDatum& d, const WeylElement& w) { return {SmallVec(d.rank, 0), w}; }

int twist_period(const RootDatum& d, const WeylElement& w) {
    const SmallMatrix id = SmallMatrix::identity(d.rank);
    const SmallMatrix f = w * d.sigma;
    SmallMatrix fp = f, sp = d.sigma;
    for (int k = 1; k <= 10000; ++k) {
        if (fp == id && sp == id) return k;
        fp = fp * f;
        sp = sp * d.sigma;
    }
    throw std::logic_error("twist_period: w sigma has no finite order");
}

namespace {

// Translation part of the k-fold twisted product.
SmallVec twisted_translation_sum(const RootDatum& d, const ExtAffineElement& x, int k) {
    const SmallMatrix f = x.w * d.sigma;
    SmallVec acc(d.rank, 0), cur = x.lambda;
    for (int i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < d.rank; ++j) acc[j] += cur[j];
        cur = f * cur;
    }
    return acc;
}

bool dominant(const RootDatum& d, const SmallVec& v) {
    for (std::size_t s : d.simple)
        if (d.pair(s, v) < 0) return false;
    return true;
}

}  // namespace

RatVec dominant_representative(const RootDatum& d, const RatVec& v, std::size_t guard) {
    // Scale to an integral vector so the orbit search stays exact.
    BigInt den = 1;
    for (const auto& x : v) den = boost::multiprecision::lcm(den, denominator(x));
    SmallVec iv(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) { Rational s = v[i] * den; iv[i] = numerator(s).convert_to<long long>(); }
    std::set<SmallVec> seen{iv};
    std::vector<SmallVec> queue{iv};
    for (std::size_t k = 0; k < queue.size(); ++k) {
        const SmallVec cur = queue[k];
        if (dominant(d, cur)) {
            RatVec out(cur.size());
            for (std::size_t i = 0; i < cur.size(); ++i) out[i] = Rational(cur[i]) / den;
            return out;
        }
        for (std::size_t s : d.simple) {
            long long c = d.pair(s, cur);
            if (c == 0) continue;
            SmallVec next = cur;
            for (std::size_t i = 0; i < next.size(); ++i) next[i] -= c * d.coroots[s][i];
            if (seen.insert(next).second) {
                if (seen.size() > guard) throw ResourceLimit("W-orbit search exceeded its guard");
                queue.push_back(next);
            }
        }
    }
    throw std::logic_error("orbit without a dominant member");
}

RatVec newton_point(const RootDatum& d, const ExtAffineElement& x, int multiplier) {
    if (multiplier < 1) throw std::invalid_argument("newton_point: multiplier must be positive");
    const int k = twist_period(d, x.w) * multiplier;
    SmallVec mu = twisted_translation_sum(d, x, k);
    RatVec nu(d.rank);
    for (std::size_t i = 0; i < d.rank; ++i) nu[i] = Rational(mu[i]) / k;
    return dominant_representative(d, nu);
}

bool is_central(const RootDatum& d, const RatVec& v) {
    for (std::size_t i = 0; i < d.num_roots(); ++i)
        if (d.pair(i, v) != 0) return false;
    return true;
}

bool is_basic(const RootDatum& d, const ExtAffineElement& x) { return is_central(d, newton_point(d, x)); }

std::optional<Rational> central_slope(const RootDatum& d, const RatVec& v) {
    if (d.weights.empty()) return std::nullopt;
    std::optional<Rational> s;
    for (std::size_t p = 0; p < d.weights.rows(); ++p) {
        Rational e = 0;
        for (std::size_t k = 0; k < d.rank; ++k) e += d.weights(p, k) * v[k];
        if (s && *s != e) return std::nullopt;
        s = e;
    }
    return s;
}

IntVec kottwitz_class(const RootDatum& d, const ExtAffineElement& x) {
    return fundamental_group_coinvariants(d).project(to_big(x.lambda));
}

FinAbGroup lifts_mod_kernel(const RootDatum& d, const WeylElement& w) { return coinvariants(to_big(w * d.sigma)); }

AbelianMap beta_map(const RootDatum& d, const WeylElement& w) {
    IntMatrix b = sc_sublattice(d);
    IntMatrix f = to_big(w * d.sigma);
    IntMatrix fb = f * b;
    const std::size_t k = b.cols();
    IntMatrix fsc(k, k);
    for (std::size_t j = 0; j < k; ++j) {
        auto y = solve_integer(b, fb.column(j));
        if (!y) throw std::logic_error("w sigma does not preserve the coroot lattice");
        for (std::size_t i = 0; i < k; ++i) fsc(i, j) = (*y)[i];
    }
    return AbelianMap(coinvariants(fsc), coinvariants(f), b);
}

ExtAffineElement from_monomial(const RootDatum& d, const MonomialMatrix& m) {
    if (d.weights.empty()) throw std::invalid_argument("from_monomial: datum has no faithful representation");
    const std::size_t n = d.weights.rows();
    if (m.perm.size() != n || m.exps.size() != n) throw std::invalid_argument("from_monomial: size mismatch");
    IntMatrix e = to_big(d.weights);
    IntVec delta(n, 0);
    for (std::size_t p = 0; p < n; ++p) delta[m.perm[p]] = m.exps[p];
    auto lambda = solve_integer(e, delta);
    if (!lambda) throw std::invalid_argument("from_monomial: diagonal part is not a cocharacter");
    SmallMatrix w(d.rank, d.rank);
    for (std::size_t k = 0; k < d.rank; ++k) {
        IntVec mu = e.column(k);
        IntVec nu(n, 0);
        for (std::size_t p = 0; p < n; ++p) nu[m.perm[p]] = mu[p];
        auto x = solve_integer(e, nu);
        if (!x) throw std::invalid_argument("from_monomial: permutation does not normalise the torus");
        for (std::size_t i = 0; i < d.rank; ++i) w(i, k) = (*x)[i].convert_to<long long>();
    }
    if (!is_weyl_element(d, w)) throw std::invalid_argument("from_monomial: permutation part is not in W");
    return {to_small(*lambda), w};
}

namespace {

// Position index of the basis vector e_p in the faithful representation.
struct Positions {
    Family f;
    int n;
    std::size_t size() const {
        switch (f) {
            case Family::A:
            case Family::A2: return n;
            case Family::B: return 2 * n + 1;
            default: return 2 * n;
        }
    }
    std::size_t operator()(int p) const {
        switch (f) {
            case Family::A:
            case Family::A2: return p - 1;
            case Family::B: return p > 0 ? p - 1 : (p == 0 ? n : 2 * n + 1 + p);
            default: return p > 0 ? p - 1 : 2 * n + p;
        }
    }
};

}  // namespace

MonomialMatrix coxeter_lift_matrix(Family f, int n, int kappa) {
    auto ks = kappa_range(f, n);
    if (std::find(ks.begin(), ks.end(), kappa) == ks.end())
        throw ConfigError("kappa " + std::to_string(kappa) + " is not admissible for type " + family_name(f) +
                          " and rank " + std::to_string(n));
    Positions pos{f, n};
    MonomialMatrix m{std::vector<std::size_t>(pos.size()), std::vector<long long>(pos.size(), 0)};
    auto set = [&](int from, int to, long long e) {
        m.perm[pos(from)] = pos(to);
        m.exps[pos(from)] = e;
    };
    switch (f) {
        case Family::A:
            for (int i = 1; i < n; ++i) set(i, i + 1, 0);
            set(n, 1, kappa);
            break;
        case Family::A2: {
            const int h = n / 2;
            for (int i = 1; i <= h; ++i) set(i, i + 1, 0);
            set(h + 1, 1, kappa);
            for (int i = h + 2; i <= n; ++i) set(i, i, 0);
            break;
        }
        case Family::C:
            for (int i = 1; i < n; ++i) {
                set(i, i + 1, kappa);
                set(-i, -(i + 1), 0);
            }
            set(n, -1, kappa);
            set(-n, 1, 0);
            break;
        case Family::B:
            for (int i = 1; i < n; ++i) {
                set(i, i + 1, 0);
                set(-i, -(i + 1), 0);
            }
            set(n, -1, kappa);
            set(-n, 1, -kappa);
            set(0, 0, 0);
            break;
        case Family::D: {
            const long long twist = kappa == 2 ? 1 : 0;  // kappa = 2 multiplies by e_0(uniformizer)
            const long long tail = kappa == 1 ? 1 : 0;
            for (int i = 1; i + 1 < n; ++i) {
                set(i, i + 1, twist);
                set(-i, -(i + 1), 0);
            }
            set(n - 1, -1, twist);
            set(-(n - 1), 1, 0);
            set(n, -n, twist + tail);
            set(-n, n, -tail);
            break;
        }
        case Family::D2:
            for (int i = 1; i < n; ++i) {
                set(i, i + 1, kappa);
                set(-i, -(i + 1), 0);
            }
            set(n, 1, kappa);
            set(-n, -1, 0);
            break;
    }
    return m;
}

ExtAffineElement coxeter_lift(const RootDatum& model, Family f, int n, int kappa) {
    return from_monomial(model, coxeter_lift_matrix(f, n, kappa));
}

}  // namespace ctori
