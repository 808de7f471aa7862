// SPDX-License-Identifier: MIT
#include "ctori/isocrystal.hpp"

#include <algorithm>
#include <numeric>
#include <tuple>

namespace ctori {

TropicalValue TropicalValue::operator+(const TropicalValue& o) const {
    if (!bound) return o;
    if (!o.bound) return *this;
    return {std::min(*bound, *o.bound)};
}

TropicalValue TropicalValue::operator*(const TropicalValue& o) const {
    if (!bound || !o.bound) return infinity();
    return {*bound + *o.bound};
}

NewtonPolygon newton_polygon(const std::vector<std::pair<long, std::optional<Rational>>>& valuations) {
    long n = -1;
    for (const auto& [j, v] : valuations) n = std::max(n, j);
    std::vector<std::pair<long, Rational>> pts;
    for (const auto& [j, v] : valuations)
        if (v) pts.emplace_back(n - j, *v);
    if (pts.empty()) throw std::invalid_argument("newton_polygon: every valuation is infinite");
    std::sort(pts.begin(), pts.end());
    // Keep the lowest point per abscissa, then run the lower-hull monotone chain.
    std::vector<std::pair<long, Rational>> uniq;
    for (const auto& p : pts)
        if (uniq.empty() || uniq.back().first != p.first) uniq.push_back(p);
    NewtonPolygon out;
    auto& h = out.vertices;
    for (const auto& p : uniq) {
        while (h.size() >= 2) {
            const auto& a = h[h.size() - 2];
            const auto& b = h.back();
            // Drop b if it lies on or above the segment a-p.
            const Rational lhs = (b.second - a.second) * Rational(p.first - a.first);
            const Rational rhs = (p.second - a.second) * Rational(b.first - a.first);
            if (lhs >= rhs)
                h.pop_back();
            else
                break;
        }
        h.push_back(p);
    }
    for (std::size_t i = 1; i < h.size(); ++i) {
        const long len = h[i].first - h[i - 1].first;
        const Rational s = (h[i].second - h[i - 1].second) / Rational(len);
        for (long t = 0; t < len; ++t) out.slopes.push_back(s);
    }
    return out;
}

SeriesVec PhiMatrix::apply(const SeriesVec& v) const {
    const unsigned times = q_exponent * frobenius_power;
    SeriesVec sv(n);
    for (std::size_t j = 0; j < n; ++j) sv[j] = v[j].frobenius(times);
    SeriesVec out(n);
    for (std::size_t i = 0; i < n; ++i) {
        Series acc = at(i, 0) * sv[0];
        for (std::size_t j = 1; j < n; ++j) acc = acc + at(i, j) * sv[j];
        out[i] = std::move(acc);
    }
    return out;
}

std::vector<Series> cyclic_relation(const PhiMatrix& m, const SeriesVec& v) {
    const std::size_t n = m.n;
    if (v.size() != n) throw std::invalid_argument("cyclic_relation: vector has the wrong length");
    std::vector<SeriesVec> it{v};
    for (std::size_t i = 0; i < n; ++i) it.push_back(m.apply(it.back()));

    // Augmented system [phi^0 v ... phi^(n-1) v | phi^n v].
    std::vector<std::vector<Series>> a(n, std::vector<Series>(n + 1));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c <= n; ++c) a[r][c] = it[c][r];

    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r) {
            auto v_r = a[r][c].valuation();
            if (v_r && (piv == n || *v_r < *a[piv][c].valuation())) piv = r;
        }
        if (piv == n) throw NotCyclic("iterates of v are dependent at the working precision");
        std::swap(a[c], a[piv]);
        const Series inv = a[c][c].inverse();
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c].is_zero()) continue;
            const Series factor = a[r][c] * inv;
            for (std::size_t k = c; k <= n; ++k) a[r][k] = a[r][k] - factor * a[c][k];
        }
    }
    std::vector<Series> x(n);
    for (std::size_t c = n; c-- > 0;) {
        Series s = a[c][n];
        for (std::size_t k = c + 1; k < n; ++k) s = s - a[c][k] * x[k];
        x[c] = s * a[c][c].inverse();
    }
    return x;
}

PhiMatrix companion_matrix(const GaloisField* f, unsigned q_exponent, std::size_t n, long k, long precision) {
    PhiMatrix m;
    m.n = n;
    m.q_exponent = q_exponent;
    m.entries.assign(n * n, Series(f, precision));
    for (std::size_t i = 0; i + 1 < n; ++i) m.at(i + 1, i) = Series::monomial(f, 1, 0, precision);
    m.at(0, n - 1) = Series::monomial(f, 1, k, precision);
    return m;
}

PhiMatrix conjugate_by(const PhiMatrix& m, const std::vector<Series>& h) {
    const std::size_t n = m.n;
    const GaloisField* f = m.entries.front().field();
    const long prec = m.entries.front().precision();
    // Invert h by Gauss-Jordan with minimal-valuation pivots.
    std::vector<std::vector<Series>> a(n, std::vector<Series>(2 * n, Series(f, prec)));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) a[i][j] = h[i * n + j];
        a[i][n + i] = Series::monomial(f, 1, 0, prec);
    }
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t piv = n;
        for (std::size_t r = c; r < n; ++r) {
            auto vr = a[r][c].valuation();
            if (vr && (piv == n || *vr < *a[piv][c].valuation())) piv = r;
        }
        if (piv == n) throw std::invalid_argument("conjugate_by: h is singular");
        std::swap(a[c], a[piv]);
        const Series inv = a[c][c].inverse();
        for (auto& x : a[c]) x = x * inv;
        for (std::size_t r = 0; r < n; ++r) {
            if (r == c || a[r][c].is_zero()) continue;
            const Series factor = a[r][c];
            for (std::size_t k = 0; k < 2 * n; ++k) a[r][k] = a[r][k] - factor * a[c][k];
        }
    }
    const unsigned times = m.q_exponent * m.frobenius_power;
    PhiMatrix out = m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Series acc(f, prec);
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t l = 0; l < n; ++l)
                    acc = acc + a[i][n + k] * m.at(k, l) * h[l * n + j].frobenius(times);
            out.at(i, j) = acc;
        }
    return out;
}

PhiMatrix random_conjugate(const PhiMatrix& m, std::mt19937_64& rng) {
    const std::size_t n = m.n;
    const GaloisField* f = m.entries.front().field();
    const long prec = m.entries.front().precision();
    const unsigned times = m.q_exponent * m.frobenius_power;
    PhiMatrix out = m;
    if (n == 0) return out;
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    // For h = I + t e_ij: h^-1 M sigma(h) subtracts t row_j from row_i, then adds sigma(t) col_i to col_j.
    const std::size_t ops = n > 1 ? 2 * n * n : 0;
    for (std::size_t op = 0; op < ops; ++op) {
        const std::size_t i = pick(rng);
        std::size_t j = pick(rng);
        if (i == j) j = (j + 1) % n;
        std::vector<Series::Elem> poly(3);
        for (auto& c : poly) c = f->random(rng);
        const Series tp = Series::from_coeffs(f, 0, std::move(poly), prec);
        const Series st = tp.frobenius(times);
        for (std::size_t c = 0; c < n; ++c) out.at(i, c) = out.at(i, c) - tp * out.at(j, c);
        for (std::size_t r = 0; r < n; ++r) out.at(r, j) = out.at(r, j) + out.at(r, i) * st;
    }
    // Diagonal of units d: row_i scaled by d_i^-1, column_i by sigma(d_i).
    for (std::size_t i = 0; i < n; ++i) {
        const Series d = Series::random(f, prec, rng, true);
        const Series di = d.inverse(), sd = d.frobenius(times);
        for (std::size_t c = 0; c < n; ++c) out.at(i, c) = di * out.at(i, c);
        for (std::size_t r = 0; r < n; ++r) out.at(r, i) = out.at(r, i) * sd;
    }
    return out;
}

long default_precision(int n, long max_denominator) { return 4 * (n + max_denominator); }

namespace {

// True when ord(x) >= bound is certified: either the valuation is known, or x vanishes to a precision >= bound.
bool certified_at_least(const Series& x, const Rational& bound, bool& certified) {
    if (auto v = x.valuation()) {
        certified = true;
        return Rational(*v) >= bound;
    }
    certified = Rational(x.precision()) >= bound;
    return true;
}

}  // namespace

LemmaReport verify_isocrystal_lemma(int n, int k, std::size_t trials, std::uint64_t seed, std::uint64_t q,
                                    long precision, unsigned residue_degree) {
    if (n < 1 || k < 0 || (n > 1 && k >= n) || std::gcd(n, k) != 1)
        throw ConfigError("slope k/n must satisfy 0 <= k < n with gcd(k, n) = 1");
    std::uint64_t p = 0;
    unsigned r = 0;
    try {
        std::tie(p, r) = prime_power(q);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    const auto field = GaloisField::get(p, r * residue_degree);
    const GaloisField* f = field.get();
    LemmaReport rep;
    rep.n = n;
    rep.k = k;
    rep.q = q;
    rep.trials = trials;
    const long base_prec = precision > 0 ? precision : default_precision(n, n);
    const Rational slope(k, n);

    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + t);
        bool done = false;
        for (long prec = base_prec; !done && prec <= 4 * base_prec; prec *= 2) {
            if (prec != base_prec) ++rep.precision_raises;
            std::mt19937_64 trial_rng = rng;
            PhiMatrix m = random_conjugate(companion_matrix(f, r, static_cast<std::size_t>(n), k, prec), trial_rng);
            std::vector<Series> a;
            for (int attempt = 0;; ++attempt) {
                SeriesVec v(static_cast<std::size_t>(n));
                for (auto& x : v) x = Series::random(f, prec, trial_rng);
                try {
                    a = cyclic_relation(m, v);
                    break;
                } catch (const NotCyclic&) {
                    ++rep.resampled;
                    if (attempt > 100) throw;
                }
            }
            bool ok = true, certified = true;
            std::vector<std::pair<long, std::optional<Rational>>> vals{{n, Rational(0)}};
            for (int i = 0; i < n; ++i) {
                bool c = false;
                const Rational bound = Rational(n - i) * slope;
                if (!certified_at_least(a[static_cast<std::size_t>(i)], bound, c)) ok = false;
                certified = certified && c;
                auto v = a[static_cast<std::size_t>(i)].valuation();
                vals.emplace_back(i, v ? std::optional<Rational>(Rational(*v)) : std::nullopt);
            }
            if (!a[0].valuation()) certified = false;
            if (!certified && ok) continue;
            if (ok) {
                const NewtonPolygon np = newton_polygon(vals);
                ok = np.slopes.size() == static_cast<std::size_t>(n) &&
                     std::all_of(np.slopes.begin(), np.slopes.end(), [&](const Rational& s) { return s == slope; });
            }
            done = true;
            if (ok) {
                ++rep.passed;
            } else {
                ++rep.failed;
                if (rep.failures.size() < 5) {
                    std::string s = "seed " + std::to_string(seed + t) + ":";
                    for (int i = 0; i < n; ++i) s += " A" + std::to_string(i) + "=" + a[static_cast<std::size_t>(i)].to_string();
                    rep.failures.push_back(s);
                }
            }
        }
        if (!done) ++rep.uncertified;
    }
    return rep;
}

bool tropical_supported(Family f, int n) {
    return f == Family::A || f == Family::C || f == Family::D2 || (f == Family::A2 && n % 2 == 1);
}

RelationShape relation_shape(Family f, int n, int kappa) {
    auto ks = kappa_range(f, n);
    if (n < min_rank(f)) throw ConfigError("rank below the minimum for type " + family_name(f));
    if (std::find(ks.begin(), ks.end(), kappa) == ks.end())
        throw ConfigError("kappa " + std::to_string(kappa) + " is not admissible for type " + family_name(f));
    if (!tropical_supported(f, n))
        throw ConfigError("no monomial cyclic relation for type " + family_name(f) + " of rank " + std::to_string(n));
    RelationShape s;
    auto add = [&](long phi, long e, int var) { s.monomials.push_back({phi, e, var}); };
    switch (f) {
        case Family::A:
            // phi^n v = w^k v + sum_{i<n} w^k a_i phi^i v
            s.degree = n;
            s.slope = Rational(kappa, n);
            s.num_variables = n - 1;
            add(0, kappa, 0);
            for (int i = 1; i < n; ++i) add(i, kappa, i);
            break;
        case Family::C:
        case Family::D2: {
            // phi^2m v = w^(km) v + sum_{i<=top} w^(k(m-i)) a_i phi^i v - sum phi^(i-m)(a_{2m-i}) phi^i v
            const int m = n;
            const int top = f == Family::C ? m : m - 1;
            s.degree = 2 * m;
            s.slope = Rational(kappa, 2);
            s.num_variables = top;
            add(0, static_cast<long>(kappa) * m, 0);
            for (int i = 1; i <= top; ++i) add(i, static_cast<long>(kappa) * (m - i), i);
            for (int i = m + 1; i <= 2 * m - 1; ++i)
                if (2 * m - i <= top) add(i, 0, 2 * m - i);
            break;
        }
        case Family::A2: {
            // phi = (b sigma)^2, slope 0: phi^(2m+1) v = v + sum_{i<=m} a_i phi^i v - phi(a_m) phi^(m+1) v - ...
            const int m = (n - 1) / 2;
            s.degree = 2 * m + 1;
            s.slope = 0;
            s.frobenius_power = 2;
            s.num_variables = m;
            add(0, 0, 0);
            for (int i = 1; i <= m; ++i) add(i, 0, i);
            add(m + 1, 0, m);
            for (int i = m + 2; i <= 2 * m; ++i) add(i, 0, 2 * m - i + 1);
            break;
        }
        default:
            break;
    }
    return s;
}

std::vector<Rational> tropical_bound_derivation(Family f, int n, int kappa) {
    const RelationShape s = relation_shape(f, n, kappa);
    std::vector<TropicalValue> best(static_cast<std::size_t>(s.num_variables) + 1);
    for (const auto& mono : s.monomials) {
        // ord(w^e a) = e + ord(a) >= (degree - i) * slope.
        const TropicalValue lemma{Rational(s.degree - mono.phi_index) * s.slope};
        const TropicalValue shift{Rational(-mono.varpi_exponent)};
        const TropicalValue b = lemma * shift;
        auto& slot = best[static_cast<std::size_t>(mono.variable)];
        // Each monomial gives a valid lower bound; keep the strongest.
        if (!slot.bound || *b.bound > *slot.bound) slot = b;
    }
    // The constant term sits at the endpoint (0, degree * slope) of the polygon.
    if (!best[0].bound || *best[0].bound != 0)
        throw std::logic_error("relation constant term is off the Newton polygon endpoint");
    std::vector<Rational> out;
    for (int i = 1; i <= s.num_variables; ++i) {
        if (!best[static_cast<std::size_t>(i)].bound) throw std::logic_error("variable missing from the relation");
        out.push_back(*best[static_cast<std::size_t>(i)].bound);
    }
    return out;
}

}  // namespace ctori
