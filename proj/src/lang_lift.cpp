// SPDX-License-Identifier: MIT
#include "ctori/lang_lift.hpp"

#include "ctori/root_datum.hpp"

#include <algorithm>
#include <cmath>

namespace ctori {

LangLifter::LangLifter(LangLiftConfig cfg) : cfg_(std::move(cfg)) {
    if (cfg_.n == 0) throw ConfigError("matrix size must be positive");
    if (cfg_.levels < 1) throw ConfigError("truncation level must be positive");
    try {
        std::tie(p_, r_) = prime_power(cfg_.q);
    } catch (const std::invalid_argument& e) {
        throw ConfigError(e.what());
    }
    if (cfg_.b_exponents.empty()) cfg_.b_exponents.assign(cfg_.n, 0);
    if (cfg_.b_exponents.size() != cfg_.n) throw ConfigError("b needs one exponent per row");
    for (std::size_t i = 1; i < cfg_.n; ++i)
        if (cfg_.b_exponents[i] > cfg_.b_exponents[i - 1]) throw ConfigError("b exponents must be non-increasing");

    // D = largest p^j <= bound with q^D <= 2^64.
    degree_ = 1;
    for (;;) {
        const unsigned next = degree_ * static_cast<unsigned>(p_);
        if (next > cfg_.degree_bound) break;
        long double bits = static_cast<long double>(next) * r_ * std::log2(static_cast<long double>(p_));
        if (bits > 64.0L + 1e-9L) break;
        degree_ = next;
    }
    field_ = GaloisField::get(p_, r_ * degree_);

    // Matrix of x -> x^q - x on the F_p-basis x^k, then row reduce while recording the row operations.
    const std::size_t dim = r_ * degree_;
    std::vector<std::vector<std::uint32_t>> a(dim, std::vector<std::uint32_t>(dim, 0));
    for (std::size_t k = 0; k < dim; ++k) {
        std::vector<std::uint32_t> e(dim, 0);
        e[k] = 1;
        const Elem x = field_->from_digits(e);
        const auto col = field_->digits(field_->sub(sigma(x), x));
        for (std::size_t i = 0; i < dim; ++i) a[i][k] = col[i];
    }
    transform_.assign(dim, std::vector<std::uint32_t>(dim, 0));
    for (std::size_t i = 0; i < dim; ++i) transform_[i][i] = 1;
    auto inv = [&](std::uint64_t v) {
        std::uint64_t r = 1, b = v, e = p_ - 2;
        while (e) {
            if (e & 1) r = r * b % p_;
            b = b * b % p_;
            e >>= 1;
        }
        return r;
    };
    std::size_t row = 0;
    for (std::size_t c = 0; c < dim && row < dim; ++c) {
        std::size_t piv = row;
        while (piv < dim && a[piv][c] == 0) ++piv;
        if (piv == dim) continue;
        std::swap(a[piv], a[row]);
        std::swap(transform_[piv], transform_[row]);
        const std::uint64_t s = inv(a[row][c]);
        for (std::size_t k = 0; k < dim; ++k) {
            a[row][k] = static_cast<std::uint32_t>(a[row][k] * s % p_);
            transform_[row][k] = static_cast<std::uint32_t>(transform_[row][k] * s % p_);
        }
        for (std::size_t i = 0; i < dim; ++i) {
            if (i == row || a[i][c] == 0) continue;
            const std::uint64_t f = a[i][c];
            for (std::size_t k = 0; k < dim; ++k) {
                a[i][k] = static_cast<std::uint32_t>((a[i][k] + (p_ - f) * a[row][k]) % p_);
                transform_[i][k] = static_cast<std::uint32_t>((transform_[i][k] + (p_ - f) * transform_[row][k]) % p_);
            }
        }
        pivot_cols_.push_back(c);
        ++row;
    }
}

std::optional<LangLifter::Elem> LangLifter::solve_additive(Elem r) const {
    const std::size_t dim = transform_.size();
    const auto rhs = field_->digits(r);
    std::vector<std::uint32_t> y(dim, 0);
    for (std::size_t i = 0; i < dim; ++i) {
        std::uint64_t s = 0;
        for (std::size_t k = 0; k < dim; ++k) s += static_cast<std::uint64_t>(transform_[i][k]) * rhs[k];
        y[i] = static_cast<std::uint32_t>(s % p_);
    }
    for (std::size_t i = pivot_cols_.size(); i < dim; ++i)
        if (y[i] != 0) return std::nullopt;
    std::vector<std::uint32_t> x(dim, 0);
    for (std::size_t i = 0; i < pivot_cols_.size(); ++i) x[pivot_cols_[i]] = y[i];
    return field_->from_digits(x);
}

unsigned LangLifter::degree_over_base(Elem x) const {
    Elem y = x;
    for (unsigned d = 1; d <= degree_; ++d) {
        y = sigma(y);
        if (y == x) return d;
    }
    return degree_;
}

LangLifter::Elem LangLifter::random_base(std::mt19937_64& rng) const {
    if (r_ == 1) return field_->constant(rng() % p_);
    // The trace to F_q is onto, so it carries the uniform distribution to the uniform one.
    const Elem z = field_->random(rng);
    Elem t = 0, y = z;
    for (unsigned i = 0; i < degree_; ++i) {
        t = field_->add(t, y);
        y = sigma(y);
    }
    return t;
}

long LangLifter::shift(std::size_t i, std::size_t j) const { return cfg_.b_exponents[i] - cfg_.b_exponents[j]; }

TruncatedMatrix LangLifter::identity() const {
    const std::size_t n = cfg_.n;
    TruncatedMatrix m(n * n, std::vector<Elem>(static_cast<std::size_t>(cfg_.levels), 0));
    for (std::size_t i = 0; i < n; ++i) m[i * n + i][0] = 1;
    return m;
}

TruncatedMatrix LangLifter::random_y(std::mt19937_64& rng) const {
    const std::size_t n = cfg_.n;
    TruncatedMatrix y = identity();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (cfg_.torus ? i != j : j <= i) continue;
            auto& e = y[i * n + j];
            for (long t = cfg_.torus ? 1 : 0; t < cfg_.levels; ++t) e[static_cast<std::size_t>(t)] = random_base(rng);
        }
    return y;
}

LangLiftResult LangLifter::solve(const TruncatedMatrix& y) const {
    const std::size_t n = cfg_.n;
    const auto L = static_cast<std::size_t>(cfg_.levels);
    const GaloisField& f = *field_;
    LangLiftResult res;
    res.g = identity();
    auto& g = res.g;
    auto fail = [&](std::size_t i, std::size_t j, std::size_t t, Elem r) {
        res.failure = "entry (" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ") level " + std::to_string(t) +
                      ": x^" + std::to_string(cfg_.q) + " - x - (" + f.to_string(r) + ") has no root in F_q^" +
                      std::to_string(degree_) + " (modulus " + poly_to_string(f.modulus()) + ")";
        return res;
    };
    auto note_degree = [&](Elem x) {
        res.tower_degree = std::max(res.tower_degree, degree_over_base(x));
    };

    if (cfg_.torus) {
        // sigma(g) = g y entrywise on the diagonal, with g = 1 mod w.
        for (std::size_t i = 0; i < n; ++i) {
            const auto& yi = y[i * n + i];
            if (yi[0] != 1) throw ConfigError("torus input must be 1 modulo w");
            auto& gi = g[i * n + i];
            for (std::size_t t = 1; t < L; ++t) {
                Elem r = 0;
                for (std::size_t s = 0; s < t; ++s) r = f.add(r, f.mul(gi[s], yi[t - s]));
                ++res.additive_equations;
                auto x = solve_additive(r);
                if (!x) return fail(i, i, t, r);
                gi[t] = *x;
                note_degree(*x);
            }
        }
    } else {
        for (std::size_t d = 1; d < n; ++d)
            for (std::size_t i = 0; i + d < n; ++i) {
                const std::size_t j = i + d;
                const long e = shift(i, j);
                auto& gij = g[i * n + j];
                for (std::size_t t = 0; t < L; ++t) {
                    // w^e sigma(g_ij) = g_ij + y_ij + sum_k g_ik y_kj
                    Elem r = y[i * n + j][t];
                    for (std::size_t k = i + 1; k < j; ++k)
                        for (std::size_t s = 0; s <= t; ++s)
                            r = f.add(r, f.mul(g[i * n + k][s], y[k * n + j][t - s]));
                    if (e == 0) {
                        ++res.additive_equations;
                        auto x = solve_additive(r);
                        if (!x) return fail(i, j, t, r);
                        gij[t] = *x;
                    } else {
                        const Elem prev = t >= static_cast<std::size_t>(e) ? sigma(gij[t - static_cast<std::size_t>(e)]) : 0;
                        gij[t] = f.sub(prev, r);
                    }
                    note_degree(gij[t]);
                }
            }
    }
    if (res.tower_degree > cfg_.degree_bound) {
        res.failure = "tower degree " + std::to_string(res.tower_degree) + " exceeds the bound";
        return res;
    }
    res.solved = true;
    res.residual_vanishes = residual_vanishes(g, y);
    return res;
}

bool LangLifter::residual_vanishes(const TruncatedMatrix& g, const TruncatedMatrix& y) const {
    const std::size_t n = cfg_.n;
    const auto L = static_cast<std::size_t>(cfg_.levels);
    const GaloisField& f = *field_;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const long e = shift(i, j);
            for (std::size_t t = 0; t < L; ++t) {
                // (b sigma(g) b^-1)_ij = w^e sigma(g_ij)
                Elem lhs = 0;
                const long src = static_cast<long>(t) - e;
                if (src >= 0 && src < static_cast<long>(L)) lhs = sigma(g[i * n + j][static_cast<std::size_t>(src)]);
                Elem rhs = 0;
                for (std::size_t k = 0; k < n; ++k)
                    for (std::size_t s = 0; s <= t; ++s) rhs = f.add(rhs, f.mul(g[i * n + k][s], y[k * n + j][t - s]));
                if (lhs != rhs) return false;
            }
        }
    return true;
}

LangLiftReport lang_lift_experiment(const LangLiftConfig& cfg, std::size_t trials, std::uint64_t seed) {
    LangLifter lifter(cfg);
    LangLiftReport rep;
    rep.trials = trials;
    for (std::size_t t = 0; t < trials; ++t) {
        std::mt19937_64 rng(seed + t);
        const TruncatedMatrix y = lifter.random_y(rng);
        const LangLiftResult r = lifter.solve(y);
        rep.additive_equations += r.additive_equations;
        if (r.solved) {
            ++rep.solved;
            rep.max_tower_degree = std::max(rep.max_tower_degree, r.tower_degree);
        } else if (rep.failures.size() < 5) {
            rep.failures.push_back("seed " + std::to_string(seed + t) + ": " + r.failure);
        }
        if (r.residual_vanishes) ++rep.residual_ok;
    }
    return rep;
}

}  // namespace ctori
