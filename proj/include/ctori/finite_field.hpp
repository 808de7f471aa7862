// SPDX-License-Identifier: MIT
#pragma once

#include <cstdint>
#include <memory>
#include <random>
#include <string>
#include <vector>

namespace ctori {

/// Polynomials over F_p, coefficient i of x^i at index i, no trailing zeros.
using FpPoly = std::vector<std::uint32_t>;

bool is_prime(std::uint64_t n);
/// Returns (p, r) with q = p^r, or throws std::invalid_argument.
std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q);

/// Rabin's test.
bool is_irreducible(const FpPoly& f, std::uint64_t p);
/// The lexicographically first monic irreducible polynomial of the given degree over F_p.
FpPoly first_irreducible(std::uint64_t p, unsigned degree);
std::string poly_to_string(const FpPoly& f);

/// F_{p^k} in the polynomial basis F_p[x]/(f). An element is encoded as sum c_i p^i,
/// with c_i the coefficient of x^i; p^k must not exceed 2^64.
class GaloisField {
public:
    using Elem = std::uint64_t;

    /// Cached per (p, k).
    static std::shared_ptr<const GaloisField> get(std::uint64_t p, unsigned k);

    GaloisField(std::uint64_t p, unsigned k);

    std::uint64_t characteristic() const { return p_; }
    unsigned degree() const { return k_; }
    /// p^k - 1.
    std::uint64_t units_order() const { return units_; }
    const FpPoly& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }
    /// The element c of the prime field.
    Elem constant(std::uint64_t c) const { return c % p_; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (!add_table_.empty()) return add_table_[a * order_small_ + b];
        return add_slow(a, b, false);
    }
    Elem sub(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        return add(a, neg(b));
    }
    Elem neg(Elem a) const;
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        if (!log_.empty()) return exp_[log_[a] + log_[b]];
        return mul_slow(a, b);
    }
    Elem inv(Elem a) const;
    Elem pow(Elem a, std::uint64_t e) const;
    /// a^(p^times).
    Elem frobenius(Elem a, unsigned times) const;

    /// Tables are present when p^k <= 2^16.
    bool tabulated() const { return !log_.empty(); }
    /// Discrete logarithm with respect to the tabulated generator; a must be nonzero.
    std::uint32_t log(Elem a) const { return log_[a]; }
    Elem exp(std::uint32_t e) const { return exp_[e]; }

    std::vector<std::uint32_t> digits(Elem a) const;
    Elem from_digits(const std::vector<std::uint32_t>& d) const;
    Elem random(std::mt19937_64& rng) const;
    std::string to_string(Elem a) const;

private:
    Elem add_slow(Elem a, Elem b, bool subtract) const;
    Elem mul_slow(Elem a, Elem b) const;

    std::uint64_t p_;
    unsigned k_;
    std::uint64_t units_;
    std::uint64_t order_small_ = 0;
    FpPoly modulus_;
    std::vector<std::uint32_t> log_;
    std::vector<Elem> exp_;
    std::vector<Elem> add_table_;
    std::vector<Elem> neg_table_;
};

}  // namespace ctori
