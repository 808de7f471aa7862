// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/finite_field.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ctori {

struct LangLiftConfig {
    std::size_t n = 3;
    long levels = 4;
    std::uint64_t q = 2;
    /// Largest allowed degree of the residue extension over F_q.
    unsigned degree_bound = 64;
    /// b = diag(w^b_1, ..., w^b_n); must be non-increasing so that sigma_b preserves the truncation.
    std::vector<long> b_exponents;
    /// Diagonal torus instead of the upper unipotent group; y must be 1 modulo w.
    bool torus = false;
};

/// Entry (i, j) of an n x n matrix over F[[w]]/(w^levels), row-major, as its coefficient list.
using TruncatedMatrix = std::vector<std::vector<GaloisField::Elem>>;

struct LangLiftResult {
    bool solved = false;
    /// Degree over F_q of the field generated by the entries of g.
    unsigned tower_degree = 1;
    std::size_t additive_equations = 0;
    bool residual_vanishes = false;
    std::string failure;
    TruncatedMatrix g;
};

/// Solves g^-1 sigma_b(g) = y level by level inside F_{q^D}, D the largest power of p not above
/// the degree bound with q^D <= 2^64. Additive equations x^q - x = r are solved by linear algebra over F_p.
class LangLifter {
public:
    using Elem = GaloisField::Elem;

    explicit LangLifter(LangLiftConfig cfg);

    const LangLiftConfig& config() const { return cfg_; }
    const GaloisField& ambient() const { return *field_; }
    /// D, the degree of the ambient field over F_q.
    unsigned ambient_degree() const { return degree_; }

    /// A root of x^q - x = r in the ambient field, if one exists.
    std::optional<Elem> solve_additive(Elem r) const;
    /// Least d with x in F_{q^d}.
    unsigned degree_over_base(Elem x) const;
    /// x^q.
    Elem sigma(Elem x) const { return field_->frobenius(x, r_); }
    /// Uniform element of F_q inside the ambient field.
    Elem random_base(std::mt19937_64& rng) const;

    TruncatedMatrix identity() const;
    TruncatedMatrix random_y(std::mt19937_64& rng) const;
    LangLiftResult solve(const TruncatedMatrix& y) const;
    /// sigma_b(g) == g y modulo w^levels.
    bool residual_vanishes(const TruncatedMatrix& g, const TruncatedMatrix& y) const;

private:
    long shift(std::size_t i, std::size_t j) const;

    LangLiftConfig cfg_;
    std::uint64_t p_;
    unsigned r_;
    unsigned degree_;
    std::shared_ptr<const GaloisField> field_;
    // Row reduction of x -> x^q - x over F_p: transform * L = echelon.
    std::vector<std::vector<std::uint32_t>> transform_;
    std::vector<std::size_t> pivot_cols_;
};

struct LangLiftReport {
    std::size_t trials = 0;
    std::size_t solved = 0;
    std::size_t residual_ok = 0;
    unsigned max_tower_degree = 1;
    std::size_t additive_equations = 0;
    std::vector<std::string> failures;
    bool pass() const { return solved == trials && residual_ok == trials; }
};

LangLiftReport lang_lift_experiment(const LangLiftConfig& cfg, std::size_t trials, std::uint64_t seed);

}  // namespace ctori
