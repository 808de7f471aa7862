// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/weyl.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ctori {

/// Psi_1 >= Psi_2 >= ... >= Psi_r as sorted root-index sets (chain[0] is Psi_1).
struct RootFiltration {
    std::vector<std::vector<std::size_t>> chain;
    std::size_t r() const { return chain.size(); }
    const std::vector<std::size_t>& psi(std::size_t i) const { return chain.at(i - 1); }
    /// Largest i with the root in Psi_i, or 0.
    std::size_t level(std::size_t root) const;
    static RootFiltration from_levels(const std::vector<std::size_t>& levels, std::size_t r);
    std::vector<std::size_t> levels(std::size_t num_roots) const;
};

struct CoxeterImage {
    std::size_t root;
    std::size_t c_image;
    std::size_t sigma_c_image;
};
/// Images of every positive root under c and under sigma o c.
std::vector<CoxeterImage> coxeter_action_on_roots(const RootDatum& d, const WeylElement& c);

/// The root filtration of the model of type f and rank n, for its special Coxeter element.
RootFiltration build_filtration(const RootDatum& model, Family f, int n);
/// The stated partition made consistent where it can be: for D, alpha_{i+m} (i <= m-2) sits at
/// level m-1; for 2A with n even, alpha_{m-j} (j >= m+2) sits at level m. nullopt for B with m >= 3.
std::optional<RootFiltration> corrected_filtration(const RootDatum& model, Family f, int n);
/// The least level assignment satisfying the three conditions with Psi_r = {alpha > 0 : c(alpha) < 0},
/// found as a fixpoint of the lower-bound constraints; nullopt if the constraints cycle.
std::optional<RootFiltration> least_filtration(const RootDatum& d, const WeylElement& c);
/// Transport a filtration along a bijection of positive roots given by coroots: every root of
/// `from` is sent to the root of `to` whose character equals its coroot restricted by `restrict_rows`.
RootFiltration dual_filtration(const RootDatum& from, const RootDatum& to, const RootFiltration& filt,
                               const SmallMatrix& restrict_rows);

struct Violation {
    int condition;       // 0 = endpoints, 1, 2, 3 as in the verification, 4 = nesting
    std::size_t level;   // index i of Psi_i
    std::vector<std::size_t> roots;
    std::string what;
};

/// lambda on a graded piece Psi_i \ Psi_{i+1}: sigma c(alpha) if it stays in the piece, else none.
struct LambdaMap {
    std::size_t level;
    std::vector<std::pair<std::size_t, std::optional<std::size_t>>> images;
};

struct FiltrationReport {
    std::vector<Violation> violations;
    std::vector<LambdaMap> lambda;
    bool lambda_fibers_at_most_one = true;
    bool graded_pieces_abelian = true;
    bool pass() const { return violations.empty() && lambda_fibers_at_most_one && graded_pieces_abelian; }
};
FiltrationReport verify_filtration(const RootDatum& d, const WeylElement& c, const RootFiltration& filt);

/// Move one positive root from its level to the next one up.
RootFiltration displace_root(const RootFiltration& filt, std::size_t num_roots, std::size_t root);

struct MutationStats {
    std::size_t trials = 0;
    std::size_t detected = 0;
    std::size_t by_condition[5] = {0, 0, 0, 0, 0};
    double rate() const { return trials ? static_cast<double>(detected) / static_cast<double>(trials) : 1.0; }
};
/// Random single-root upward displacements; a mutation is detected when verification fails.
MutationStats mutation_test(const RootDatum& d, const WeylElement& c, const RootFiltration& filt, std::size_t trials,
                            std::mt19937_64& rng);

}  // namespace ctori
