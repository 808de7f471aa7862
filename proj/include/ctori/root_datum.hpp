// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/lattice.hpp"

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctori {

/// Raised for invalid user configuration (unknown type, rank below the minimum, bad kappa...).
class ConfigError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Families with explicit models: split A, B, C, D and the quasi-split outer forms of A and D.
enum class Family { A, B, C, D, A2, D2 };
enum class Isogeny { Model, Adjoint, SimplyConnected };

std::string family_name(Family f);
Family parse_family(const std::string& s);
Isogeny parse_isogeny(const std::string& s);
std::string isogeny_name(Isogeny i);
/// Smallest admissible rank parameter (n for A/A2, m otherwise).
int min_rank(Family f);
/// Admissible kappa values for the lifts of the special Coxeter element.
std::vector<int> kappa_range(Family f, int n);
/// Length of the root filtration used for the cross-section.
int filtration_length(Family f, int n);

/// Root names by signed indices. (i,-j): e_i - e_j; (i,j): e_i + e_j; (-i,-j): -e_i - e_j;
/// (i,i): 2e_i; (-i,-i): -2e_i; (i,0): e_i (short roots of type B).
struct RootLabel {
    int a = 0;
    int b = 0;
    bool operator==(const RootLabel& o) const { return a == o.a && b == o.b; }
    bool operator<(const RootLabel& o) const { return a != o.a ? a < o.a : b < o.b; }
};
std::string to_string(const RootLabel& l);

/// A based root datum with Frobenius action, in cocharacter coordinates.
/// Roots are row vectors (characters), coroots and sigma act on cocharacters.
struct RootDatum {
    std::string name;
    std::size_t rank = 0;
    std::vector<SmallVec> roots;
    std::vector<SmallVec> coroots;
    std::vector<RootLabel> labels;     // empty when the datum carries no names
    std::vector<std::size_t> simple;   // indices into roots
    SmallMatrix sigma;
    SmallMatrix sigma_inv;
    /// Cocharacter -> diagonal exponents of a faithful representation (rows = positions). May be empty.
    SmallMatrix weights;
    std::vector<long long> heights;    // height of each root w.r.t. the simple roots

    std::size_t num_roots() const { return roots.size(); }
    bool is_positive(std::size_t i) const { return heights[i] > 0; }
    std::vector<std::size_t> positive_roots() const;
    std::optional<std::size_t> find_root(const SmallVec& chi) const;
    std::optional<std::size_t> find_coroot(const SmallVec& cochar) const;
    std::size_t root_by_label(const RootLabel& l) const;
    std::string root_name(std::size_t i) const;
    long long pair(std::size_t root, const SmallVec& cochar) const;
    Rational pair(std::size_t root, const RatVec& cochar) const;
    /// sigma as a permutation of root indices.
    std::size_t sigma_root(std::size_t i) const;
    /// Orbits of sigma on the simple roots, as lists of positions in `simple`.
    std::vector<std::vector<std::size_t>> simple_orbits() const;

    std::map<SmallVec, std::size_t> root_index;
    std::map<SmallVec, std::size_t> coroot_index;
};

/// Assemble and validate a root datum; computes indices and heights.
RootDatum make_root_datum(std::string name, std::size_t rank, std::vector<SmallVec> roots,
                          std::vector<SmallVec> coroots, std::vector<std::size_t> simple,
                          SmallMatrix sigma, std::vector<RootLabel> labels = {},
                          SmallMatrix weights = {});

/// The explicit models: GL_n, SO_{2m+1}, GSp_{2m}, GSO_{2m}, unitary GL_n, quasi-split GSO_{2m}.
RootDatum build_root_datum(Family f, int n, Isogeny iso = Isogeny::Model);
RootDatum simply_connected_cover(const RootDatum& d);
RootDatum adjoint_quotient(const RootDatum& d);
/// Weil restriction from a degree-k unramified extension.
RootDatum restriction_of_scalars(const RootDatum& d, int k);
RootDatum product(const RootDatum& a, const RootDatum& b);
/// (SL_2 x SL_2)/mu_2 with trivial Frobenius.
RootDatum sl2_squared_mod_mu2();

/// Basis (columns) of the coroot lattice ZPhi^v inside X_*(T).
IntMatrix sc_sublattice(const RootDatum& d);
/// Basis (columns) of X_*(Z), the cocharacters orthogonal to all roots.
IntMatrix center_cocharacters(const RootDatum& d);

/// X_*(T) / X_*(T_sc).
FinAbGroup fundamental_group(const RootDatum& d);
/// X_*(T) / (X_*(T_sc) + (sigma - 1) X_*(T)).
FinAbGroup fundamental_group_coinvariants(const RootDatum& d);
/// X_*(T) / (X_*(T_sc) + X_*(Z)), optionally with sigma-coinvariants.
FinAbGroup adjoint_fundamental_group(const RootDatum& d, bool sigma_coinvariants);
/// X_*(Z)_sigma -> pi_1(G)_sigma.
AbelianMap center_map_on_coinvariants(const RootDatum& d);

/// <alpha_i, alpha_j^v> for simple roots, indexed by position in `simple`.
SmallMatrix cartan_matrix(const RootDatum& d);

}  // namespace ctori
