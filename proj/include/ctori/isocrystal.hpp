// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/root_datum.hpp"
#include "ctori/series.hpp"

#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace ctori {

/// A certified lower bound for a valuation; nullopt is +infinity.
/// Addition takes the minimum, multiplication the sum.
struct TropicalValue {
    std::optional<Rational> bound;

    static TropicalValue infinity() { return {}; }
    TropicalValue operator+(const TropicalValue& o) const;
    TropicalValue operator*(const TropicalValue& o) const;
    bool operator==(const TropicalValue& o) const { return bound == o.bound; }
};

struct NewtonPolygon {
    std::vector<std::pair<long, Rational>> vertices;
    /// One entry per unit of horizontal length, in increasing order.
    std::vector<Rational> slopes;
};
/// Lower convex hull of the points (n - j, v_j) for the coefficients A_j of a degree-n polynomial,
/// given as (j, v_j); nullopt valuations are infinite. Throws std::invalid_argument if all are infinite.
NewtonPolygon newton_polygon(const std::vector<std::pair<long, std::optional<Rational>>>& valuations);

using SeriesVec = std::vector<Series>;

/// phi(x) = M sigma^e(x), where sigma raises coefficients to the q-th power, q = p^q_exponent.
struct PhiMatrix {
    std::size_t n = 0;
    std::vector<Series> entries;  // row-major
    unsigned q_exponent = 1;
    unsigned frobenius_power = 1;

    Series& at(std::size_t i, std::size_t j) { return entries[i * n + j]; }
    const Series& at(std::size_t i, std::size_t j) const { return entries[i * n + j]; }
    SeriesVec apply(const SeriesVec& v) const;
};

class NotCyclic : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A_0, ..., A_{n-1} with phi^n(v) = sum A_i phi^i(v). Throws NotCyclic when the iterates are
/// dependent at the working precision.
std::vector<Series> cyclic_relation(const PhiMatrix& m, const SeriesVec& v);

/// e_i -> e_{i+1} for i < n, e_n -> w^k e_1.
PhiMatrix companion_matrix(const GaloisField* f, unsigned q_exponent, std::size_t n, long k, long precision);
/// h^-1 M sigma(h) for a random h in GL_n of the power series ring, built from elementary
/// operations with short polynomial entries and a diagonal of random units.
PhiMatrix random_conjugate(const PhiMatrix& m, std::mt19937_64& rng);
/// M' = h^-1 M sigma(h) for the given h (invertible over the power series ring).
PhiMatrix conjugate_by(const PhiMatrix& m, const std::vector<Series>& h);

long default_precision(int n, long max_denominator);

struct LemmaReport {
    int n = 0;
    int k = 0;
    std::uint64_t q = 0;
    std::size_t trials = 0;
    std::size_t passed = 0;
    std::size_t failed = 0;
    std::size_t uncertified = 0;
    std::size_t resampled = 0;        // draws of v that were not cyclic
    std::size_t precision_raises = 0;
    std::vector<std::string> failures;  // first few counterexamples
    bool pass() const { return passed == trials && failed == 0 && uncertified == 0; }
};

/// Random cyclic vectors of random conjugates of the slope-k/n companion over F_{q^E}[[w]]:
/// checks ord A_i >= (n - i) k / n and that the Newton polygon is one segment to (n, k).
LemmaReport verify_isocrystal_lemma(int n, int k, std::size_t trials, std::uint64_t seed, std::uint64_t q = 2,
                                    long precision = 0, unsigned residue_degree = 2);

/// Coefficient w^varpi_exponent * phi^?(a_variable) at phi^phi_index; variable 0 is the constant 1.
struct RelationMonomial {
    long phi_index;
    long varpi_exponent;
    int variable;
};
/// The shape of the cyclic relation phi^degree(v) = sum (monomial) phi^i(v) for a model type.
struct RelationShape {
    long degree = 0;
    Rational slope;
    unsigned frobenius_power = 1;
    int num_variables = 0;
    std::vector<RelationMonomial> monomials;
};
/// Supported for A, C, 2A with n odd, and 2D; ConfigError otherwise.
RelationShape relation_shape(Family f, int n, int kappa);
/// ord(a_i) >= bound for i = 1..l, from the cyclic-vector bound applied to each monomial.
std::vector<Rational> tropical_bound_derivation(Family f, int n, int kappa);
bool tropical_supported(Family f, int n);

}  // namespace ctori
