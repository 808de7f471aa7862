// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/matrix.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ctori {

/// U * A * V == D with U, V unimodular and D in Smith normal form.
struct SmithForm {
    IntMatrix u;
    IntMatrix u_inv;
    IntMatrix v;
    IntMatrix d;
    std::size_t rank = 0;

    /// Diagonal entries of D, padded with zeros to the row count of A.
    std::vector<BigInt> diagonal() const;
};

/// Smith normal form. Pivot: smallest nonzero |entry|, ties broken by lowest row then lowest
/// column. Nonzero invariants come first with d_i | d_{i+1}; zero (free) factors last.
SmithForm smith_normal_form(const IntMatrix& a);

/// Integer solution of A x = b, if one exists.
std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b);

/// Basis (as columns) of the integer kernel {x : A x = 0}.
IntMatrix integer_kernel(const IntMatrix& a);

/// Basis (as columns) of the sublattice spanned by the columns of `gens`.
IntMatrix lattice_basis(const IntMatrix& gens);

/// Basis (as columns) of (Q-span of columns) intersected with Z^n.
IntMatrix saturation(const IntMatrix& gens);

/// A finitely generated abelian group Z^ambient / span(relations), with canonical coordinates
/// given by the Smith form of the relation matrix. Unit invariant factors are dropped.
class FinAbGroup {
public:
    FinAbGroup() = default;
    static FinAbGroup quotient(std::size_t ambient_dim, const IntMatrix& relations);
    static FinAbGroup cyclic(const BigInt& order);  // order 0 means Z

    std::size_t ambient_dim() const { return ambient_; }
    /// Invariant factors: finite ones ascending by divisibility, then zeros for free factors.
    const std::vector<BigInt>& invariants() const { return invariants_; }
    std::size_t num_generators() const { return invariants_.size(); }
    std::size_t free_rank() const;
    bool is_finite() const { return free_rank() == 0; }
    bool is_trivial() const { return invariants_.empty(); }
    /// Order of the group; throws if infinite.
    BigInt order() const;
    BigInt torsion_order() const;
    /// Exponent of the torsion subgroup.
    BigInt torsion_exponent() const;

    const IntMatrix& relations() const { return relations_; }
    const IntMatrix& to_canonical() const { return to_can_; }
    const IntMatrix& from_canonical() const { return from_can_; }

    /// Canonical coordinates of an ambient vector, reduced.
    IntVec project(const IntVec& ambient) const;
    /// Reduce canonical coordinates into [0, d_i).
    IntVec reduce(const IntVec& canonical) const;
    /// An ambient representative of canonical coordinates.
    IntVec lift(const IntVec& canonical) const;
    IntVec zero() const { return IntVec(invariants_.size(), 0); }
    bool is_zero(const IntVec& canonical) const;
    IntVec add(const IntVec& a, const IntVec& b) const;
    IntVec negate(const IntVec& a) const;

    /// All elements of the torsion subgroup, in canonical coordinates (free coordinates zero).
    std::vector<IntVec> torsion_elements() const;
    /// All elements; throws if infinite.
    std::vector<IntVec> elements() const;

    /// Human-readable structure, e.g. "Z/2 x Z/2", "Z", "0".
    std::string describe() const;
    bool isomorphic(const FinAbGroup& other) const { return invariants_ == other.invariants_; }

private:
    std::size_t ambient_ = 0;
    IntMatrix relations_;
    std::vector<BigInt> invariants_;
    IntMatrix to_can_;
    IntMatrix from_can_;
};

/// Coinvariants L / (f - id) L of an endomorphism f of L = Z^n.
FinAbGroup coinvariants(const IntMatrix& f);

/// A homomorphism between quotient groups induced by an ambient integer matrix.
class AbelianMap {
public:
    AbelianMap(FinAbGroup source, FinAbGroup target, IntMatrix ambient_matrix);

    const FinAbGroup& source() const { return source_; }
    const FinAbGroup& target() const { return target_; }
    const IntMatrix& ambient_matrix() const { return ambient_; }
    /// Matrix in canonical coordinates (target generators x source generators).
    const IntMatrix& canonical_matrix() const { return canonical_; }

    /// True iff source relations land in target relations.
    bool well_defined() const;
    IntVec apply(const IntVec& source_canonical) const;

    struct Image {
        FinAbGroup group;     // abstract image, on generator coefficients
        IntMatrix generators; // target canonical coordinates, one column per generator
        /// Elements of the torsion part of the image, in target canonical coordinates.
        std::vector<IntVec> torsion_elements;
    };
    Image image() const;
    /// Kernel as an abstract group (on source canonical coordinates).
    FinAbGroup kernel() const;
    bool is_injective() const;
    bool is_surjective() const;
    bool contains_in_image(const IntVec& target_canonical) const;

private:
    FinAbGroup source_;
    FinAbGroup target_;
    IntMatrix ambient_;
    IntMatrix canonical_;
};

}  // namespace ctori
