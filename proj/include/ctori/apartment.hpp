// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/affine_weyl.hpp"

#include <stdexcept>
#include <vector>

namespace ctori {

/// Raised when the linear part of an affine transformation has eigenvalue 1 on X_*(T_ad)_Q.
class NotElliptic : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// A point of X_*(T_ad) (x) Q. `coords` is the representative in the Q-span of the coroots,
/// `adjoint` the simple-root pairings <alpha_i, x>, which determine the point.
struct ApartmentPoint {
    RatVec coords;
    RatVec adjoint;
    bool operator==(const ApartmentPoint& o) const { return adjoint == o.adjoint; }
};

/// Image of a rational cocharacter in X_*(T_ad) (x) Q.
ApartmentPoint project_to_adjoint(const RootDatum& d, const RatVec& cochar);

/// The unique x with x = w(sigma(x)) + lambda modulo the centre. Throws NotElliptic.
ApartmentPoint fixed_point(const RootDatum& d, const ExtAffineElement& x);
/// True iff x is fixed by the affine transformation attached to (lambda, w).
bool is_fixed(const RootDatum& d, const ExtAffineElement& x, const ApartmentPoint& p);

/// <alpha, x>.
Rational mp_bound(const RootDatum& d, std::size_t root, const ApartmentPoint& x);

/// c(Phi+) n Phi-, sorted by root index.
std::vector<std::size_t> cross_section_roots(const RootDatum& d, const WeylElement& c);
/// The cross-section roots of the model in the order of the coordinates a_1, ..., a_l.
std::vector<RootLabel> cross_section_labels(Family f, int n);

/// <alpha, x_b> over the ordered cross-section roots, with b the lift of the special Coxeter element.
std::vector<Rational> cross_section_bound_table(Family f, int n, int kappa);

/// A reference bound table. Integral tables record the least integer valuation allowed,
/// i.e. the ceiling of the pairing.
struct ReferenceTable {
    std::vector<Rational> values;
    bool integral = false;
};
ReferenceTable reference_bound_table(Family f, int n, int kappa);
bool table_matches(const std::vector<Rational>& computed, const ReferenceTable& ref);
Rational ceil(const Rational& r);

/// Closed form of the fixed point of the lift with twist kappa, in model cocharacter coordinates.
RatVec reference_fixed_point(Family f, int n, int kappa);

}  // namespace ctori
