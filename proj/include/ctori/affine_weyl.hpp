// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/weyl.hpp"

#include <optional>
#include <vector>

namespace ctori {

/// t^lambda * w in X_*(T) x| W. Products: (l, w)(l', w') = (l + w l', w w').
struct ExtAffineElement {
    SmallVec lambda;
    WeylElement w;
    bool operator==(const ExtAffineElement& o) const { return lambda == o.lambda && w == o.w; }
};

ExtAffineElement multiply(const ExtAffineElement& a, const ExtAffineElement& b);
ExtAffineElement inverse(const RootDatum& d, const ExtAffineElement& x);
/// Frobenius on the extended affine Weyl group: (l, w) -> (S l, S w S^{-1}).
ExtAffineElement sigma_twist(const RootDatum& d, const ExtAffineElement& x);
/// g^{-1} x sigma(g).
ExtAffineElement sigma_conjugate(const RootDatum& d, const ExtAffineElement& g, const ExtAffineElement& x);
ExtAffineElement translation(const SmallVec& lambda);
ExtAffineElement finite(const RootDatum& d, const WeylElement& w);

/// Smallest k >= 1 with (w S)^k = 1 and S^k = 1.
int twist_period(const RootDatum& d, const WeylElement& w);

/// Newton point: the translation part of x sigma(x) ... sigma^{k-1}(x) divided by k, made dominant.
/// `multiplier` scales the period (the result must not depend on it).
RatVec newton_point(const RootDatum& d, const ExtAffineElement& x, int multiplier = 1);
/// Dominant representative of the W-orbit, found by explicit orbit search.
RatVec dominant_representative(const RootDatum& d, const RatVec& v, std::size_t guard = kDefaultGroupGuard);
bool is_central(const RootDatum& d, const RatVec& v);
bool is_basic(const RootDatum& d, const ExtAffineElement& x);
/// Common diagonal exponent of a central cocharacter in the faithful representation, if any.
std::optional<Rational> central_slope(const RootDatum& d, const RatVec& v);

/// Class of the translation part in pi_1(G)_sigma, in canonical coordinates.
IntVec kottwitz_class(const RootDatum& d, const ExtAffineElement& x);

/// X_*(T)_{sigma_w} with sigma_w = w o sigma.
FinAbGroup lifts_mod_kernel(const RootDatum& d, const WeylElement& w);
/// X_*(T_sc)_{sigma_w} -> X_*(T)_{sigma_w}.
AbelianMap beta_map(const RootDatum& d, const WeylElement& w);

/// A monomial matrix: basis vector p goes to uniformizer^exps[p] times basis vector perm[p].
struct MonomialMatrix {
    std::vector<std::size_t> perm;
    std::vector<long long> exps;
};

/// Read off (lambda, w) from a monomial matrix in the faithful representation.
ExtAffineElement from_monomial(const RootDatum& d, const MonomialMatrix& m);
/// The lift of the special Coxeter element with central twist kappa, as a monomial matrix.
MonomialMatrix coxeter_lift_matrix(Family f, int n, int kappa);
/// The same lift as an element of the extended affine Weyl group of the model datum.
ExtAffineElement coxeter_lift(const RootDatum& model, Family f, int n, int kappa);

}  // namespace ctori
