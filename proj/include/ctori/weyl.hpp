// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/root_datum.hpp"

#include <stdexcept>
#include <unordered_map>
#include <vector>

namespace ctori {

/// Raised when an explicit enumeration would exceed its configured size guard.
class ResourceLimit : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Weyl group elements are represented by their action on X_*(T).
using WeylElement = SmallMatrix;
using Word = std::vector<std::size_t>;  // positions into RootDatum::simple

WeylElement reflection(const RootDatum& d, std::size_t root);
WeylElement simple_reflection(const RootDatum& d, std::size_t pos);
/// s_{w[0]} s_{w[1]} ... as a matrix.
WeylElement word_matrix(const RootDatum& d, const Word& w);
/// sigma(w) = S w S^{-1}.
WeylElement sigma_twist(const RootDatum& d, const WeylElement& w);
/// Index of the root w(alpha).
std::size_t act_on_root(const RootDatum& d, const WeylElement& w, std::size_t root);
bool is_weyl_element(const RootDatum& d, const WeylElement& w);
int length(const RootDatum& d, const WeylElement& w);
/// A reduced word, found by stripping right descents.
Word reduced_word(const RootDatum& d, const WeylElement& w);
WeylElement weyl_inverse(const RootDatum& d, const WeylElement& w);

/// One simple reflection from each sigma-orbit on the simple roots, in any order.
bool is_twisted_coxeter(const RootDatum& d, const WeylElement& w);
std::size_t num_sigma_orbits(const RootDatum& d);
/// The special twisted Coxeter element of each model family, as a word.
Word special_coxeter_word(Family f, int n);
WeylElement special_coxeter(const RootDatum& d, Family f, int n);
/// Product of the first simple reflection of each sigma-orbit; works for any datum.
WeylElement some_twisted_coxeter(const RootDatum& d);
/// Positive roots sent to negative roots by w.
std::vector<std::size_t> inversion_set(const RootDatum& d, const WeylElement& w);

/// |W| from the Dynkin diagram.
BigInt weyl_group_order(const RootDatum& d);

constexpr std::size_t kDefaultGroupGuard = 10'000'000;

struct VecHash {
    std::size_t operator()(const std::vector<long long>& v) const noexcept {
        std::size_t h = 1469598103934665603ULL;
        for (long long x : v) h = (h ^ static_cast<std::size_t>(x + 0x9e3779b9)) * 1099511628211ULL;
        return h;
    }
};

class WeylGroup {
public:
    /// Enumerate W by breadth-first search on simple reflections.
    static WeylGroup generate(const RootDatum& d, std::size_t guard = kDefaultGroupGuard);

    std::size_t size() const { return elements_.size(); }
    const std::vector<WeylElement>& elements() const { return elements_; }
    const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
    std::size_t index_of(const WeylElement& w) const;
    bool contains(const WeylElement& w) const;

private:
    std::vector<WeylElement> elements_;
    std::unordered_map<std::vector<long long>, std::size_t, VecHash> index_;
};

/// Orbits of w -> v^{-1} w sigma(v), each sorted, ordered by smallest member.
std::vector<std::vector<std::size_t>> sigma_conjugacy_classes(const RootDatum& d, const WeylGroup& g);
/// {v : v^{-1} w sigma(v) = w}, as indices into g.
std::vector<std::size_t> twisted_centralizer(const RootDatum& d, const WeylGroup& g, const WeylElement& w);
/// Order of the permutation induced by sigma on the simple roots.
int diagram_order(const RootDatum& d);
/// w sigma(w) ... sigma^{k-1}(w) with k the order of sigma on the diagram.
WeylElement twisted_power(const RootDatum& d, const WeylElement& w);

}  // namespace ctori
