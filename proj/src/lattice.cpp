// SPDX-License-Identifier: MIT
#include "ctori/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctori {

namespace {

BigInt abs_big(const BigInt& x) { return x < 0 ? BigInt(-x) : x; }

BigInt mod_floor(const BigInt& a, const BigInt& m) {
    BigInt r = a % m;
    if (r < 0) r += m;
    return r;
}

}  // namespace

std::vector<BigInt> SmithForm::diagonal() const {
    std::vector<BigInt> diag(d.rows(), 0);
    for (std::size_t i = 0; i < std::min(d.rows(), d.cols()); ++i) diag[i] = d(i, i);
    return diag;
}

SmithForm smith_normal_form(const IntMatrix& a) {
    const std::size_t m = a.rows();
    const std::size_t n = a.cols();
    SmithForm s{IntMatrix::identity(m), IntMatrix::identity(m), IntMatrix::identity(n), a, 0};
    IntMatrix& d = s.d;

    auto row_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        d.add_row(dst, src, k);
        s.u.add_row(dst, src, k);
        s.u_inv.add_col(src, dst, -k);
    };
    auto row_swap = [&](std::size_t x, std::size_t y) {
        d.swap_rows(x, y);
        s.u.swap_rows(x, y);
        s.u_inv.swap_cols(x, y);
    };
    auto col_add = [&](std::size_t dst, std::size_t src, const BigInt& k) {
        d.add_col(dst, src, k);
        s.v.add_col(dst, src, k);
    };
    auto col_swap = [&](std::size_t x, std::size_t y) {
        d.swap_cols(x, y);
        s.v.swap_cols(x, y);
    };

    const std::size_t steps = std::min(m, n);
    for (std::size_t t = 0; t < steps; ++t) {
        bool found_any = true;
        while (true) {
            std::size_t pi = m, pj = n;
            BigInt best = 0;
            for (std::size_t i = t; i < m; ++i)
                for (std::size_t j = t; j < n; ++j) {
                    if (d(i, j) == 0) continue;
                    BigInt v = abs_big(d(i, j));
                    if (pi == m || v < best) {
                        best = v;
                        pi = i;
                        pj = j;
                    }
                }
            if (pi == m) {
                found_any = false;
                break;
            }
            row_swap(t, pi);
            col_swap(t, pj);

            bool dirty = false;
            for (std::size_t i = t + 1; i < m; ++i) {
                if (d(i, t) == 0) continue;
                BigInt q = d(i, t) / d(t, t);
                if (q != 0) row_add(i, t, -q);
                if (d(i, t) != 0) dirty = true;
            }
            for (std::size_t j = t + 1; j < n; ++j) {
                if (d(t, j) == 0) continue;
                BigInt q = d(t, j) / d(t, t);
                if (q != 0) col_add(j, t, -q);
                if (d(t, j) != 0) dirty = true;
            }
            if (dirty) continue;

            std::size_t bad = m;
            for (std::size_t i = t + 1; i < m && bad == m; ++i)
                for (std::size_t j = t + 1; j < n; ++j)
                    if (d(i, j) % d(t, t) != 0) {
                        bad = i;
                        break;
                    }
            if (bad != m) {
                row_add(t, bad, 1);
                continue;
            }
            break;
        }
        if (!found_any) break;
        if (d(t, t) < 0) {
            for (std::size_t j = 0; j < n; ++j) d(t, j) = -d(t, j);
            for (std::size_t j = 0; j < m; ++j) s.u(t, j) = -s.u(t, j);
            for (std::size_t i = 0; i < m; ++i) s.u_inv(i, t) = -s.u_inv(i, t);
        }
        s.rank = t + 1;
    }
    return s;
}

std::optional<IntVec> solve_integer(const IntMatrix& a, const IntVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_integer: size mismatch");
    SmithForm s = smith_normal_form(a);
    IntVec c = s.u * b;
    IntVec y(a.cols(), 0);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        if (i < s.rank) {
            if (c[i] % s.d(i, i) != 0) return std::nullopt;
            y[i] = c[i] / s.d(i, i);
        } else if (c[i] != 0) {
            return std::nullopt;
        }
    }
    return s.v * y;
}

IntMatrix integer_kernel(const IntMatrix& a) {
    SmithForm s = smith_normal_form(a);
    return s.v.column_block(s.rank, a.cols() - s.rank);
}

IntMatrix lattice_basis(const IntMatrix& gens) {
    SmithForm s = smith_normal_form(gens);
    IntMatrix b(gens.rows(), s.rank);
    for (std::size_t j = 0; j < s.rank; ++j)
        for (std::size_t i = 0; i < gens.rows(); ++i) b(i, j) = s.u_inv(i, j) * s.d(j, j);
    return b;
}

IntMatrix saturation(const IntMatrix& gens) {
    SmithForm s = smith_normal_form(gens);
    return s.u_inv.column_block(0, s.rank);
}

// ---------------------------------------------------------------------------

FinAbGroup FinAbGroup::quotient(std::size_t ambient_dim, const IntMatrix& relations) {
    if (relations.rows() != ambient_dim) throw std::invalid_argument("quotient: relation rows must equal ambient dimension");
    FinAbGroup g;
    g.ambient_ = ambient_dim;
    g.relations_ = relations;
    SmithForm s = smith_normal_form(relations);
    std::vector<BigInt> diag = s.diagonal();
    std::vector<std::size_t> kept;
    for (std::size_t i = 0; i < ambient_dim; ++i)
        if (diag[i] != 1) kept.push_back(i);
    g.to_can_ = IntMatrix(kept.size(), ambient_dim);
    g.from_can_ = IntMatrix(ambient_dim, kept.size());
    for (std::size_t k = 0; k < kept.size(); ++k) {
        g.invariants_.push_back(diag[kept[k]]);
        for (std::size_t j = 0; j < ambient_dim; ++j) {
            g.to_can_(k, j) = s.u(kept[k], j);
            g.from_can_(j, k) = s.u_inv(j, kept[k]);
        }
    }
    return g;
}

FinAbGroup FinAbGroup::cyclic(const BigInt& order) {
    IntMatrix rel(1, 1, order);
    return quotient(1, rel);
}

std::size_t FinAbGroup::free_rank() const {
    return static_cast<std::size_t>(std::count(invariants_.begin(), invariants_.end(), BigInt(0)));
}

BigInt FinAbGroup::order() const {
    if (!is_finite()) throw std::domain_error("order of an infinite group");
    return torsion_order();
}

BigInt FinAbGroup::torsion_order() const {
    BigInt o = 1;
    for (const auto& d : invariants_)
        if (d != 0) o *= d;
    return o;
}

BigInt FinAbGroup::torsion_exponent() const {
    BigInt e = 1;
    for (const auto& d : invariants_)
        if (d != 0) e = d;  // divisibility chain: the last finite factor is the exponent
    return e;
}

IntVec FinAbGroup::reduce(const IntVec& canonical) const {
    if (canonical.size() != invariants_.size()) throw std::invalid_argument("reduce: wrong coordinate count");
    IntVec r(canonical);
    for (std::size_t i = 0; i < r.size(); ++i)
        if (invariants_[i] != 0) r[i] = mod_floor(r[i], invariants_[i]);
    return r;
}

IntVec FinAbGroup::project(const IntVec& ambient) const {
    if (ambient.size() != ambient_) throw std::invalid_argument("project: wrong ambient dimension");
    return reduce(to_can_ * ambient);
}

IntVec FinAbGroup::lift(const IntVec& canonical) const { return from_can_ * canonical; }

bool FinAbGroup::is_zero(const IntVec& canonical) const {
    IntVec r = reduce(canonical);
    return std::all_of(r.begin(), r.end(), [](const BigInt& x) { return x == 0; });
}

IntVec FinAbGroup::add(const IntVec& a, const IntVec& b) const {
    IntVec s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = a[i] + b[i];
    return reduce(s);
}

IntVec FinAbGroup::negate(const IntVec& a) const {
    IntVec s(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) s[i] = -a[i];
    return reduce(s);
}

std::vector<IntVec> FinAbGroup::torsion_elements() const {
    std::vector<IntVec> out{zero()};
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
        if (invariants_[i] == 0) continue;
        std::vector<IntVec> next;
        for (const auto& e : out)
            for (BigInt k = 0; k < invariants_[i]; ++k) {
                IntVec f = e;
                f[i] = k;
                next.push_back(f);
            }
        out = std::move(next);
    }
    return out;
}

std::vector<IntVec> FinAbGroup::elements() const {
    if (!is_finite()) throw std::domain_error("elements of an infinite group");
    return torsion_elements();
}

std::string FinAbGroup::describe() const {
    if (invariants_.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < invariants_.size(); ++i) {
        if (i) s += " x ";
        s += invariants_[i] == 0 ? std::string("Z") : "Z/" + invariants_[i].str();
    }
    return s;
}

FinAbGroup coinvariants(const IntMatrix& f) {
    if (f.rows() != f.cols()) throw std::invalid_argument("coinvariants: endomorphism must be square");
    return FinAbGroup::quotient(f.rows(), f - IntMatrix::identity(f.rows()));
}

// ---------------------------------------------------------------------------

AbelianMap::AbelianMap(FinAbGroup source, FinAbGroup target, IntMatrix ambient_matrix)
    : source_(std::move(source)), target_(std::move(target)), ambient_(std::move(ambient_matrix)) {
    if (ambient_.rows() != target_.ambient_dim() || ambient_.cols() != source_.ambient_dim())
        throw std::invalid_argument("AbelianMap: ambient matrix has the wrong shape");
    canonical_ = target_.to_canonical() * ambient_ * source_.from_canonical();
}

bool AbelianMap::well_defined() const {
    const IntMatrix& rel = source_.relations();
    for (std::size_t j = 0; j < rel.cols(); ++j)
        if (!target_.is_zero(target_.to_canonical() * (ambient_ * rel.column(j)))) return false;
    return true;
}

IntVec AbelianMap::apply(const IntVec& source_canonical) const {
    return target_.reduce(canonical_ * source_canonical);
}

namespace {

IntMatrix invariant_diagonal(const FinAbGroup& g) {
    std::size_t k = g.num_generators();
    IntMatrix d(k, k);
    for (std::size_t i = 0; i < k; ++i) d(i, i) = g.invariants()[i];
    return d;
}

// {u : G u lies in the relation lattice of `target`}, as columns.
IntMatrix preimage_of_zero(const IntMatrix& g, const FinAbGroup& target) {
    const std::size_t ks = g.cols();
    IntMatrix a = g.hcat(-invariant_diagonal(target));
    IntMatrix ker = integer_kernel(a);
    return ker.row_block(0, ks);
}

}  // namespace

AbelianMap::Image AbelianMap::image() const {
    Image im;
    im.generators = canonical_;
    im.group = FinAbGroup::quotient(canonical_.cols(), preimage_of_zero(canonical_, target_));
    for (const auto& e : im.group.torsion_elements())
        im.torsion_elements.push_back(target_.reduce(canonical_ * im.group.lift(e)));
    std::sort(im.torsion_elements.begin(), im.torsion_elements.end());
    im.torsion_elements.erase(std::unique(im.torsion_elements.begin(), im.torsion_elements.end()),
                              im.torsion_elements.end());
    return im;
}

FinAbGroup AbelianMap::kernel() const {
    IntMatrix k = preimage_of_zero(canonical_, target_);
    IntMatrix rel = preimage_of_zero(k, source_);
    return FinAbGroup::quotient(k.cols(), rel);
}

bool AbelianMap::is_injective() const { return kernel().is_trivial(); }

bool AbelianMap::is_surjective() const {
    IntMatrix rel = canonical_.hcat(invariant_diagonal(target_));
    return FinAbGroup::quotient(target_.num_generators(), rel).is_trivial();
}

bool AbelianMap::contains_in_image(const IntVec& target_canonical) const {
    IntMatrix a = canonical_.hcat(invariant_diagonal(target_));
    return solve_integer(a, target_canonical).has_value();
}

}  // namespace ctori
