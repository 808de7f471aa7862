// SPDX-License-Identifier: MIT
#include "ctori/series.hpp"

#include <algorithm>
#include <stdexcept>

namespace ctori {

Series Series::monomial(const GaloisField* f, Elem c, long exponent, long precision) {
    return from_coeffs(f, exponent, {c}, precision);
}

Series Series::from_coeffs(const GaloisField* f, long start, std::vector<Elem> c, long precision) {
    Series s(f, precision);
    if (start < precision) {
        const auto keep = static_cast<std::size_t>(precision - start);
        c.resize(keep, 0);
        s.start_ = start;
        s.c_ = std::move(c);
    }
    s.normalize();
    return s;
}

Series Series::random(const GaloisField* f, long precision, std::mt19937_64& rng, bool unit) {
    std::vector<Elem> c(static_cast<std::size_t>(std::max(precision, 0L)));
    for (auto& x : c) x = f->random(rng);
    if (unit && !c.empty())
        while (c[0] == 0) c[0] = f->random(rng);
    return from_coeffs(f, 0, std::move(c), precision);
}

void Series::normalize() {
    std::size_t lead = 0;
    while (lead < c_.size() && c_[lead] == 0) ++lead;
    if (lead == c_.size()) {
        c_.clear();
        start_ = prec_;
        return;
    }
    if (lead) {
        c_.erase(c_.begin(), c_.begin() + static_cast<std::ptrdiff_t>(lead));
        start_ += static_cast<long>(lead);
    }
}

Series::Elem Series::coeff(long e) const {
    if (e >= prec_) throw std::out_of_range("coefficient beyond the precision");
    if (e < start_ || c_.empty()) return 0;
    return c_[static_cast<std::size_t>(e - start_)];
}

Series Series::combine(const Series& o, bool subtract) const {
    const GaloisField* f = f_ ? f_ : o.f_;
    const long prec = std::min(prec_, o.prec_);
    long start = prec;
    if (!c_.empty()) start = std::min(start, start_);
    if (!o.c_.empty()) start = std::min(start, o.start_);
    Series r(f, prec);
    if (start >= prec) return r;
    r.start_ = start;
    r.c_.assign(static_cast<std::size_t>(prec - start), 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        const long e = start_ + static_cast<long>(i);
        if (e >= prec) break;
        r.c_[static_cast<std::size_t>(e - start)] = c_[i];
    }
    for (std::size_t i = 0; i < o.c_.size(); ++i) {
        const long e = o.start_ + static_cast<long>(i);
        if (e >= prec) break;
        Elem& slot = r.c_[static_cast<std::size_t>(e - start)];
        slot = subtract ? f->sub(slot, o.c_[i]) : f->add(slot, o.c_[i]);
    }
    r.normalize();
    return r;
}

Series Series::operator-() const {
    Series r = *this;
    for (auto& x : r.c_) x = f_->neg(x);
    return r;
}

Series Series::operator*(const Series& o) const {
    const GaloisField* f = f_ ? f_ : o.f_;
    // Unknown digits of each factor are multiplied by the other's valuation.
    const long va = c_.empty() ? prec_ : start_;
    const long vb = o.c_.empty() ? o.prec_ : o.start_;
    const long prec = std::min(prec_ + vb, o.prec_ + va);
    Series r(f, prec);
    if (c_.empty() || o.c_.empty() || va + vb >= prec) return r;
    const long start = va + vb;
    const auto len = static_cast<std::size_t>(prec - start);
    r.start_ = start;
    r.c_.assign(len, 0);
    const std::size_t na = std::min(c_.size(), len), nb = std::min(o.c_.size(), len);
    if (f->tabulated()) {
        constexpr std::uint32_t kZero = ~0u;
        std::vector<std::uint32_t> la(na), lb(nb);
        for (std::size_t i = 0; i < na; ++i) la[i] = c_[i] ? f->log(c_[i]) : kZero;
        for (std::size_t j = 0; j < nb; ++j) lb[j] = o.c_[j] ? f->log(o.c_[j]) : kZero;
        const bool binary = f->characteristic() == 2;
        for (std::size_t i = 0; i < na; ++i) {
            if (la[i] == kZero) continue;
            const std::size_t lim = std::min(nb, len - i);
            Elem* out = r.c_.data() + i;
            for (std::size_t j = 0; j < lim; ++j) {
                if (lb[j] == kZero) continue;
                const Elem t = f->exp(la[i] + lb[j]);
                out[j] = binary ? (out[j] ^ t) : f->add(out[j], t);
            }
        }
    } else {
        for (std::size_t i = 0; i < na; ++i) {
            if (!c_[i]) continue;
            const std::size_t lim = std::min(nb, len - i);
            for (std::size_t j = 0; j < lim; ++j) r.c_[i + j] = f->add(r.c_[i + j], f->mul(c_[i], o.c_[j]));
        }
    }
    r.normalize();
    return r;
}

Series Series::inverse() const {
    if (c_.empty()) throw std::domain_error("inverse of a series that vanishes to its precision");
    const std::size_t n = c_.size();
    std::vector<Elem> out(n, 0);
    const Elem u = f_->inv(c_[0]);
    out[0] = u;
    for (std::size_t k = 1; k < n; ++k) {
        Elem s = 0;
        for (std::size_t j = 1; j <= k; ++j) s = f_->add(s, f_->mul(c_[j], out[k - j]));
        out[k] = f_->neg(f_->mul(s, u));
    }
    return from_coeffs(f_, -start_, std::move(out), -start_ + static_cast<long>(n));
}

Series Series::frobenius(unsigned times) const {
    Series r = *this;
    for (auto& x : r.c_) x = f_->frobenius(x, times);
    return r;
}

Series Series::truncated(long precision) const {
    if (precision >= prec_) return *this;
    Series r(f_, precision);
    if (c_.empty() || start_ >= precision) return r;
    return from_coeffs(f_, start_, std::vector<Elem>(c_.begin(), c_.begin() + (precision - start_)), precision);
}

Series Series::shifted(long k) const {
    Series r = *this;
    r.start_ += k;
    r.prec_ += k;
    return r;
}

std::string Series::to_string() const {
    std::string s;
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (!c_[i]) continue;
        if (!s.empty()) s += " + ";
        s += "(" + f_->to_string(c_[i]) + ")*w^" + std::to_string(start_ + static_cast<long>(i));
    }
    if (!s.empty()) s += " + ";
    return s + "O(w^" + std::to_string(prec_) + ")";
}

}  // namespace ctori
