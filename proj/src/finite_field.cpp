// SPDX-License-Identifier: MIT
#include "ctori/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <stdexcept>

namespace ctori {

namespace {

using u128 = unsigned __int128;

void trim(FpPoly& f) {
    while (!f.empty() && f.back() == 0) f.pop_back();
}

std::uint32_t inv_mod(std::uint32_t a, std::uint64_t p) {
    std::uint64_t r = 1, b = a, e = p - 2;
    while (e) {
        if (e & 1) r = r * b % p;
        b = b * b % p;
        e >>= 1;
    }
    return static_cast<std::uint32_t>(r);
}

FpPoly poly_mod(FpPoly a, const FpPoly& f, std::uint64_t p) {
    trim(a);
    const std::size_t df = f.size() - 1;
    const std::uint32_t lead_inv = inv_mod(f.back(), p);
    while (a.size() > df) {
        const std::uint64_t c = static_cast<std::uint64_t>(a.back()) * lead_inv % p;
        const std::size_t shift = a.size() - 1 - df;
        for (std::size_t i = 0; i <= df; ++i)
            a[shift + i] = static_cast<std::uint32_t>((a[shift + i] + (p - c) * f[i] % p) % p);
        trim(a);
    }
    return a;
}

FpPoly poly_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& f, std::uint64_t p) {
    if (a.empty() || b.empty()) return {};
    FpPoly c(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j)
            c[i + j] = static_cast<std::uint32_t>((c[i + j] + static_cast<std::uint64_t>(a[i]) * b[j]) % p);
    return poly_mod(std::move(c), f, p);
}

FpPoly poly_powmod(FpPoly a, std::uint64_t e, const FpPoly& f, std::uint64_t p) {
    FpPoly r{1};
    a = poly_mod(std::move(a), f, p);
    while (e) {
        if (e & 1) r = poly_mulmod(r, a, f, p);
        a = poly_mulmod(a, a, f, p);
        e >>= 1;
    }
    return r;
}

FpPoly poly_sub(FpPoly a, const FpPoly& b, std::uint64_t p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = static_cast<std::uint32_t>((a[i] + p - b[i]) % p);
    trim(a);
    return a;
}

FpPoly poly_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        FpPoly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::pair<std::uint64_t, unsigned> prime_power(std::uint64_t q) {
    if (q < 2) throw std::invalid_argument("q must be a prime power");
    auto f = prime_factors(q);
    if (f.size() != 1) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
    unsigned r = 0;
    while (q > 1) {
        q /= f[0];
        ++r;
    }
    return {f[0], r};
}

bool is_irreducible(const FpPoly& f0, std::uint64_t p) {
    FpPoly f = f0;
    trim(f);
    if (f.size() < 2) return false;
    const auto n = static_cast<unsigned>(f.size() - 1);
    const FpPoly x{0, 1};
    auto frob_iter = [&](unsigned times) {
        FpPoly r = poly_mod(x, f, p);
        for (unsigned i = 0; i < times; ++i) r = poly_powmod(r, p, f, p);
        return r;
    };
    const FpPoly xr = poly_mod(x, f, p);
    if (!poly_mod(poly_sub(frob_iter(n), xr, p), f, p).empty()) return false;
    for (std::uint64_t r : prime_factors(n)) {
        FpPoly g = poly_gcd(f, poly_sub(frob_iter(static_cast<unsigned>(n / r)), xr, p), p);
        if (g.size() != 1) return false;
    }
    return true;
}

FpPoly first_irreducible(std::uint64_t p, unsigned degree) {
    if (degree == 0) throw std::invalid_argument("degree must be positive");
    FpPoly f(degree + 1, 0);
    f[degree] = 1;
    for (;;) {
        if (is_irreducible(f, p)) return f;
        std::size_t i = 0;
        while (i < degree && ++f[i] == p) f[i++] = 0;
        if (i == degree) throw std::logic_error("no irreducible polynomial found");
    }
}

std::string poly_to_string(const FpPoly& f) {
    std::string s;
    for (std::size_t i = f.size(); i-- > 0;) {
        if (f[i] == 0) continue;
        if (!s.empty()) s += " + ";
        if (f[i] != 1 || i == 0) s += std::to_string(f[i]);
        if (i > 0) s += (f[i] != 1 ? "*x" : "x") + (i > 1 ? "^" + std::to_string(i) : std::string());
    }
    return s.empty() ? "0" : s;
}

std::shared_ptr<const GaloisField> GaloisField::get(std::uint64_t p, unsigned k) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, std::shared_ptr<const GaloisField>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, k}];
    if (!slot) slot = std::make_shared<const GaloisField>(p, k);
    return slot;
}

GaloisField::GaloisField(std::uint64_t p, unsigned k) : p_(p), k_(k) {
    if (!is_prime(p) || p >= (1u << 31)) throw std::invalid_argument("characteristic must be a small prime");
    if (k == 0) throw std::invalid_argument("degree must be positive");
    u128 order = 1;
    for (unsigned i = 0; i < k; ++i) {
        order *= p;
        if (order > (static_cast<u128>(1) << 64)) throw std::invalid_argument("field too large for 64-bit codes");
    }
    units_ = static_cast<std::uint64_t>(order - 1);
    modulus_ = first_irreducible(p, k);

    if (order <= (1u << 16)) {
        order_small_ = static_cast<std::uint64_t>(order);
        const std::uint64_t q = order_small_;
        if (p != 2 && q <= 1024) {
            add_table_.resize(q * q);
            for (Elem a = 0; a < q; ++a)
                for (Elem b = 0; b < q; ++b) add_table_[a * q + b] = add_slow(a, b, false);
        }
        neg_table_.resize(q);
        for (Elem a = 0; a < q; ++a) neg_table_[a] = add_slow(0, a, true);
        // Search for a generator of the unit group.
        const auto primes = prime_factors(units_);
        Elem g = 0;
        for (Elem cand = 1; cand < q && !g; ++cand) {
            bool ok = true;
            for (auto r : primes)
                if (pow(cand, units_ / r) == 1) ok = false;
            if (ok) g = cand;
        }
        if (!g) throw std::logic_error("no generator found");
        exp_.resize(2 * units_);
        log_.assign(q, 0);
        Elem x = 1;
        for (std::uint64_t e = 0; e < units_; ++e) {
            exp_[e] = exp_[e + units_] = x;
            log_[x] = static_cast<std::uint32_t>(e);
            x = mul_slow(x, g);
        }
    }
}

std::vector<std::uint32_t> GaloisField::digits(Elem a) const {
    std::vector<std::uint32_t> d(k_, 0);
    if (p_ == 2) {
        for (unsigned i = 0; i < k_; ++i) d[i] = static_cast<std::uint32_t>((a >> i) & 1);
        return d;
    }
    for (unsigned i = 0; i < k_; ++i) {
        d[i] = static_cast<std::uint32_t>(a % p_);
        a /= p_;
    }
    return d;
}

GaloisField::Elem GaloisField::from_digits(const std::vector<std::uint32_t>& d) const {
    if (p_ == 2) {
        Elem a = 0;
        for (unsigned i = 0; i < k_ && i < d.size(); ++i) a |= static_cast<Elem>(d[i] & 1) << i;
        return a;
    }
    u128 a = 0;
    for (unsigned i = std::min<std::size_t>(k_, d.size()); i-- > 0;) a = a * p_ + d[i] % p_;
    return static_cast<Elem>(a);
}

GaloisField::Elem GaloisField::add_slow(Elem a, Elem b, bool subtract) const {
    if (p_ == 2) return a ^ b;
    auto da = digits(a), db = digits(b);
    for (unsigned i = 0; i < k_; ++i)
        da[i] = static_cast<std::uint32_t>((da[i] + (subtract ? p_ - db[i] : db[i])) % p_);
    return from_digits(da);
}

GaloisField::Elem GaloisField::neg(Elem a) const {
    if (p_ == 2) return a;
    if (!neg_table_.empty()) return neg_table_[a];
    return add_slow(0, a, true);
}

GaloisField::Elem GaloisField::mul_slow(Elem a, Elem b) const {
    if (p_ == 2) {
        // Carry-less product, reduced by the modulus one bit at a time.
        Elem low = 0;
        u128 acc = 0;
        for (unsigned i = 0; i < k_; ++i)
            if ((b >> i) & 1) acc ^= static_cast<u128>(a) << i;
        Elem red = 0;
        for (unsigned i = 0; i < k_; ++i)
            if (modulus_[i]) red |= static_cast<Elem>(1) << i;
        for (unsigned i = 2 * k_; i-- > k_;)
            if ((acc >> i) & 1) {
                acc ^= static_cast<u128>(1) << i;
                acc ^= static_cast<u128>(red) << (i - k_);
            }
        low = static_cast<Elem>(acc);
        if (k_ < 64) low &= (static_cast<Elem>(1) << k_) - 1;
        return low;
    }
    FpPoly pa = digits(a), pb = digits(b);
    return from_digits(poly_mulmod(pa, pb, modulus_, p_));
}

GaloisField::Elem GaloisField::pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
        if (e & 1) r = mul(r, a);
        a = mul(a, a);
        e >>= 1;
    }
    return r;
}

GaloisField::Elem GaloisField::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    if (!log_.empty()) return exp_[(units_ - log_[a]) % units_];
    return pow(a, units_ - 1);
}

GaloisField::Elem GaloisField::frobenius(Elem a, unsigned times) const {
    times %= k_;
    if (a == 0 || times == 0) return a;
    if (!log_.empty()) {
        std::uint64_t e = log_[a];
        for (unsigned i = 0; i < times; ++i) e = e * p_ % units_;
        return exp_[e];
    }
    for (unsigned i = 0; i < times; ++i) a = pow(a, p_);
    return a;
}

GaloisField::Elem GaloisField::random(std::mt19937_64& rng) const {
    if (units_ == ~static_cast<std::uint64_t>(0)) return rng();
    return std::uniform_int_distribution<std::uint64_t>(0, units_)(rng);
}

std::string GaloisField::to_string(Elem a) const { return poly_to_string(digits(a)); }

}  // namespace ctori
