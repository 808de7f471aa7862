#include "ctori/finite_field.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace ctori;

namespace {

// Schoolbook product modulo the field's modulus, on digit vectors.
std::vector<std::uint32_t> slow_mul(const GaloisField& f, GaloisField::Elem a, GaloisField::Elem b) {
    const auto p = f.characteristic();
    const auto x = f.digits(a), y = f.digits(b);
    const std::size_t k = f.degree();
    std::vector<std::uint64_t> prod(2 * k, 0);
    for (std::size_t i = 0; i < k; ++i)
        for (std::size_t j = 0; j < k; ++j) prod[i + j] = (prod[i + j] + std::uint64_t(x[i]) * y[j]) % p;
    const FpPoly& m = f.modulus();
    for (std::size_t d = 2 * k - 1; d >= k; --d) {
        const std::uint64_t c = prod[d];
        if (c == 0) continue;
        for (std::size_t i = 0; i <= k; ++i) prod[d - k + i] = (prod[d - k + i] + (p - c) * m[i]) % p;
    }
    return std::vector<std::uint32_t>(prod.begin(), prod.begin() + static_cast<long>(k));
}

bool brute_irreducible(const FpPoly& f, std::uint64_t p) {
    const std::size_t deg = f.size() - 1;
    for (std::size_t d = 1; d <= deg / 2; ++d) {
        std::uint64_t count = 1;
        for (std::size_t i = 0; i < d; ++i) count *= p;
        for (std::uint64_t code = 0; code < count; ++code) {
            FpPoly g(d + 1, 0);
            std::uint64_t c = code;
            for (std::size_t i = 0; i < d; ++i, c /= p) g[i] = static_cast<std::uint32_t>(c % p);
            g[d] = 1;
            // f mod g
            std::vector<std::uint64_t> r(f.begin(), f.end());
            for (std::size_t top = deg; top >= d; --top) {
                const std::uint64_t q = r[top];
                for (std::size_t i = 0; i <= d; ++i) r[top - d + i] = (r[top - d + i] + (p - q) * g[i]) % p;
                if (top == d) break;
            }
            if (std::all_of(r.begin(), r.begin() + static_cast<long>(d), [](std::uint64_t v) { return v == 0; }))
                return false;
        }
    }
    return true;
}

}  // namespace

TEST(Primes, Basics) {
    std::vector<bool> sieve(200, true);
    sieve[0] = sieve[1] = false;
    for (std::size_t i = 2; i < 200; ++i)
        for (std::size_t j = 2 * i; j < 200; j += i) sieve[j] = false;
    for (std::uint64_t n = 0; n < 200; ++n) EXPECT_EQ(is_prime(n), sieve[n]) << n;
    EXPECT_EQ(prime_power(8), std::make_pair(std::uint64_t(2), 3u));
    EXPECT_EQ(prime_power(25), std::make_pair(std::uint64_t(5), 2u));
    EXPECT_THROW(prime_power(12), std::invalid_argument);
    EXPECT_THROW(prime_power(1), std::invalid_argument);
}

TEST(Irreducible, MatchesTrialDivision) {
    for (std::uint64_t p : {2, 3, 5})
        for (unsigned deg = 1; deg <= (p == 2 ? 7u : 4u); ++deg) {
            const FpPoly f = first_irreducible(p, deg);
            ASSERT_EQ(f.size(), deg + 1);
            EXPECT_TRUE(brute_irreducible(f, p));
            EXPECT_EQ(is_irreducible(f, p), brute_irreducible(f, p));
        }
    EXPECT_FALSE(is_irreducible(FpPoly{1, 0, 1}, 2));  // (x + 1)^2
    EXPECT_TRUE(is_irreducible(FpPoly{1, 1, 1}, 2));
}

TEST(GaloisField, MultiplicationMatchesSchoolbook) {
    std::mt19937_64 rng(1);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 4}, {3, 5}, {5, 3}, {2, 20}, {3, 13}, {7, 9}}) {
        const auto f = GaloisField::get(p, k);
        for (int t = 0; t < 200; ++t) {
            const auto a = f->random(rng), b = f->random(rng);
            EXPECT_EQ(f->digits(f->mul(a, b)), slow_mul(*f, a, b));
        }
    }
}

TEST(GaloisField, FieldAxioms) {
    std::mt19937_64 rng(2);
    for (auto [p, k] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {3, 2}, {5, 2}, {2, 16}, {2, 20}, {2, 64}, {3, 30}}) {
        const auto f = GaloisField::get(p, k);
        for (int t = 0; t < 100; ++t) {
            const auto a = f->random(rng), b = f->random(rng), c = f->random(rng);
            EXPECT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
            EXPECT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
            EXPECT_EQ(f->add(a, f->neg(a)), 0u);
            EXPECT_EQ(f->sub(f->add(a, b), b), a);
            EXPECT_EQ(f->frobenius(a, 1), f->pow(a, p));
            EXPECT_EQ(f->frobenius(a, k), a);
            if (a != 0) {
                EXPECT_EQ(f->mul(a, f->inv(a)), 1u);
                EXPECT_EQ(f->pow(a, f->units_order()), 1u);
            }
        }
    }
}

TEST(GaloisField, TablesGenerateTheUnitGroup) {
    const auto f = GaloisField::get(3, 4);
    ASSERT_TRUE(f->tabulated());
    std::set<GaloisField::Elem> units;
    for (std::uint32_t e = 0; e < f->units_order(); ++e) units.insert(f->exp(e));
    EXPECT_EQ(units.size(), f->units_order());
    for (auto u : units) EXPECT_EQ(f->exp(f->log(u)), u);
}

TEST(GaloisField, DigitsRoundTrip) {
    const auto f = GaloisField::get(5, 6);
    std::mt19937_64 rng(3);
    for (int t = 0; t < 50; ++t) {
        const auto a = f->random(rng);
        EXPECT_EQ(f->from_digits(f->digits(a)), a);
    }
    EXPECT_EQ(f->constant(7), 2u);
}
