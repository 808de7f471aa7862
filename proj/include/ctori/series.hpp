// SPDX-License-Identifier: MIT
#pragma once

#include "ctori/finite_field.hpp"

#include <optional>
#include <random>
#include <string>
#include <vector>

namespace ctori {

/// A truncated Laurent series sum c_e w^e + O(w^N) over a finite field. Coefficients are stored
/// densely from the valuation up to the precision N; a series known to vanish modulo w^N
/// stores nothing. Arithmetic keeps the precision pessimistic.
class Series {
public:
    using Elem = GaloisField::Elem;

    Series() = default;
    /// Zero modulo w^precision.
    Series(const GaloisField* f, long precision) : f_(f), start_(precision), prec_(precision) {}
    static Series monomial(const GaloisField* f, Elem c, long exponent, long precision);
    /// Coefficients of w^start, w^(start+1), ...; anything at or beyond precision is dropped.
    static Series from_coeffs(const GaloisField* f, long start, std::vector<Elem> c, long precision);
    /// Random power series with coefficients drawn from `f` up to the precision.
    static Series random(const GaloisField* f, long precision, std::mt19937_64& rng, bool unit = false);

    const GaloisField* field() const { return f_; }
    long precision() const { return prec_; }
    /// nullopt when the series vanishes to the known precision.
    std::optional<long> valuation() const {
        if (c_.empty()) return std::nullopt;
        return start_;
    }
    bool is_zero() const { return c_.empty(); }
    Elem coeff(long e) const;
    /// Exponent of the first stored coefficient.
    long start() const { return start_; }
    const std::vector<Elem>& coeffs() const { return c_; }

    Series operator+(const Series& o) const { return combine(o, false); }
    Series operator-(const Series& o) const { return combine(o, true); }
    Series operator-() const;
    Series operator*(const Series& o) const;
    /// Throws std::domain_error if the series vanishes to its precision.
    Series inverse() const;
    /// Coefficientwise x -> x^(p^times).
    Series frobenius(unsigned times) const;
    Series truncated(long precision) const;
    /// Multiplication by w^k.
    Series shifted(long k) const;

    std::string to_string() const;

private:
    Series combine(const Series& o, bool subtract) const;
    void normalize();

    const GaloisField* f_ = nullptr;
    long start_ = 0;
    long prec_ = 0;
    std::vector<Elem> c_;
};

}  // namespace ctori
