// SPDX-License-Identifier: MIT
#include "ctori/matrix.hpp"

#include <limits>
#include <sstream>

namespace ctori {

IntMatrix to_big(const SmallMatrix& m) { return m.cast<BigInt>(); }

SmallMatrix to_small(const IntMatrix& m) {
    SmallMatrix out(m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j) {
            const BigInt& x = m(i, j);
            if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
                throw std::overflow_error("entry does not fit in 64 bits");
            out(i, j) = x.convert_to<long long>();
        }
    return out;
}

IntVec to_big(const SmallVec& v) { return IntVec(v.begin(), v.end()); }

SmallVec to_small(const IntVec& v) {
    SmallVec out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (x > std::numeric_limits<long long>::max() || x < std::numeric_limits<long long>::min())
            throw std::overflow_error("entry does not fit in 64 bits");
        out.push_back(x.convert_to<long long>());
    }
    return out;
}

RatVec to_rational(const SmallVec& v) {
    RatVec out;
    out.reserve(v.size());
    for (long long x : v) out.emplace_back(x);
    return out;
}

std::string to_string(const Rational& r) {
    std::ostringstream os;
    os << numerator(r);
    if (denominator(r) != 1) os << '/' << denominator(r);
    return os.str();
}

template <class V, class F>
static std::string join(const V& v, F f) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + f(v[i]);
    return s + ")";
}

std::string to_string(const RatVec& v) {
    return join(v, [](const Rational& r) { return to_string(r); });
}
std::string to_string(const SmallVec& v) {
    return join(v, [](long long x) { return std::to_string(x); });
}
std::string to_string(const IntVec& v) {
    return join(v, [](const BigInt& x) { return x.str(); });
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m) {
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && m(p, c) == 0) ++p;
        if (p == m.rows()) continue;
        m.swap_rows(r, p);
        Rational inv = 1 / m(r, c);
        for (std::size_t j = 0; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i)
            if (i != r && m(i, c) != 0) m.add_row(i, r, -m(i, c));
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

}  // namespace

RatVec solve_rational(const RatMatrix& a, const RatVec& b) {
    if (b.size() != a.rows()) throw std::invalid_argument("solve_rational: size mismatch");
    RatMatrix aug(a.rows(), a.cols() + 1);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) aug(i, j) = a(i, j);
        aug(i, a.cols()) = b[i];
    }
    auto piv = rref(aug);
    if (!piv.empty() && piv.back() == a.cols()) throw std::domain_error("solve_rational: inconsistent system");
    if (piv.size() != a.cols()) throw std::domain_error("solve_rational: solution not unique");
    RatVec x(a.cols());
    for (std::size_t i = 0; i < piv.size(); ++i) x[piv[i]] = aug(i, a.cols());
    return x;
}

RatMatrix inverse(const RatMatrix& a) {
    if (a.rows() != a.cols()) throw std::invalid_argument("inverse: not square");
    std::size_t n = a.rows();
    RatMatrix aug = a.hcat(RatMatrix::identity(n));
    auto piv = rref(aug);
    if (piv.size() < n || piv[n - 1] != n - 1) throw std::domain_error("inverse: singular matrix");
    return aug.column_block(n, n);
}

std::size_t rank(const RatMatrix& a) {
    RatMatrix m = a;
    return rref(m).size();
}

}  // namespace ctori
