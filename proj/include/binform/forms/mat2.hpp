#pragma once

/**
 * @file mat2.hpp
 * @brief 2x2 rational matrices acting on column vectors.
 */

#include <array>
#include <compare>
#include <ostream>
#include <string>
#include <utility>

#include "binform/arith/rat.hpp"

namespace binform {

/// Row-major (a b; c d). Acts on column vectors: (x, y) -> (ax + by, cx + dy).
struct Mat2 {
    Rat a{1}, b{0}, c{0}, d{1};

    Mat2() = default;
    Mat2(Rat a_, Rat b_, Rat c_, Rat d_) : a(std::move(a_)), b(std::move(b_)), c(std::move(c_)), d(std::move(d_)) {}

    static Mat2 identity() { return {}; }
    static Mat2 diag(const Rat& x, const Rat& y) { return {x, 0, 0, y}; }
    static Mat2 scalar(const Rat& s) { return {s, 0, 0, s}; }

    std::array<Rat, 4> entries() const { return {a, b, c, d}; }

    Rat det() const { return a * d - b * c; }
    Rat trace() const { return a + d; }

    bool is_integral() const { return a.is_integer() && b.is_integer() && c.is_integer() && d.is_integer(); }
    /// Element of GL(2, Z).
    bool is_unimodular() const {
        if (!is_integral()) return false;
        const Rat dt = det();
        return dt == Rat(1) || dt == Rat(-1);
    }
    bool is_zero() const { return a.is_zero() && b.is_zero() && c.is_zero() && d.is_zero(); }

    Mat2 inverse() const {
        const Rat dt = det();
        ensure(!dt.is_zero(), ErrorKind::SingularMatrix, "inverse of singular matrix");
        return {d / dt, -b / dt, -c / dt, a / dt};
    }

    std::pair<Rat, Rat> apply(const Rat& x, const Rat& y) const { return {a * x + b * y, c * x + d * y}; }

    friend Mat2 operator*(const Mat2& m, const Mat2& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d, m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend Mat2 operator*(const Rat& s, const Mat2& m) { return {s * m.a, s * m.b, s * m.c, s * m.d}; }
    friend Mat2 operator-(const Mat2& m) { return {-m.a, -m.b, -m.c, -m.d}; }

    friend bool operator==(const Mat2&, const Mat2&) = default;
    friend std::strong_ordering operator<=>(const Mat2& m, const Mat2& n) {
        if (auto o = m.a <=> n.a; o != 0) return o;
        if (auto o = m.b <=> n.b; o != 0) return o;
        if (auto o = m.c <=> n.c; o != 0) return o;
        return m.d <=> n.d;
    }

    /// "[[a,b],[c,d]]"
    std::string str() const {
        return "[[" + a.str() + "," + b.str() + "],[" + c.str() + "," + d.str() + "]]";
    }
    friend std::ostream& operator<<(std::ostream& os, const Mat2& m) { return os << m.str(); }
};

inline Mat2 power(const Mat2& m, unsigned k) {
    Mat2 r;
    for (unsigned i = 0; i < k; ++i) r = r * m;
    return r;
}

/// Multiplicative order if it is at most max_order, else 0.
inline unsigned matrix_order(const Mat2& m, unsigned max_order = 12) {
    Mat2 p = m;
    for (unsigned k = 1; k <= max_order; ++k) {
        if (p == Mat2::identity()) return k;
        p = p * m;
    }
    return 0;
}

/// R = (0 1; -1 -1), the order-3 generator of C3.
inline Mat2 matrix_R() { return {0, 1, -1, -1}; }
inline Mat2 matrix_swap() { return {0, 1, 1, 0}; }

} // namespace binform
