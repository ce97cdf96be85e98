#pragma once

/**
 * @file normal_forms.hpp
 * @brief Canonical (N/D)A decomposition and Smith normal form for 2x2 matrices.
 */

#include <array>
#include <ostream>
#include <string>
#include <utility>

#include "binform/forms/mat2.hpp"

namespace binform {

/// M = (N/D) * A with gcd(N, D) = 1, N, D >= 1 and A integral with coprime entries.
struct CanonicalMat {
    Int N;
    Int D;
    Mat2 A;

    Mat2 value() const { return Rat(N, D) * A; }
    std::string str() const { return "(" + N.get_str() + "/" + D.get_str() + ")*" + A.str(); }
    friend bool operator==(const CanonicalMat&, const CanonicalMat&) = default;
};

inline Int content(const Mat2& m) {
    Int g = 0;
    for (const auto& e : m.entries()) g = gcd(g, e.num());
    return g;
}

inline CanonicalMat canonical_form(const Mat2& m) {
    ensure(!m.is_zero(), ErrorKind::ZeroMatrix, "canonical form of the zero matrix");
    Int l = 1;
    for (const auto& e : m.entries()) l = lcm(l, e.den());
    const Mat2 k = Rat(l) * m;
    const Int g = content(k);
    const Rat scale(g, l);
    return {scale.num(), scale.den(), Rat(Int(1), g) * k};
}

/// A = P * S * Q with P, Q unimodular and S = diag(s1, s2), 1 <= s1 | s2.
struct SmithForm {
    Mat2 P;
    Mat2 S;
    Mat2 Q;
};

namespace detail {

// Left multiplication acts on rows, right multiplication on columns.
// Invariant throughout: U * A0 * V = A.
struct SnfState {
    Mat2 U, A, V;

    void rows(const Mat2& t) {
        A = t * A;
        U = t * U;
    }
    void cols(const Mat2& t) {
        A = A * t;
        V = V * t;
    }
};

} // namespace detail

inline SmithForm smith_normal_form(const Mat2& a0) {
    ensure(a0.is_integral(), ErrorKind::BadInput, "Smith form needs an integral matrix");
    ensure(!a0.det().is_zero(), ErrorKind::SingularMatrix, "Smith form of a singular matrix");
    detail::SnfState st{Mat2::identity(), a0, Mat2::identity()};

    for (int guard = 0; guard < 256; ++guard) {
        if (st.A.a.is_zero()) {
            // det != 0, so some entry of the first row or column is nonzero.
            if (!st.A.c.is_zero()) st.rows(matrix_swap());
            else st.cols(matrix_swap());
        }
        if (!st.A.c.is_zero()) {
            Int s, t;
            const Int x = st.A.a.num(), y = st.A.c.num();
            const Int g = xgcd(x, y, s, t);
            st.rows(Mat2(Rat(s), Rat(t), Rat(Int(-y / g)), Rat(Int(x / g))));
        }
        if (!st.A.b.is_zero()) {
            Int s, t;
            const Int x = st.A.a.num(), y = st.A.b.num();
            const Int g = xgcd(x, y, s, t);
            st.cols(Mat2(Rat(s), Rat(Int(-y / g)), Rat(t), Rat(Int(x / g))));
            continue; // the column step may refill A.c
        }
        if (!st.A.c.is_zero()) continue;
        if (!divides(st.A.a.num(), st.A.d.num())) {
            st.rows(Mat2(1, 1, 0, 1)); // moves d into the b slot
            continue;
        }
        break;
    }
    ensure(st.A.b.is_zero() && st.A.c.is_zero(), ErrorKind::InternalInvariant, "Smith iteration did not settle");
    if (st.A.a.sign() < 0) st.rows(Mat2::diag(-1, 1));
    if (st.A.d.sign() < 0) st.cols(Mat2::diag(1, -1));
    return {st.U.inverse(), st.A, st.V.inverse()};
}

} // namespace binform
