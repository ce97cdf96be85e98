#pragma once

// Conjugating an integral order-3 matrix to R = (0 1; -1 -1) inside GL(2, Z).

#include "binform/forms/binary_form.hpp"
#include "binform/forms/mat2.hpp"

namespace binform {

inline bool has_order_three(const Mat2& a) { return !(a == Mat2::identity()) && power(a, 3) == Mat2::identity(); }

/**
 * For v in Z^2, det[v | Av] = c x^2 + (d - a) xy - b y^2 is a definite
 * binary quadratic form of discriminant -3. Gauss reduction finds v with
 * |det[v | Av]| = 1, and then T = [v | -Av] satisfies A T = T R because
 * A^2 + A + 1 = 0.
 */
inline Mat2 conjugate_order3_to_R(const Mat2& a) {
    ensure(a.is_integral(), ErrorKind::NotIntegral, "matrix must be integral");
    ensure(has_order_three(a), ErrorKind::NotOrderThree, "matrix does not have order 3");

    BinaryForm q({a.c, a.d - a.a, -a.b});
    if (q[0].sign() < 0) q = Rat(-1) * q;
    Mat2 u;
    for (int guard = 0; guard < 1000; ++guard) {
        const Rat &A = q[0], &B = q[1], &C = q[2];
        if (B.abs() > A) {
            // x -> x + k y with k nearest to -B / 2A.
            const Int k = -floor_div(B.num() + A.num(), 2 * A.num());
            const Mat2 t(1, Rat(k), 0, 1);
            q = compose(q, t);
            u = u * t;
        } else if (A > C) {
            const Mat2 t(0, -1, 1, 0);
            q = compose(q, t);
            u = u * t;
        } else {
            break;
        }
    }
    ensure(q[0] == Rat(1), ErrorKind::InternalInvariant, "reduced form of discriminant -3 must start with 1");
    const Rat x = u.a, y = u.c;
    const auto [ax, ay] = a.apply(x, y);
    const Mat2 t(x, -ax, y, -ay);
    ensure(t.is_unimodular() && t.inverse() * a * t == matrix_R(), ErrorKind::InternalInvariant,
           "conjugator failed verification");
    return t;
}

} // namespace binform
