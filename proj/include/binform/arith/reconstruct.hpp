#pragma once

/**
 * @file reconstruct.hpp
 * @brief Rational reconstruction by continued fractions.
 */

#include <optional>

#include "binform/arith/bigfloat.hpp"
#include "binform/arith/rat.hpp"

namespace binform {

/// Default denominator bound for reconstruction.
inline const Int kDefaultDenomBound{1000000};

/**
 * The unique p/q with 1 <= q <= bound and |x - p/q| <= 1/(2 bound^2), if any.
 *
 * Two distinct fractions with denominators <= bound are at least 1/bound^2
 * apart, so at most one qualifies. The best approximation with denominator
 * <= bound is the last convergent or the largest admissible semiconvergent;
 * both are tested.
 */
inline std::optional<Rat> rational_reconstruct(const Rat& x, const Int& bound) {
    ensure(bound >= 1, ErrorKind::BadInput, "denominator bound must be >= 1");

    // Convergent recurrences h_k = a_k h_{k-1} + h_{k-2}, likewise for k.
    Int h_prev2 = 0, h_prev = 1;
    Int k_prev2 = 1, k_prev = 0;
    Int num = x.num(), den = x.den();
    Int last_a = 0;
    while (true) {
        const Int a = floor_div(num, den);
        const Int h = a * h_prev + h_prev2;
        const Int k = a * k_prev + k_prev2;
        if (k > bound) {
            last_a = a;
            break;
        }
        h_prev2 = h_prev;
        h_prev = h;
        k_prev2 = k_prev;
        k_prev = k;
        const Int r = num - a * den;
        if (r == 0) break;
        num = den;
        den = r;
    }

    const Rat tol = Rat(Int(1), 2 * bound * bound);
    auto within = [&](const Rat& cand) { return (x - cand).abs() <= tol; };

    const Rat conv(h_prev, k_prev);
    if (within(conv)) return conv;

    // Largest semiconvergent (h_{k-2} + t h_{k-1}) / (k_{k-2} + t k_{k-1}) with denominator <= bound.
    if (last_a > 1 && k_prev > 0) {
        const Int t = floor_div(bound - k_prev2, k_prev);
        if (t >= 1 && t < last_a) {
            const Rat semi(h_prev2 + t * h_prev, k_prev2 + t * k_prev);
            if (within(semi)) return semi;
        }
    }
    return std::nullopt;
}

inline std::optional<Rat> rational_reconstruct(const BigFloat& approx, const Int& bound) {
    return rational_reconstruct(approx.to_rat(), bound);
}

} // namespace binform
