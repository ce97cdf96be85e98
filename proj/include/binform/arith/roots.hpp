#pragma once

/**
 * @file roots.hpp
 * @brief Complex root isolation for squarefree univariate polynomials.
 *
 * Approximations come from the Aberth-Ehrlich iteration. Enclosures use the
 * Weierstrass correction W_i = p(z_i) / (a_n prod_{j != i} (z_i - z_j)):
 * the disks D(z_i, n |W_i|) contain every root, and a connected component of
 * k disks contains exactly k roots. Pairwise disjoint disks therefore isolate
 * one root each. Rounding is absorbed by inflating the radius with a running
 * error bound on the Horner evaluation.
 */

#include <cmath>
#include <span>
#include <vector>

#include "binform/arith/bigfloat.hpp"
#include "binform/arith/rat.hpp"

namespace binform {

struct ComplexBall {
    BigFloat real_mid;
    BigFloat imag_mid;
    BigFloat radius;

    BigComplex mid() const { return {real_mid, imag_mid}; }
};

namespace detail {

/// Horner evaluation of p and p' at z; coefficients in descending order.
inline void horner(std::span<const BigFloat> coeffs, const BigComplex& z, BigComplex& p, BigComplex& dp) {
    const mpfr_prec_t prec = z.prec();
    p = BigComplex(prec);
    dp = BigComplex(prec);
    for (const auto& c : coeffs) {
        dp = dp * z + p;
        p = p * z;
        p.re += c;
    }
}

inline std::vector<BigComplex> initial_guesses(std::span<const Rat> poly, mpfr_prec_t prec) {
    const std::size_t n = poly.size() - 1;
    const double lead = std::fabs(poly[0].to_double());
    double radius = 0.0;
    for (std::size_t k = 1; k <= n; ++k) {
        const double ratio = std::fabs(poly[k].to_double()) / lead;
        if (ratio > 0) radius = std::max(radius, std::pow(ratio, 1.0 / static_cast<double>(k)));
    }
    if (radius == 0.0) radius = 1.0;
    std::vector<BigComplex> z;
    z.reserve(n);
    const double two_pi = 6.283185307179586;
    for (std::size_t j = 0; j < n; ++j) {
        const double theta = two_pi * static_cast<double>(j) / static_cast<double>(n) + 0.7;
        z.emplace_back(BigFloat(radius * std::cos(theta), prec), BigFloat(radius * std::sin(theta), prec));
    }
    return z;
}

/// Runs Aberth steps until corrections fall below the working precision.
inline void aberth(std::span<const BigFloat> coeffs, std::vector<BigComplex>& z, mpfr_prec_t prec) {
    const std::size_t n = z.size();
    const BigFloat one(1L, prec);
    const BigFloat tiny = BigFloat::pow2(-static_cast<long>(prec) + 12, prec);
    const int max_iter = 200 + static_cast<int>(prec / 4);
    BigComplex p(prec), dp(prec);
    for (int iter = 0; iter < max_iter; ++iter) {
        bool converged = true;
        for (std::size_t i = 0; i < n; ++i) {
            horner(coeffs, z[i], p, dp);
            if (p.re.is_zero() && p.im.is_zero()) continue;
            if (dp.re.is_zero() && dp.im.is_zero()) {
                // Stationary point: nudge off it.
                z[i].re += BigFloat::pow2(-20, prec);
                converged = false;
                continue;
            }
            const BigComplex ratio = p / dp;
            BigComplex s(prec);
            for (std::size_t j = 0; j < n; ++j) {
                if (j == i) continue;
                const BigComplex diff = z[i] - z[j];
                if (diff.re.is_zero() && diff.im.is_zero()) continue;
                s = s + BigComplex(one, BigFloat(prec)) / diff;
            }
            const BigComplex denom = BigComplex(one, BigFloat(prec)) - ratio * s;
            const BigComplex w = (denom.re.is_zero() && denom.im.is_zero()) ? ratio : ratio / denom;
            z[i] = z[i] - w;
            BigFloat scale = abs(z[i]);
            if (scale < one) scale = one;
            if (abs(w) > tiny * scale) converged = false;
        }
        if (converged) return;
    }
}

/// Inclusion radii, or an empty vector when some radius cannot be bounded.
inline std::vector<BigFloat> inclusion_radii(std::span<const BigFloat> coeffs, const std::vector<BigComplex>& z,
                                             mpfr_prec_t prec) {
    const std::size_t n = z.size();
    const BigFloat unit = BigFloat::pow2(1 - static_cast<long>(prec), prec);
    const BigFloat nn(static_cast<long>(n), prec);
    const BigFloat slack_up = BigFloat(1L, prec) + BigFloat(8L * static_cast<long>(n), prec) * unit;
    const BigFloat slack_down = BigFloat(1L, prec) - BigFloat(8L * static_cast<long>(n), prec) * unit;
    std::vector<BigFloat> radii;
    radii.reserve(n);
    BigComplex p(prec), dp(prec);
    for (std::size_t i = 0; i < n; ++i) {
        horner(coeffs, z[i], p, dp);
        // Running bound on the Horner error: 8 n u sum |a_k| |z|^(n-k).
        const BigFloat az = abs(z[i]);
        BigFloat mag(prec);
        for (const auto& c : coeffs) mag = mag * az + abs(c);
        const BigFloat eval_err = BigFloat(8L * static_cast<long>(n + 1), prec) * unit * mag;
        BigFloat denom = abs(coeffs[0]);
        for (std::size_t j = 0; j < n; ++j)
            if (j != i) denom = denom * abs(z[i] - z[j]);
        denom = denom * slack_down;
        if (denom.sign() <= 0) return {};
        radii.push_back(nn * (abs(p) + eval_err) / denom * slack_up);
    }
    return radii;
}

} // namespace detail

/**
 * One ball per complex root of a squarefree polynomial given by its
 * coefficients in descending order. Balls are pairwise disjoint and have
 * radius <= 2^(-precision_bits/2). Precision doubles from precision_bits up
 * to max_precision_bits; beyond that PrecisionExhausted is raised.
 * Output is sorted lexicographically by (real, imaginary) midpoint.
 */
inline std::vector<ComplexBall> isolate_roots(std::span<const Rat> poly, long precision_bits,
                                              long max_precision_bits = 4096) {
    ensure(poly.size() >= 2, ErrorKind::BadInput, "polynomial must have degree >= 1");
    ensure(!poly[0].is_zero(), ErrorKind::BadInput, "leading coefficient must be nonzero");
    ensure(precision_bits >= 16 && precision_bits <= max_precision_bits, ErrorKind::BadInput,
           "precision_bits must lie in [16, max_precision_bits]");
    const std::size_t n = poly.size() - 1;

    mpfr_prec_t prec = std::max<long>(64, precision_bits);
    std::vector<BigComplex> z;
    while (prec <= max_precision_bits) {
        std::vector<BigFloat> coeffs;
        coeffs.reserve(poly.size());
        for (const auto& c : poly) coeffs.emplace_back(c, prec);

        if (z.empty()) {
            z = detail::initial_guesses(poly, prec);
        } else {
            for (auto& zi : z) zi = BigComplex(zi.re.with_prec(prec), zi.im.with_prec(prec));
        }
        if (n == 1) {
            z = {BigComplex(BigFloat(-poly[1] / poly[0], prec), BigFloat(prec))};
        } else {
            detail::aberth(coeffs, z, prec);
        }

        const auto radii = detail::inclusion_radii(coeffs, z, prec);
        bool ok = radii.size() == n;
        const BigFloat cap = BigFloat::pow2(-precision_bits / 2, prec);
        for (std::size_t i = 0; ok && i < n; ++i) {
            if (radii[i] > cap) ok = false;
            for (std::size_t j = i + 1; ok && j < n; ++j)
                if (abs(z[i] - z[j]) <= radii[i] + radii[j]) ok = false;
        }
        if (ok) {
            std::vector<ComplexBall> balls;
            balls.reserve(n);
            for (std::size_t i = 0; i < n; ++i) balls.push_back({z[i].re, z[i].im, radii[i]});
            std::sort(balls.begin(), balls.end(), [](const ComplexBall& a, const ComplexBall& b) {
                if (a.real_mid < b.real_mid) return true;
                if (b.real_mid < a.real_mid) return false;
                return a.imag_mid < b.imag_mid;
            });
            return balls;
        }
        prec *= 2;
    }
    fail(ErrorKind::PrecisionExhausted,
         "root balls not disjoint at maximum precision " + std::to_string(max_precision_bits));
}

} // namespace binform
