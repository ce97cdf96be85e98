#pragma once

/**
 * @file isomorphisms.hpp
 * @brief Rational isomorphisms F o rho = G between binary forms.
 *
 * If F o rho = G then rho sends the projective zeros of G onto those of F.
 * Fixing three zeros of G, every ordered triple of distinct zeros of F
 * determines one Moebius map; real candidates are reconstructed as rational
 * matrices up to scale, the scale is fixed with an exact d-th root, and only
 * exactly verified matrices are kept. Numerics can therefore only lose a
 * candidate (reported as an error), never add a wrong one.
 */

#include <array>
#include <cmath>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "binform/arith/reconstruct.hpp"
#include "binform/arith/roots.hpp"
#include "binform/config.hpp"
#include "binform/forms/binary_form.hpp"

namespace binform {

/// All rho with source o rho = target; sorted, exact.
struct IsomSet {
    BinaryForm source;
    BinaryForm target;
    std::vector<Mat2> elements;

    bool empty() const { return elements.empty(); }
};

namespace detail {

struct PPoint {
    BigComplex x, y;
};

struct CMat {
    BigComplex a, b, c, d;

    CMat operator*(const CMat& o) const {
        return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
    }
    PPoint apply(const PPoint& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
};

inline BigComplex cone(long prec) { return {BigFloat(1L, prec), BigFloat(prec)}; }

/// Zeros of F in P^1(C), the point at infinity (1:0) last when Y divides F.
inline std::vector<PPoint> projective_roots(const BinaryForm& f, long prec, long max_prec) {
    std::span<const Rat> poly(f.coeffs());
    const bool at_infinity = poly[0].is_zero();
    if (at_infinity) poly = poly.subspan(1);
    std::vector<PPoint> out;
    for (const auto& ball : isolate_roots(poly, prec, max_prec))
        out.push_back({BigComplex(ball.real_mid.with_prec(prec), ball.imag_mid.with_prec(prec)), cone(prec)});
    if (at_infinity) out.push_back({cone(prec), BigComplex(prec)});
    return out;
}

inline BigFloat pnorm(const PPoint& p) { return sqrt(abs(p.x) * abs(p.x) + abs(p.y) * abs(p.y)); }

/// Columns alpha p1, beta p2 with p3 = alpha p1 + beta p2.
inline CMat frame(const PPoint& p1, const PPoint& p2, const PPoint& p3) {
    const BigComplex det = p1.x * p2.y - p2.x * p1.y;
    const BigComplex alpha = (p3.x * p2.y - p2.x * p3.y) / det;
    const BigComplex beta = (p1.x * p3.y - p3.x * p1.y) / det;
    return {alpha * p1.x, beta * p2.x, alpha * p1.y, beta * p2.y};
}

inline CMat cinverse(const CMat& m) {
    const BigComplex det = m.a * m.d - m.b * m.c;
    return {m.d / det, -m.b / det, -m.c / det, m.a / det};
}

/// Outcome for one ordered triple of target zeros.
enum class Candidate { Rejected, Found, Unreconstructed };

struct IsomSearch {
    const BinaryForm& f;
    const BinaryForm& g;
    int d;
    std::set<Mat2> found;

    /// Adds lambda * m0 for each rational lambda with F o (lambda m0) = G.
    bool accept_projective(const Mat2& m0) {
        if (m0.det().is_zero()) return false;
        const BinaryForm h = compose(f, m0);
        std::size_t i = 0;
        while (i < h.coeffs().size() && h[i].is_zero()) ++i;
        if (i == h.coeffs().size() || g[i].is_zero()) return false;
        const Rat c = g[i] / h[i];
        if (!(c * h == g)) return false;
        const auto lambda = rational_dth_root(c, static_cast<unsigned long>(d));
        if (!lambda) return false;
        bool any = false;
        for (const Rat& s : {*lambda, -*lambda}) {
            const Mat2 rho = s * m0;
            if (compose(f, rho) == g) {
                found.insert(rho);
                any = true;
            }
            if (d % 2 == 1) break;
        }
        return any;
    }

    Candidate try_triple(const std::vector<PPoint>& fr, const std::vector<PPoint>& gr, std::size_t i, std::size_t j,
                         std::size_t k, const Int& bound, long prec) {
        const CMat m = frame(fr[i], fr[j], fr[k]) * cinverse(frame(gr[0], gr[1], gr[2]));
        // Normalize by the entry of largest modulus.
        const BigComplex* pivot = &m.a;
        for (const BigComplex* e : {&m.b, &m.c, &m.d})
            if (abs(*e) > abs(*pivot)) pivot = e;
        const BigComplex piv = *pivot;
        const CMat n{m.a / piv, m.b / piv, m.c / piv, m.d / piv};
        const BigFloat tol = BigFloat::pow2(-prec / 4, prec);
        for (const BigComplex* e : {&n.a, &n.b, &n.c, &n.d})
            if (abs(e->im) > tol) return Candidate::Rejected;
        // The remaining zeros of G must land on zeros of F.
        for (std::size_t r = 3; r < gr.size(); ++r) {
            const PPoint q = n.apply(gr[r]);
            bool hit = false;
            for (const auto& z : fr) {
                const BigFloat cross = abs(z.x * q.y - z.y * q.x);
                if (cross <= tol * pnorm(z) * pnorm(q)) {
                    hit = true;
                    break;
                }
            }
            if (!hit) return Candidate::Rejected;
        }
        std::array<Rat, 4> exact;
        const std::array<const BigComplex*, 4> ents{&n.a, &n.b, &n.c, &n.d};
        for (std::size_t e = 0; e < 4; ++e) {
            const auto r = rational_reconstruct(ents[e]->re, bound);
            if (!r) return Candidate::Unreconstructed;
            exact[e] = *r;
        }
        return accept_projective(Mat2(exact[0], exact[1], exact[2], exact[3])) ? Candidate::Found
                                                                               : Candidate::Unreconstructed;
    }
};

/// Bits needed so that reconstruction with this bound has ample margin.
inline long working_precision(const Config& cfg, const Int& bound) {
    const long log_b = static_cast<long>(mpz_sizeinbase(bound.get_mpz_t(), 2));
    return std::min(cfg.max_precision_bits, std::max(cfg.precision_bits, 8 * log_b + 48));
}

inline void check_isom_input(const BinaryForm& f, const BinaryForm& g, const Config& cfg) {
    ensure(f.degree() == g.degree(), ErrorKind::BadInput, "forms must have equal degree");
    ensure(f.degree() >= 3, ErrorKind::BadInput, "isomorphism search needs degree >= 3");
    ensure(f.degree() <= cfg.max_degree, ErrorKind::UnsupportedDegree,
           "degree " + std::to_string(f.degree()) + " exceeds the supported maximum " +
               std::to_string(cfg.max_degree));
    ensure(!discriminant(f).is_zero(), ErrorKind::ZeroDiscriminant, "source form has zero discriminant");
    ensure(!discriminant(g).is_zero(), ErrorKind::ZeroDiscriminant, "target form has zero discriminant");
}

} // namespace detail

/**
 * Complete set of rho in GL(2, Q) with F o rho = G.
 *
 * A real candidate whose entries cannot be reconstructed under
 * cfg.denom_bound is retried with the squared bound; if it then verifies, the
 * configured bound was too small and ReconstructionBoundExceeded is raised
 * rather than returning an incomplete set.
 */
inline IsomSet isomorphisms(const BinaryForm& f, const BinaryForm& g, const Config& cfg = {}) {
    cfg.validate();
    detail::check_isom_input(f, g, cfg);
    const int d = f.degree();
    detail::IsomSearch search{f, g, d, {}};

    const long prec = detail::working_precision(cfg, cfg.denom_bound);
    const auto fr = detail::projective_roots(f, prec, cfg.max_precision_bits);
    const auto gr = (f == g) ? fr : detail::projective_roots(g, prec, cfg.max_precision_bits);

    struct Triple {
        std::size_t i, j, k;
    };
    std::vector<Triple> retry;
    const std::size_t n = fr.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) {
                if (i == j || j == k || i == k) continue;
                if (search.try_triple(fr, gr, i, j, k, cfg.denom_bound, prec) == detail::Candidate::Unreconstructed)
                    retry.push_back({i, j, k});
            }

    if (!retry.empty()) {
        const Int big = cfg.denom_bound * cfg.denom_bound;
        const long prec2 = detail::working_precision(cfg, big);
        const auto fr2 = detail::projective_roots(f, prec2, cfg.max_precision_bits);
        const auto gr2 = (f == g) ? fr2 : detail::projective_roots(g, prec2, cfg.max_precision_bits);
        const std::size_t before = search.found.size();
        for (const auto& t : retry) search.try_triple(fr2, gr2, t.i, t.j, t.k, big, prec2);
        if (search.found.size() != before)
            fail(ErrorKind::ReconstructionBoundExceeded,
                 "an isomorphism has entries with denominators above " + cfg.denom_bound.get_str());
    }
    return {f, g, {search.found.begin(), search.found.end()}};
}

} // namespace binform
