#pragma once

/**
 * @file classify.hpp
 * @brief Ordinary versus extraordinary forms, companions and value classes.
 *
 * A form is extraordinary exactly when its rational automorphism group has an
 * order-3 element whose entries follow one of the half-integrality patterns
 * A-D. For such a form, a change of variables by diag(1, 1/2), diag(1/2, 1)
 * or (1 1; 0 1) diag(1, 1/2) moves it to a representative G whose order-3
 * automorphism is integral, and then G, G(2X, Y) and G(X, 2Y) share one value
 * set while G and G(2X, Y) are not GL(2, Z)-equivalent.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "binform/autiso/groups.hpp"
#include "binform/classify/parity.hpp"

namespace binform {

enum class Verdict { Ordinary, Extraordinary };

inline std::string_view verdict_name(Verdict v) { return v == Verdict::Ordinary ? "Ordinary" : "Extraordinary"; }

struct Witness {
    Mat2 sigma;
    Pattern pattern = Pattern::None;
};

struct Companion {
    BinaryForm form;
    /// The representative G with an integral order-3 automorphism, and T with G = F o T.
    BinaryForm representative;
    Mat2 transform;
    ParityProof proof;
    /// disc(companion) / disc(F), a power of two other than 1.
    Rat disc_ratio;
    std::string cert_inequiv;
};

struct ClassificationReport {
    BinaryForm form;
    Verdict verdict = Verdict::Ordinary;
    std::optional<Witness> witness;
    GroupLabel aut_label = GroupLabel::C1;
    std::vector<Mat2> aut;
    std::optional<BinaryForm> companion;
    std::optional<ParityProof> proof;
    std::vector<std::string> notes;
};

namespace detail {

inline int pattern_rank(Pattern p) { return static_cast<int>(p); }

/// Preference: pattern A first, then b > 0, then entries in lexicographic order.
inline bool witness_before(const Witness& x, const Witness& y) {
    const auto key = [](const Witness& w) {
        return std::make_tuple(pattern_rank(w.pattern), w.sigma.b > Rat(0) ? 0 : 1, w.sigma);
    };
    return key(x) < key(y);
}

inline std::optional<Witness> best_witness(const AutGroup& g) {
    std::optional<Witness> best;
    for (const auto& s : order3_elements(g)) {
        const Witness w{s, half_integrality_pattern(s)};
        if (w.pattern == Pattern::None) continue;
        if (!best || witness_before(w, *best)) best = w;
    }
    return best;
}

/// T with F o T carrying sigma to T^-1 sigma T, which is integral.
inline Mat2 integralizing_transform(const Mat2& sigma, Pattern p) {
    switch (p) {
    case Pattern::A: return Mat2::identity();
    case Pattern::B: return Mat2::diag(1, Rat(1, 2));
    case Pattern::C: return Mat2::diag(Rat(1, 2), 1);
    case Pattern::D: {
        const Mat2 shear(1, 1, 0, 1);
        const Mat2 star = shear.inverse() * sigma * shear;
        ensure(half_integrality_pattern(star) == Pattern::B, ErrorKind::InternalInvariant,
               "shear of a pattern-D element " + sigma.str() + " is not of pattern B");
        return shear * Mat2::diag(1, Rat(1, 2));
    }
    case Pattern::None: break;
    }
    fail(ErrorKind::BadWitness, "matrix " + sigma.str() + " has no half-integrality pattern");
}

inline void check_classify_input(const BinaryForm& f) {
    ensure(f.degree() >= 3, ErrorKind::BadInput, "classification needs degree >= 3");
    ensure(!discriminant(f).is_zero(), ErrorKind::ZeroDiscriminant, "form has zero discriminant");
}

inline std::string pow2_str(long e) { return "2^" + std::to_string(e); }

} // namespace detail

/**
 * Companion of an extraordinary form for the witness sigma of the given pattern.
 *
 * Pattern A: the companion is F(2X, Y) and the parity proof runs on F.
 * Patterns B-D: the companion is G = F o T, which satisfies G(X, 2Y) = F for
 * B and D and G(2X, Y) = F for C; the parity proof runs on G.
 */
inline Companion companion(const BinaryForm& f, const Mat2& sigma, Pattern pattern) {
    ensure(pattern != Pattern::None, ErrorKind::BadWitness, "witness pattern None");
    ensure(has_order_three(sigma), ErrorKind::BadWitness, "witness " + sigma.str() + " does not have order 3");
    ensure(compose(f, sigma) == f, ErrorKind::BadWitness, "witness " + sigma.str() + " is not an automorphism");
    ensure(half_integrality_pattern(sigma) == pattern, ErrorKind::BadWitness,
           "witness " + sigma.str() + " does not have pattern " + std::string(pattern_name(pattern)));

    const Mat2 t = detail::integralizing_transform(sigma, pattern);
    const BinaryForm g = compose(f, t);
    const Mat2 tau = t.inverse() * sigma * t;
    ensure(tau.is_integral(), ErrorKind::InternalInvariant, "transported witness " + tau.str() + " is not integral");

    Companion out{pattern == Pattern::A ? compose(f, Mat2::diag(2, 1)) : g, g, t, parity_proof(g, tau), Rat(0), {}};
    const long e = static_cast<long>(f.degree()) * (f.degree() - 1);
    out.disc_ratio = discriminant(out.form) / discriminant(f);
    const Rat expected = pattern == Pattern::A ? pow(Rat(2), e) : pow(Rat(1, 2), e);
    ensure(out.disc_ratio == expected, ErrorKind::InternalInvariant, "companion discriminant ratio mismatch");
    out.cert_inequiv = "disc(companion)/disc(F) = " + detail::pow2_str(pattern == Pattern::A ? e : -e) +
                       " != 1; the discriminant is invariant under GL(2,Z), so the forms are not GL(2,Z)-equivalent";
    return out;
}

inline ClassificationReport classify(const BinaryForm& f, const Config& cfg = {}) {
    detail::check_classify_input(f);
    const AutGroup g = automorphism_group(f, cfg);
    ClassificationReport rep{f};
    rep.aut_label = g.label;
    rep.aut = g.elements;
    rep.witness = detail::best_witness(g);
    if (g.label == GroupLabel::D4)
        ensure(!rep.witness, ErrorKind::InternalInvariant, "D4 group with an order-3 element");
    if (!rep.witness) {
        rep.notes.push_back(order3_elements(g).empty() ? "no automorphism of order 3"
                                                       : "no order-3 automorphism has a half-integrality pattern");
        return rep;
    }
    ensure(g.order() % 3 == 0, ErrorKind::InternalInvariant, "order-3 element in a group of order not divisible by 3");
    rep.verdict = Verdict::Extraordinary;
    Companion c = companion(f, rep.witness->sigma, rep.witness->pattern);
    rep.companion = c.form;
    rep.proof = c.proof;
    rep.notes.push_back(c.cert_inequiv);
    if (rep.witness->pattern != Pattern::A)
        rep.notes.push_back("companion is F o " + c.transform.str() + "; coefficients are left unscaled");
    return rep;
}

/// [F]_val as one GL(2, Z) class, or as the two classes of (G, G(2X, Y)).
struct ValueClass {
    std::vector<BinaryForm> classes;
    /// G = F o transform when the class splits.
    std::optional<Mat2> transform;

    bool is_pair() const { return classes.size() == 2; }
};

inline ValueClass decompose_value_class(const BinaryForm& f, const Config& cfg = {}) {
    const ClassificationReport rep = classify(f, cfg);
    if (rep.verdict == Verdict::Ordinary) return {{f}, std::nullopt};
    const Mat2 t = detail::integralizing_transform(rep.witness->sigma, rep.witness->pattern);
    const BinaryForm g = compose(f, t);
    const BinaryForm h = compose(g, Mat2::diag(2, 1));
    for (const auto& s : order3_elements(automorphism_group(g, cfg)))
        ensure(s.is_integral(), ErrorKind::InternalInvariant, "representative has a non-integral order-3 automorphism");
    ensure(!are_gl2z_equivalent(g, h, cfg), ErrorKind::InternalInvariant, "G and G(2X, Y) are GL(2,Z)-equivalent");
    return {{g, h}, t};
}

} // namespace binform
