#pragma once

/**
 * @file groups.hpp
 * @brief Automorphism groups, their labels, and half-integrality patterns of
 * order-3 elements.
 */

#include <algorithm>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "binform/autiso/isomorphisms.hpp"

namespace binform {

/// The finite subgroups of GL(2, Q) up to conjugacy.
enum class GroupLabel { C1, C2, C3, C4, C6, D1, D2, D3, D4, D6 };

inline std::string_view label_name(GroupLabel l) {
    constexpr std::string_view names[] = {"C1", "C2", "C3", "C4", "C6", "D1", "D2", "D3", "D4", "D6"};
    return names[static_cast<int>(l)];
}

struct AutGroup {
    std::vector<Mat2> elements;
    GroupLabel label = GroupLabel::C1;

    std::size_t order() const { return elements.size(); }
    bool contains(const Mat2& m) const { return std::binary_search(elements.begin(), elements.end(), m); }
};

/// Label from the abstract structure: order, the element -id, cyclicity, commutativity.
inline GroupLabel identify_label(const std::vector<Mat2>& elements) {
    const std::size_t n = elements.size();
    auto has = [&](const Mat2& m) { return std::find(elements.begin(), elements.end(), m) != elements.end(); };
    auto max_order = [&] {
        unsigned best = 0;
        for (const auto& e : elements) best = std::max(best, matrix_order(e, 12));
        return best;
    };
    auto abelian = [&] {
        for (const auto& x : elements)
            for (const auto& y : elements)
                if (!(x * y == y * x)) return false;
        return true;
    };
    switch (n) {
    case 1: return GroupLabel::C1;
    case 2: return has(-Mat2::identity()) ? GroupLabel::C2 : GroupLabel::D1;
    case 3: return GroupLabel::C3;
    case 4: return max_order() == 4 ? GroupLabel::C4 : GroupLabel::D2;
    case 6: return abelian() ? GroupLabel::C6 : GroupLabel::D3;
    case 8: return GroupLabel::D4;
    case 12: return GroupLabel::D6;
    default: fail(ErrorKind::NotInTable, "group of order " + std::to_string(n) + " is not in the table");
    }
}

/// Closure, identity and inverses, checked exactly.
inline void verify_group_axioms(const std::vector<Mat2>& elements) {
    const std::set<Mat2> s(elements.begin(), elements.end());
    ensure(s.count(Mat2::identity()) == 1, ErrorKind::GroupAxiomFailure, "identity missing");
    for (const auto& x : elements) {
        ensure(s.count(x.inverse()) == 1, ErrorKind::GroupAxiomFailure, "inverse missing for " + x.str());
        for (const auto& y : elements)
            ensure(s.count(x * y) == 1, ErrorKind::GroupAxiomFailure, "not closed: " + x.str() + " * " + y.str());
    }
}

inline AutGroup automorphism_group(const BinaryForm& f, const Config& cfg = {}) {
    IsomSet iso = isomorphisms(f, f, cfg);
    verify_group_axioms(iso.elements);
    AutGroup g{std::move(iso.elements), GroupLabel::C1};
    g.label = identify_label(g.elements);
    return g;
}

/// First unimodular element of Isom(F -> G), if any.
inline std::optional<Mat2> are_gl2z_equivalent(const BinaryForm& f, const BinaryForm& g, const Config& cfg = {}) {
    for (const auto& m : isomorphisms(f, g, cfg).elements)
        if (m.is_unimodular()) return m;
    return std::nullopt;
}

inline bool are_gl2q_equivalent(const BinaryForm& f, const BinaryForm& g, const Config& cfg = {}) {
    return !isomorphisms(f, g, cfg).empty();
}

inline std::vector<Mat2> order3_elements(const AutGroup& g) {
    std::vector<Mat2> out;
    for (const auto& e : g.elements)
        if (matrix_order(e, 3) == 3) out.push_back(e);
    return out;
}

/**
 * Entry patterns of an order-3 matrix (a b; c d):
 *   A: all entries in Z
 *   B: a, d, b in Z and c in Z + 1/2
 *   C: a, d, c in Z and b in Z + 1/2
 *   D: all entries in Z + 1/2
 */
enum class Pattern { A, B, C, D, None };

inline std::string_view pattern_name(Pattern p) {
    constexpr std::string_view names[] = {"A", "B", "C", "D", "None"};
    return names[static_cast<int>(p)];
}

inline Pattern half_integrality_pattern(const Mat2& s) {
    ensure(s.trace() == Rat(-1) && s.det() == Rat(1), ErrorKind::NotOrderThree,
           "matrix " + s.str() + " does not have trace -1 and determinant 1");
    const bool ai = s.a.is_integer(), bi = s.b.is_integer(), ci = s.c.is_integer(), di = s.d.is_integer();
    const bool ah = s.a.is_half_odd(), bh = s.b.is_half_odd(), ch = s.c.is_half_odd(), dh = s.d.is_half_odd();
    if (ai && bi && ci && di) return Pattern::A;
    if (ai && di && bi && ch) return Pattern::B;
    if (ai && di && bh && ci) return Pattern::C;
    if (ah && bh && ch && dh) return Pattern::D;
    return Pattern::None;
}

} // namespace binform
