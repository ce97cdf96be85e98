#pragma once

// Named form families used throughout the library and its tests.

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "binform/forms/binary_form.hpp"

namespace binform {

enum class Family { Fab, PhiB, Diagonal, DeloneWatson };

inline std::string_view family_name(Family f) {
    switch (f) {
    case Family::Fab: return "Fab";
    case Family::PhiB: return "PhiB";
    case Family::Diagonal: return "Diagonal";
    case Family::DeloneWatson: return "DeloneWatson";
    }
    return "?";
}

inline Family parse_family(std::string_view name) {
    for (Family f : {Family::Fab, Family::PhiB, Family::Diagonal, Family::DeloneWatson})
        if (family_name(f) == name) return f;
    fail(ErrorKind::BadParams, "unknown family '" + std::string(name) + "'");
}

/// a X^3 + b X^2 Y + (b - 3a) X Y^2 - a Y^3
inline BinaryForm form_Fab(const Rat& a, const Rat& b) {
    ensure(!(a.is_zero() && b.is_zero()), ErrorKind::BadParams, "Fab needs (a, b) != (0, 0)");
    return BinaryForm({a, b, b - Rat(3) * a, -a});
}

inline BinaryForm form_PhiB(const Rat& b) { return form_Fab(1, b); }

/// a X^d + b Y^d
inline BinaryForm form_diagonal(const Rat& a, const Rat& b, int d) {
    ensure(!a.is_zero() && !b.is_zero(), ErrorKind::BadParams, "Diagonal needs a*b != 0");
    ensure(d >= 1, ErrorKind::BadParams, "Diagonal needs degree >= 1");
    std::vector<Rat> c(static_cast<std::size_t>(d) + 1);
    c.front() = a;
    c.back() = b;
    return BinaryForm(std::move(c));
}

/// which = 1: c(X^2 + XY + Y^2); which = 2: c(X^2 + 3Y^2).
inline BinaryForm form_delone_watson(const Rat& c, int which = 1) {
    ensure(!c.is_zero(), ErrorKind::BadParams, "DeloneWatson needs c != 0");
    if (which == 1) return BinaryForm({c, c, c});
    ensure(which == 2, ErrorKind::BadParams, "DeloneWatson selector must be 1 or 2");
    return BinaryForm({c, 0, Rat(3) * c});
}

/**
 * Parameter lists: Fab [a, b]; PhiB [b]; Diagonal [a, b, d];
 * DeloneWatson [c] or [c, which].
 */
inline BinaryForm family(Family f, std::span<const Rat> p) {
    auto arity = [&](std::size_t lo, std::size_t hi) {
        ensure(p.size() >= lo && p.size() <= hi, ErrorKind::BadParams,
               std::string(family_name(f)) + ": wrong number of parameters");
    };
    auto small_int = [&](const Rat& v, const char* what) {
        ensure(v.is_integer() && v.num() >= -64 && v.num() <= 64, ErrorKind::BadParams,
               std::string(family_name(f)) + ": " + what + " must be a small integer");
        return static_cast<int>(v.num().get_si());
    };
    switch (f) {
    case Family::Fab: arity(2, 2); return form_Fab(p[0], p[1]);
    case Family::PhiB: arity(1, 1); return form_PhiB(p[0]);
    case Family::Diagonal: arity(3, 3); return form_diagonal(p[0], p[1], small_int(p[2], "degree"));
    case Family::DeloneWatson:
        arity(1, 2);
        return form_delone_watson(p[0], p.size() == 2 ? small_int(p[1], "selector") : 1);
    }
    fail(ErrorKind::BadParams, "unknown family");
}

} // namespace binform
