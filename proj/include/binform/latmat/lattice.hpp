#pragma once

/**
 * @file lattice.hpp
 * @brief Full-rank sublattices of Z^2 in Hermite normal form.
 *
 * A lattice is stored by the columns (a, 0) and (b, c) with a, c >= 1 and
 * 0 <= b < a, so equal lattices have equal representations.
 */

#include <compare>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "binform/forms/mat2.hpp"
#include "binform/forms/parse.hpp"
#include "binform/latmat/normal_forms.hpp"

namespace binform {

class Lattice2 {
public:
    /// Z^2.
    Lattice2() = default;

    Lattice2(Int a, Int b, Int c) : a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
        ensure(a_ >= 1 && c_ >= 1 && b_ >= 0 && b_ < a_, ErrorKind::BadInput,
               "lattice basis is not in Hermite normal form");
    }

    /// HNF of the lattice spanned by integer vectors; must have rank 2.
    static Lattice2 spanned_by(std::vector<std::pair<Int, Int>> gens) {
        // Euclid on the second coordinates leaves one vector with y != 0.
        for (;;) {
            std::size_t pivot = gens.size();
            for (std::size_t i = 0; i < gens.size(); ++i)
                if (gens[i].second != 0 && (pivot == gens.size() || abs(gens[i].second) < abs(gens[pivot].second)))
                    pivot = i;
            ensure(pivot != gens.size(), ErrorKind::SingularMatrix, "generators do not span a full-rank lattice");
            bool reduced = false;
            for (std::size_t i = 0; i < gens.size(); ++i) {
                if (i == pivot || gens[i].second == 0) continue;
                const Int q = floor_div(gens[i].second, gens[pivot].second);
                gens[i].first -= q * gens[pivot].first;
                gens[i].second -= q * gens[pivot].second;
                reduced = true;
            }
            if (!reduced) {
                Int a = 0;
                for (std::size_t i = 0; i < gens.size(); ++i)
                    if (i != pivot) a = gcd(a, gens[i].first);
                ensure(a != 0, ErrorKind::SingularMatrix, "generators do not span a full-rank lattice");
                Int bx = gens[pivot].first, c = gens[pivot].second;
                if (c < 0) {
                    bx = -bx;
                    c = -c;
                }
                return Lattice2(a, floor_mod(bx, a), c);
            }
        }
    }

    const Int& a() const { return a_; }
    const Int& b() const { return b_; }
    const Int& c() const { return c_; }

    Int index() const { return a_ * c_; }
    bool is_full() const { return a_ == 1 && c_ == 1; }

    bool contains(const Int& x, const Int& y) const {
        if (!divides(c_, y)) return false;
        return divides(a_, x - b_ * (y / c_));
    }

    /// Column basis as a matrix [[a, b], [0, c]].
    Mat2 basis() const { return {Rat(a_), Rat(b_), 0, Rat(c_)}; }

    /// "{[a,0],[b,c]}"
    std::string str() const {
        return "{[" + a_.get_str() + ",0],[" + b_.get_str() + "," + c_.get_str() + "]}";
    }

    friend bool operator==(const Lattice2&, const Lattice2&) = default;
    friend std::strong_ordering operator<=>(const Lattice2& l, const Lattice2& m) {
        // Index first, then the HNF entries.
        auto cmp = [](const Int& x, const Int& y) { return x < y ? std::strong_ordering::less : x > y ? std::strong_ordering::greater : std::strong_ordering::equal; };
        if (auto o = cmp(l.index(), m.index()); o != 0) return o;
        if (auto o = cmp(l.a_, m.a_); o != 0) return o;
        if (auto o = cmp(l.b_, m.b_); o != 0) return o;
        return cmp(l.c_, m.c_);
    }
    friend std::ostream& operator<<(std::ostream& os, const Lattice2& l) { return os << l.str(); }

private:
    Int a_{1}, b_{0}, c_{1};
};

namespace detail {

/// Sublattice of L on which the rational functional r = (r1, r2) is integral.
inline Lattice2 restrict_integral(const Lattice2& l, const Rat& r1, const Rat& r2) {
    // Points of L are B z; the functional on z-coordinates is (r1, r2) B.
    const Mat2 b = l.basis();
    const Rat f1 = r1 * b.a + r2 * b.c;
    const Rat f2 = r1 * b.b + r2 * b.d;
    const Int q = lcm(f1.den(), f2.den());
    const Int n1 = f1.num() * (q / f1.den());
    const Int n2 = f2.num() * (q / f2.den());
    if (q == 1) return l;
    // Solve n1 z1 + n2 z2 == 0 (mod q).
    Int s, t;
    const Int g = xgcd(n1, n2, s, t);
    std::vector<std::pair<Int, Int>> z_gens;
    if (g == 0) return l;
    z_gens.emplace_back(n2 / g, -n1 / g);
    const Int step = q / gcd(g, q);
    z_gens.emplace_back(step * s, step * t);
    // q e1 and q e2 are solutions as well; listing them is harmless.
    z_gens.emplace_back(q, 0);
    z_gens.emplace_back(0, q);
    std::vector<std::pair<Int, Int>> gens;
    for (const auto& [z1, z2] : z_gens)
        gens.emplace_back(l.a() * z1 + l.b() * z2, l.c() * z2);
    return Lattice2::spanned_by(std::move(gens));
}

} // namespace detail

/// {(u, v) in Z^2 : M (u, v) in Z^2}.
inline Lattice2 lattice_of(const Mat2& m) {
    ensure(!m.det().is_zero(), ErrorKind::SingularMatrix, "lattice of a singular matrix");
    Lattice2 l;
    l = detail::restrict_integral(l, m.a, m.b);
    l = detail::restrict_integral(l, m.c, m.d);
    return l;
}

inline Int lattice_index(const Lattice2& l) { return l.index(); }

/// Index of L(M) from the canonical form (N/D) A: D^2 / gcd(D, det A).
inline Int lattice_index_by_formula(const Mat2& m) {
    ensure(!m.det().is_zero(), ErrorKind::SingularMatrix, "index of a singular matrix");
    const CanonicalMat cf = canonical_form(m);
    return cf.D * cf.D / gcd(cf.D, abs(cf.A.det().num()));
}

inline bool lattice_member(const Lattice2& l, const Int& x, const Int& y) { return l.contains(x, y); }

inline Lattice2 lattice_intersect(const Lattice2& l1, const Lattice2& l2) {
    // L2 = {p : B2^{-1} p integral}; impose both rows on L1.
    const Mat2 inv = l2.basis().inverse();
    Lattice2 r = detail::restrict_integral(l1, inv.a, inv.b);
    return detail::restrict_integral(r, inv.c, inv.d);
}

/// Smallest C >= 1 with C Z^2 contained in L.
inline Int scaling_modulus(const Lattice2& l) {
    const Int& a = l.a();
    const Int k = lcm(a / gcd(a, l.b()), a / gcd(a, l.c()));
    return l.c() * k;
}

inline Lattice2 parse_lattice(Cursor& cur) {
    const std::size_t at = cur.pos();
    cur.expect('{');
    cur.expect('[');
    const Int a = cur.integer();
    cur.expect(',');
    const std::size_t zero_at = cur.pos();
    if (cur.integer() != 0) throw ParseError(zero_at, {"0"}, "first HNF column must be (a, 0)");
    cur.expect(']');
    cur.expect(',');
    cur.expect('[');
    const Int b = cur.integer();
    cur.expect(',');
    const Int c = cur.integer();
    cur.expect(']');
    cur.expect('}');
    if (!(a >= 1 && c >= 1 && b >= 0 && b < a))
        throw ParseError(at, {"a >= 1, c >= 1, 0 <= b < a"}, "lattice basis is not in Hermite normal form");
    return Lattice2(a, b, c);
}

/// "{[a,0],[b,c]}"
inline Lattice2 parse_lattice(std::string_view text) {
    Cursor cur(text);
    Lattice2 l = parse_lattice(cur);
    cur.expect_end();
    return l;
}

} // namespace binform
