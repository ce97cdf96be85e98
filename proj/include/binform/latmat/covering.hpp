#pragma once

/**
 * @file covering.hpp
 * @brief Exact covering tests for finite families of sublattices of Z^2,
 * and a small enumerator of minimal coverings.
 */

#include <algorithm>
#include <optional>
#include <set>
#include <span>
#include <utility>
#include <vector>

#include "binform/latmat/lattice.hpp"

namespace binform {

struct CoveringResult {
    bool covers = false;
    /// A point outside the union, present exactly when covers is false.
    std::optional<std::pair<Int, Int>> witness;
    /// Common modulus C used by the residue check.
    Int modulus{1};
};

inline Int covering_modulus(std::span<const Lattice2> lattices) {
    Int c = 1;
    for (const auto& l : lattices) c = lcm(c, scaling_modulus(l));
    return c;
}

/**
 * Each lattice contains C Z^2, so membership depends only on residues mod C.
 * Testing the C^2 residues is therefore sound and complete. The witness is
 * the first uncovered residue in row-major order over [0, C)^2.
 */
inline CoveringResult is_covering(std::span<const Lattice2> lattices) {
    ensure(!lattices.empty(), ErrorKind::BadInput, "covering test needs at least one lattice");
    CoveringResult res;
    res.modulus = covering_modulus(lattices);
    ensure(res.modulus <= 1 << 14, ErrorKind::BoundsTooLarge, "covering modulus too large for residue check");
    const long c = res.modulus.get_si();
    for (long x = 0; x < c; ++x)
        for (long y = 0; y < c; ++y) {
            const Int ix(x), iy(y);
            const bool hit = std::any_of(lattices.begin(), lattices.end(),
                                         [&](const Lattice2& l) { return l.contains(ix, iy); });
            if (!hit) {
                res.witness = std::make_pair(ix, iy);
                return res;
            }
        }
    res.covers = true;
    return res;
}

/// All proper sublattices (index >= 2) of index <= max_index, sorted.
inline std::vector<Lattice2> proper_sublattices(long max_index) {
    std::vector<Lattice2> out;
    for (long a = 1; a <= max_index; ++a)
        for (long c = 1; a * c <= max_index; ++c) {
            if (a * c < 2) continue;
            for (long b = 0; b < a; ++b) out.emplace_back(Int(a), Int(b), Int(c));
        }
    std::sort(out.begin(), out.end());
    return out;
}

namespace detail {

struct CoverSearch {
    std::size_t k;
    std::vector<Lattice2> pool;
    std::set<std::vector<Lattice2>> found;

    static bool related(const Lattice2& l, const Lattice2& m) {
        const Lattice2 meet = lattice_intersect(l, m);
        return meet == l || meet == m;
    }

    static bool minimal(const std::vector<Lattice2>& s) {
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            std::vector<Lattice2> rest;
            for (std::size_t i = 0; i < s.size(); ++i)
                if (i != drop) rest.push_back(s[i]);
            if (is_covering(rest).covers) return false;
        }
        return true;
    }

    /// Uncovered points of the union, nearest to the origin first.
    static std::vector<std::pair<Int, Int>> uncovered(const std::vector<Lattice2>& s, std::size_t limit) {
        const long c = covering_modulus(s).get_si();
        std::vector<std::pair<Int, Int>> pts;
        // Centered residues, ordered by max-norm then row-major.
        const long lo = -((c - 1) / 2), hi = c / 2;
        for (long r = 0; r <= std::max(-lo, hi) && pts.size() < limit; ++r)
            for (long x = std::max(lo, -r); x <= std::min(hi, r) && pts.size() < limit; ++x)
                for (long y = std::max(lo, -r); y <= std::min(hi, r) && pts.size() < limit; ++y) {
                    if (std::max(std::labs(x), std::labs(y)) != r) continue;
                    const Int ix(x), iy(y);
                    if (std::none_of(s.begin(), s.end(), [&](const Lattice2& l) { return l.contains(ix, iy); }))
                        pts.emplace_back(ix, iy);
                }
        return pts;
    }

    void run(std::vector<Lattice2>& chosen) {
        if (!chosen.empty() && is_covering(chosen).covers) {
            if (chosen.size() == k && minimal(chosen)) {
                auto key = chosen;
                std::sort(key.begin(), key.end());
                found.insert(std::move(key));
            }
            return;
        }
        if (chosen.size() == k) return;

        // Branch on the uncovered point with the fewest candidate lattices.
        std::vector<std::pair<Int, Int>> pts =
            chosen.empty() ? std::vector<std::pair<Int, Int>>{{1, 0}, {0, 1}, {1, 1}} : uncovered(chosen, 24);
        std::vector<const Lattice2*> best;
        bool have = false;
        for (const auto& [x, y] : pts) {
            std::vector<const Lattice2*> cand;
            for (const auto& l : pool) {
                if (!l.contains(x, y)) continue;
                if (std::any_of(chosen.begin(), chosen.end(), [&](const Lattice2& m) { return related(l, m); }))
                    continue;
                cand.push_back(&l);
            }
            if (!have || cand.size() < best.size()) {
                best = std::move(cand);
                have = true;
            }
        }
        for (const Lattice2* l : best) {
            chosen.push_back(*l);
            run(chosen);
            chosen.pop_back();
        }
    }
};

} // namespace detail

/**
 * Minimal coverings of Z^2 by exactly k distinct proper sublattices of
 * index <= max_index. Minimal means no proper subfamily covers, which also
 * rules out repeated members and nested pairs. Output is sorted.
 */
inline std::vector<std::vector<Lattice2>> enumerate_coverings(int k, long max_index) {
    ensure(k >= 1 && k <= 6, ErrorKind::BoundsTooLarge, "k must lie in 1..6");
    ensure(max_index >= 1 && max_index <= 16, ErrorKind::BoundsTooLarge, "max_index must lie in 1..16");
    detail::CoverSearch search{static_cast<std::size_t>(k), proper_sublattices(max_index), {}};
    std::vector<Lattice2> chosen;
    search.run(chosen);
    return {search.found.begin(), search.found.end()};
}

} // namespace binform
