#pragma once

/**
 * @file values.hpp
 * @brief Values of a form on the box |x|, |y| <= B.
 *
 * Every count here is relative to the box. Representation counts and value
 * counts are therefore lower bounds for the unrestricted quantities; nothing
 * in this module solves Thue equations. Zeros of F are tallied separately and
 * never enter a value set.
 */

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <optional>
#include <set>
#include <thread>
#include <utility>
#include <vector>

#include "binform/autiso/groups.hpp"
#include "binform/config.hpp"

namespace binform {

using Point = std::pair<long, long>;

struct ValueEntry {
    /// Exact number of box points with this value.
    long count = 0;
    /// The first reps_cap points in lexicographic order.
    std::vector<Point> reps;
};

struct ValueTable {
    static constexpr std::size_t reps_cap = 64;

    BinaryForm form;
    long box = 0;
    std::map<Rat, ValueEntry> entries;
    long zero_count = 0;

    long count(const Rat& m) const {
        const auto it = entries.find(m);
        return it == entries.end() ? 0 : it->second.count;
    }
    bool contains(const Rat& m) const { return entries.count(m) != 0; }
};

namespace detail {

/// F = (1/L) * Fint with integer coefficients; evaluation by Horner on Int.
struct IntegerEval {
    std::vector<Int> coeffs;
    Int scale{1};

    explicit IntegerEval(const BinaryForm& f) {
        for (const auto& c : f.coeffs()) scale = lcm(scale, c.den());
        for (const auto& c : f.coeffs()) coeffs.push_back((c * Rat(scale)).num());
    }

    /// Fint(x, y) = sum c_i x^(d-i) y^i.
    Int numerator(long x, long y) const {
        const Int ix(x), iy(y);
        Int acc = coeffs[0], ypow = 1;
        for (std::size_t i = 1; i < coeffs.size(); ++i) {
            ypow *= iy;
            acc = acc * ix + coeffs[i] * ypow;
        }
        return acc;
    }
    Rat operator()(long x, long y) const { return Rat(numerator(x, y), scale); }
};

struct Stripe {
    std::map<Rat, ValueEntry> entries;
    long zeros = 0;
};

inline void fill_stripe(const IntegerEval& ev, long x0, long x1, long box, Stripe& s) {
    for (long x = x0; x < x1; ++x)
        for (long y = -box; y <= box; ++y) {
            const Rat v = ev(x, y);
            if (v.is_zero()) {
                ++s.zeros;
                continue;
            }
            ValueEntry& e = s.entries[v];
            ++e.count;
            if (e.reps.size() < ValueTable::reps_cap) e.reps.emplace_back(x, y);
        }
}

inline void check_box(long box, const Config& cfg) {
    ensure(box >= 1, ErrorKind::BadParams, "box must be >= 1");
    const double side = 2.0 * static_cast<double>(box) + 1.0;
    ensure(side * side <= static_cast<double>(cfg.max_box_points), ErrorKind::BoxTooLarge,
           "box " + std::to_string(box) + " exceeds the point limit " + std::to_string(cfg.max_box_points));
}

} // namespace detail

/// Exact table over the box. Stripes in x are merged in order, so the result
/// does not depend on the thread count.
inline ValueTable values_in_box(const BinaryForm& f, long box, const Config& cfg = {}) {
    cfg.validate();
    detail::check_box(box, cfg);
    const detail::IntegerEval ev(f);
    const long width = 2 * box + 1;
    const long n = std::min<long>(static_cast<long>(cfg.threads), width);
    std::vector<detail::Stripe> stripes(static_cast<std::size_t>(n));
    std::vector<std::thread> pool;
    for (long t = 0; t < n; ++t) {
        const long x0 = -box + width * t / n, x1 = -box + width * (t + 1) / n;
        auto& s = stripes[static_cast<std::size_t>(t)];
        if (n == 1)
            detail::fill_stripe(ev, x0, x1, box, s);
        else
            pool.emplace_back([&ev, x0, x1, box, &s] { detail::fill_stripe(ev, x0, x1, box, s); });
    }
    for (auto& th : pool) th.join();

    ValueTable table{f, box, {}, 0};
    for (auto& s : stripes) {
        table.zero_count += s.zeros;
        for (auto& [v, e] : s.entries) {
            ValueEntry& dst = table.entries[v];
            dst.count += e.count;
            for (const auto& p : e.reps) {
                if (dst.reps.size() >= ValueTable::reps_cap) break;
                dst.reps.push_back(p);
            }
        }
    }
    return table;
}

/// Representations of m in the box, in lexicographic order. A lower bound for R(F; m).
inline std::vector<Point> representations(const BinaryForm& f, const Rat& m, long box) {
    ensure(!m.is_zero(), ErrorKind::BadParams, "representations of 0 are not counted");
    ensure(box >= 1, ErrorKind::BadParams, "box must be >= 1");
    const detail::IntegerEval ev(f);
    const Int target = (m * Rat(ev.scale)).num();
    std::vector<Point> out;
    if (!(m * Rat(ev.scale)).is_integer()) return out;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y)
            if (ev.numerator(x, y) == target) out.emplace_back(x, y);
    return out;
}

inline long multiplicity(const BinaryForm& f, const Rat& m, long box) {
    return static_cast<long>(representations(f, m, box).size());
}

/// Nonzero values at points with gcd(x, y) = 1.
inline std::set<Rat> coprime_values(const BinaryForm& f, long box) {
    ensure(box >= 1, ErrorKind::BadParams, "box must be >= 1");
    const detail::IntegerEval ev(f);
    std::set<Rat> out;
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y) {
            if (std::gcd(x, y) != 1) continue;
            const Rat v = ev(x, y);
            if (!v.is_zero()) out.insert(v);
        }
    return out;
}

namespace detail {

inline bool smaller_witness(const Rat& a, const Rat& b) {
    return std::make_pair(a.abs(), a) < std::make_pair(b.abs(), b);
}

inline void keep_smaller(std::optional<Rat>& best, const Rat& m) {
    if (!best || smaller_witness(m, *best)) best = m;
}

inline long inner_box(long box) { return std::max(1L, box / 2); }

} // namespace detail

/**
 * Smallest |m| whose count on the inner box |x|, |y| <= B/2 for F exceeds its
 * count on the full box for G. Using the smaller box for F keeps a witness
 * from being an artifact of points just outside the box for G.
 */
inline std::optional<Rat> multiplicity_witness(const BinaryForm& f, const BinaryForm& g, long box,
                                               const Config& cfg = {}) {
    ensure(f.degree() == g.degree(), ErrorKind::BadInput, "forms must have equal degree");
    const ValueTable tf = values_in_box(f, detail::inner_box(box), cfg);
    const ValueTable tg = values_in_box(g, box, cfg);
    std::optional<Rat> best;
    for (const auto& [m, e] : tf.entries)
        if (e.count > tg.count(m)) detail::keep_smaller(best, m);
    return best;
}

/// Smallest |m| in W(F) on the inner box but not in W(G) on the full box, or vice versa.
inline std::optional<Rat> coprime_witness(const BinaryForm& f, const BinaryForm& g, long box) {
    ensure(f.degree() == g.degree(), ErrorKind::BadInput, "forms must have equal degree");
    const long inner = detail::inner_box(box);
    const auto wf_in = coprime_values(f, inner), wg_in = coprime_values(g, inner);
    const auto wf = coprime_values(f, box), wg = coprime_values(g, box);
    std::optional<Rat> best;
    for (const auto& m : wf_in)
        if (!wg.count(m)) detail::keep_smaller(best, m);
    for (const auto& m : wg_in)
        if (!wf.count(m)) detail::keep_smaller(best, m);
    return best;
}

enum class Essential { Yes, No, Inconclusive };

inline std::string_view essential_name(Essential e) {
    constexpr std::string_view names[] = {"Yes", "No", "Inconclusive"};
    return names[static_cast<int>(e)];
}

struct EssentialReport {
    Essential answer = Essential::Inconclusive;
    std::vector<Point> reps;
    /// Two representations in different orbits, when the answer is No.
    std::optional<std::pair<Point, Point>> separated;
};

/// Whether all box representations of m lie in one orbit of the group.
inline EssentialReport essentially_represented(const BinaryForm& f, const Rat& m, long box, const AutGroup& aut) {
    EssentialReport rep;
    rep.reps = representations(f, m, box);
    if (rep.reps.empty()) return rep;
    const auto related = [&](const Point& p, const Point& q) {
        for (const auto& s : aut.elements) {
            const auto [u, v] = s.apply(Rat(p.first), Rat(p.second));
            if (u == Rat(q.first) && v == Rat(q.second)) return true;
        }
        return false;
    };
    // The group acts on the representations, so comparing with the first one suffices.
    for (const auto& q : rep.reps)
        if (!related(rep.reps.front(), q)) {
            rep.answer = Essential::No;
            rep.separated = std::make_pair(rep.reps.front(), q);
            return rep;
        }
    rep.answer = Essential::Yes;
    return rep;
}

struct GrowthRow {
    Int X;
    long count = 0;
};

struct GrowthReport {
    std::vector<GrowthRow> rows;
    long box = 0;
    double eta = 0;
    /// log N / log X slope on the last window and least squares over all rows.
    double slope_last = 0;
    double slope_fit = 0;
    double threshold = 0;
    bool passes = false;
};

/**
 * N(F, X) lower bounds from one box of half-width ceil((X_max / eta)^(1/d)) * 2,
 * with eta = 1 / sum |c_i|. The check requires the last-window slope to be at
 * least 2/d - 0.15.
 */
inline GrowthReport growth_check(const BinaryForm& f, const std::vector<Int>& xs, const Config& cfg = {}) {
    ensure(xs.size() >= 2, ErrorKind::BadParams, "growth check needs at least two X values");
    for (std::size_t i = 0; i < xs.size(); ++i) {
        ensure(xs[i] >= 2, ErrorKind::BadParams, "X values must be >= 2");
        if (i > 0) ensure(xs[i] > xs[i - 1], ErrorKind::BadParams, "X values must increase");
    }
    Rat height = 0;
    for (const auto& c : f.coeffs()) height += c.abs();
    GrowthReport rep;
    rep.eta = 1.0 / height.to_double();
    const int d = f.degree();
    const double side = std::ceil(std::pow(xs.back().get_d() / rep.eta, 1.0 / d));
    rep.box = static_cast<long>(side) * 2;
    const ValueTable table = values_in_box(f, rep.box, cfg);

    for (const auto& x : xs) {
        long n = 0;
        const Rat bound(x);
        for (const auto& [m, e] : table.entries)
            if (m.abs() <= bound) ++n;
        rep.rows.push_back({x, n});
    }
    std::vector<double> lx, ln;
    for (const auto& r : rep.rows) {
        ensure(r.count > 0, ErrorKind::BadParams, "no values up to X = " + r.X.get_str());
        lx.push_back(std::log(r.X.get_d()));
        ln.push_back(std::log(static_cast<double>(r.count)));
    }
    const std::size_t k = lx.size();
    rep.slope_last = (ln[k - 1] - ln[k - 2]) / (lx[k - 1] - lx[k - 2]);
    double mx = 0, mn = 0;
    for (std::size_t i = 0; i < k; ++i) mx += lx[i] / k, mn += ln[i] / k;
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < k; ++i) sxy += (lx[i] - mx) * (ln[i] - mn), sxx += (lx[i] - mx) * (lx[i] - mx);
    rep.slope_fit = sxy / sxx;
    rep.threshold = 2.0 / d - 0.15;
    rep.passes = rep.slope_last >= rep.threshold;
    return rep;
}

} // namespace binform
