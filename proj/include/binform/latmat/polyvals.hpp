#pragma once

// Fixed divisors of integer polynomials.

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "binform/arith/rat.hpp"

namespace binform {

/// Horner evaluation; coefficients in descending powers.
inline Int eval_poly(std::span<const Int> f, const Int& x) {
    Int acc = 0;
    for (const auto& c : f) acc = acc * x + c;
    return acc;
}

/**
 * gcd of f(x) over the integer interval [lo, hi]. Any k + 1 consecutive
 * values determine the fixed divisor through finite differences, and that
 * divisor always divides k!; both facts are checked here.
 * The default interval is [-(k+2), k+2].
 */
inline Int gcd_of_poly_values(std::span<const Int> f, std::optional<std::pair<long, long>> range = std::nullopt) {
    ensure(!f.empty(), ErrorKind::BadInput, "empty polynomial");
    Int content = 0;
    for (const auto& c : f) content = gcd(content, c);
    ensure(content == 1, ErrorKind::NotPrimitive, "polynomial is not primitive");
    std::size_t lead = 0;
    while (f[lead] == 0) ++lead;
    const long k = static_cast<long>(f.size() - 1 - lead);
    const auto [lo, hi] = range.value_or(std::make_pair(-(k + 2), k + 2));
    ensure(hi - lo + 1 >= k + 2, ErrorKind::BadParams, "sample range must hold at least k + 2 integers");
    Int g = 0;
    for (long x = lo; x <= hi; ++x) g = gcd(g, eval_poly(f, Int(x)));
    ensure(divides(g, factorial(static_cast<unsigned long>(k))), ErrorKind::InternalInvariant,
           "gcd of values does not divide k!");
    return g;
}

} // namespace binform
