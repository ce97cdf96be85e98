#pragma once

/**
 * @file parity.hpp
 * @brief Parity certificates that F(Z^2) = F(2X, Y)(Z^2) = F(X, 2Y)(Z^2).
 *
 * Let sigma = (a b; c d) be an integral automorphism of order 3. Then
 * F(m, n) = F(am + bn, cm + dn) = F(dm - bn, -cm + an). If every residue
 * class (m, n) mod 2 makes one of the first coordinates m, am + bn, dm - bn
 * even, each value of F is a value of F(2X, Y). The second table does the
 * same for the second coordinates and F(X, 2Y).
 */

#include <array>
#include <string>

#include "binform/forms/binary_form.hpp"
#include "binform/latmat/order3.hpp"

namespace binform {

struct ParityRow {
    int m = 0;
    int n = 0;
    /// 0, 1 or 2: which of the three candidate coordinates is even.
    int which = 0;
};

struct ParityProof {
    Mat2 sigma;
    /// First coordinates: m, am + bn, dm - bn. Proves F ~val F(2X, Y).
    std::array<ParityRow, 4> parity_table;
    /// Second coordinates: n, cm + dn, -cm + an. Proves F ~val F(X, 2Y).
    std::array<ParityRow, 4> parity_table_y;

    static std::string first_expr(int which) {
        constexpr const char* names[] = {"m", "am+bn", "dm-bn"};
        return names[which];
    }
    static std::string second_expr(int which) {
        constexpr const char* names[] = {"n", "cm+dn", "-cm+an"};
        return names[which];
    }
};

namespace detail {

inline bool is_odd(const Rat& v) { return v.num() % 2 != 0; }

inline int first_even(const std::array<Int, 3>& v) {
    for (int i = 0; i < 3; ++i)
        if (v[static_cast<std::size_t>(i)] % 2 == 0) return i;
    return -1;
}

} // namespace detail

inline ParityProof parity_proof(const BinaryForm& f, const Mat2& sigma) {
    ensure(has_order_three(sigma), ErrorKind::NotOrderThree, sigma.str() + " does not have order 3");
    ensure(compose(f, sigma) == f, ErrorKind::NotAutomorphism, sigma.str() + " is not an automorphism of " + f.str());
    ensure(sigma.is_integral(), ErrorKind::NotIntegral, sigma.str() + " is not integral");

    const Int a = sigma.a.num(), b = sigma.b.num(), c = sigma.c.num(), d = sigma.d.num();
    ensure(detail::is_odd(sigma.b) && detail::is_odd(sigma.c) && (detail::is_odd(sigma.a) != detail::is_odd(sigma.d)),
           ErrorKind::ParityGap, "entry parities of " + sigma.str() + " differ from the expected pattern");

    ParityProof proof;
    proof.sigma = sigma;
    std::size_t row = 0;
    for (int m = 0; m <= 1; ++m)
        for (int n = 0; n <= 1; ++n, ++row) {
            const Int mm(m), nn(n);
            const int wx = detail::first_even({mm, a * mm + b * nn, d * mm - b * nn});
            const int wy = detail::first_even({nn, c * mm + d * nn, -c * mm + a * nn});
            ensure(wx >= 0 && wy >= 0, ErrorKind::ParityGap,
                   "no even coordinate for residue (" + std::to_string(m) + "," + std::to_string(n) + ")");
            proof.parity_table[row] = {m, n, wx};
            proof.parity_table_y[row] = {m, n, wy};
        }
    return proof;
}

} // namespace binform
