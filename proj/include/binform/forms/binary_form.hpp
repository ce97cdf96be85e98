#pragma once

/**
 * @file binary_form.hpp
 * @brief Binary forms with exact rational coefficients.
 *
 * Coefficient order is fixed project-wide: coeffs[i] multiplies X^(d-i) Y^i.
 */

#include <cstddef>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "binform/arith/rat.hpp"
#include "binform/forms/mat2.hpp"

namespace binform {

class BinaryForm {
public:
    explicit BinaryForm(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) {
        ensure(coeffs_.size() >= 2, ErrorKind::BadInput, "binary form needs degree >= 1");
    }

    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Rat>& coeffs() const { return coeffs_; }
    const Rat& operator[](std::size_t i) const { return coeffs_[i]; }

    bool is_zero() const {
        for (const auto& c : coeffs_)
            if (!c.is_zero()) return false;
        return true;
    }
    bool is_integral() const {
        for (const auto& c : coeffs_)
            if (!c.is_integer()) return false;
        return true;
    }

    Rat operator()(const Rat& x, const Rat& y) const {
        // Homogeneous Horner: sum c_i x^(d-i) y^i.
        Rat acc = coeffs_[0];
        Rat ypow = 1;
        for (std::size_t i = 1; i < coeffs_.size(); ++i) {
            ypow *= y;
            acc = acc * x + coeffs_[i] * ypow;
        }
        return acc;
    }

    /// List syntax "[d; c0, c1, ..., cd]".
    std::string str() const {
        std::string s = "[" + std::to_string(degree()) + ";";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) s += (i ? ", " : " ") + coeffs_[i].str();
        return s + "]";
    }

    /// Expression syntax such as "X^3 - 3*X*Y^2 - Y^3".
    std::string expr() const {
        std::string out;
        const int d = degree();
        for (int i = 0; i <= d; ++i) {
            const Rat& c = coeffs_[static_cast<std::size_t>(i)];
            if (c.is_zero()) continue;
            const bool neg = c.sign() < 0;
            const Rat mag = c.abs();
            if (out.empty()) {
                if (neg) out += "-";
            } else {
                out += neg ? " - " : " + ";
            }
            std::string mono;
            auto var = [&](char v, int e) {
                if (e == 0) return;
                if (!mono.empty()) mono += "*";
                mono += v;
                if (e > 1) mono += "^" + std::to_string(e);
            };
            var('X', d - i);
            var('Y', i);
            if (mag == Rat(1)) {
                out += mono;
            } else {
                out += mag.str();
                if (!mono.empty()) out += "*" + mono;
            }
        }
        return out.empty() ? "0" : out;
    }

    friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
    friend std::ostream& operator<<(std::ostream& os, const BinaryForm& f) { return os << f.str(); }

private:
    std::vector<Rat> coeffs_;
};

inline Rat eval(const BinaryForm& f, const Rat& x, const Rat& y) { return f(x, y); }

inline BinaryForm operator*(const Rat& s, const BinaryForm& f) {
    std::vector<Rat> c = f.coeffs();
    for (auto& v : c) v *= s;
    return BinaryForm(std::move(c));
}

namespace detail {

/// Product of homogeneous polynomials stored in descending X order.
inline std::vector<Rat> hom_mul(std::span<const Rat> p, std::span<const Rat> q) {
    std::vector<Rat> r(p.size() + q.size() - 1);
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p[i].is_zero()) continue;
        for (std::size_t j = 0; j < q.size(); ++j) r[i + j] += p[i] * q[j];
    }
    return r;
}

/// Determinant by fraction-exact Gaussian elimination.
inline Rat determinant(std::vector<std::vector<Rat>> m) {
    const std::size_t n = m.size();
    Rat det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return 0;
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det *= m[col][col];
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            const Rat f = m[r][col] / m[col][col];
            for (std::size_t k = col; k < n; ++k) m[r][k] -= f * m[col][k];
        }
    }
    return det;
}

/// Sylvester resultant of univariate polynomials (descending coefficients,
/// nonzero leading terms).
inline Rat resultant(std::span<const Rat> f, std::span<const Rat> g) {
    const std::size_t m = f.size() - 1, n = g.size() - 1;
    const std::size_t size = m + n;
    if (size == 0) return 1;
    std::vector<std::vector<Rat>> s(size, std::vector<Rat>(size));
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t k = 0; k <= m; ++k) s[r][r + k] = f[k];
    for (std::size_t r = 0; r < m; ++r)
        for (std::size_t k = 0; k <= n; ++k) s[n + r][r + k] = g[k];
    return determinant(std::move(s));
}

/// disc(f) = (-1)^(n(n-1)/2) Res(f, f') / lead(f).
inline Rat univariate_discriminant(std::span<const Rat> f) {
    const std::size_t n = f.size() - 1;
    std::vector<Rat> df(n);
    for (std::size_t k = 0; k < n; ++k) df[k] = f[k] * Rat(static_cast<long>(n - k));
    if (n == 1) return 1;
    Rat r = resultant(f, df) / f[0];
    if ((n * (n - 1) / 2) % 2 == 1) r = -r;
    return r;
}

} // namespace detail

/// (F o M)(X, Y) = F(aX + bY, cX + dY). Singular M is allowed.
inline BinaryForm compose(const BinaryForm& f, const Mat2& m) {
    const std::size_t d = static_cast<std::size_t>(f.degree());
    const std::vector<Rat> l1{m.a, m.b};
    const std::vector<Rat> l2{m.c, m.d};
    std::vector<std::vector<Rat>> p1(d + 1), p2(d + 1);
    p1[0] = p2[0] = {Rat(1)};
    for (std::size_t k = 1; k <= d; ++k) {
        p1[k] = detail::hom_mul(p1[k - 1], l1);
        p2[k] = detail::hom_mul(p2[k - 1], l2);
    }
    std::vector<Rat> out(d + 1);
    for (std::size_t i = 0; i <= d; ++i) {
        if (f[i].is_zero()) continue;
        const auto term = detail::hom_mul(p1[d - i], p2[i]);
        for (std::size_t k = 0; k <= d; ++k) out[k] += f[i] * term[k];
    }
    return BinaryForm(std::move(out));
}

/**
 * Binary-form discriminant, normalized so that for a cubic
 * disc(aX^3 + bX^2Y + cXY^2 + dY^3) = b^2c^2 - 4ac^3 - 4b^3d - 27a^2d^2 + 18abcd.
 * When Y divides F the dehomogenized polynomial drops degree and the value is
 * c1^2 disc(F(z, 1)); this keeps disc(F o g) = det(g)^(d(d-1)) disc(F).
 */
inline Rat discriminant(const BinaryForm& f) {
    ensure(f.degree() >= 2, ErrorKind::BadInput, "discriminant needs degree >= 2");
    const auto& c = f.coeffs();
    if (!c[0].is_zero()) return detail::univariate_discriminant(c);
    if (c[1].is_zero()) return 0;
    const std::span<const Rat> tail(c.data() + 1, c.size() - 1);
    return c[1] * c[1] * detail::univariate_discriminant(tail);
}

/// F = content * primitive, primitive integral with coprime coefficients and
/// positive leading nonzero coefficient.
inline std::pair<Rat, BinaryForm> content_and_primitive(const BinaryForm& f) {
    ensure(!f.is_zero(), ErrorKind::BadInput, "content of the zero form");
    Int l = 1;
    for (const auto& c : f.coeffs()) l = lcm(l, c.den());
    std::vector<Int> k;
    k.reserve(f.coeffs().size());
    Int g = 0;
    for (const auto& c : f.coeffs()) {
        k.push_back(c.num() * (l / c.den()));
        g = gcd(g, k.back());
    }
    int lead_sign = 0;
    for (const auto& v : k)
        if (v != 0) {
            lead_sign = sgn(v);
            break;
        }
    if (lead_sign < 0) g = -g;
    std::vector<Rat> p;
    p.reserve(k.size());
    for (const auto& v : k) p.emplace_back(Int(v / g));
    return {Rat(g, l), BinaryForm(std::move(p))};
}

} // namespace binform
