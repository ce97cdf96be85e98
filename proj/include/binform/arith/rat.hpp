#pragma once

/**
 * @file rat.hpp
 * @brief Exact rationals over GMP.
 *
 * Rat keeps the GMP canonical form at all times: gcd(|num|, den) = 1 and
 * den >= 1. Text form is "p/q", or "p" when q = 1.
 */

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>

#include "binform/error.hpp"

namespace binform {

using Int = mpz_class;

class Rat {
public:
    Rat() = default;
    Rat(long v) : q_(v) {}
    Rat(int v) : q_(static_cast<long>(v)) {}
    Rat(const Int& v) : q_(v) {}
    Rat(const Int& num, const Int& den) {
        ensure(den != 0, ErrorKind::BadInput, "rational with zero denominator");
        q_ = mpq_class(num, den);
        q_.canonicalize();
    }
    explicit Rat(const mpq_class& q) : q_(q) { q_.canonicalize(); }

    /// Accepts "p", "-p", "p/q" with optional surrounding whitespace.
    static Rat parse(std::string_view text);

    const Int& num() const { return q_.get_num(); }
    const Int& den() const { return q_.get_den(); }
    const mpq_class& raw() const { return q_; }

    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return den() == 1; }
    /// True for elements of Z + 1/2.
    bool is_half_odd() const { return den() == 2; }
    int sign() const { return sgn(q_); }

    Rat abs() const { return Rat(mpq_class(::abs(q_))); }
    Rat inverse() const {
        ensure(!is_zero(), ErrorKind::BadInput, "inverse of zero");
        return Rat(mpq_class(1 / q_));
    }
    double to_double() const { return q_.get_d(); }

    std::string str() const { return q_.get_str(); }

    Rat& operator+=(const Rat& o) { q_ += o.q_; return *this; }
    Rat& operator-=(const Rat& o) { q_ -= o.q_; return *this; }
    Rat& operator*=(const Rat& o) { q_ *= o.q_; return *this; }
    Rat& operator/=(const Rat& o) {
        ensure(!o.is_zero(), ErrorKind::BadInput, "division by zero");
        q_ /= o.q_;
        return *this;
    }

    friend Rat operator+(Rat a, const Rat& b) { return a += b; }
    friend Rat operator-(Rat a, const Rat& b) { return a -= b; }
    friend Rat operator*(Rat a, const Rat& b) { return a *= b; }
    friend Rat operator/(Rat a, const Rat& b) { return a /= b; }
    friend Rat operator-(const Rat& a) { return Rat(mpq_class(-a.q_)); }

    friend bool operator==(const Rat& a, const Rat& b) { return cmp(a.q_, b.q_) == 0; }
    friend std::strong_ordering operator<=>(const Rat& a, const Rat& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    friend std::ostream& operator<<(std::ostream& os, const Rat& r) { return os << r.str(); }

private:
    mpq_class q_;
};

inline Rat pow(const Rat& base, unsigned long e) {
    Int n, d;
    mpz_pow_ui(n.get_mpz_t(), base.num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), base.den().get_mpz_t(), e);
    return Rat(n, d);
}

inline Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

/// Floor division for possibly negative operands.
inline Int floor_div(const Int& a, const Int& b) {
    Int q;
    mpz_fdiv_q(q.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return q;
}

inline Int floor_mod(const Int& a, const Int& b) {
    Int r;
    mpz_fdiv_r(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

/// Extended gcd: returns g = gcd(a, b) >= 0 with g = s*a + t*b.
inline Int xgcd(const Int& a, const Int& b, Int& s, Int& t) {
    Int g;
    mpz_gcdext(g.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

inline Int factorial(unsigned long k) {
    Int f;
    mpz_fac_ui(f.get_mpz_t(), k);
    return f;
}

inline bool divides(const Int& d, const Int& n) {
    return mpz_divisible_p(n.get_mpz_t(), d.get_mpz_t()) != 0;
}

inline std::int64_t to_i64(const Int& v) {
    ensure(mpz_fits_slong_p(v.get_mpz_t()) != 0, ErrorKind::BadInput, "integer out of 64-bit range");
    return v.get_si();
}

/// Exact d-th root of c when it is rational. For even d only c > 0 has a
/// root, and the positive one is returned.
inline std::optional<Rat> rational_dth_root(const Rat& c, unsigned long d) {
    ensure(d >= 1, ErrorKind::BadInput, "root degree must be positive");
    ensure(!c.is_zero(), ErrorKind::BadInput, "root of zero requested");
    if (c.sign() < 0 && d % 2 == 0) return std::nullopt;
    Int an = ::abs(c.num());
    Int rn, rd;
    if (mpz_root(rn.get_mpz_t(), an.get_mpz_t(), d) == 0) return std::nullopt;
    if (mpz_root(rd.get_mpz_t(), c.den().get_mpz_t(), d) == 0) return std::nullopt;
    if (c.sign() < 0) rn = -rn;
    return Rat(rn, rd);
}

inline Rat Rat::parse(std::string_view text) {
    auto trim = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
        return s;
    };
    text = trim(text);
    auto is_int = [](std::string_view s) {
        if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
        if (s.empty()) return false;
        for (char ch : s)
            if (ch < '0' || ch > '9') return false;
        return true;
    };
    auto to_int = [](std::string_view s) {
        if (!s.empty() && s.front() == '+') s.remove_prefix(1);
        return Int(std::string(s));
    };
    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        if (!is_int(text)) throw ParseError(0, {"integer", "p/q"}, "malformed rational '" + std::string(text) + "'");
        return Rat(to_int(text));
    }
    auto n = trim(text.substr(0, slash));
    auto d = trim(text.substr(slash + 1));
    if (!is_int(n) || !is_int(d) || d.front() == '-' || d.front() == '+')
        throw ParseError(0, {"integer", "p/q"}, "malformed rational '" + std::string(text) + "'");
    return Rat(to_int(n), to_int(d));
}

} // namespace binform
