#pragma once

/**
 * @file parse.hpp
 * @brief Text input for forms and matrices.
 *
 * Forms: list syntax "[d; c0, ..., cd]" or expressions such as
 * "X^3 - 3*X*Y^2 - Y^3". Matrices: "[[a,b],[c,d]]". Whitespace is ignored.
 * Errors carry the byte offset and the set of tokens that would have fit.
 */

#include <cctype>
#include <cstddef>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "binform/forms/binary_form.hpp"
#include "binform/forms/mat2.hpp"

namespace binform {

/// Character cursor shared by the small grammars in this project.
class Cursor {
public:
    explicit Cursor(std::string_view text) : s_(text) {}

    void skip_ws() {
        while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
    }
    bool at_end() {
        skip_ws();
        return i_ >= s_.size();
    }
    char peek() {
        skip_ws();
        return i_ < s_.size() ? s_[i_] : '\0';
    }
    std::size_t pos() const { return i_; }

    bool accept(char ch) {
        if (peek() != ch) return false;
        ++i_;
        return true;
    }
    void expect(char ch) {
        if (!accept(ch)) error({std::string(1, ch)});
    }
    void expect_end() {
        if (!at_end()) error({"end of input"});
    }

    bool at_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }

    /// Unsigned decimal integer.
    Int natural() {
        if (!at_digit()) error({"digit"});
        const std::size_t start = i_;
        while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
        return Int(std::string(s_.substr(start, i_ - start)));
    }
    /// Optionally signed integer.
    Int integer() {
        const bool neg = accept('-');
        if (!neg) accept('+');
        Int v = natural();
        return neg ? Int(-v) : v;
    }
    /// Optionally signed "p" or "p/q".
    Rat rational() {
        const Int n = integer();
        if (!accept('/')) return Rat(n);
        const std::size_t at = pos();
        const Int d = natural();
        if (d == 0) throw ParseError(at, {"nonzero denominator"}, "zero denominator");
        return Rat(n, d);
    }

    [[noreturn]] void error(std::vector<std::string> expected) const {
        std::string msg = "expected ";
        for (std::size_t k = 0; k < expected.size(); ++k) msg += (k ? " or '" : "'") + expected[k] + "'";
        throw ParseError(i_, std::move(expected), msg);
    }

private:
    std::string_view s_;
    std::size_t i_ = 0;
};

namespace detail {

inline BinaryForm parse_form_list(Cursor& cur) {
    cur.expect('[');
    const std::size_t deg_at = cur.pos();
    const Int d = cur.natural();
    if (d < 1 || d > 64) throw ParseError(deg_at, {"degree in 1..64"}, "degree out of range");
    cur.expect(';');
    const std::size_t want = d.get_ui() + 1;
    std::vector<Rat> c;
    c.push_back(cur.rational());
    while (cur.accept(',')) {
        if (c.size() == want) cur.error({"]"});
        c.push_back(cur.rational());
    }
    if (c.size() < want) cur.error({","});
    cur.expect(']');
    return BinaryForm(std::move(c));
}

inline BinaryForm parse_form_expr(Cursor& cur) {
    std::map<int, Rat> by_y; // exponent of Y -> coefficient
    int degree = -1;
    bool first = true;
    for (;;) {
        const std::size_t term_at = cur.pos();
        int sign = 1;
        if (cur.accept('-')) sign = -1;
        else if (!cur.accept('+') && !first) break;
        first = false;

        Rat coef = 1;
        bool have_coef = false, have_var = false;
        if (cur.at_digit()) {
            coef = Rat(cur.natural());
            if (cur.accept('/')) {
                const std::size_t at = cur.pos();
                const Int den = cur.natural();
                if (den == 0) throw ParseError(at, {"nonzero denominator"}, "zero denominator");
                coef = coef / Rat(den);
            }
            have_coef = true;
        }
        int ex = 0, ey = 0;
        for (;;) {
            const bool star = (have_coef || have_var) && cur.accept('*');
            const char ch = cur.peek();
            if (ch != 'X' && ch != 'Y') {
                if (star || (!have_coef && !have_var)) cur.error({"X", "Y", "coefficient"});
                break;
            }
            cur.accept(ch);
            int e = 1;
            if (cur.accept('^')) {
                const std::size_t at = cur.pos();
                const Int v = cur.natural();
                if (v > 64) throw ParseError(at, {"exponent <= 64"}, "exponent too large");
                e = static_cast<int>(v.get_si());
            }
            (ch == 'X' ? ex : ey) += e;
            have_var = true;
        }
        const int td = ex + ey;
        if (degree < 0) degree = td;
        else if (td != degree)
            throw ParseError(term_at, {"term of degree " + std::to_string(degree)},
                             "mixed degrees: term has degree " + std::to_string(td));
        by_y[ey] += Rat(sign) * coef;
        if (cur.at_end()) break;
        const char nx = cur.peek();
        if (nx != '+' && nx != '-') cur.error({"+", "-", "end of input"});
    }
    if (degree < 1) throw ParseError(0, {"X", "Y"}, "form must have degree >= 1");
    std::vector<Rat> c(static_cast<std::size_t>(degree) + 1);
    for (const auto& [ey, v] : by_y) c[static_cast<std::size_t>(ey)] = v;
    return BinaryForm(std::move(c));
}

} // namespace detail

inline BinaryForm parse_form(std::string_view text) {
    Cursor cur(text);
    BinaryForm f = cur.peek() == '[' ? detail::parse_form_list(cur) : detail::parse_form_expr(cur);
    cur.expect_end();
    if (f.is_zero()) throw ParseError(0, {"nonzero form"}, "all coefficients are zero");
    return f;
}

inline Mat2 parse_matrix(Cursor& cur) {
    cur.expect('[');
    cur.expect('[');
    Rat a = cur.rational();
    cur.expect(',');
    Rat b = cur.rational();
    cur.expect(']');
    cur.expect(',');
    cur.expect('[');
    Rat c = cur.rational();
    cur.expect(',');
    Rat d = cur.rational();
    cur.expect(']');
    cur.expect(']');
    return {a, b, c, d};
}

/// "[[a,b],[c,d]]"
inline Mat2 parse_matrix(std::string_view text) {
    Cursor cur(text);
    Mat2 m = parse_matrix(cur);
    cur.expect_end();
    return m;
}

} // namespace binform
