#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace binform;
using testutil::M;
using testutil::Q;

namespace {

const BinaryForm kF10({1, 0, -3, -1});

// Independent closed form for cubics.
Rat cubic_disc_oracle(const BinaryForm& f) {
    const Rat &a = f[0], &b = f[1], &c = f[2], &d = f[3];
    return b * b * c * c - Rat(4) * a * c * c * c - Rat(4) * b * b * b * d - Rat(27) * a * a * d * d +
           Rat(18) * a * b * c * d;
}

} // namespace

TEST(Forms, Eval) {
    EXPECT_EQ(kF10(1, 0), Rat(1));
    EXPECT_EQ(eval(kF10, 0, 1), Rat(-1));
    EXPECT_EQ(BinaryForm({1, 0, 3})(1, 1), Rat(4));
}

TEST(Forms, ComposeExamples) {
    const Mat2 r2 = matrix_R() * matrix_R();
    EXPECT_EQ(compose(BinaryForm({1, 0, 3}), r2), BinaryForm({4, 2, 1}));
    EXPECT_EQ(compose(kF10, Mat2::identity()), kF10);
    EXPECT_EQ(compose(kF10, Mat2::diag(2, 1)), BinaryForm({8, 0, -6, -1}));
    // Singular matrices are allowed.
    EXPECT_EQ(compose(kF10, M(1, 0, 0, 0)), BinaryForm({1, 0, 0, 0}));
}

TEST(Forms, ComposeIsFunctorialAndMatchesPointwise) {
    testutil::Rng rng(404);
    for (int i = 0; i < 60; ++i) {
        const BinaryForm f = rng.form(static_cast<int>(rng.uniform(1, 6)), 9, 4);
        const Mat2 m = rng.invertible(5, 3), n = rng.invertible(5, 3);
        EXPECT_EQ(compose(f, m * n), compose(compose(f, m), n));
        const Rat x = rng.rat(7, 3), y = rng.rat(7, 3);
        const auto [u, v] = m.apply(x, y);
        EXPECT_EQ(compose(f, m)(x, y), f(u, v));
        const Rat t = rng.rat(5, 5);
        EXPECT_EQ(f(t * x, t * y), pow(t, static_cast<unsigned long>(f.degree())) * f(x, y));
    }
}

TEST(Forms, DiscriminantOfNamedFamilies) {
    for (long b = -10; b <= 10; ++b) {
        const Rat e = Rat(b * b - 3 * b + 9);
        EXPECT_EQ(discriminant(form_PhiB(b)), e * e) << "b=" << b;
    }
    for (long a = -4; a <= 4; ++a)
        for (long b = -4; b <= 4; ++b) {
            if (a == 0 && b == 0) continue;
            const Rat e = Rat(9 * a * a - 3 * a * b + b * b);
            EXPECT_EQ(discriminant(form_Fab(a, b)), e * e);
        }
    EXPECT_EQ(discriminant(BinaryForm({1, 1, 1})), Rat(-3));
    EXPECT_EQ(discriminant(BinaryForm({1, 0, 0, 0, 1})), Rat(256));
}

TEST(Forms, DiscriminantMatchesCubicClosedForm) {
    testutil::Rng rng(505);
    for (int i = 0; i < 200; ++i) {
        const BinaryForm f = rng.form(3, 12, 3);
        EXPECT_EQ(discriminant(f), cubic_disc_oracle(f)) << f;
    }
    // Root at infinity and double root at infinity.
    EXPECT_EQ(discriminant(BinaryForm({0, 1, 2, 3})), cubic_disc_oracle(BinaryForm({0, 1, 2, 3})));
    EXPECT_EQ(discriminant(BinaryForm({0, 0, 1, 1})), Rat(0));
}

TEST(Forms, DiscriminantCovariance) {
    testutil::Rng rng(606);
    for (int i = 0; i < 100; ++i) {
        const int d = static_cast<int>(rng.uniform(3, 5));
        const BinaryForm f = rng.form(d, 6, 2);
        const Mat2 g = rng.invertible(4, 3);
        const Rat lhs = discriminant(compose(f, g));
        const Rat rhs = pow(g.det(), static_cast<unsigned long>(d * (d - 1))) * discriminant(f);
        EXPECT_EQ(lhs, rhs) << f << " " << g;
    }
}

TEST(Forms, ContentAndPrimitive) {
    const BinaryForm f21({2, 1, -5, -2});
    EXPECT_EQ(content_and_primitive(f21), std::make_pair(Rat(1), f21));
    EXPECT_EQ(content_and_primitive(BinaryForm({Q(1, 2), 1, 0, 0})), std::make_pair(Q(1, 2), BinaryForm({1, 2, 0, 0})));
    EXPECT_EQ(content_and_primitive(BinaryForm({-3, 0, 0, -3})), std::make_pair(Rat(-3), BinaryForm({1, 0, 0, 1})));
    EXPECT_EQ(content_and_primitive(BinaryForm({0, -4, 6})), std::make_pair(Rat(-2), BinaryForm({0, 2, -3})));
}

TEST(Forms, Families) {
    EXPECT_EQ(family(Family::Fab, std::vector<Rat>{1, 0}), kF10);
    EXPECT_EQ(family(Family::PhiB, std::vector<Rat>{2}), BinaryForm({1, 2, -1, -1}));
    EXPECT_EQ(family(Family::Diagonal, std::vector<Rat>{1, 1, 3}), BinaryForm({1, 0, 0, 1}));
    EXPECT_EQ(family(Family::DeloneWatson, std::vector<Rat>{1}), BinaryForm({1, 1, 1}));
    EXPECT_EQ(family(Family::DeloneWatson, std::vector<Rat>{2, 2}), BinaryForm({2, 0, 6}));
    EXPECT_THROW(family(Family::Fab, std::vector<Rat>{1}), Error);
    EXPECT_THROW(family(Family::Diagonal, std::vector<Rat>{0, 1, 3}), Error);
    EXPECT_EQ(parse_family("PhiB"), Family::PhiB);
}

TEST(Parse, ListAndExpressionAgree) {
    EXPECT_EQ(parse_form("[3; 1, 0, -3, -1]"), kF10);
    EXPECT_EQ(parse_form("X^3 - 3*X*Y^2 - Y^3"), kF10);
    EXPECT_EQ(parse_form("  X^3-3XY^2 -Y^3 "), kF10);
    EXPECT_EQ(parse_form("-Y^3 + X*X*X - 3 * Y^2 * X^1"), kF10);
    EXPECT_EQ(parse_form("1/2*X^3 + X^2*Y"), BinaryForm({Q(1, 2), 1, 0, 0}));
    EXPECT_EQ(parse_form("[2; 1/2, -3/4, 5]"), BinaryForm({Q(1, 2), Q(-3, 4), 5}));
}

TEST(Parse, Errors) {
    try {
        (void)parse_form("[3; 1, 0]");
        FAIL() << "expected ParseError";
    } catch (const ParseError& e) {
        EXPECT_EQ(e.position(), 8u);
        EXPECT_EQ(e.expected(), std::vector<std::string>{","});
    }
    EXPECT_THROW(parse_form("[3; 1, 0, 0, 0, 1]"), ParseError);
    EXPECT_THROW(parse_form("X^3 + Y^2"), ParseError);
    EXPECT_THROW(parse_form("X^3 + Z^3"), ParseError);
    EXPECT_THROW(parse_form("X^3 +"), ParseError);
    EXPECT_THROW(parse_form("0*X^3"), ParseError);
    EXPECT_THROW(parse_form("[3; 1, 0, 0, 1/0]"), ParseError);
    EXPECT_EQ(parse_matrix("[[0, 1], [-1, -1]]"), matrix_R());
    EXPECT_THROW(parse_matrix("[[0,1],[-1]]"), ParseError);
}

TEST(Parse, RenderRoundTrip) {
    testutil::Rng rng(707);
    for (int i = 0; i < 200; ++i) {
        const BinaryForm f = rng.form(static_cast<int>(rng.uniform(1, 7)), 20, 5);
        EXPECT_EQ(parse_form(f.str()), f) << f.str();
        EXPECT_EQ(parse_form(f.expr()), f) << f.expr();
    }
    EXPECT_EQ(kF10.expr(), "X^3 - 3*X*Y^2 - Y^3");
    EXPECT_EQ(kF10.str(), "[3; 1, 0, -3, -1]");
}
