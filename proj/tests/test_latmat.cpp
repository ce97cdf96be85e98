#include <gtest/gtest.h>

#include "test_util.hpp"

using namespace binform;
using testutil::M;
using testutil::Q;

namespace {

const Lattice2 kLambda0(Int(1), Int(0), Int(2)); // Z x 2Z
const Lattice2 kLambda1(Int(2), Int(0), Int(1)); // 2Z x Z
const Lattice2 kLambda2(Int(2), Int(1), Int(1)); // u + v even

Int denom_lcm(const Mat2& m) {
    Int l = 1;
    for (const auto& e : m.entries()) l = lcm(l, e.den());
    return l;
}

// Index of L(M) by counting solutions in a fundamental box of l Z^2.
Int brute_index(const Mat2& m) {
    const long l = denom_lcm(m).get_si();
    long count = 0;
    for (long u = 0; u < l; ++u)
        for (long v = 0; v < l; ++v) {
            const auto [x, y] = m.apply(u, v);
            if (x.is_integer() && y.is_integer()) ++count;
        }
    return Int(l * l / count);
}

} // namespace

TEST(Canonical, Examples) {
    EXPECT_EQ(canonical_form(Mat2::diag(2, Q(1, 2))), (CanonicalMat{1, 2, Mat2::diag(4, 1)}));
    EXPECT_EQ(canonical_form(matrix_R()), (CanonicalMat{1, 1, matrix_R()}));
    EXPECT_EQ(canonical_form(Mat2::scalar(Q(3, 2))), (CanonicalMat{3, 2, Mat2::identity()}));
    EXPECT_THROW(canonical_form(Mat2(0, 0, 0, 0)), Error);
}

TEST(Canonical, UniqueAndReconstructs) {
    testutil::Rng rng(1001);
    for (int i = 0; i < 300; ++i) {
        const Mat2 m = rng.invertible(9, 12);
        const CanonicalMat cf = canonical_form(m);
        EXPECT_EQ(cf.value(), m);
        EXPECT_EQ(gcd(cf.N, cf.D), 1);
        EXPECT_EQ(content(cf.A), 1);
        const Rat s = rng.nonzero_rat(7, 7).abs();
        const CanonicalMat scaled = canonical_form(s * m);
        EXPECT_EQ(scaled.A, cf.A);
        if (m.is_unimodular()) EXPECT_EQ(cf.N, 1);
    }
}

TEST(Smith, Examples) {
    for (long nu = 1; nu <= 9; ++nu) {
        const SmithForm s = smith_normal_form(Mat2::diag(1, nu));
        EXPECT_EQ(s.P, Mat2::identity());
        EXPECT_EQ(s.Q, Mat2::identity());
        EXPECT_EQ(s.S, Mat2::diag(1, nu));
    }
    EXPECT_EQ(smith_normal_form(M(2, 1, 0, 2)).S, Mat2::diag(1, 4));
    EXPECT_EQ(smith_normal_form(M(2, 0, 0, 2)).S, Mat2::diag(2, 2));
    EXPECT_THROW(smith_normal_form(M(1, 2, 2, 4)), Error);
}

TEST(Smith, RandomProperties) {
    testutil::Rng rng(1002);
    for (int i = 0; i < 400; ++i) {
        Mat2 a(rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(-30, 30), rng.uniform(-30, 30));
        if (a.det().is_zero()) continue;
        const SmithForm s = smith_normal_form(a);
        EXPECT_TRUE(s.P.is_unimodular());
        EXPECT_TRUE(s.Q.is_unimodular());
        EXPECT_EQ(s.P * s.S * s.Q, a);
        EXPECT_TRUE(s.S.b.is_zero() && s.S.c.is_zero());
        EXPECT_GE(s.S.a, Rat(1));
        EXPECT_TRUE(divides(s.S.a.num(), s.S.d.num()));
        EXPECT_EQ(s.S.a.num(), content(a));
        EXPECT_EQ(s.S.a * s.S.d, a.det().abs());
    }
}

TEST(Lattice, OfMatrixExamples) {
    EXPECT_EQ(lattice_of(Mat2::diag(2, Q(1, 2))), kLambda0);
    EXPECT_EQ(lattice_index(lattice_of(Mat2::diag(2, Q(1, 2)))), 2);
    EXPECT_EQ(lattice_index_by_formula(Mat2::diag(2, Q(1, 2))), 2);
    EXPECT_EQ(lattice_of(matrix_R()), Lattice2());
    EXPECT_EQ(lattice_of(Mat2::diag(Q(1, 2), 1)), kLambda1);
    // gamma = diag(D, D/nu) with (D, nu) = (2, 4): index nu / gcd(D, nu) = 2.
    EXPECT_EQ(lattice_index(lattice_of(Mat2::diag(2, Q(2, 4)))), 2);
    EXPECT_EQ(lattice_index_by_formula(Mat2::diag(2, Q(2, 4))), 2);
    EXPECT_EQ(lattice_of(M(1, 1, 1, -1) * Mat2::scalar(Q(1, 2))), kLambda2);
}

TEST(Lattice, MatchesBruteForceAndTwoRoutesAgree) {
    testutil::Rng rng(1003);
    for (int i = 0; i < 500; ++i) {
        const Mat2 m = rng.invertible(12, 12);
        const Lattice2 l = lattice_of(m);
        EXPECT_EQ(l.index(), lattice_index_by_formula(m)) << m;
        if (denom_lcm(m) <= 240) EXPECT_EQ(l.index(), brute_index(m)) << m;
        for (int t = 0; t < 10; ++t) {
            const long u = rng.uniform(-40, 40), v = rng.uniform(-40, 40);
            const auto [x, y] = m.apply(u, v);
            EXPECT_EQ(l.contains(u, v), x.is_integer() && y.is_integer());
        }
        // Invariance under left unimodular factors and sign; index under both sides.
        const Mat2 p = rng.unimodular(), q = rng.unimodular();
        EXPECT_EQ(lattice_of(p * m), l);
        EXPECT_EQ(lattice_of(-m), l);
        EXPECT_EQ(lattice_of(p * m * q).index(), l.index());
        const Rat scaled = Rat(l.index()) * m.det().abs();
        EXPECT_TRUE(scaled.is_integer() && scaled.sign() > 0);
        const bool both_full = l.is_full() && lattice_of(m.inverse()).is_full();
        EXPECT_EQ(both_full, m.is_unimodular());
    }
}

TEST(Lattice, IntersectMemberModulus) {
    const Lattice2 meet = lattice_intersect(kLambda0, kLambda1);
    EXPECT_EQ(meet, Lattice2(Int(2), Int(0), Int(2)));
    EXPECT_EQ(meet.index(), 4);
    EXPECT_TRUE(lattice_member(kLambda2, 1, 1));
    EXPECT_FALSE(lattice_member(kLambda2, 1, 0));
    EXPECT_EQ(scaling_modulus(kLambda0), 2);
    EXPECT_EQ(scaling_modulus(Lattice2()), 1);

    testutil::Rng rng(1004);
    const auto pool = proper_sublattices(12);
    for (int i = 0; i < 200; ++i) {
        const Lattice2& l1 = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
        const Lattice2& l2 = pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))];
        const Lattice2 m = lattice_intersect(l1, l2);
        for (long x = -6; x <= 6; ++x)
            for (long y = -6; y <= 6; ++y)
                EXPECT_EQ(m.contains(x, y), l1.contains(x, y) && l2.contains(x, y));
        // Modulus is the least C with C Z^2 inside.
        const Int c = scaling_modulus(l1);
        EXPECT_TRUE(l1.contains(c, 0) && l1.contains(0, c));
        for (Int d = 1; d < c; ++d) EXPECT_FALSE(l1.contains(d, 0) && l1.contains(0, d));
    }
}

TEST(Lattice, ParseAndPrint) {
    EXPECT_EQ(parse_lattice("{[2,0],[1,1]}"), kLambda2);
    EXPECT_EQ(kLambda2.str(), "{[2,0],[1,1]}");
    EXPECT_THROW(parse_lattice("{[2,1],[1,1]}"), ParseError);
    EXPECT_THROW(parse_lattice("{[2,0],[2,1]}"), ParseError);
}

TEST(Covering, ThreeIndexTwoLattices) {
    const std::vector<Lattice2> three{kLambda0, kLambda1, kLambda2};
    EXPECT_TRUE(is_covering(three).covers);
    const std::vector<Lattice2> full{Lattice2()};
    EXPECT_TRUE(is_covering(full).covers);
    const std::vector<Lattice2> two{kLambda0, kLambda1};
    const auto r = is_covering(two);
    ASSERT_FALSE(r.covers);
    ASSERT_TRUE(r.witness.has_value());
    EXPECT_FALSE(kLambda0.contains(r.witness->first, r.witness->second));
    EXPECT_FALSE(kLambda1.contains(r.witness->first, r.witness->second));
}

TEST(Covering, AgreesWithBoxCheck) {
    testutil::Rng rng(1005);
    const auto pool = proper_sublattices(6);
    for (int i = 0; i < 300; ++i) {
        std::vector<Lattice2> fam;
        const long n = rng.uniform(1, 5);
        for (long j = 0; j < n; ++j)
            fam.push_back(pool[static_cast<std::size_t>(rng.uniform(0, static_cast<long>(pool.size()) - 1))]);
        const auto r = is_covering(fam);
        const long c = r.modulus.get_si();
        bool box = true;
        for (long x = -c; x <= c && box; ++x)
            for (long y = -c; y <= c && box; ++y)
                box = std::any_of(fam.begin(), fam.end(), [&](const Lattice2& l) { return l.contains(x, y); });
        EXPECT_EQ(r.covers, box);
    }
}

TEST(Covering, Enumeration) {
    EXPECT_TRUE(enumerate_coverings(1, 16).empty());
    EXPECT_TRUE(enumerate_coverings(2, 8).empty());
    const auto three = enumerate_coverings(3, 4);
    ASSERT_EQ(three.size(), 1u);
    std::vector<Lattice2> expect{kLambda0, kLambda1, kLambda2};
    std::sort(expect.begin(), expect.end());
    EXPECT_EQ(three.front(), expect);
    for (const auto& cov : enumerate_coverings(4, 6)) {
        EXPECT_EQ(cov.size(), 4u);
        EXPECT_TRUE(is_covering(cov).covers);
    }
    EXPECT_THROW(enumerate_coverings(7, 4), Error);
    EXPECT_THROW(enumerate_coverings(3, 17), Error);
}

TEST(Order3, Conjugation) {
    EXPECT_EQ(conjugate_order3_to_R(matrix_R()), Mat2::identity());
    const Mat2 r2 = matrix_R() * matrix_R();
    const Mat2 t = conjugate_order3_to_R(r2);
    EXPECT_TRUE(t.is_unimodular());
    EXPECT_EQ(t.inverse() * r2 * t, matrix_R());
    // The swap matrix also conjugates R^2 to R.
    EXPECT_EQ(matrix_swap().inverse() * r2 * matrix_swap(), matrix_R());
    EXPECT_THROW(conjugate_order3_to_R(Mat2::identity()), Error);

    testutil::Rng rng(1006);
    for (int i = 0; i < 200; ++i) {
        const Mat2 u = rng.unimodular(6, 4);
        const Mat2 a = u * (rng.uniform(0, 1) ? matrix_R() : r2) * u.inverse();
        const Mat2 c = conjugate_order3_to_R(a);
        EXPECT_TRUE(c.is_unimodular());
        EXPECT_EQ(c.inverse() * a * c, matrix_R());
    }
}

TEST(PolyValues, FixedDivisors) {
    const std::vector<Int> quad{1, 1, 2};
    EXPECT_EQ(gcd_of_poly_values(quad, std::make_pair(-10L, 10L)), 2);
    const std::vector<Int> lin{1, 0};
    EXPECT_EQ(gcd_of_poly_values(lin, std::make_pair(-5L, 5L)), 1);
    const std::vector<Int> cub{1, 0, -1, 0};
    EXPECT_EQ(gcd_of_poly_values(cub, std::make_pair(-10L, 10L)), 6);
    EXPECT_EQ(gcd_of_poly_values(cub), 6);
    const std::vector<Int> not_prim{2, 4};
    EXPECT_THROW(gcd_of_poly_values(not_prim), Error);

    testutil::Rng rng(1007);
    for (int i = 0; i < 100; ++i) {
        const long k = rng.uniform(0, 6);
        std::vector<Int> f;
        Int g = 0;
        do {
            f.clear();
            g = 0;
            for (long j = 0; j <= k; ++j) f.emplace_back(rng.uniform(-20, 20));
            if (f.front() == 0) f.front() = 1;
            for (const auto& c : f) g = gcd(g, c);
        } while (g != 1);
        const Int v = gcd_of_poly_values(f);
        EXPECT_TRUE(divides(v, factorial(static_cast<unsigned long>(k))));
        // A long window gives the same answer.
        EXPECT_EQ(gcd_of_poly_values(f, std::make_pair(-50L, 50L)), v);
    }
}
