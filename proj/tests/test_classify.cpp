#include <gtest/gtest.h>

#include <map>
#include <set>

#include "test_util.hpp"

using namespace binform;
using testutil::M;
using testutil::Q;

namespace {

const BinaryForm kF10({1, 0, -3, -1});
const BinaryForm kF21({2, 1, -5, -2});
const BinaryForm kSum({1, 0, 0, 1});
const BinaryForm kJ({64, 0, -12, -1});

ErrorKind kind_of(auto&& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorKind::InternalInvariant;
}

// Oracle for a parity proof: every value of F on a box is a value of F at a
// point with even first coordinate, found by direct search.
bool values_have_even_x_rep(const BinaryForm& f, long box, long search) {
    std::set<Int> even_vals;
    for (long x = -search; x <= search; x += 2)
        for (long y = -search; y <= search; ++y) even_vals.insert(f(Rat(x), Rat(y)).num());
    for (long x = -box; x <= box; ++x)
        for (long y = -box; y <= box; ++y)
            if (!even_vals.count(f(Rat(x), Rat(y)).num())) return false;
    return true;
}

bool lattice_point(const Mat2& m, long x, long y) {
    const auto [u, v] = m.apply(Rat(x), Rat(y));
    return u.is_integer() && v.is_integer();
}

} // namespace

TEST(Classify, F10IsExtraordinaryWithWitnessR) {
    const auto rep = classify(kF10);
    EXPECT_EQ(rep.verdict, Verdict::Extraordinary);
    ASSERT_TRUE(rep.witness);
    EXPECT_EQ(rep.witness->sigma, matrix_R());
    EXPECT_EQ(rep.witness->pattern, Pattern::A);
    ASSERT_TRUE(rep.companion);
    EXPECT_EQ(*rep.companion, BinaryForm({8, 0, -6, -1}));
    EXPECT_EQ(rep.aut_label, GroupLabel::C3);
    ASSERT_TRUE(rep.proof);
}

TEST(Classify, F21IsExtraordinary) {
    const auto rep = classify(kF21);
    EXPECT_EQ(rep.verdict, Verdict::Extraordinary);
    ASSERT_TRUE(rep.witness && rep.companion);
    // Every F_{a,b} is fixed by R, so the witness is integral.
    EXPECT_EQ(rep.witness->sigma, matrix_R());
    EXPECT_EQ(rep.witness->pattern, Pattern::A);
    // Scaled by 1/2: G = F/2 has a non-integral coefficient, H = G(2X, Y) is integral.
    const BinaryForm g = Q(1, 2) * kF21;
    const BinaryForm h = Q(1, 2) * *rep.companion;
    EXPECT_FALSE(g.is_integral());
    EXPECT_EQ(h, BinaryForm({8, 2, -5, -1}));
    EXPECT_EQ(classify(g).verdict, Verdict::Extraordinary);
    EXPECT_FALSE(are_gl2z_equivalent(g, h).has_value());
}

TEST(Classify, OrdinaryExamples) {
    EXPECT_EQ(classify(kJ).verdict, Verdict::Ordinary);
    for (int d : {3, 4, 5})
        for (long a : {-2, -1, 1, 2, 3})
            for (long b : {-2, -1, 1, 2, 3}) {
                const auto rep = classify(form_diagonal(a, b, d));
                EXPECT_EQ(rep.verdict, Verdict::Ordinary) << a << " " << b << " " << d;
                EXPECT_FALSE(rep.witness || rep.companion || rep.proof);
            }
}

TEST(Classify, VerdictInvariance) {
    testutil::Rng rng(3001);
    for (int i = 0; i < 12; ++i) {
        const BinaryForm f = i % 3 == 0 ? kF10 : i % 3 == 1 ? kF21 : kJ;
        const Verdict v = classify(f).verdict;
        const Mat2 u = rng.unimodular(3, 2);
        EXPECT_EQ(classify(compose(f, u)).verdict, v) << u;
        EXPECT_EQ(classify(rng.nonzero_rat(5, 4) * f).verdict, v);
    }
}

TEST(Classify, LabelsOfExtraordinaryForms) {
    for (int i = 0; i < 30; ++i) {
        const BinaryForm f = testutil::Rng(3100 + i).form(3, 4, 1);
        if (discriminant(f).is_zero()) continue;
        const auto rep = classify(f);
        const GroupLabel l = rep.aut_label;
        const bool three = l == GroupLabel::C3 || l == GroupLabel::C6 || l == GroupLabel::D3 || l == GroupLabel::D6;
        if (rep.verdict == Verdict::Extraordinary) EXPECT_TRUE(three) << f;
        EXPECT_EQ(rep.verdict == Verdict::Extraordinary, rep.witness.has_value());
        EXPECT_EQ(rep.witness.has_value(), rep.companion.has_value());
    }
    for (long b = -6; b <= 6; ++b) EXPECT_EQ(classify(form_PhiB(b)).verdict, Verdict::Extraordinary) << b;
    EXPECT_THROW(classify(BinaryForm({1, 1, 1})), Error);
}

TEST(Parity, F10WithR) {
    const ParityProof p = parity_proof(kF10, matrix_R());
    // R = (0 1; -1 -1): residues (m, n) -> first even among m, n, -m - n.
    const std::array<int, 4> expect{0, 0, 1, 2};
    for (std::size_t i = 0; i < 4; ++i) EXPECT_EQ(p.parity_table[i].which, expect[i]) << i;
    EXPECT_TRUE(values_have_even_x_rep(kF10, 8, 40));
}

TEST(Parity, Errors) {
    EXPECT_EQ(kind_of([] { parity_proof(kF10, Mat2::identity()); }), ErrorKind::NotOrderThree);
    EXPECT_EQ(kind_of([] { parity_proof(kSum, matrix_R()); }), ErrorKind::NotAutomorphism);
    EXPECT_EQ(kind_of([] { parity_proof(kJ, Mat2(0, Q(1, 4), -4, -1)); }), ErrorKind::NotIntegral);
}

TEST(Parity, RandomConjugatesOfR) {
    testutil::Rng rng(3003);
    for (int i = 0; i < 200; ++i) {
        const Mat2 u = rng.unimodular(4, 3);
        const long a = rng.uniform(1, 4), b = rng.uniform(-5, 5);
        const BinaryForm f = compose(form_Fab(a, b), u.inverse());
        const Mat2 s = u * matrix_R() * u.inverse();
        EXPECT_NO_THROW(parity_proof(f, s)) << u;
        EXPECT_NO_THROW(parity_proof(f, s * s)) << u;
    }
}

TEST(Companion, F10) {
    const Companion c = companion(kF10, matrix_R(), Pattern::A);
    EXPECT_EQ(c.form, compose(kF10, Mat2::diag(2, 1)));
    EXPECT_EQ(c.disc_ratio, Rat(64));
    EXPECT_FALSE(are_gl2z_equivalent(kF10, c.form).has_value());
    EXPECT_TRUE(are_gl2z_equivalent(compose(kF10, Mat2::diag(2, 1)), compose(kF10, Mat2::diag(1, 2))).has_value());
}

TEST(Companion, HalfIntegralPatterns) {
    // Conjugating F10 by diag(1, 2) and friends produces each pattern.
    const std::map<Pattern, Mat2> move{{Pattern::B, Mat2::diag(1, 2)},
                                       {Pattern::C, Mat2::diag(2, 1)},
                                       {Pattern::D, Mat2(1, 0, 0, 2) * Mat2(1, -1, 0, 1)}};
    for (const auto& [p, lam] : move) {
        const BinaryForm f = compose(kF10, lam);
        const Mat2 s = lam.inverse() * matrix_R() * lam;
        const Mat2 s2 = s * s;
        const Mat2 w = half_integrality_pattern(s) == p ? s : s2;
        ASSERT_EQ(half_integrality_pattern(w), p) << pattern_name(p);
        const Companion c = companion(f, w, p);
        EXPECT_EQ(c.disc_ratio, pow(Rat(1, 2), 6));
        EXPECT_FALSE(are_gl2z_equivalent(f, c.form).has_value());
        EXPECT_TRUE(c.representative == c.form);
        const auto rep = classify(f);
        EXPECT_EQ(rep.verdict, Verdict::Extraordinary);
    }
}

TEST(Companion, BadWitness) {
    EXPECT_EQ(kind_of([] { companion(kF10, matrix_R(), Pattern::B); }), ErrorKind::BadWitness);
    EXPECT_EQ(kind_of([] { companion(kF10, Mat2::identity(), Pattern::A); }), ErrorKind::BadWitness);
    EXPECT_EQ(kind_of([] { companion(kSum, matrix_R(), Pattern::A); }), ErrorKind::BadWitness);
    EXPECT_EQ(kind_of([] { companion(kJ, Mat2(0, Q(1, 4), -4, -1), Pattern::None); }), ErrorKind::BadWitness);
}

TEST(Decompose, Examples) {
    const auto a = decompose_value_class(kF10);
    ASSERT_TRUE(a.is_pair());
    EXPECT_EQ(a.classes[0], kF10);
    EXPECT_EQ(a.classes[1], BinaryForm({8, 0, -6, -1}));
    EXPECT_FALSE(decompose_value_class(kJ).is_pair());
    const BinaryForm phi5 = form_PhiB(5);
    const auto c = decompose_value_class(phi5);
    ASSERT_TRUE(c.is_pair());
    EXPECT_EQ(c.classes[0], phi5);
    EXPECT_EQ(c.classes[1], compose(phi5, Mat2::diag(2, 1)));
}

TEST(Reduce, LinkedPair) {
    const BinaryForm h = compose(kF10, Mat2::diag(2, 1));
    const ReductionResult r = reduce_pair(kF10, h);
    EXPECT_TRUE(r.theorem_case);
    EXPECT_EQ(compose(r.G2, Mat2::scalar(Rat(r.D))), compose(r.G1, Mat2::diag(1, Rat(r.nu))));
    EXPECT_EQ(r.nu % r.D, 0);
    EXPECT_TRUE(r.P.is_unimodular() && r.Qinv.is_unimodular());
    // Case (D, nu) = (2, 2): G2(2X, 2Y) = G1(X, 2Y), the integral side is G2.
    EXPECT_EQ(r.D, 2);
    EXPECT_EQ(r.nu, 2);
    EXPECT_EQ(r.case_flag, "G2");
    const ReductionResult again = reduce_pair(kF10, h);
    EXPECT_EQ(again.G1, r.G1);
    EXPECT_EQ(again.G2, r.G2);
    EXPECT_EQ(again.rho, r.rho);
    // Swapped inputs reach the same normal form data.
    const ReductionResult sw = reduce_pair(h, kF10);
    EXPECT_EQ(sw.D, r.D);
    EXPECT_EQ(sw.nu, r.nu);
}

TEST(Reduce, Errors) {
    EXPECT_EQ(kind_of([] { reduce_pair(kF10, compose(kF10, Mat2(2, 1, 1, 1))); }), ErrorKind::AlreadyEquivalent);
    EXPECT_EQ(kind_of([] { reduce_pair(kSum, kF10); }), ErrorKind::NoIsomorphism);
    EXPECT_EQ(kind_of([] { reduce_pair(kSum, BinaryForm({2, 0, 0, 2})); }), ErrorKind::NoIsomorphism);
    EXPECT_EQ(kind_of([] { reduce_pair(kSum, BinaryForm({8, 0, 0, 8})); }), ErrorKind::NotEqualValueSets);
}

TEST(CoveringProp, LinkedPairAllCover) {
    const Mat2 g = Mat2::diag(2, 1);
    const CoveringReport rep = verify_covering_prop(compose(kF10, g), kF10, g);
    ASSERT_EQ(rep.families.size(), 4u);
    EXPECT_TRUE(rep.all_cover());
    // Oracle for the first family: direct integrality of gamma R^k (x, y) mod 2.
    const Mat2 r = matrix_R();
    for (long x = 0; x < 2; ++x)
        for (long y = 0; y < 2; ++y)
            EXPECT_TRUE(lattice_point(g, x, y) || lattice_point(g * r, x, y) || lattice_point(g * r * r, x, y));
}

TEST(CoveringProp, UnimodularAndAdversarial) {
    const Mat2 u(2, 1, 1, 1);
    const CoveringReport triv = verify_covering_prop(compose(kF10, u), kF10, u);
    EXPECT_TRUE(triv.all_cover());
    for (const auto& f : triv.families)
        for (const auto& l : f.lattices) EXPECT_TRUE(l.is_full());

    const Mat2 g = Mat2::diag(3, 1);
    const CoveringReport adv = verify_covering_prop(compose(kSum, g), kSum, g);
    EXPECT_FALSE(adv.all_cover());
    for (const auto& f : adv.families)
        if (!f.result.covers) {
            const auto [x, y] = *f.result.witness;
            for (const auto& l : f.lattices) EXPECT_FALSE(l.contains(x, y));
        }
    EXPECT_EQ(kind_of([] { verify_covering_prop(kF10, kF10, Mat2::diag(2, 1)); }), ErrorKind::NotIsomorphism);
}
