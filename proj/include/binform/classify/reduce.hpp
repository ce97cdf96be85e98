#pragma once

/**
 * @file reduce.hpp
 * @brief Normal form for a pair of forms assumed to share a value set, and
 * the lattice coverings that such a pair must produce.
 *
 * The guarantees of reduce_pair are conditional on that assumption, which
 * cannot be checked here; when the arithmetic contradicts it the call fails
 * with NotEqualValueSets instead of returning a result.
 */

#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "binform/autiso/groups.hpp"
#include "binform/latmat/covering.hpp"
#include "binform/latmat/normal_forms.hpp"

namespace binform {

struct ReductionResult {
    BinaryForm G1, G2;
    /// G1 = F1 o P and G2 = F2 o Qinv.
    Mat2 P, Qinv;
    Int D, nu;
    /// F1 o rho = F2 after the optional swap of the inputs.
    Mat2 rho;
    bool swapped = false;
    Int index;
    /// (D, nu) is (1, 2) or (2, 2).
    bool theorem_case = false;
    /// "G1", "G2", "both" or "none": which side has only integral order-3 automorphisms.
    std::string case_flag;
};

namespace detail {

inline bool order3_all_integral(const BinaryForm& f, const Config& cfg) {
    const auto els = order3_elements(automorphism_group(f, cfg));
    return !els.empty() && std::all_of(els.begin(), els.end(), [](const Mat2& m) { return m.is_integral(); });
}

} // namespace detail

inline ReductionResult reduce_pair(const BinaryForm& f1, const BinaryForm& f2, const Config& cfg = {}) {
    ensure(f1.degree() >= 3 && f2.degree() >= 3, ErrorKind::BadInput, "reduction needs degree >= 3");
    ensure(f1.degree() == f2.degree(), ErrorKind::BadInput, "forms must have equal degree");
    if (are_gl2z_equivalent(f1, f2, cfg))
        fail(ErrorKind::AlreadyEquivalent, "forms are already GL(2,Z)-equivalent");

    struct Choice {
        Int index;
        CanonicalMat canon;
        Mat2 rho;
        bool swapped;
    };
    std::optional<Choice> best;
    const auto key = [](const Choice& c) {
        return std::make_tuple(c.index, c.canon.D, c.canon.N, c.canon.A.entries(), c.swapped);
    };
    const auto consider = [&](const IsomSet& set, bool swapped) {
        for (const auto& rho : set.elements) {
            Choice c{lattice_index(lattice_of(rho.inverse())), canonical_form(rho), rho, swapped};
            if (!best || key(c) < key(*best)) best = std::move(c);
        }
    };
    consider(isomorphisms(f1, f2, cfg), false);
    consider(isomorphisms(f2, f1, cfg), true);
    ensure(best.has_value(), ErrorKind::NoIsomorphism, "forms are not GL(2,Q)-equivalent");

    const BinaryForm& a = best->swapped ? f2 : f1;
    const BinaryForm& b = best->swapped ? f1 : f2;
    const CanonicalMat& cm = best->canon;
    ensure(cm.N == 1, ErrorKind::NotEqualValueSets,
           "minimal isomorphism " + cm.str() + " has N != 1, so the value sets differ");

    const SmithForm snf = smith_normal_form(cm.A);
    ensure(snf.S.a == Rat(1), ErrorKind::InternalInvariant, "content-1 matrix with first invariant factor != 1");
    ReductionResult r{compose(a, snf.P), compose(b, snf.Q.inverse())};
    r.swapped = best->swapped;
    r.rho = best->rho;
    r.index = best->index;
    r.D = cm.D;
    r.nu = snf.S.d.num();
    r.P = snf.P;
    r.Qinv = snf.Q.inverse();

    ensure(compose(r.G2, Mat2::scalar(Rat(r.D))) == compose(r.G1, Mat2::diag(1, Rat(r.nu))),
           ErrorKind::InternalInvariant, "identity G2(DX, DY) = G1(X, nu Y) fails");
    ensure(r.nu >= 1 && r.nu % r.D == 0, ErrorKind::NotEqualValueSets,
           "D = " + r.D.get_str() + " does not divide nu = " + r.nu.get_str());
    ensure(r.D * r.nu > 1, ErrorKind::InternalInvariant, "unimodular minimal isomorphism after equivalence test");
    ensure(r.nu <= r.D * r.D, ErrorKind::NotEqualValueSets,
           "nu = " + r.nu.get_str() + " exceeds D^2 = " + Int(r.D * r.D).get_str());

    r.theorem_case = r.nu == 2 && (r.D == 1 || r.D == 2);
    const bool i1 = detail::order3_all_integral(r.G1, cfg), i2 = detail::order3_all_integral(r.G2, cfg);
    r.case_flag = i1 && i2 ? "both" : i1 ? "G1" : i2 ? "G2" : "none";
    return r;
}

struct CoveringFamily {
    std::string name;
    std::vector<Lattice2> lattices;
    CoveringResult result;
};

struct CoveringReport {
    std::vector<CoveringFamily> families;

    bool all_cover() const {
        return std::all_of(families.begin(), families.end(), [](const CoveringFamily& f) { return f.result.covers; });
    }
};

/// The four families L(g s1), L(s2 g), L(s1 g^-1), L(g^-1 s2) for s_i in Aut(G_i), where G1 = G2 o g.
inline CoveringReport verify_covering_prop(const BinaryForm& g1, const BinaryForm& g2, const Mat2& gamma,
                                           const Config& cfg = {}) {
    ensure(!gamma.det().is_zero(), ErrorKind::NotIsomorphism, "gamma is singular");
    ensure(compose(g2, gamma) == g1, ErrorKind::NotIsomorphism, "G1 != G2 o gamma");
    const AutGroup a1 = automorphism_group(g1, cfg);
    const AutGroup a2 = automorphism_group(g2, cfg);
    const Mat2 gi = gamma.inverse();

    CoveringReport rep;
    const auto add = [&](std::string name, const std::vector<Mat2>& group, auto make) {
        CoveringFamily fam{std::move(name), {}, {}};
        for (const auto& s : group) fam.lattices.push_back(lattice_of(make(s)));
        fam.result = is_covering(fam.lattices);
        rep.families.push_back(std::move(fam));
    };
    add("L(gamma*s1)", a1.elements, [&](const Mat2& s) { return gamma * s; });
    add("L(s2*gamma)", a2.elements, [&](const Mat2& s) { return s * gamma; });
    add("L(s1*gamma^-1)", a1.elements, [&](const Mat2& s) { return s * gi; });
    add("L(gamma^-1*s2)", a2.elements, [&](const Mat2& s) { return gi * s; });
    return rep;
}

} // namespace binform
