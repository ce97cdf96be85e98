// Walks through one extraordinary form: its automorphisms, the companion it
// shares a value set with, the reduction of the pair, and finite-box evidence
// that the two forms still differ in how they represent values.

#include <iostream>

#include "binform/binform.hpp"

using namespace binform;

int main() {
    const BinaryForm f = parse_form("X^3 - 3*X*Y^2 - Y^3");
    std::cout << "F = " << f << "\n";

    const AutGroup aut = automorphism_group(f);
    std::cout << "Aut(F) has label " << label_name(aut.label) << ":\n";
    for (const auto& s : aut.elements) std::cout << "  " << s << "\n";

    const ClassificationReport rep = classify(f);
    std::cout << "verdict: " << verdict_name(rep.verdict) << "\n";
    if (!rep.companion) return 1;
    const BinaryForm& h = *rep.companion;
    std::cout << "companion H = " << h << "\n";
    std::cout << "disc(H) / disc(F) = " << discriminant(h) / discriminant(f) << "\n";
    std::cout << "GL(2,Z)-equivalent: " << (are_gl2z_equivalent(f, h) ? "yes" : "no") << "\n";

    const ReductionResult r = reduce_pair(f, h);
    std::cout << "reduced pair: G1 = " << r.G1 << ", G2 = " << r.G2 << ", D = " << r.D << ", nu = " << r.nu
              << "\n";

    // Same values, different multiplicities.
    const long box = 20;
    const ValueTable tf = values_in_box(f, box), th = values_in_box(h, box);
    std::cout << "F and H take the value 1 " << tf.count(Rat(1)) << " and " << th.count(Rat(1))
              << " times in the box of radius " << box << "\n";
    if (const auto m = multiplicity_witness(f, h, box)) std::cout << "multiplicity witness: " << *m << "\n";
    return 0;
}
