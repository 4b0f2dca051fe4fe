// Minimal library walkthrough: construct a semigroup, print its invariants,
// and check the numerator duality by hand using the multiset/polynomial
// kernels directly.

#include <iostream>

#include "nsg/nsg.hpp"

int main() {
    using namespace nsg;

    NumericalSemigroup s({5, 6, 7, 9});
    const GapProfile profile = s.gap_profile();
    std::cout << "F = " << profile.frobenius << ", genus = " << profile.genus
              << ", type = " << profile.type << "\n";

    const IntPolynomial q = s.numerator_q();
    std::cout << "Q = " << q.to_string() << "\n";

    const GradedBettiTable table = graded_betti(s);
    std::cout << "betti:";
    for (const auto& b : table.betti()) std::cout << ' ' << b;
    std::cout << "\n";

    // the duality identity, assembled manually
    const GapDecomposition decomposition = decompose_gaps(s, profile);
    std::cout << "duality holds: " << std::boolalpha
              << check_duality(s, profile, q) << "\n";
    std::cout << "theorem1 holds: " << check_theorem1(s, decomposition, q) << "\n";

    // multiset kernel in isolation
    const IntMultiset a = IntMultiset::from_elements({1, 2, 2});
    const IntMultiset b = IntMultiset::from_elements({2, 3});
    std::cout << "join: " << a.join(b).to_string()
              << ", meet: " << a.meet(b).to_string()
              << ", sumset: " << a.sumset_join(b).to_string() << "\n";
    return 0;
}
