#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include "nsg/med.hpp"
#include "oracles.hpp"

using namespace nsg;

TEST_CASE("med detection and invariants") {
    const NumericalSemigroup ex3({4, 10, 19, 25});
    REQUIRE(is_med(ex3));
    const auto r = med_invariants(ex3);
    CHECK(r.closed_frobenius == 21);
    CHECK(r.closed_genus == 12);
    CHECK(r.closed_betti == std::vector<Integer>({1, 6, 8, 3}));
    CHECK(r.delta_h_closed == std::vector<long long>({6, 15}));
    CHECK(r.closed_type == 3);
    CHECK(r.almost_symmetric_med);

    const NumericalSemigroup consec({4, 5, 6, 7});
    const auto r2 = med_invariants(consec);
    CHECK(r2.closed_frobenius == 3);
    CHECK(r2.closed_genus == 3);
    CHECK(r2.closed_betti == std::vector<Integer>({1, 6, 8, 3}));
    CHECK(r2.delta_h_closed == std::vector<long long>({1, 2}));
    CHECK(r2.almost_symmetric_med);

    CHECK_FALSE(is_med(NumericalSemigroup({5, 6, 7, 9})));
    CHECK_THROWS_AS(med_invariants(NumericalSemigroup({5, 6, 7, 9})), NotMed);
}

TEST_CASE("med numerator assembly") {
    // edim 3: I and J pieces listed explicitly
    const NumericalSemigroup t({3, 4, 5});
    const auto r = med_invariants(t);
    REQUIRE(r.i_parts.size() == 2);
    REQUIRE(r.j_parts.size() == 1);
    CHECK(r.i_parts[0] == IntPolynomial::monomial(8, 1) + IntPolynomial::monomial(10, 1));
    CHECK(r.j_parts[0] == IntPolynomial::monomial(9, 1));
    CHECK(r.i_parts[1] ==
          IntPolynomial::monomial(13, 1) + IntPolynomial::monomial(14, 1));
    CHECK(med_numerator(t) == t.numerator_q());

    // coefficient 2 at z^54 comes from J_{4,2} = 2 z^{10+19+25}
    const NumericalSemigroup ex3({4, 10, 19, 25});
    const auto q = med_numerator(ex3);
    CHECK(q == ex3.numerator_q());
    CHECK(q.coeff(54) == 2);

    CHECK(med_numerator(NumericalSemigroup({4, 5, 6, 7})) ==
          NumericalSemigroup({4, 5, 6, 7}).numerator_q());
    CHECK(med_numerator(NumericalSemigroup({2, 3})) ==
          NumericalSemigroup({2, 3}).numerator_q());
}

TEST_CASE("pairing criterion for almost symmetry") {
    CHECK(med_almost_symmetric(NumericalSemigroup({4, 10, 19, 25})));
    CHECK(med_almost_symmetric(NumericalSemigroup({4, 5, 6, 7})));
    CHECK_FALSE(med_almost_symmetric(NumericalSemigroup({4, 9, 10, 11})));
    CHECK(med_almost_symmetric(NumericalSemigroup({5, 7, 9, 11, 13})));
    CHECK_THROWS_AS(med_almost_symmetric(NumericalSemigroup({5, 6, 7, 9})), NotMed);
}

TEST_CASE("family constructions") {
    const auto p = prop1_family(2, 4);
    CHECK(p.generators() == std::vector<long long>({3, 5, 7}));
    CHECK(p.gap_profile().pseudo_frobenius == std::vector<long long>({2, 4}));

    const auto degenerate = prop1_family(1, 1);
    CHECK(degenerate.generators() == std::vector<long long>({2, 3}));
    CHECK(degenerate.gap_profile().pseudo_frobenius == std::vector<long long>({1}));

    CHECK_THROWS_AS(prop1_family(2, 3), BadParameters);   // t does not divide g
    CHECK_THROWS_AS(prop1_family(2, 0), BadParameters);   // gcd(t+1, 0) > 1
    CHECK_THROWS_AS(prop1_family(0, 2), BadParameters);
    CHECK_THROWS_AS(prop1_family(1, -1), NotMinimal);     // tuple collapses to (1,2)

    const auto a1 = arith_med_family(1, 1);
    CHECK(a1.generators() == std::vector<long long>({3, 5, 7}));
    const auto a2 = arith_med_family(1, 2);
    CHECK(a2.generators() == std::vector<long long>({3, 7, 11}));
    const auto profile = a2.gap_profile();
    CHECK(profile.frobenius == 8);
    const auto d = decompose_gaps(a2, profile);
    CHECK(d.delta_h == std::vector<long long>({4}));
    CHECK(classify(profile, d).pseudosymmetric);
    CHECK_THROWS_AS(arith_med_family(2, 5), BadParameters);  // gcd(5,5) = 5

    // every family member satisfies the pairing criterion
    for (long long t = 1; t <= 4; ++t)
        for (long long g = t; g <= 6 * t; g += t) {
            if (std::gcd(t + 1, g / t) != 1) continue;
            CHECK(med_almost_symmetric(prop1_family(t, g)));
        }
    for (long long n = 1; n <= 3; ++n)
        for (long long a = 1; a <= 5; ++a) {
            if (std::gcd(2 * n + 1, a) != 1) continue;
            CHECK(med_almost_symmetric(arith_med_family(n, a)));
        }
}

TEST_CASE("odd-edim corollary") {
    CHECK(corollary3_check(NumericalSemigroup({3, 5, 7})));
    CHECK(corollary3_check(NumericalSemigroup({5, 7, 9, 11, 13})));
    CHECK_THROWS_AS(corollary3_check(NumericalSemigroup({4, 5, 6, 7})),
                    PreconditionFailed);
}

TEST_CASE("meet cardinalities coincide for almost symmetric med") {
    for (auto gens : {std::vector<long long>{4, 10, 19, 25},
                      std::vector<long long>{4, 5, 6, 7},
                      std::vector<long long>{3, 5, 7},
                      std::vector<long long>{5, 7, 9, 11, 13}}) {
        const NumericalSemigroup s(std::move(gens));
        const GapProfile profile = s.gap_profile();
        const GapDecomposition d = decompose_gaps(s, profile);
        const GradedBettiTable table = graded_betti(s);
        const MSide ms = build_m_side(s, d);
        const XSide xs = build_x_side(table);
        CHECK(ms.ell == xs.wp);
        CHECK(theorem8_check(s, ms, xs, table));
    }
}

TEST_CASE("parity-split sums for med tuples") {
    // beta sums of even/odd indices have closed forms independent of class
    for (int m : {4, 5}) {
        for (long long top = m + m; top <= 20; ++top) {
            // arithmetic-progression-free scan: try all residue-distinct tuples
            // with d_1 = m, d_m = top and consecutive middle values
            std::vector<long long> gens;
            for (long long k = 0; k < m - 1; ++k)
                gens.push_back(top - (m - 2 - k));
            gens.insert(gens.begin(), m);
            std::sort(gens.begin(), gens.end());
            try {
                const NumericalSemigroup s(gens);
                if (!is_med(s)) continue;
                const auto betti = graded_betti(s).betti();
                Integer odd = 0, even = 0;
                for (int i = 1; i <= m - 2; ++i)
                    (i % 2 ? odd : even) += betti[static_cast<std::size_t>(i)];
                Integer total = 0;
                for (const auto& b : betti) total += b;
                CHECK(total == Integer(m - 2) * pow2(m - 1) + 2);
                if (m == 4) {
                    CHECK(odd == pow2(3) - 2);
                    CHECK(even == pow2(3));
                } else {
                    CHECK(odd == 3 * pow2(3) + 1);
                    CHECK(even == 3 * pow2(3) - 4);
                }
            } catch (const Error&) {
                continue;  // non-minimal or non-coprime candidate
            }
        }
    }
}
