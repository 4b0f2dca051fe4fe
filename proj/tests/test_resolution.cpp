#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nsg/enumerate.hpp"
#include "nsg/resolution.hpp"

using namespace nsg;

TEST_CASE("divisor complexes") {
    const NumericalSemigroup s({5, 6, 7, 9});
    CHECK(divisor_complex(s, 0).faces() == std::vector<std::uint32_t>({0}));
    // s = 12: vertices for 5, 6, 7 (12-9 = 3 is a gap) and the edge {5,7}
    // from 12 - 5 - 7 = 0
    CHECK(divisor_complex(s, 12).faces() ==
          std::vector<std::uint32_t>({0b0000, 0b0001, 0b0010, 0b0100, 0b0101}));
    const NumericalSemigroup t({2, 3});
    CHECK(divisor_complex(t, 6).faces() ==
          std::vector<std::uint32_t>({0b00, 0b01, 0b10}));
    CHECK_THROWS_AS(divisor_complex(s, 8), NotMember);
}

TEST_CASE("reduced homology ranks of small complexes") {
    // only the empty face: rank 1 in dimension -1
    CHECK(reduced_homology_ranks(SimplicialComplex(3, {0})) ==
          std::vector<long long>({1, 0, 0, 0}));
    // two isolated vertices: rank 1 in dimension 0
    CHECK(reduced_homology_ranks(SimplicialComplex(2, {0b00, 0b01, 0b10})) ==
          std::vector<long long>({0, 1, 0}));
    // hollow triangle: rank 1 in dimension 1
    CHECK(reduced_homology_ranks(SimplicialComplex(
              3, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110})) ==
          std::vector<long long>({0, 0, 1, 0}));
    // full triangle is a cone: everything vanishes
    CHECK(reduced_homology_ranks(SimplicialComplex(
              3, {0b000, 0b001, 0b010, 0b100, 0b011, 0b101, 0b110, 0b111})) ==
          std::vector<long long>({0, 0, 0, 0}));
}

namespace {

// Homology ranks computed directly from all faces, with no cone shortcut and
// no collapsing; used to cross-check the optimized path.
std::vector<long long> ranks_plain(const nsg::SimplicialComplex& c) {
    const int m = c.vertex_count();
    std::vector<std::vector<std::uint32_t>> bydim(static_cast<std::size_t>(m) + 1);
    for (std::uint32_t f : c.faces())
        bydim[static_cast<std::size_t>(std::popcount(f))].push_back(f);
    std::vector<long long> brank(static_cast<std::size_t>(m) + 2, 0);
    for (int k = 1; k <= m; ++k) {
        const auto& rows = bydim[static_cast<std::size_t>(k - 1)];
        const auto& cols = bydim[static_cast<std::size_t>(k)];
        if (rows.empty() || cols.empty()) continue;
        std::vector<std::vector<std::int64_t>> mat(
            rows.size(), std::vector<std::int64_t>(cols.size(), 0));
        for (std::size_t j = 0; j < cols.size(); ++j) {
            std::int64_t sign = 1;
            for (int v = 0; v < m; ++v) {
                if (!(cols[j] >> v & 1U)) continue;
                const auto it = std::lower_bound(rows.begin(), rows.end(),
                                                 cols[j] ^ (1U << v));
                mat[static_cast<std::size_t>(it - rows.begin())][j] = sign;
                sign = -sign;
            }
        }
        brank[static_cast<std::size_t>(k)] = nsg::exact_rank(mat);
    }
    std::vector<long long> h(static_cast<std::size_t>(m) + 1, 0);
    for (int k = 0; k <= m; ++k)
        h[static_cast<std::size_t>(k)] =
            static_cast<long long>(bydim[static_cast<std::size_t>(k)].size()) -
            brank[static_cast<std::size_t>(k)] - brank[static_cast<std::size_t>(k) + 1];
    return h;
}

}  // namespace

TEST_CASE("optimized homology agrees with the direct computation") {
    std::mt19937_64 eng(31337);
    for (int iter = 0; iter < 500; ++iter) {
        const int m = 2 + static_cast<int>(eng() % 4);  // 2..5 vertices
        // random downward-closed face set
        std::vector<char> present(std::size_t{1} << m, 0);
        present[0] = 1;
        const int seeds = 1 + static_cast<int>(eng() % 5);
        for (int t = 0; t < seeds; ++t) {
            const std::uint32_t top =
                static_cast<std::uint32_t>(eng() % (std::size_t{1} << m));
            for (std::uint32_t sub = top;; sub = (sub - 1) & top) {
                present[sub] = 1;
                if (sub == 0) break;
            }
        }
        std::vector<std::uint32_t> faces;
        for (std::uint32_t f = 0; f < present.size(); ++f)
            if (present[f]) faces.push_back(f);
        const SimplicialComplex c(m, faces);

        const auto fast = reduced_homology_ranks(c);
        const auto plain = ranks_plain(c);
        REQUIRE(fast == plain);

        // reduced Euler characteristic from ranks equals the face count sum
        long long lhs = 0, rhs = 0;
        for (int k = 0; k <= m; ++k) {
            lhs += (k % 2 == 0 ? 1 : -1) * fast[static_cast<std::size_t>(k)];
        }
        for (std::uint32_t f : faces)
            rhs += std::popcount(f) % 2 == 0 ? 1 : -1;
        REQUIRE(lhs == rhs);
    }
}

TEST_CASE("exact ranks") {
    CHECK(exact_rank({}) == 0);
    CHECK(exact_rank({{0, 0}, {0, 0}}) == 0);
    CHECK(exact_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(exact_rank({{2, 0, 3}, {0, 5, 1}, {2, 5, 4}}) == 2);
    CHECK(exact_rank({{4, 6}, {6, 9}}) == 1);  // no unit pivot anywhere
}

TEST_CASE("graded Betti tables reproduce worked examples") {
    {
        const auto table = graded_betti(NumericalSemigroup({5, 6, 7, 9}));
        CHECK(table.betti() == std::vector<Integer>({1, 5, 6, 2}));
        CHECK(table.tables[1] == IntMultiset::from_elements({12, 14, 15, 16, 18}));
        CHECK(table.tables[2] ==
              IntMultiset::from_elements({21, 22, 23, 24, 25, 26}));
        CHECK(table.tables[3] == IntMultiset::from_elements({31, 35}));
    }
    {
        const auto table = graded_betti(NumericalSemigroup({6, 7, 8, 10, 11}));
        CHECK(table.betti() == std::vector<Integer>({1, 9, 17, 12, 3}));
        CHECK(table.tables[4] == IntMultiset::from_elements({46, 47, 51}));
        CHECK(table.tables[1].multiplicity(18) == 2);
        CHECK(table.tables[2].multiplicity(28) == 3);
        CHECK(table.tables[2].multiplicity(29) == 3);
    }
    {
        const auto table = graded_betti(NumericalSemigroup({4, 10, 19, 25}));
        CHECK(table.betti() == std::vector<Integer>({1, 6, 8, 3}));
        CHECK(table.tables[3] == IntMultiset::from_elements({64, 73, 79}));
        CHECK(table.tables[2].multiplicity(54) == 2);
    }
    {
        const auto table = graded_betti(NumericalSemigroup({2, 3}));
        CHECK(table.betti() == std::vector<Integer>({1, 1}));
        CHECK(table.tables[1] == IntMultiset::from_elements({6}));
    }
}

TEST_CASE("conjugate degree multisets") {
    const auto table = graded_betti(NumericalSemigroup({5, 6, 7, 9}));
    const auto conj = conjugate_betti(table);
    CHECK(conj[1] == IntMultiset::from_elements({17, 19, 20, 21, 23}));
    CHECK(conj[3] == IntMultiset::from_elements({0, 4}));
    CHECK(conjugate_betti(graded_betti(NumericalSemigroup({2, 3})))[0] ==
          IntMultiset::from_elements({6}));  // F + Sigma = 1 + 5
}

TEST_CASE("adjacent tables can share a degree") {
    // The smallest instance in the genus tree: generators 6..11, where
    // degree 22 carries both a first and a second syzygy (11+11 = 6+7+9
    // disconnects the divisor complex and an independent 1-cycle survives).
    const auto table = graded_betti(NumericalSemigroup({6, 7, 8, 9, 10, 11}));
    CHECK(table.betti() == std::vector<Integer>({1, 15, 40, 45, 24, 5}));
    CHECK(table.tables[1].multiplicity(22) == 1);
    CHECK(table.tables[2].multiplicity(22) == 1);
    CHECK(table.tables[1].meet(table.tables[2]) ==
          IntMultiset::from_elements({22}));
}

TEST_CASE("structural identities across the enumeration") {
    enumerate_semigroups(10, [&](const SemigroupNode& node) {
        const NumericalSemigroup s(node.min_generators());
        const auto table = graded_betti(s);  // K-polynomial identity inside
        const auto betti = table.betti();
        const int m = s.edim();
        REQUIRE(betti.front() == 1);
        REQUIRE(table.tables.front() == IntMultiset::from_elements({0}));

        const GapProfile profile = s.gap_profile();
        IntMultiset sprime_shifted;
        for (long long x : profile.pseudo_frobenius)
            sprime_shifted.add(Integer(x) + s.sigma());
        REQUIRE(table.tables.back() == sprime_shifted);
        REQUIRE(betti.back() == profile.type);

        if (m >= 2) {
            Integer alt = 0;
            for (int i = 0; i < m; ++i) alt += i % 2 == 0 ? betti[i] : -betti[i];
            REQUIRE(alt == 0);
        }
        Integer total = 0;
        for (const auto& b : betti) total += b;
        REQUIRE(total <= Integer(s.multiplicity()) * pow2(m - 1) - 2 * (m - 1));

        // maximal-edim specialization: beta_k = k C(m, k+1)
        if (s.multiplicity() == m && m >= 2)
            for (int k = 1; k < m; ++k)
                REQUIRE(betti[static_cast<std::size_t>(k)] ==
                        Integer(k) * binomial(m, k + 1));
    });
}
