#include <catch2/catch_amalgamated.hpp>

#include <set>
#include <sstream>

#include "nsg/classification.hpp"
#include "nsg/enumerate.hpp"
#include "nsg/semigroup.hpp"

using namespace nsg;

namespace {

std::string gap_key(const SemigroupNode& node) {
    std::ostringstream os;
    for (std::size_t x = 1; x < node.member.size(); ++x)
        if (!node.member[x]) os << x << ',';
    return os.str();
}

}  // namespace

TEST_CASE("counts by genus") {
    const std::vector<long long> expected{1, 1, 2, 4, 7, 12, 23, 39, 67};
    std::vector<long long> counts(9, 0);
    enumerate_semigroups(8, [&](const SemigroupNode& node) {
        counts[static_cast<std::size_t>(node.genus)] += 1;
    });
    CHECK(counts == expected);
}

TEST_CASE("each semigroup appears exactly once") {
    std::set<std::string> seen;
    long long total = 0;
    enumerate_semigroups(7, [&](const SemigroupNode& node) {
        CHECK(seen.insert(gap_key(node)).second);
        ++total;
        // child genus is one above the parent (frobenius was removed)
        if (node.genus > 0)
            CHECK_FALSE(node.member[static_cast<std::size_t>(node.frobenius)]);
    });
    CHECK(total == 1 + 1 + 2 + 4 + 7 + 12 + 23 + 39);
}

TEST_CASE("nodes produce valid minimal generator tuples") {
    enumerate_semigroups(6, [&](const SemigroupNode& node) {
        const auto gens = node.min_generators();
        const NumericalSemigroup s(gens);  // validates minimality and gcd
        CHECK(s.gap_profile().genus == node.genus);
        CHECK(s.frobenius() == node.frobenius);
    });
    // root is the whole of N
    CHECK(enumeration_root(5).min_generators() == std::vector<long long>({1}));
}

TEST_CASE("every edim-2 semigroup is symmetric") {
    enumerate_semigroups(5, [&](const SemigroupNode& node) {
        const NumericalSemigroup s(node.min_generators());
        if (s.edim() != 2) return;
        const auto profile = s.gap_profile();
        CHECK(classify(profile, decompose_gaps(s, profile)).symmetric);
    });
}

TEST_CASE("split plan reproduces the serial preorder") {
    std::vector<std::string> serial;
    enumerate_semigroups(6, [&](const SemigroupNode& node) {
        serial.push_back(gap_key(node));
    });

    std::vector<std::string> merged;
    const EnumerationPlan plan = split_enumeration(2, 6);
    for (const auto& item : plan.items) {
        if (item.is_subtree_root)
            enumerate_subtree(item.node, 6, [&](const SemigroupNode& n) {
                merged.push_back(gap_key(n));
            });
        else
            merged.push_back(gap_key(item.node));
    }
    CHECK(merged == serial);
}
