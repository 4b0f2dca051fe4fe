#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "nsg/multiset.hpp"
#include "oracles.hpp"

using nsg::IntMultiset;
using nsg::Integer;

namespace {

IntMultiset from_oracle(const oracle::Mset& v) {
    IntMultiset out;
    for (long long x : v) out.add(x);
    return out;
}

oracle::Mset to_oracle(const IntMultiset& m) {
    oracle::Mset out;
    for (const auto& [v, k] : m.counts())
        for (Integer i = 0; i < k; ++i) out.push_back(v.convert_to<long long>());
    return out;
}

struct Rng {
    std::mt19937_64 eng{20240817};
    long long pick(long long lo, long long hi) {
        return std::uniform_int_distribution<long long>(lo, hi)(eng);
    }
    oracle::Mset mset(long long lo = -10, long long hi = 10, int max_size = 8) {
        oracle::Mset out;
        const long long n = pick(0, max_size);
        for (long long i = 0; i < n; ++i) out.push_back(pick(lo, hi));
        return oracle::norm(out);
    }
    // random sub-multiset
    oracle::Mset sub(const oracle::Mset& v) {
        oracle::Mset out;
        for (long long x : v)
            if (pick(0, 1)) out.push_back(x);
        return out;
    }
};

}  // namespace

TEST_CASE("construction counts occurrences") {
    CHECK(IntMultiset::from_elements(std::initializer_list<Integer>{}).empty());
    const auto m = IntMultiset::from_elements({4, 4, 8});
    CHECK(m.multiplicity(4) == 2);
    CHECK(m.multiplicity(8) == 1);
    CHECK(m.cardinality() == 3);
    const auto b1 = IntMultiset::from_elements({12, 14, 15, 16, 18});
    CHECK(b1.support_size() == 5);
    CHECK(b1.cardinality() == 5);
}

TEST_CASE("join adds multiplicities") {
    const auto single = IntMultiset::from_elements({1});
    CHECK(single.join(IntMultiset{}) == single);
    CHECK(IntMultiset::from_elements({1, 2}).join(IntMultiset::from_elements({2, 3})) ==
          IntMultiset::from_elements({1, 2, 2, 3}));
    const auto m21 = IntMultiset::from_elements({21});
    CHECK(m21.join(m21) == IntMultiset::from_pairs({{21, 2}}));
}

TEST_CASE("meet takes minimum multiplicities") {
    CHECK(IntMultiset::from_pairs({{1, 2}}).meet(IntMultiset{}).empty());
    CHECK(IntMultiset::from_pairs({{1, 3}, {2, 1}})
              .meet(IntMultiset::from_pairs({{1, 1}, {3, 5}})) ==
          IntMultiset::from_elements({1}));
}

TEST_CASE("difference requires containment") {
    CHECK(IntMultiset::from_pairs({{5, 2}, {7, 1}})
              .difference(IntMultiset::from_elements({5})) ==
          IntMultiset::from_elements({5, 7}));
    const auto five = IntMultiset::from_elements({5});
    CHECK(five.difference(five).empty());
    CHECK_THROWS_AS(five.difference(IntMultiset::from_elements({6})),
                    nsg::ContainmentViolation);
}

TEST_CASE("sumset join multiplies cardinalities") {
    const auto zero = IntMultiset::from_elements({0});
    const auto target = IntMultiset::from_elements({4, 5});
    CHECK(zero.sumset_join(target) == target);
    CHECK(IntMultiset::from_elements({1, 2}).sumset_join(
              IntMultiset::from_elements({10, 11})) ==
          IntMultiset::from_pairs({{11, 1}, {12, 2}, {13, 1}}));
    // five generators shifted by a two-element gap set
    const auto d1 = IntMultiset::from_elements({6, 7, 8, 10, 11});
    CHECK(d1.sumset_join(IntMultiset::from_elements({4, 5})) ==
          IntMultiset::from_pairs(
              {{10, 1}, {11, 2}, {12, 2}, {13, 1}, {14, 1}, {15, 2}, {16, 1}}));
}

TEST_CASE("shift preserves multiplicities") {
    CHECK(IntMultiset::from_elements({4, 8}).shift(27) ==
          IntMultiset::from_elements({31, 35}));
    CHECK(IntMultiset{}.shift(5).empty());
    CHECK(IntMultiset::from_pairs({{1, 2}}).shift(-1) ==
          IntMultiset::from_pairs({{0, 2}}));
    const auto a = IntMultiset::from_pairs({{3, 2}, {9, 1}});
    CHECK(a.shift(4) == a.sumset_join(IntMultiset::from_elements({4})));
}

TEST_CASE("containment respects multiplicities") {
    CHECK(IntMultiset{}.contained_in(IntMultiset::from_elements({1})));
    CHECK_FALSE(IntMultiset::from_pairs({{1, 2}}).contained_in(
        IntMultiset::from_pairs({{1, 1}, {2, 9}})));
    const auto one1 = IntMultiset::from_pairs({{1, 1}});
    const auto one2 = IntMultiset::from_pairs({{1, 2}});
    CHECK(one1.contained_in(one2));
    CHECK_FALSE(one2.contained_in(one1));
}

TEST_CASE("algebraic laws on random triples") {
    Rng rng;
    for (int iter = 0; iter < 2000; ++iter) {
        const auto va = rng.mset(), vb = rng.mset(), vc = rng.mset();
        const auto a = from_oracle(va), b = from_oracle(vb), c = from_oracle(vc);

        // commutativity / associativity of join, against the oracle
        CHECK(a.join(b) == b.join(a));
        CHECK(a.join(b).join(c) == a.join(b.join(c)));
        CHECK(to_oracle(a.join(b)) == oracle::mjoin(va, vb));

        // sumset join: commutative, distributes over join, matches oracle
        CHECK(a.sumset_join(b) == b.sumset_join(a));
        CHECK(a.join(b).sumset_join(c) == a.sumset_join(c).join(b.sumset_join(c)));
        CHECK(to_oracle(a.sumset_join(b)) == oracle::msum(va, vb));
        CHECK(to_oracle(a.meet(b)) == oracle::mmeet(va, vb));

        // cardinalities
        CHECK(a.join(b).cardinality() == a.cardinality() + b.cardinality());
        CHECK(a.sumset_join(b).cardinality() == a.cardinality() * b.cardinality());

        // meet is a lower bound; double containment is equality
        CHECK(a.meet(b).contained_in(a));
        CHECK(a.meet(b).contained_in(b));
        if (a.contained_in(b) && b.contained_in(a)) CHECK(a == b);

        // difference laws
        CHECK(a.join(b).difference(b) == a);
        CHECK(a.difference(a).empty());
    }
}

TEST_CASE("containment lemmas on random instances") {
    Rng rng;
    for (int iter = 0; iter < 2000; ++iter) {
        const auto vb = rng.mset(), vc = rng.mset();
        const auto b = from_oracle(vb), c = from_oracle(vc);

        // a contained in b v c  =>  a contained in (a^b) v (a^c)
        const auto a = from_oracle(rng.sub(oracle::mjoin(vb, vc)));
        REQUIRE(a.contained_in(b.join(c)));
        CHECK(a.contained_in(a.meet(b).join(a.meet(c))));

        // if additionally a^b is empty then a = a^c
        oracle::Mset vd;
        for (long long x : rng.sub(vc))
            if (!std::binary_search(vb.begin(), vb.end(), x)) vd.push_back(x);
        const auto d = from_oracle(vd);
        REQUIRE(d.contained_in(b.join(c)));
        REQUIRE(d.meet(b).empty());
        CHECK(d == d.meet(c));

        // split through the meet, and the split parts are disjoint
        const auto m = a.meet(b);
        CHECK(a == a.difference(m).join(m));
        CHECK(a.difference(m).meet(b.difference(m)).empty());
    }
}
