#include <set>

#include "doctest.h"
#include "starsemi/semigroup.hpp"
#include "test_util.hpp"

using namespace starsemi;
using namespace starsemi::testutil;

namespace {

std::set<long long> members_of(const BitVec& bits) {
    std::set<long long> out;
    for (std::size_t i = 0; i < bits.size(); ++i) {
        if (bits.test(i)) out.insert(static_cast<long long>(i));
    }
    return out;
}

NumericalSemigroup G(std::initializer_list<long long> gens) {
    return build_semigroup(GeneratorSet::of(ints(gens)));
}

}  // namespace

TEST_CASE("sieve examples") {
    CHECK(members_of(sieve_members(GeneratorSet::of(ints({3, 5})), Int(12))) ==
          std::set<long long>{0, 3, 5, 6, 8, 9, 10, 11, 12});
    CHECK(members_of(sieve_members(GeneratorSet::of(ints({1})), Int(4))) ==
          std::set<long long>{0, 1, 2, 3, 4});
    // gaps of G(4,6,7,9) below 10 are 1,2,3,5
    CHECK(members_of(sieve_members(GeneratorSet::of(ints({4, 6, 7, 9})), Int(10))) ==
          std::set<long long>{0, 4, 6, 7, 8, 9, 10});
}

TEST_CASE("sieve agrees with the naive bit loop") {
    Rng rng(20240811);
    for (int iter = 0; iter < 200; ++iter) {
        GeneratorSet gens = random_coprime_gens(rng, 4, 40);
        long long bound = rand_int(rng, 0, 300).to_int64();
        BitVec fast = sieve_members(gens, Int(bound));
        std::vector<bool> slow = naive_sieve(gens.elements, bound);
        for (long long i = 0; i <= bound; ++i) {
            REQUIRE(fast.test(static_cast<std::size_t>(i)) == slow[static_cast<std::size_t>(i)]);
        }
    }
}

TEST_CASE("sieve respects the configured cap") {
    CHECK_THROWS_AS(sieve_members(GeneratorSet::of(ints({2, 3})), sieve_limit() + Int(5)), Error);
}

TEST_CASE("build_semigroup examples") {
    NumericalSemigroup g35 = G({3, 5});
    CHECK(g35.frobenius == Int(7));
    CHECK(g35.gaps == ints({1, 2, 4, 7}));
    CHECK(g35.minimal_generators == ints({3, 5}));

    NumericalSemigroup g23 = G({2, 3});
    CHECK(g23.frobenius == Int(1));
    CHECK(g23.gaps == ints({1}));

    CHECK(G({8, 21, 35}).frobenius == Int(97));
    CHECK_THROWS_AS(G({4, 6}), NotCofiniteError);
}

TEST_CASE("semigroup with generator 1 is N") {
    NumericalSemigroup n = G({1});
    CHECK(n.frobenius == Int(-1));
    CHECK(n.gaps.empty());
    CHECK(n.minimal_generators == ints({1}));
    CHECK(n.contains(Int(0)));
    CHECK(n.contains(Int(12345)));
}

TEST_CASE("apery set examples") {
    CHECK(apery_set(G({3, 5}), Int(3)) == ints({0, 10, 5}));
    CHECK(apery_set(G({2, 3}), Int(2)) == ints({0, 3}));
    CHECK(apery_set(G({1}), Int(1)) == ints({0}));
    // computed with the sieve oracle
    CHECK(apery_set(G({8, 21, 35}), Int(8)) == ints({0, 105, 42, 35, 84, 21, 70, 63}));
    CHECK_THROWS_AS(apery_set(G({3, 5}), Int(4)), Error);
}

TEST_CASE("minimal generator examples") {
    CHECK(minimal_generators(GeneratorSet::of(ints({4, 6, 7, 9, 11}))) == ints({4, 6, 7, 9}));
    CHECK(minimal_generators(GeneratorSet::of(ints({2, 4, 3}))) == ints({2, 3}));
    CHECK(minimal_generators(GeneratorSet::of(ints({6, 15, 20}))) == ints({6, 15, 20}));
}

TEST_CASE("symmetry examples") {
    CHECK(is_symmetric(G({3, 5})));
    CHECK_FALSE(is_symmetric(G({4, 6, 7, 9})));
    CHECK(is_symmetric(G({8, 21, 35})));
    CHECK(is_symmetric(G({1})));
}

TEST_CASE("quotient examples") {
    CHECK(quotient(G({3, 5}), Int(2)) == G({3, 4, 5}));
    NumericalSemigroup s = G({4, 6, 7, 9});
    CHECK(quotient(s, Int(1)) == s);
    CHECK(quotient(G({110, 130, 143}), Int(307)) == G({4, 6, 7, 9}));
}

TEST_CASE("sum examples") {
    NumericalSemigroup g35 = G({3, 5});
    CHECK(sum(g35, g35) == g35);
    CHECK(sum(G({4, 9}), G({6, 7})) == G({4, 6, 7, 9}));
    CHECK(sum(G({2, 3}), G({3, 5})) == G({2, 3}));
}

TEST_CASE("submonoid membership") {
    Submonoid m = Submonoid::of(ints({20, 40, 20, 4}));
    CHECK(m.content == Int(4));
    CHECK(m.contains(Int(8)));
    CHECK_FALSE(m.contains(Int(6)));
    CHECK(Submonoid::of(ints({7})).contains(Int(0)));
    CHECK_FALSE(Submonoid::of(ints({7})).contains(Int(-7)));
}

TEST_CASE("gap count and apery properties") {
    Rng rng(987654321);
    for (int iter = 0; iter < 120; ++iter) {
        GeneratorSet gens = random_coprime_gens(rng);
        NumericalSemigroup s = build_semigroup(gens);
        if (s.frobenius == Int(-1)) {
            CHECK(s.gaps.empty());
            continue;
        }
        // largest gap is the Frobenius number
        CHECK(s.gaps.back() == s.frobenius);
        // 2 |gaps| >= f + 1 with equality exactly for symmetric semigroups
        Int twice_gaps = Int(static_cast<long long>(s.gaps.size())) * Int(2);
        CHECK(twice_gaps >= s.frobenius + Int(1));
        CHECK((twice_gaps == s.frobenius + Int(1)) == is_symmetric(s));
        // apery max - m = f for every member m <= 50
        for (Int m(1); m <= Int(50); ++m) {
            if (!s.contains(m)) continue;
            std::vector<Int> ap = apery_set(s, m);
            Int max = ap.front();
            for (const Int& a : ap) {
                if (a > max) max = a;
            }
            CHECK(max - m == s.frobenius);
        }
    }
}

TEST_CASE("membership is closed under addition") {
    Rng rng(240240);
    for (int iter = 0; iter < 60; ++iter) {
        NumericalSemigroup s = build_semigroup(random_coprime_gens(rng, 4, 40));
        Int top = s.frobenius * Int(2) + Int(2);
        for (Int a(0); a <= top; ++a) {
            if (!s.contains(a)) continue;
            for (Int b = a; b <= top - a; ++b) {
                if (s.contains(b)) REQUIRE(s.contains(a + b));
            }
        }
    }
}

TEST_CASE("quotient composition law") {
    Rng rng(555);
    for (int iter = 0; iter < 60; ++iter) {
        NumericalSemigroup s = build_semigroup(random_coprime_gens(rng));
        for (long long k = 1; k <= 5; ++k) {
            for (long long j = 1; j <= 5; ++j) {
                CHECK(quotient(quotient(s, Int(k)), Int(j)) == quotient(s, Int(k * j)));
            }
        }
    }
}

TEST_CASE("minimal generators regenerate the membership table") {
    Rng rng(31337);
    for (int iter = 0; iter < 100; ++iter) {
        GeneratorSet gens = random_coprime_gens(rng);
        NumericalSemigroup s = build_semigroup(gens);
        NumericalSemigroup again = build_semigroup(GeneratorSet::of(s.minimal_generators));
        CHECK(s == again);
    }
}

TEST_CASE("sum is associative and commutative") {
    Rng rng(777);
    for (int iter = 0; iter < 40; ++iter) {
        NumericalSemigroup a = build_semigroup(random_coprime_gens(rng, 3, 30));
        NumericalSemigroup b = build_semigroup(random_coprime_gens(rng, 3, 30));
        NumericalSemigroup c = build_semigroup(random_coprime_gens(rng, 3, 30));
        CHECK(sum(a, b) == sum(b, a));
        CHECK(sum(sum(a, b), c) == sum(a, sum(b, c)));
    }
}
