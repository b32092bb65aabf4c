// Acceptance suite: every check is exact (integer or rational), no
// tolerances. Prints one line per criterion and exits nonzero when any
// of them fails.

#include <functional>
#include <iostream>
#include <vector>

#include "starsemi/decompose.hpp"
#include "starsemi/io.hpp"
#include "starsemi/plumbing.hpp"
#include "test_util.hpp"

using namespace starsemi;
using namespace starsemi::testutil;

namespace {

int failures = 0;

void criterion(int number, const std::string& label, const std::function<void()>& body) {
    try {
        body();
        std::cout << "[PASS] criterion " << number << ": " << label << "\n";
    } catch (const std::exception& e) {
        ++failures;
        std::cout << "[FAIL] criterion " << number << ": " << label << " -- " << e.what() << "\n";
    }
}

void require(bool ok, const std::string& what) {
    if (!ok) throw Error("check failed: " + what);
}

NumericalSemigroup G(std::initializer_list<long long> gens) {
    return build_semigroup(GeneratorSet::of(ints(gens)));
}

void check_graph_reproduces_semigroup() {
    SSRGraph g = parse_graph("sf(-2; 2x(2,1), 2x(4,1), (5,1))");
    NumericalSemigroup s = semigroup_of_graph(g);
    require(s == G({4, 6, 7, 9}), "semigroup equals G(4,6,7,9)");
    require(s.minimal_generators == ints({4, 6, 7, 9}), "minimal generators");
    require(s.gaps == ints({1, 2, 3, 5}), "gaps {1,2,3,5}");
}

void check_decomposition() {
    SSRGraph g = parse_graph("sf(-2; 2x(2,1), 2x(4,1), (5,1))");
    QuotientCertificate cert = decompose(g);
    require(quotient(cert.flat.semigroup(), cert.divisor) == G({4, 6, 7, 9}),
            "decompose certificate quotient equals G(4,6,7,9)");
    // an externally produced certificate passes verification
    SSRGraph theirs = parse_graph("sf(-2; 2x(11,5), 2x(13,3), (5,1))");
    FlatPresentation flat = FlatPresentation::of(ints({11, 13, 5}), ints({2, 2, 1}));
    verify_certificate(theirs, flat, Int(307));
    require(quotient(flat.semigroup(), Int(307)) == G({4, 6, 7, 9}),
            "G(4,6,7,9) = (1/307) G(110,130,143)");
    require(flat.semigroup() == G({110, 130, 143}), "flat semigroup is G(110,130,143)");
}

void check_canonical_representatives() {
    struct Case {
        std::vector<Int> alphas, mults;
        const char* expected;
    };
    const std::vector<Case> cases = {
        {ints({2, 3}), ints({5, 10}), "sf(-6; 5x(2,1), 10x(3,1))"},
        {ints({5, 3}), ints({2, 4}), "sf(-3; 4x(3,1), 2x(5,4))"},
        {ints({2, 3, 5}), ints({1, 2, 1}), "sf(-2; (2,1), 2x(3,1), (5,4))"},
    };
    Int flat_f = flat_frobenius(GeneratorSet::of(ints({6, 15, 20})));
    require(flat_f == Int(49), "flat_frobenius(6,15,20) = 49");
    for (const Case& c : cases) {
        CanonicalRepresentative rep =
            canonical_representative(FlatPresentation::of(c.alphas, c.mults));
        require(rep.graph == parse_graph(c.expected), std::string("Sf = ") + c.expected);
        GraphInvariants inv = graph_invariants(rep.graph);
        require(inv.o == Int(1), "o = 1");
        require(is_numerically_gorenstein(rep.graph), "numerically Gorenstein");
        require(semigroup_of_graph(rep.graph).frobenius == Int(49), "scanned Frobenius = 49");
    }
}

void check_big_example() {
    SSRGraph g = parse_graph("sf(-2; 2x(2,1), 2x(3,1), 2x(7,1), (84,1))");
    GraphInvariants inv = graph_invariants(g);
    require(inv.gamma == Rational(85), "gamma = 85");
    require(Rational(-1) / inv.e == Rational(28), "1/|e| = 28");
    PlumbingData p = plumbing_expand(g);
    std::vector<Rational> expected;
    for (long long z : {86, 43, 43, 29, 29, 13, 13, 2}) expected.emplace_back(Int(z));
    require(p.z_k == expected, "Z_K = (86,43,43,29,29,13,13,2)");
    GraphFrobenius f = frobenius_of_graph(g);
    require(f.frobenius == Int(85), "f = 85");
    require(f.check_s == Rational(28), "derived s-check = 28");
    require(n_value(g, Int(6)) == Int(-1), "N(6) = -1");
    require(n_value(g, Int(79)) == Int(-1), "N(79) = -1");
    require(!is_symmetric(semigroup_of_graph(g)), "not symmetric");
    require(is_numerically_gorenstein(g), "numerically Gorenstein");
}

void check_symmetric_example() {
    SSRGraph g = parse_graph("sf(-2; 2x(35,13), 2x(21,13))");
    NumericalSemigroup s = semigroup_of_graph(g);
    require(s == G({8, 21, 35}), "S = G(8,21,35)");
    require(s.frobenius == Int(97), "f = 97 by sieve");
    require(classify(GeneratorSet::of(s.minimal_generators)) == FlatnessClass::AlmostFlat,
            "almost flat");
    require(is_numerically_gorenstein(g), "numerically Gorenstein");
    require(is_symmetric(s), "symmetric");
}

void check_quotient_example() {
    SSRGraph left = parse_graph("sf(-2; 2x(3,1), 2x(5,3))");
    SSRGraph right = quotient_graph(left, Int(2));
    require(right == parse_graph("sf(-2; 2x(3,2), 2x(5,1))"), "Figure 1 right graph");
    require(quotient(G({3, 5}), Int(2)) == G({3, 4, 5}), "G(3,5)/2 = G(3,4,5)");
    require(semigroup_of_graph(right) == G({3, 4, 5}), "graph semigroup matches");
}

void check_property_suites() {
    // bounds, quasi-period and superadditivity of N
    {
        Rng rng(1);
        for (int iter = 0; iter < 100; ++iter) {
            SSRGraph g = random_graph(rng);
            GraphInvariants inv = graph_invariants(g);
            Rational abs_e = -inv.e;
            Rational low = -(Rational(inv.alpha_lcm) - Rational(1)) * abs_e - Rational(inv.d);
            Int bound = inv.alpha_lcm * Int(3);
            for (Int l(0); l <= bound; ++l) {
                Rational mid =
                    Rational(n_value(g, l)) - Rational(ceil_div(l, inv.alpha_lcm) * inv.o);
                bool on_period = (l % inv.alpha_lcm) == Int(0);
                require(low <= mid && (on_period ? mid == Rational(0) : mid <= Rational(-1)),
                        "N period bound");
            }
            require(n_value(g, inv.alpha_lcm) == inv.o, "N(alpha) = o");
            for (Int l(0); l <= inv.alpha_lcm * Int(2); ++l) {
                require(n_value(g, l + inv.alpha_lcm) == n_value(g, l) + inv.o,
                        "N(l + alpha) = N(l) + o");
            }
            Int beyond = (Rational(inv.alpha_lcm) + inv.gamma).floor() + Int(1);
            for (Int l = beyond; l <= beyond + Int(40); ++l) {
                if (l < Int(0)) continue;
                require(n_value(g, l) >= Int(0), "N >= 0 beyond alpha + gamma");
            }
            for (int t = 0; t < 40; ++t) {
                Int l1 = rand_int(rng, 0, (inv.alpha_lcm * Int(3)).to_int64());
                Int l2 = rand_int(rng, 0, (inv.alpha_lcm * Int(3)).to_int64());
                require(n_value(g, l1 + l2) >= n_value(g, l1) + n_value(g, l2),
                        "superadditivity");
            }
        }
    }
    // sum-graph sandwich and S_{kGamma} = S_Gamma
    {
        Rng rng(2);
        for (int iter = 0; iter < 100; ++iter) {
            SSRGraph g1 = random_graph(rng);
            SSRGraph g2 = random_graph(rng);
            NumericalSemigroup s1 = semigroup_of_graph(g1);
            NumericalSemigroup s2 = semigroup_of_graph(g2);
            NumericalSemigroup both = semigroup_of_graph(sum_graphs(g1, g2));
            NumericalSemigroup added = sum(s1, s2);
            Int top = std::max({s1.frobenius, s2.frobenius, both.frobenius, added.frobenius}) +
                      Int(1);
            for (Int l(0); l <= top; ++l) {
                if (s1.contains(l) && s2.contains(l)) {
                    require(both.contains(l), "sum sandwich lower inclusion");
                }
                if (both.contains(l)) require(added.contains(l), "sum sandwich upper inclusion");
            }
            for (long long k = 1; k <= 5; ++k) {
                require(semigroup_of_graph(scale_graph(g1, Int(k))) == s1, "S_kGamma = S_Gamma");
            }
        }
    }
    // quotient-graph law
    {
        Rng rng(3);
        for (int iter = 0; iter < 100; ++iter) {
            SSRGraph g = random_graph(rng);
            NumericalSemigroup s = semigroup_of_graph(g);
            for (long long k = 1; k <= 6; ++k) {
                require(semigroup_of_graph(quotient_graph(g, Int(k))) == quotient(s, Int(k)),
                        "S_{Gamma^(k)} = S/k");
            }
        }
    }
    // submonoid bounds through the Submonoid type
    {
        Rng rng(4);
        for (int iter = 0; iter < 100; ++iter) {
            SSRGraph g = random_graph(rng, 3, 9, 5);
            monoid_bounds(g);  // verifies the inclusions internally
        }
    }
    // numerically Gorenstein laws
    {
        Rng rng(5);
        int seen = 0;
        for (int iter = 0; iter < 400; ++iter) {
            SSRGraph g = random_graph(rng);
            if (!is_numerically_gorenstein(g)) continue;
            ++seen;
            GraphInvariants inv = graph_invariants(g);
            Int gamma = inv.gamma.as_integer();
            for (Int l = -inv.alpha_lcm; l <= inv.alpha_lcm * Int(2); ++l) {
                require(n_value(g, l) + n_value(g, gamma - l) == Int(-2),
                        "N(l) + N(gamma - l) = -2");
            }
            if (inv.o == Int(1)) {
                NumericalSemigroup s = semigroup_of_graph(g);
                require(is_symmetric(s), "nGor & o=1 => symmetric");
                require(Rational(s.frobenius) == Rational(inv.alpha_lcm) + inv.gamma,
                        "nGor & o=1 => f = alpha + gamma");
            }
        }
        require(seen >= 10, "enough Gorenstein samples");
    }
    // flat round-trip with Brauer permutation attainment
    {
        Rng rng(6);
        for (int iter = 0; iter < 100; ++iter) {
            FlatPresentation f = random_flat_presentation(rng, 3, 11, 4);
            CanonicalRepresentative rep = canonical_representative(f);
            NumericalSemigroup scanned = semigroup_of_graph(rep.graph);
            NumericalSemigroup sieved = f.semigroup();
            require(scanned == sieved, "scan equals sieve");
            require(scanned.frobenius == f.frobenius_by_formula(), "f matches the closed formula");
            GeneratorSet minimal = GeneratorSet::of(scanned.minimal_generators);
            require(brauer_T_best_permutation(minimal) == scanned.frobenius,
                    "some permutation attains T = f");
            if (classify(minimal) == FlatnessClass::StronglyFlat) {
                require(bound_B(minimal) == scanned.frobenius, "strongly flat => f = B");
            }
            require(is_symmetric(scanned), "flat semigroups are symmetric");
        }
    }
    // decompose round-trip on random graphs
    {
        Rng rng(7);
        int replayed = 0;
        for (int iter = 0; iter < 100; ++iter) {
            SSRGraph g = random_graph(rng, 2, 14, 6);
            NumericalSemigroup s = semigroup_of_graph(g);
            QuotientCertificate cert = decompose(g);
            require(graph_invariants(cert.tilde_graph).o == Int(1), "tilde has o = 1");
            try {
                require(quotient(cert.flat.semigroup(), cert.divisor) == s,
                        "certificate quotient equals S");
                ++replayed;
            } catch (const OverflowError&) {
            } catch (const Error& e) {
                if (std::string(e.what()).find("exceeds") == std::string::npos) throw;
            }
        }
        require(replayed >= 60, "most certificates replayed by direct sieve");
    }
}

void check_flat_oracle_equivalence() {
    Rng rng(8);
    for (int iter = 0; iter < 100; ++iter) {
        FlatPresentation f = random_flat_presentation(rng, 4, 13, 6);
        NumericalSemigroup s = f.semigroup();
        require(s.frobenius == f.frobenius_by_formula(),
                "formula equals sieve on the presentation");
        require(flat_frobenius(GeneratorSet::of(f.generators())) == s.frobenius,
                "flat_frobenius equals sieve");
    }
}

}  // namespace

int main() {
    criterion(1, "graph -> semigroup reproduction (G(4,6,7,9), gaps {1,2,3,5})",
              check_graph_reproduces_semigroup);
    criterion(2, "decomposition reproduction and the hand-picked 307 certificate",
              check_decomposition);
    criterion(3, "three canonical representatives of G(6,15,20)",
              check_canonical_representatives);
    criterion(4, "7-leg example: gamma, Z_K, f, s-check, N values, asymmetry",
              check_big_example);
    criterion(5, "sf(-2; 2x(35,13), 2x(21,13)) gives symmetric almost-flat G(8,21,35)",
              check_symmetric_example);
    criterion(6, "quotient graph of Figure 1 and G(3,5)/2 = G(3,4,5)",
              check_quotient_example);
    criterion(7, "randomized property suites (fixed seeds)", check_property_suites);
    criterion(8, "oracle equivalence: flat formula vs sieve on 100 presentations",
              check_flat_oracle_equivalence);
    if (failures == 0) {
        std::cout << "all acceptance criteria passed\n";
        return 0;
    }
    std::cout << failures << " acceptance criteria failed\n";
    return 1;
}
