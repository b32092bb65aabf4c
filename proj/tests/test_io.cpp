#include "doctest.h"
#include "starsemi/io.hpp"
#include "test_util.hpp"

using namespace starsemi;
using namespace starsemi::testutil;

TEST_CASE("graph text grammar") {
    SSRGraph g = parse_graph("sf(-2; 2x(2,1), 2x(4,1), (5,1))");
    CHECK(g.b0 == Int(2));
    REQUIRE(g.legs.size() == 3);
    CHECK(g.legs[0] == SeifertLeg{Int(2), Int(1), Int(2)});
    CHECK(g.legs[2] == SeifertLeg{Int(5), Int(1), Int(1)});
    CHECK(render_graph(g) == "sf(-2; 2x(2,1), 2x(4,1), (5,1))");

    SSRGraph two_leg = parse_graph("sf(-1; (3,1), (5,3))");
    CHECK(two_leg.legs.size() == 2);

    // 1-leg and legless graphs are valid when e < 0
    CHECK(parse_graph("sf(-1; (2,1))").b0 == Int(1));
    CHECK(parse_graph("sf(-3)").legs.empty());
    CHECK(parse_graph("sf( -2 ;  2x( 2 , 1 ) )").legs[0].mult == Int(2));

    CHECK_THROWS_AS(parse_graph("sf(0; (2,1))"), ParseError);
    CHECK_THROWS_AS(parse_graph("sf(-2; (2,2))"), Error);
    CHECK_THROWS_AS(parse_graph("sf(-2; 2x(2,1)) trailing"), ParseError);
    CHECK_THROWS_AS(parse_graph("sg(-2)"), ParseError);
}

TEST_CASE("parse error carries a position") {
    try {
        parse_graph("sf(-2; 2y(2,1))");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position == 8);
    }
}

TEST_CASE("semigroup and flat text forms") {
    GeneratorSet gens = parse_generators("G(4,6,7,9)");
    CHECK(gens.elements == ints({4, 6, 7, 9}));
    CHECK(parse_generators("4 6 7 9").elements == ints({4, 6, 7, 9}));
    NumericalSemigroup s = build_semigroup(gens);
    CHECK(render_semigroup(s) == "G(4,6,7,9)");

    FlatPresentation f = parse_flat("flat(alpha=[2,3], s=[5,10])");
    CHECK(f.alphas == ints({2, 3}));
    CHECK(f.mults == ints({5, 10}));
    CHECK(render_flat(f) == "flat(alpha=[2,3], s=[5,10])");
}

TEST_CASE("graph json round-trip") {
    SSRGraph g = parse_graph("sf(-2; 2x(35,13), 2x(21,13))");
    SSRGraph back = graph_from_json(graph_to_json(g));
    CHECK(back == g);
    CHECK(graph_to_json(g) ==
          R"({"b0":2,"legs":[{"alpha":21,"mult":2,"omega":13},{"alpha":35,"mult":2,"omega":13}]})");
    CHECK_THROWS_AS(graph_from_json("{"), ParseError);
    CHECK_THROWS_AS(graph_from_json(R"({"b0":2})"), ParseError);
}

TEST_CASE("certificate json round-trip") {
    QuotientCertificate cert =
        flat_quotient(parse_graph("sf(-2; 2x(11,5), 2x(13,3), (5,1))"));
    std::string record = certificate_to_json(cert);
    CertificateFile file = certificate_from_json(record);
    CHECK(file.graph == cert.perturbed_graph);
    CHECK(file.flat == cert.flat);
    CHECK(file.divisor == cert.divisor);
    CHECK_NOTHROW(verify_certificate(file.graph, file.flat, file.divisor));
}

TEST_CASE("render/parse round-trips on random values") {
    Rng rng(90210);
    for (int iter = 0; iter < 100; ++iter) {
        SSRGraph g = random_graph(rng);
        CHECK(parse_graph(render_graph(g)) == g);
        CHECK(graph_from_json(graph_to_json(g)) == g);

        NumericalSemigroup s = build_semigroup(random_coprime_gens(rng, 4, 30));
        CHECK(build_semigroup(parse_generators(render_semigroup(s))) == s);

        FlatPresentation f = random_flat_presentation(rng, 3, 11, 5);
        CHECK(parse_flat(render_flat(f)) == f);

        if (iter % 10 == 0) {
            QuotientCertificate cert = decompose(random_graph(rng, 2, 9, 4));
            CertificateFile file = certificate_from_json(certificate_to_json(cert));
            CHECK(file.graph == cert.perturbed_graph);
            CHECK(file.flat == cert.flat);
            CHECK(file.divisor == cert.divisor);
        }
    }
}

TEST_CASE("rendering is byte-stable") {
    SSRGraph g = parse_graph("sf(-2;2x(2,1),2x(4,1),(5,1))");
    std::string first = render_graph(g);
    std::string second = render_graph(parse_graph(first));
    CHECK(first == second);
}
