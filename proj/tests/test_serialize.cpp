#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fluxcoh/cocycles.hpp"
#include "fluxcoh/serialize.hpp"

using namespace fluxcoh;

TEST_CASE("element descriptors") {
    Json j = Json::parse(R"({
        "genus": 2,
        "word": ["nu1", "mu2"],
        "fC": ["th", "0", "0", "1/2"],
        "kv": ["1", "0", "0", "0"],
        "cal": "3*th^2"
    })");
    ModelSymp e = parse_element(j);
    CHECK(e.g == 2);
    CHECK(e.T == twist_matrix(2, Twist::Nu, 1) * twist_matrix(2, Twist::Mu, 2));
    CHECK(e.fC.c[0] == PolyScalar::symbol("th"));
    CHECK(e.fC.c[3] == PolyScalar(Rational(1, 2)));
    CHECK(e.kv == x_star(2, 1));
    CHECK(e.cal == PolyScalar::symbol("th") * PolyScalar::symbol("th") * PolyScalar(3));

    CHECK_THROWS(parse_element(Json::parse(R"({"genus": 2, "word": ["sigma1"]})")));
    CHECK_THROWS(parse_element(Json::parse(R"({"genus": 1})")));
    // kv must be rational
    CHECK_THROWS(parse_element(
        Json::parse(R"({"genus": 2, "kv": ["th", "0", "0", "0"]})")));
}

TEST_CASE("chain round-trip") {
    int g = 2;
    BarChain z = build_cstar_cycle(g, PolyScalar::symbol("th"), 1);
    BarChain back = parse_chain(chain_to_json(z));
    // the round-tripped chain evaluates identically
    CHECK(back.degree() == z.degree());
    CHECK(alpha(g, 1).evaluate(back) == alpha(g, 1).evaluate(z));
    CHECK(boundary(back).is_zero());
}

TEST_CASE("wedge descriptors") {
    ExtElement xi = parse_wedge(2, "x1^y2");
    ExtElement want(2, 2);
    want.add_term({0, 3}, PolyScalar(1));
    CHECK(xi == want);
    CHECK_THROWS(parse_wedge(2, "x3"));
    CHECK_THROWS(parse_wedge(2, "z1"));
}

TEST_CASE("cocycle registry") {
    int g = 2;
    NamedCocycle a = lookup_cocycle(g, "alpha");
    CHECK(a.degree == 2);
    BarChain z = build_cstar_cycle(g, PolyScalar(3), 1);
    CHECK(a.scalar.evaluate(z) == PolyScalar(6));

    NamedCocycle at = lookup_cocycle(g, "alpha_tilde:1");
    CHECK(at.symmetric_valued);
    CHECK(at.symmetric.evaluate(z).project() == PolyScalar(6));

    NamedCocycle fp = lookup_cocycle(g, "flux_pullback:x1^x2");
    CHECK(fp.degree == 2);
    BarChain torus =
        shuffle_cycle({flux_element(pd(x_hom(g, 1))), flux_element(pd(x_hom(g, 2)))});
    CHECK(fp.scalar.evaluate(torus) == PolyScalar(1));

    CHECK(lookup_cocycle(g, "omega0_tilde").degree == 2);
    CHECK(lookup_cocycle(g, "pair:kR,fluxc").scalar.evaluate(z) == PolyScalar(3));
    CHECK_THROWS(lookup_cocycle(g, "nope"));
}
