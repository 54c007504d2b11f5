#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fluxcoh/group.hpp"
#include "fluxcoh/rng.hpp"

using namespace fluxcoh;

TEST_CASE("composition law with the central correction") {
    int g = 2;
    ModelSymp a = flux_element(x_star(g, 1));
    ModelSymp b = flux_element(y_star(g, 1));
    ModelSymp ab = compose(a, b);
    CHECK(ab.fC == x_star(g, 1) + y_star(g, 1));
    CHECK(ab.cal == PolyScalar(1));
    CHECK(compose(a, identity_element(g)) == a);
    CHECK(compose(identity_element(g), a) == a);
}

TEST_CASE("inverse cancels exactly") {
    int g = 2;
    ModelSymp a = flux_element(x_star(g, 1));
    ModelSymp ai = inverse(a);
    CHECK(ai.fC == -x_star(g, 1));
    CHECK(ai.cal.is_zero());
    Rng rng(11);
    for (int t = 0; t < 100; ++t) {
        ModelSymp e = rng.element(g, {"th"});
        CHECK(compose(e, inverse(e)) == identity_element(g));
        CHECK(compose(compose(e, rng.element(g, {"th"})), rng.element(g, {"th"})).g == g);
    }
}

TEST_CASE("associativity on random triples") {
    int g = 3;
    Rng rng(5);
    for (int t = 0; t < 50; ++t) {
        ModelSymp a = rng.element(g, {"a", "b"});
        ModelSymp b = rng.element(g, {"a", "b"});
        ModelSymp c = rng.element(g, {"a", "b"});
        CHECK(compose(compose(a, b), c) == compose(a, compose(b, c)));
    }
}

TEST_CASE("derived flux satisfies the crossed law") {
    int g = 2;
    Rng rng(3);
    for (int t = 0; t < 50; ++t) {
        ModelSymp a = rng.element(g, {"th"});
        ModelSymp b = rng.element(g, {"th"});
        CohVector lhs = flux_tilde(compose(a, b));
        CohVector rhs = flux_tilde(a) + apply(a.coh_action(), flux_tilde(b));
        CHECK(lhs == rhs);
    }
    ModelSymp phi = flux_element(scale(PolyScalar(3), y_star(g, 1)));
    CHECK(flux_tilde(phi) == scale(PolyScalar(3), y_star(g, 1)));
    ModelSymp nu(g);
    nu.T = twist_matrix(g, Twist::Nu, 1);
    nu.kv = x_star(g, 1);
    CHECK(flux_tilde(nu) == x_star(g, 1));
    CHECK(flux_tilde(identity_element(g)).is_zero());
}

TEST_CASE("submodel membership") {
    int g = 2;
    ModelSymp a = flux_element(x_star(g, 1));
    CHECK(in_subgroup(a, SubgroupTag::Symp0));
    CHECK(!in_subgroup(a, SubgroupTag::Ham));
    CHECK(in_subgroup(identity_element(g), SubgroupTag::Ham));
    ModelSymp b = a;
    b.kv = x_star(g, 1);
    CHECK(!in_subgroup(b, SubgroupTag::Symp0));
    CHECK(in_subgroup(b, SubgroupTag::TorelliLike));
    b.T = twist_matrix(g, Twist::Mu, 1);
    CHECK(!in_subgroup(b, SubgroupTag::TorelliLike));
    CHECK(in_subgroup(b, SubgroupTag::Full));
}

TEST_CASE("commutator is central with twice the pairing") {
    int g = 2;
    ModelSymp a = flux_element(x_star(g, 1));
    ModelSymp b = flux_element(y_star(g, 1));
    ModelSymp c = commutator(a, b);
    CHECK(c.T == QMat::identity(2 * g));
    CHECK(c.fC.is_zero());
    CHECK(c.cal == PolyScalar(2));
    PolyScalar s = PolyScalar::symbol("s");
    CHECK(commutator(flux_element(scale(s, x_star(g, 1))), b).cal == s * PolyScalar(2));
    // orthogonal fluxes commute
    CHECK(commutator(a, flux_element(x_star(g, 2))) == identity_element(g));
    ModelSymp bad(g);
    bad.T = twist_matrix(g, Twist::Mu, 1);
    CHECK_THROWS(commutator(bad, b));
}

TEST_CASE("lifts store decorations verbatim") {
    int g = 2;
    CohVector fc = scale(PolyScalar::symbol("th"), x_star(g, 2));
    ModelSymp l = lift_generator(g, Twist::Nu, 1, fc, x_star(g, 1), PolyScalar(5));
    CHECK(l.T == twist_matrix(g, Twist::Nu, 1));
    CHECK(l.fC == fc);
    CHECK(l.kv == x_star(g, 1));
    CHECK(l.cal == PolyScalar(5));
    CHECK_THROWS(lift_generator(g, Twist::Nu, 2, fc, x_star(g, 1), PolyScalar(0)));
    // kv must be rational
    CHECK_THROWS(ModelSymp(g, QMat::identity(2 * g), CohVector(g), fc, PolyScalar(0)));
}

TEST_CASE("block embedding is a homomorphism") {
    int g = 2, total = 5, offset = 1;
    Rng rng(17);
    for (int t = 0; t < 25; ++t) {
        ModelSymp a = rng.element(g, {"th"});
        ModelSymp b = rng.element(g, {"th"});
        CHECK(is_symplectic(total, embed_block(a, total, offset).T));
        CHECK(embed_block(compose(a, b), total, offset) ==
              compose(embed_block(a, total, offset), embed_block(b, total, offset)));
    }
    CHECK_THROWS(embed_block(rng.element(g, {}), 3, 2));
}
