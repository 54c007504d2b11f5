#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fluxcoh/cocycles.hpp"
#include "fluxcoh/rng.hpp"

using namespace fluxcoh;

namespace {
const std::vector<std::string> syms = {"th"};
}

TEST_CASE("level-one value on a flux pair") {
    int g = 2;
    ModelSymp a = flux_element(x_star(g, 1));
    ModelSymp b = flux_element(y_star(g, 1));
    SymElement v = alpha_tilde(g, 1).eval({a, b});
    SymElement want(2);
    want.add_term({Monomial{}, Monomial{}}, Rational(1));
    CHECK(v == want);
    CHECK(alpha(g, 1).eval({a, b}) == PolyScalar(1));
    // identity slots contribute nothing
    CHECK(alpha_tilde(g, 1).eval({identity_element(g), identity_element(g)}).is_zero());
}

TEST_CASE("level-one cochain is closed on the full model") {
    int g = 2;
    Rng rng(21);
    Cochain<SymElement> d = coboundary(alpha_tilde(g, 1));
    for (int t = 0; t < 25; ++t) {
        BarTuple tup = {rng.element(g, syms), rng.element(g, syms), rng.element(g, syms)};
        CHECK(d.eval(tup).is_zero());
    }
}

TEST_CASE("coordinate characters read the flux in homology coordinates") {
    int g = 2;
    ModelSymp a = flux_element(scale(PolyScalar(3), pd(x_hom(g, 1))));
    CHECK(coordinate_character(g, 1, true).eval({a}) == PolyScalar(3));
    CHECK(coordinate_character(g, 1, false).eval({a}).is_zero());
    CHECK(coordinate_character(g, 2, true).eval({a}).is_zero());
    CHECK(coordinate_character(g, 1, true).eval({identity_element(g)}).is_zero());
    Rng rng(13);
    for (int t = 0; t < 25; ++t) {
        ModelSymp u = rng.symp0(g, syms);
        ModelSymp v = rng.symp0(g, syms);
        for (int i = 1; i <= g; ++i)
            for (bool kind : {true, false}) {
                Cochain<PolyScalar> ch = coordinate_character(g, i, kind);
                CHECK(ch.eval({compose(u, v)}) == ch.eval({u}) + ch.eval({v}));
            }
    }
    ModelSymp m(g);
    m.T = twist_matrix(g, Twist::Mu, 1);
    CHECK_THROWS(coordinate_character(g, 1, true).eval({m}));
}

TEST_CASE("the degree-two identity with the explicit primitive") {
    int g = 2;
    Rng rng(31);
    Cochain<PolyScalar> a = alpha(g, 1);
    Cochain<PolyScalar> om = omega0_tilde(g);
    Cochain<PolyScalar> dprim = coboundary(xy_primitive(g));
    for (int t = 0; t < 50; ++t) {
        BarTuple pair = {rng.symp0(g, syms), rng.symp0(g, syms)};
        CHECK(a.eval(pair) - om.eval(pair) * PolyScalar(2) == dprim.eval(pair));
    }
    CHECK(om.eval({identity_element(g), identity_element(g)}).is_zero());
}

TEST_CASE("flux pullback torus values") {
    int g = 3;
    // coordinate wedge against its own torus: value one
    for (int k = 1; k <= g; ++k) {
        std::vector<ModelSymp> gens;
        for (int i = 1; i <= k; ++i) gens.push_back(flux_element(pd(x_hom(g, i))));
        ExtElement xi(g, k);
        std::vector<int> key;
        for (int i = 0; i < k; ++i) key.push_back(i);
        xi.add_term(key, PolyScalar(1));
        CHECK(flux_pullback(xi).evaluate(shuffle_cycle(gens)) == PolyScalar(1));
    }
    // omega ^ h vanishes on isotropic tori
    Rng rng(3);
    for (int t = 0; t < 20; ++t) {
        auto triple = rng.isotropic_tuple(g, 3, syms);
        ExtElement h(g, 1);
        h.add_term({static_cast<int>(rng.below(2 * g))}, PolyScalar(rng.rational()));
        if (h.is_zero()) continue;
        CHECK(flux_pullback(wedge(omega0(g), h)).evaluate(shuffle_cycle(triple)).is_zero());
    }
}

TEST_CASE("flux pullback of the form matches the alternation of the product cochain") {
    int g = 2;
    Rng rng(41);
    Cochain<PolyScalar> om = omega0_tilde(g);
    for (int t = 0; t < 20; ++t) {
        BarTuple pair = {rng.symp0(g, syms), rng.symp0(g, syms)};
        BarTuple swapped = {pair[1], pair[0]};
        PolyScalar lhs = flux_pullback(omega0(g)).eval(pair);
        PolyScalar rhs =
            (om.eval(pair) - om.eval(swapped)) * PolyScalar(Rational(1, 2));
        CHECK(lhs == rhs);
    }
}

TEST_CASE("the twisted test cycle evaluates to twice its parameter") {
    for (int g : {2, 3}) {
        for (int i = 1; i <= g - 1; ++i) {
            BarChain z = build_cstar_cycle(g, PolyScalar(1), i);
            CHECK(boundary(z).is_zero());
            CHECK(alpha(g, 1).evaluate(z) == PolyScalar(2));
        }
    }
    PolyScalar th = PolyScalar::symbol("th");
    BarChain z = build_cstar_cycle(2, th, 1);
    CHECK(alpha(2, 1).evaluate(z) == th * PolyScalar(2));
    CHECK(alpha_tilde(2, 1).evaluate(z).project() == th * PolyScalar(2));
    // rescaling the character normalization rescales the value
    CstarChoices c = CstarChoices::defaults(2);
    c.kv_scale = Rational(5);
    CHECK(alpha(2, 1).evaluate(build_cstar_cycle(2, th, 1, c)) == th * PolyScalar(10));
}

TEST_CASE("pairing symmetry at evaluation level") {
    int g = 2;
    BarChain z = build_cstar_cycle(g, PolyScalar::symbol("th"), 1);
    Cochain<CohVector> f1 = kv_cochain(g);
    Cochain<CohVector> f2 = fc_cochain(g);
    CHECK(pair_cocycle(f1, f2).evaluate(z) == pair_cocycle(f2, f1).evaluate(z));
}

TEST_CASE("decomposition report on the test cycle") {
    int g = 2;
    PolyScalar th = PolyScalar::symbol("th");
    BarChain z = build_cstar_cycle(g, th, 1);
    FluxcReport rep = check_fluxc_decomposition(z);
    CHECK(rep.p_trivial);
    CHECK(rep.alpha_value == th * PolyScalar(2));
    CHECK(rep.pair_value == th);
    CHECK(rep.fcfc_vanishes);
    CHECK(rep.decomposition_holds);

    Rng rng(77);
    BarChain w = rng.chain(g, 3, 1, syms);
    FluxcReport rep2 = check_fluxc_decomposition(z + boundary(w), {w});
    CHECK(rep2.p_trivial);
    CHECK(rep2.alpha_value == rep.alpha_value);

    // shuffles of orthogonal fluxes: everything vanishes
    BarChain s = shuffle_cycle(
        {flux_element(x_star(g, 1)), flux_element(x_star(g, 2))});
    FluxcReport rep3 = check_fluxc_decomposition(s);
    CHECK(rep3.alpha_value.is_zero());
    CHECK(rep3.pair_value.is_zero());
    CHECK(rep3.fcfc_vanishes);

    CHECK_THROWS(check_fluxc_decomposition(rng.chain(g, 2, 1, syms)));
}

TEST_CASE("crossed-law detector") {
    int g = 2;
    Rng rng(10);
    std::vector<std::pair<ModelSymp, ModelSymp>> samples;
    for (int t = 0; t < 20; ++t)
        samples.push_back({rng.element(g, syms), rng.element(g, syms)});
    CHECK(is_crossed(fc_cochain(g), samples));
    CHECK(is_crossed(kv_cochain(g), samples));
    CHECK(is_crossed(flux_tilde_cochain(g), samples));
    Cochain<CohVector> not_crossed{g, 1, CohVector(g),
                                   [g](const BarTuple&) { return x_star(g, 1); }};
    CHECK(!is_crossed(not_crossed, samples));
}
