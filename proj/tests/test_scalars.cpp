#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fluxcoh/sym.hpp"

using namespace fluxcoh;

TEST_CASE("rational arithmetic is exact and reduced") {
    Rational a(2, 4);
    CHECK(a == Rational(1, 2));
    CHECK((a + Rational(1, 3)) == Rational(5, 6));
    CHECK((a * Rational(-4)) == Rational(-2));
    CHECK((Rational(7) / Rational(2)).str() == "7/2");
    CHECK(Rational(-1, -2) == Rational(1, 2));
    CHECK(Rational(1, 3) < Rational(1, 2));
    CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
    CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("rational parsing") {
    CHECK(Rational::parse("-3/2") == Rational(-3, 2));
    CHECK(Rational::parse("5") == Rational(5));
    CHECK_THROWS(Rational::parse("x"));
}

TEST_CASE("polynomial arithmetic") {
    PolyScalar th = PolyScalar::symbol("th");
    PolyScalar p = th * th + PolyScalar(Rational(1, 2));
    CHECK(!p.is_rational());
    CHECK((p - th * th).rational_value() == Rational(1, 2));
    CHECK((th - th).is_zero());
    CHECK(p.eval({{"th", Rational(2)}}) == Rational(9, 2));
    CHECK_THROWS(p.eval({}));
}

TEST_CASE("polynomial parse round-trip") {
    PolyScalar p = PolyScalar::parse("2*a*b - 1/2 + b^2");
    PolyScalar q = PolyScalar::symbol("a") * PolyScalar::symbol("b") * PolyScalar(2) +
                   PolyScalar::symbol("b") * PolyScalar::symbol("b") -
                   PolyScalar(Rational(1, 2));
    CHECK(p == q);
    CHECK(PolyScalar::parse(p.str()) == p);
    CHECK(PolyScalar::parse("0").is_zero());
    CHECK_THROWS(PolyScalar::parse("2 +"));
}

TEST_CASE("hat expansion is linear and project is a left inverse") {
    PolyScalar th = PolyScalar::symbol("th");
    PolyScalar p = th * th * PolyScalar(3) - PolyScalar(Rational(1, 4));
    SymElement h = SymElement::hat(p);
    CHECK(h.degree() == 1);
    CHECK(h.terms().size() == 2);
    CHECK(h.project() == p);
}

TEST_CASE("symmetric product is commutative and degree-additive") {
    SymElement a = SymElement::hat(PolyScalar::symbol("a"));
    SymElement b = SymElement::hat(PolyScalar::symbol("b") + PolyScalar(1));
    SymElement ab = sym_mul(a, b);
    CHECK(ab.degree() == 2);
    CHECK(ab == sym_mul(b, a));
    CHECK(ab.project() ==
          PolyScalar::symbol("a") * (PolyScalar::symbol("b") + PolyScalar(1)));
    // the hat is not multiplicative: hat(a)hat(b) and hat(ab) differ
    SymElement hab = sym_mul(SymElement::hat(PolyScalar(1)),
                             SymElement::hat(PolyScalar::symbol("a") * PolyScalar::symbol("b")));
    CHECK(!(ab == hab));
    CHECK(hab.project() == PolyScalar::symbol("a") * PolyScalar::symbol("b"));
}

TEST_CASE("symmetric element linear structure") {
    SymElement a = SymElement::hat(PolyScalar::symbol("a"));
    CHECK((a - a).is_zero());
    CHECK(a.scaled(Rational(0)).is_zero());
    CHECK((a + a) == a.scaled(Rational(2)));
    CHECK_THROWS(SymElement(0));
}
