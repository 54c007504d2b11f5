#pragma once

#include "fluxcoh/rational.hpp"

#include <map>
#include <string>
#include <vector>

namespace fluxcoh {

/// Power product of session symbols; exponents are kept strictly positive,
/// so the empty map is the constant monomial 1.
using Monomial = std::map<std::string, int>;

Monomial monomial_mul(const Monomial& a, const Monomial& b);
std::string monomial_str(const Monomial& m);

/// Element of Q[Theta]: the desk-scale stand-in for the real coefficients.
/// Terms with zero coefficient are never stored.
class PolyScalar {
public:
    PolyScalar() = default;
    PolyScalar(const Rational& r) { add_term(Monomial{}, r); }
    PolyScalar(long long n) : PolyScalar(Rational(n)) {}

    static PolyScalar symbol(const std::string& name);
    static PolyScalar parse(const std::string& text);

    const std::map<Monomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_rational() const;
    /// The value as a rational; throws unless is_rational().
    Rational rational_value() const;

    void add_term(const Monomial& m, const Rational& coef);

    PolyScalar operator-() const;
    PolyScalar& operator+=(const PolyScalar& o);
    PolyScalar& operator-=(const PolyScalar& o);
    friend PolyScalar operator+(PolyScalar a, const PolyScalar& b) { return a += b; }
    friend PolyScalar operator-(PolyScalar a, const PolyScalar& b) { return a -= b; }
    friend PolyScalar operator*(const PolyScalar& a, const PolyScalar& b);
    PolyScalar& operator*=(const PolyScalar& o) { return *this = *this * o; }

    friend bool operator==(const PolyScalar& a, const PolyScalar& b) { return a.terms_ == b.terms_; }
    friend bool operator<(const PolyScalar& a, const PolyScalar& b) { return a.terms_ < b.terms_; }

    /// Standard evaluation; throws naming the first unbound symbol.
    Rational eval(const std::map<std::string, Rational>& env) const;

    std::string str() const;

private:
    std::map<Monomial, Rational> terms_;
};

}  // namespace fluxcoh
