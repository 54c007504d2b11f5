#pragma once

#include "fluxcoh/poly.hpp"

#include <map>
#include <string>
#include <vector>

namespace fluxcoh {

/// Size-k multiset of hatted basis monomials, kept sorted.
using HatKey = std::vector<Monomial>;

/// Element of the k-th symmetric power of the scalar space over Q, spanned by
/// degree-k products of hatted monomials of Q[Theta].
class SymElement {
public:
    SymElement() : degree_(1) {}
    explicit SymElement(int degree) : degree_(degree) {
        if (degree < 1) throw std::invalid_argument("SymElement: degree must be >= 1");
    }

    /// Q-linear hat map: expands a scalar over the monomial basis and hats
    /// each monomial.
    static SymElement hat(const PolyScalar& a);

    int degree() const { return degree_; }
    const std::map<HatKey, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(HatKey key, const Rational& coef);

    SymElement operator-() const;
    SymElement& operator+=(const SymElement& o);
    SymElement& operator-=(const SymElement& o);
    friend SymElement operator+(SymElement a, const SymElement& b) { return a += b; }
    friend SymElement operator-(SymElement a, const SymElement& b) { return a -= b; }
    SymElement scaled(const Rational& r) const;

    friend bool operator==(const SymElement& a, const SymElement& b) {
        return a.degree_ == b.degree_ && a.terms_ == b.terms_;
    }

    /// Multiplies the underlying monomials; a Q-algebra map onto Q[Theta],
    /// left inverse of hat on degree 1.
    PolyScalar project() const;

    std::string str() const;

private:
    int degree_;
    std::map<HatKey, Rational> terms_;
};

/// Commutative product in the symmetric algebra; degree-additive.
SymElement sym_mul(const SymElement& a, const SymElement& b);

}  // namespace fluxcoh
