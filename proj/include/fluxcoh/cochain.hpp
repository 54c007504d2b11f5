#pragma once

#include <functional>
#include <stdexcept>

#include "fluxcoh/bar.hpp"
#include "fluxcoh/sym.hpp"

namespace fluxcoh {

inline PolyScalar coef_scale(const PolyScalar& c, const Rational& r) {
    return c * PolyScalar(r);
}
inline SymElement coef_scale(const SymElement& c, const Rational& r) { return c.scaled(r); }
inline CohVector coef_scale(const CohVector& c, const Rational& r) {
    return scale(PolyScalar(r), c);
}

// A bar cochain as a pure evaluator.  `zero` fixes the coefficient shape
// (genus, degree) so empty chains evaluate correctly.
template <class Coef>
struct Cochain {
    int g = 2;
    int degree = 0;
    Coef zero;
    std::function<Coef(const BarTuple&)> eval;

    Coef evaluate(const BarChain& c) const {
        if (c.degree() != degree) throw std::invalid_argument("evaluate: degree mismatch");
        if (c.genus() != g) throw std::invalid_argument("evaluate: genus mismatch");
        Coef acc = zero;
        for (const auto& [t, coef] : c.terms()) acc = acc + coef_scale(eval(t), coef);
        return acc;
    }
};

// coboundary with trivial coefficients
template <class Coef>
Cochain<Coef> coboundary(const Cochain<Coef>& f) {
    Cochain<Coef> out{f.g, f.degree + 1, f.zero, nullptr};
    out.eval = [f](const BarTuple& t) {
        int n = f.degree;
        Coef acc = f.eval(BarTuple(t.begin() + 1, t.end()));
        for (int i = 1; i <= n; ++i) {
            BarTuple u;
            u.reserve(n);
            u.insert(u.end(), t.begin(), t.begin() + (i - 1));
            u.push_back(compose(t[i - 1], t[i]));
            u.insert(u.end(), t.begin() + (i + 1), t.end());
            acc = acc + coef_scale(f.eval(u), Rational(i % 2 == 0 ? 1 : -1));
        }
        acc = acc + coef_scale(f.eval(BarTuple(t.begin(), t.end() - 1)),
                               Rational((n + 1) % 2 == 0 ? 1 : -1));
        return acc;
    };
    return out;
}

// coboundary with coefficients in H^1 carrying the natural action
Cochain<CohVector> coboundary_twisted(const Cochain<CohVector>& f);

// Alexander-Whitney cup product for trivial coefficients with a product.
template <class Coef, class Prod>
Cochain<Coef> aw_cup(const Cochain<Coef>& f, const Cochain<Coef>& h, Prod prod,
                     const Coef& zero) {
    if (f.g != h.g) throw std::invalid_argument("aw_cup: genus mismatch");
    Cochain<Coef> out{f.g, f.degree + h.degree, zero, nullptr};
    int p = f.degree;
    out.eval = [f, h, prod, p](const BarTuple& t) {
        return prod(f.eval(BarTuple(t.begin(), t.begin() + p)),
                    h.eval(BarTuple(t.begin() + p, t.end())));
    };
    return out;
}

Cochain<PolyScalar> aw_cup(const Cochain<PolyScalar>& f, const Cochain<PolyScalar>& h);
Cochain<SymElement> aw_cup(const Cochain<SymElement>& f, const Cochain<SymElement>& h);

// (a, b) -> iota(f1(a), A(a) f2(b)); a 2-cocycle whenever f1, f2 satisfy
// the crossed-homomorphism law.
Cochain<PolyScalar> pair_cocycle(const Cochain<CohVector>& f1, const Cochain<CohVector>& f2);

// crossed law f(ab) = f(a) + A(a) f(b) on supplied sample pairs
bool is_crossed(const Cochain<CohVector>& f,
                const std::vector<std::pair<ModelSymp, ModelSymp>>& samples);

}  // namespace fluxcoh
