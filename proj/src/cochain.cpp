#include "fluxcoh/cochain.hpp"

namespace fluxcoh {

Cochain<CohVector> coboundary_twisted(const Cochain<CohVector>& f) {
    Cochain<CohVector> out{f.g, f.degree + 1, f.zero, nullptr};
    out.eval = [f](const BarTuple& t) {
        int n = f.degree;
        CohVector acc = apply(t[0].coh_action(), f.eval(BarTuple(t.begin() + 1, t.end())));
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

Cochain<PolyScalar> aw_cup(const Cochain<PolyScalar>& f, const Cochain<PolyScalar>& h) {
    return aw_cup(f, h, [](const PolyScalar& a, const PolyScalar& b) { return a * b; },
                  PolyScalar());
}

Cochain<SymElement> aw_cup(const Cochain<SymElement>& f, const Cochain<SymElement>& h) {
    return aw_cup(f, h, [](const SymElement& a, const SymElement& b) { return sym_mul(a, b); },
                  SymElement(f.zero.degree() + h.zero.degree()));
}

Cochain<PolyScalar> pair_cocycle(const Cochain<CohVector>& f1, const Cochain<CohVector>& f2) {
    if (f1.g != f2.g) throw std::invalid_argument("pair_cocycle: genus mismatch");
    if (f1.degree != 1 || f2.degree != 1)
        throw std::invalid_argument("pair_cocycle: inputs must be 1-cochains");
    Cochain<PolyScalar> out{f1.g, 2, PolyScalar(), nullptr};
    out.eval = [f1, f2](const BarTuple& t) {
        return iota(f1.eval({t[0]}), apply(t[0].coh_action(), f2.eval({t[1]})));
    };
    return out;
}

bool is_crossed(const Cochain<CohVector>& f,
                const std::vector<std::pair<ModelSymp, ModelSymp>>& samples) {
    for (const auto& [a, b] : samples) {
        CohVector lhs = f.eval({compose(a, b)});
        CohVector rhs = f.eval({a}) + apply(a.coh_action(), f.eval({b}));
        if (!(lhs == rhs)) return false;
    }
    return true;
}

}  // namespace fluxcoh
