#include "fluxcoh/rng.hpp"

namespace fluxcoh {

Rational Rng::rational() { return Rational(BigInt(range(-9, 9)), BigInt(range(1, 4))); }

Monomial Rng::monomial(const std::vector<std::string>& symbols, int max_degree) {
    Monomial m;
    if (symbols.empty()) return m;
    int deg = static_cast<int>(below(max_degree + 1));
    for (int i = 0; i < deg; ++i) m[symbols[below(static_cast<long>(symbols.size()))]] += 1;
    return m;
}

PolyScalar Rng::poly(const std::vector<std::string>& symbols) {
    PolyScalar p;
    int nterms = static_cast<int>(range(0, 2));
    for (int i = 0; i < nterms; ++i) p.add_term(monomial(symbols), rational());
    return p;
}

CohVector Rng::coh(int g, const std::vector<std::string>& symbols) {
    CohVector v(g);
    int nonzero = static_cast<int>(range(1, 3));
    for (int i = 0; i < nonzero; ++i) v.c[below(2 * g)] += poly(symbols);
    return v;
}

CohVector Rng::rational_coh(int g) {
    CohVector v(g);
    int nonzero = static_cast<int>(range(0, 2));
    for (int i = 0; i < nonzero; ++i) v.c[below(2 * g)] += PolyScalar(rational());
    return v;
}

ModelSymp Rng::symp0(int g, const std::vector<std::string>& symbols) {
    ModelSymp e = flux_element(coh(g, symbols));
    e.cal = poly(symbols);
    return e;
}

QMat Rng::twist_word(int g, int length) {
    QMat t = QMat::identity(2 * g);
    for (int i = 0; i < length; ++i) {
        int kind = static_cast<int>(below(3));
        QMat m = kind == 0   ? twist_matrix(g, Twist::Lambda, static_cast<int>(range(1, g)))
                 : kind == 1 ? twist_matrix(g, Twist::Mu, static_cast<int>(range(1, g)))
                             : twist_matrix(g, Twist::Nu, static_cast<int>(range(1, g - 1)));
        t = t * m;
    }
    return t;
}

ModelSymp Rng::element(int g, const std::vector<std::string>& symbols) {
    ModelSymp e(g);
    e.T = twist_word(g, static_cast<int>(range(1, 3)));
    e.fC = coh(g, symbols);
    e.kv = rational_coh(g);
    e.cal = poly(symbols);
    return e;
}

BarChain Rng::chain(int g, int degree, int nterms, const std::vector<std::string>& symbols,
                    bool trivial_action_only) {
    BarChain c(g, degree);
    for (int i = 0; i < nterms; ++i) {
        BarTuple t;
        for (int j = 0; j < degree; ++j)
            t.push_back(trivial_action_only ? symp0(g, symbols) : element(g, symbols));
        Rational coef = rational();
        if (coef.is_zero()) coef = Rational(1);
        c.add_term(std::move(t), coef);
    }
    return c;
}

std::pair<ModelSymp, ModelSymp> Rng::isotropic_pair(int g,
                                                    const std::vector<std::string>& symbols) {
    auto t = isotropic_tuple(g, 2, symbols);
    return {t[0], t[1]};
}

std::vector<ModelSymp> Rng::isotropic_tuple(int g, int n,
                                            const std::vector<std::string>& symbols) {
    // fluxes drawn from a common Lagrangian subspace (a random symplectic
    // image of the x*-span), so all pairings vanish
    QMat a = act_on_coh(g, twist_word(g, static_cast<int>(range(1, 3))));
    std::vector<ModelSymp> out;
    for (int j = 0; j < n; ++j) {
        CohVector u(g);
        for (int i = 0; i < g; ++i) u.c[i] = poly(symbols);
        ModelSymp e = flux_element(apply(a, u));
        e.cal = poly(symbols);
        out.push_back(std::move(e));
    }
    return out;
}

}  // namespace fluxcoh
