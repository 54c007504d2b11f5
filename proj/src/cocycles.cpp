#include "fluxcoh/cocycles.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fluxcoh {

namespace {

void require_trivial_action(const ModelSymp& a, const char* who) {
    if (!in_subgroup(a, SubgroupTag::Symp0))
        throw std::invalid_argument(std::string(who) +
                                    ": element outside the trivial-action, kv=0 submodel");
}

BigInt factorial(int n) {
    BigInt f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace

Cochain<CohVector> fc_cochain(int g) {
    return {g, 1, CohVector(g), [](const BarTuple& t) { return t[0].fC; }};
}

Cochain<CohVector> kv_cochain(int g) {
    return {g, 1, CohVector(g), [](const BarTuple& t) { return t[0].kv; }};
}

Cochain<CohVector> flux_tilde_cochain(int g) {
    return {g, 1, CohVector(g), [](const BarTuple& t) { return flux_tilde(t[0]); }};
}

Cochain<PolyScalar> cal_cochain(int g) {
    return {g, 1, PolyScalar(), [](const BarTuple& t) { return t[0].cal; }};
}

Cochain<SymElement> alpha_tilde(int g, int k) {
    check_genus(g);
    if (k < 1) throw std::invalid_argument("alpha_tilde: level must be >= 1");
    Cochain<SymElement> out{g, 2 * k, SymElement(2 * k), nullptr};
    out.eval = [g, k](const BarTuple& t) {
        // xi_i = (prefix action) applied to the flux of the i-th entry
        std::vector<CohVector> xi;
        xi.reserve(2 * k);
        QMat m = QMat::identity(2 * g);
        for (const auto& e : t) {
            xi.push_back(apply(m, flux_tilde(e)));
            m = m * e.coh_action();
        }
        SymElement acc(2 * k);
        std::vector<int> perm(2 * k);
        std::iota(perm.begin(), perm.end(), 0);
        do {
            int inv = 0;
            for (size_t i = 0; i < perm.size(); ++i)
                for (size_t j = i + 1; j < perm.size(); ++j)
                    if (perm[i] > perm[j]) ++inv;
            SymElement prod = iota_disc(xi[perm[0]], xi[perm[1]]);
            for (int j = 1; j < k; ++j)
                prod = sym_mul(prod, iota_disc(xi[perm[2 * j]], xi[perm[2 * j + 1]]));
            acc += inv % 2 == 0 ? prod : -prod;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return acc.scaled(Rational(BigInt(1), factorial(2 * k)));
    };
    return out;
}

Cochain<PolyScalar> alpha(int g, int k) {
    Cochain<SymElement> at = alpha_tilde(g, k);
    return {g, 2 * k, PolyScalar(),
            [at](const BarTuple& t) { return at.eval(t).project(); }};
}

Cochain<PolyScalar> coordinate_character(int g, int i, bool is_x) {
    check_genus(g);
    if (i < 1 || i > g) throw std::invalid_argument("coordinate_character: index out of range");
    return {g, 1, PolyScalar(), [g, i, is_x](const BarTuple& t) {
                require_trivial_action(t[0], "coordinate_character");
                // flux as a homology class: x-coefficient is minus the
                // y*-coordinate, y-coefficient is the x*-coordinate
                return is_x ? -t[0].fC.c[g + i - 1] : t[0].fC.c[i - 1];
            }};
}

Cochain<PolyScalar> omega0_tilde(int g) {
    check_genus(g);
    return {g, 2, PolyScalar(), [g](const BarTuple& t) {
                require_trivial_action(t[0], "omega0_tilde");
                require_trivial_action(t[1], "omega0_tilde");
                PolyScalar acc;
                for (int i = 0; i < g; ++i) acc += (-t[0].fC.c[g + i]) * t[1].fC.c[i];
                return acc;
            }};
}

Cochain<PolyScalar> xy_primitive(int g) {
    check_genus(g);
    return {g, 1, PolyScalar(), [g](const BarTuple& t) {
                require_trivial_action(t[0], "xy_primitive");
                PolyScalar acc;
                for (int i = 0; i < g; ++i) acc += (-t[0].fC.c[g + i]) * t[0].fC.c[i];
                return acc;
            }};
}

Cochain<PolyScalar> flux_pullback(const ExtElement& xi) {
    int g = xi.genus();
    int k = xi.degree();
    if (k < 1) throw std::invalid_argument("flux_pullback: degree must be >= 1");
    Rational scale(BigInt(1), factorial(k));
    return {g, k, PolyScalar(), [xi, scale](const BarTuple& t) {
                ExtElement w(xi.genus(), 0);
                bool first = true;
                for (const auto& e : t) {
                    require_trivial_action(e, "flux_pullback");
                    ExtElement f = ext_from_hom(pd_inv(e.fC));
                    w = first ? f : wedge(w, f);
                    first = false;
                }
                return pair_ext(xi, w) * PolyScalar(scale);
            }};
}

BarChain build_cstar_cycle(int g, const PolyScalar& r, int i, const CstarChoices& choices) {
    check_genus(g);
    if (i < 1 || i > g - 1) throw std::invalid_argument("build_cstar_cycle: index out of range");
    CohVector kv_nu = scale(PolyScalar(choices.kv_scale), x_star(g, i));
    CohVector zero_kv(g);
    ModelSymp nu = lift_generator(g, Twist::Nu, i, choices.fC_nu, kv_nu, choices.cal_nu);
    ModelSymp mu_a = lift_generator(g, Twist::Mu, i, choices.fC_mu_a, zero_kv, choices.cal_mu_a);
    ModelSymp mu_b =
        lift_generator(g, Twist::Mu, i + 1, choices.fC_mu_b, zero_kv, choices.cal_mu_b);
    ModelSymp ka = flux_element(scale(r, y_star(g, i)));
    ModelSymp kb = flux_element(scale(r, y_star(g, i + 1)));
    ka.cal = choices.cal_phi;
    kb.cal = choices.cal_phi;
    return lift_twisted_cycle({{nu, ka, 1}, {mu_a, ka, -1}, {mu_b, kb, 1}});
}

BarChain build_cstar_cycle(int g, const PolyScalar& r, int i) {
    return build_cstar_cycle(g, r, i, CstarChoices::defaults(g));
}

namespace {

ModelSymp matrix_shadow(const ModelSymp& a) {
    ModelSymp p(a.g);
    p.T = a.T;
    return p;
}

BarChain chain_shadow(const BarChain& c) {
    BarChain out(c.genus(), c.degree());
    for (const auto& [t, coef] : c.terms()) {
        BarTuple u;
        u.reserve(t.size());
        for (const auto& e : t) u.push_back(matrix_shadow(e));
        out.add_term(std::move(u), coef);
    }
    return out;
}

}  // namespace

FluxcReport check_fluxc_decomposition(const BarChain& z, const std::vector<BarChain>& witnesses) {
    if (z.degree() != 2) throw std::invalid_argument("check_fluxc_decomposition: need a 2-chain");
    int g = z.genus();
    if (!boundary(z).is_zero())
        throw std::invalid_argument("check_fluxc_decomposition: input is not a cycle");

    BarChain pz = chain_shadow(z);
    for (const auto& w : witnesses) {
        if (w.degree() != 3 || w.genus() != g)
            throw std::invalid_argument("check_fluxc_decomposition: bad witness shape");
        pz -= boundary(chain_shadow(w));
    }
    // Terms with an identity entry differ from (id,id) by an explicit
    // boundary; move them there and require everything else to have
    // cancelled already.
    ModelSymp id = identity_element(g);
    BarChain reduced(g, 2);
    for (const auto& [t, coef] : pz.terms()) {
        if (t[0] == id || t[1] == id)
            reduced.add_term({id, id}, coef);
        else
            reduced.add_term(t, coef);
    }
    FluxcReport rep;
    rep.p_trivial = reduced.is_zero();
    if (!rep.p_trivial)
        throw std::invalid_argument(
            "check_fluxc_decomposition: matrix-group shadow not recognized as a boundary");

    rep.alpha_value = alpha(g, 1).evaluate(z);
    rep.pair_value = pair_cocycle(kv_cochain(g), fc_cochain(g)).evaluate(z);
    rep.fcfc_value = pair_cocycle(fc_cochain(g), fc_cochain(g)).evaluate(z);
    rep.decomposition_holds = rep.alpha_value == rep.pair_value * PolyScalar(Rational(2));
    rep.fcfc_vanishes = rep.fcfc_value.is_zero();
    return rep;
}

}  // namespace fluxcoh
