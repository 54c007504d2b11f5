#pragma once

#include "fluxcoh/cochain.hpp"

namespace fluxcoh {

// twisted 1-cochains reading off the slots of a group element
Cochain<CohVector> fc_cochain(int g);
Cochain<CohVector> kv_cochain(int g);
Cochain<CohVector> flux_tilde_cochain(int g);

// Cal-tilde as a scalar 1-cochain (trivial coefficients)
Cochain<PolyScalar> cal_cochain(int g);

// The level-k 2k-cocycle: antisymmetrized products of pairwise pairings
// of translated flux values, with a 1/(2k)! prefactor; values live in the
// degree-2k symmetric algebra.
Cochain<SymElement> alpha_tilde(int g, int k);

// its scalar projection
Cochain<PolyScalar> alpha(int g, int k);

// x-character (is_x = true) or y-character of the flux of an element
// with trivial action, 1-based index
Cochain<PolyScalar> coordinate_character(int g, int i, bool is_x);

// (a, b) -> sum_i x-char_i(a) * y-char_i(b)
Cochain<PolyScalar> omega0_tilde(int g);

// sum_i x-char_i * y-char_i, the explicit degree-1 primitive of
// alpha - 2*omega0_tilde on the trivial-action submodel
Cochain<PolyScalar> xy_primitive(int g);

// Pullback of an exterior form on H_1 along the flux: the alternating
// multilinear k-cochain (1/k!)<xi, flux(a_1) ^ ... ^ flux(a_k)>.
Cochain<PolyScalar> flux_pullback(const ExtElement& xi);

// lift decorations for the twisted test cycle
struct CstarChoices {
    Rational kv_scale = Rational(1);
    CohVector fC_nu, fC_mu_a, fC_mu_b;
    PolyScalar cal_nu, cal_mu_a, cal_mu_b, cal_phi;

    static CstarChoices defaults(int g) {
        CstarChoices c;
        c.fC_nu = CohVector(g);
        c.fC_mu_a = CohVector(g);
        c.fC_mu_b = CohVector(g);
        return c;
    }
};

// The 2-cycle evaluating the degree-2 cocycle to 2*r (times the kv
// normalization scale); 1 <= i <= g-1.
BarChain build_cstar_cycle(int g, const PolyScalar& r, int i, const CstarChoices& choices);
BarChain build_cstar_cycle(int g, const PolyScalar& r, int i);

struct FluxcReport {
    bool p_trivial = false;
    PolyScalar alpha_value;
    PolyScalar pair_value;  // <pair(kv, fC), z>
    PolyScalar fcfc_value;  // <pair(fC, fC), z>
    bool decomposition_holds = false;  // alpha_value == 2 * pair_value
    bool fcfc_vanishes = false;
};

// Checks the degree-2 decomposition <alpha, z> = 2 <pair(kv, fC), z> and
// <pair(fC, fC), z> = 0 on a 2-cycle whose image in the matrix group is a
// boundary.  Extra witnesses are 3-chains w whose boundaries were added
// to z; their matrix-group shadows are subtracted before the p-triviality
// reduction.
FluxcReport check_fluxc_decomposition(const BarChain& z,
                                      const std::vector<BarChain>& witnesses = {});

}  // namespace fluxcoh
