#pragma once

#include <string>
#include <vector>

#include "fluxcoh/linalg.hpp"
#include "fluxcoh/poly.hpp"
#include "fluxcoh/symplectic.hpp"

namespace fluxcoh {

// A group element of the compactly-supported symplectomorphism model:
// a symplectic action T on H_1, a flux value fC over PolyScalar, a
// rational crossed-character value kv, and a central Calabi value cal.
struct ModelSymp {
    int g = 2;
    QMat T;
    CohVector fC;
    CohVector kv;
    PolyScalar cal;

    ModelSymp() = default;
    explicit ModelSymp(int genus)
        : g(genus), T(QMat::identity(2 * genus)), fC(genus), kv(genus) {
        check_genus(genus);
    }
    ModelSymp(int genus, QMat t, CohVector fc, CohVector k, PolyScalar c);

    // matrix of the action on H^1 = (T^{-1})^t
    QMat coh_action() const { return act_on_coh(g, T); }

    bool operator==(const ModelSymp& o) const {
        return g == o.g && T == o.T && fC == o.fC && kv == o.kv && cal == o.cal;
    }
    bool operator<(const ModelSymp& o) const;
    std::string str() const;
};

ModelSymp identity_element(int g);
ModelSymp compose(const ModelSymp& a, const ModelSymp& b);
ModelSymp inverse(const ModelSymp& a);
CohVector flux_tilde(const ModelSymp& a);

enum class SubgroupTag { Full, Symp0, Ham, TorelliLike };
bool in_subgroup(const ModelSymp& a, SubgroupTag tag);

// Heisenberg commutator [a,b] for a,b with trivial action and kv=0;
// result is central with cal = 2*iota(fC(a), fC(b)).
ModelSymp commutator(const ModelSymp& a, const ModelSymp& b);

ModelSymp lift_generator(int g, Twist kind, int index, const CohVector& fC, const CohVector& kv,
                         const PolyScalar& cal);

// element with trivial action and given flux, kv = 0, cal = 0
ModelSymp flux_element(const CohVector& fC);

// block-diagonal extension of an element of genus g1 to genus g1+g2+...,
// occupying the block starting at x_{offset+1} (0-based block offset in
// units of handles).
ModelSymp embed_block(const ModelSymp& a, int total_genus, int offset);

}  // namespace fluxcoh
