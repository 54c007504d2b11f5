#include "fluxcoh/group.hpp"

#include <stdexcept>
#include <tuple>

namespace fluxcoh {

ModelSymp::ModelSymp(int genus, QMat t, CohVector fc, CohVector k, PolyScalar c)
    : g(genus), T(std::move(t)), fC(std::move(fc)), kv(std::move(k)), cal(std::move(c)) {
    check_genus(g);
    if (!is_symplectic(g, T)) throw std::invalid_argument("ModelSymp: action is not symplectic");
    if (fC.g != g || kv.g != g) throw std::invalid_argument("ModelSymp: genus mismatch in fields");
    if (!kv.is_rational()) throw std::invalid_argument("ModelSymp: kv must have rational entries");
}

bool ModelSymp::operator<(const ModelSymp& o) const {
    return std::tie(g, T, fC, kv, cal) < std::tie(o.g, o.T, o.fC, o.kv, o.cal);
}

std::string ModelSymp::str() const {
    std::string s = "{g=" + std::to_string(g) + ", fC=(";
    for (size_t i = 0; i < fC.c.size(); ++i) {
        if (i) s += ",";
        s += fC.c[i].str();
    }
    s += "), kv=(";
    for (size_t i = 0; i < kv.c.size(); ++i) {
        if (i) s += ",";
        s += kv.c[i].str();
    }
    s += "), cal=" + cal.str() + "}";
    return s;
}

ModelSymp identity_element(int g) { return ModelSymp(g); }

ModelSymp compose(const ModelSymp& a, const ModelSymp& b) {
    if (a.g != b.g) throw std::invalid_argument("compose: genus mismatch");
    QMat A = a.coh_action();
    ModelSymp r(a.g);
    r.T = a.T * b.T;
    r.fC = a.fC + apply(A, b.fC);
    r.kv = a.kv + apply(A, b.kv);
    r.cal = a.cal + b.cal + iota(a.fC, apply(A, b.fC));
    return r;
}

ModelSymp inverse(const ModelSymp& a) {
    QMat Ainv = a.coh_action().inverse();
    ModelSymp r(a.g);
    r.T = a.T.inverse();
    r.fC = -apply(Ainv, a.fC);
    r.kv = -apply(Ainv, a.kv);
    r.cal = -a.cal;
    return r;
}

CohVector flux_tilde(const ModelSymp& a) { return a.fC + a.kv; }

bool in_subgroup(const ModelSymp& a, SubgroupTag tag) {
    bool trivial_action = a.T == QMat::identity(2 * a.g);
    switch (tag) {
        case SubgroupTag::Full:
            return true;
        case SubgroupTag::Symp0:
            return trivial_action && a.kv.is_zero();
        case SubgroupTag::Ham:
            return trivial_action && a.fC.is_zero() && a.kv.is_zero();
        case SubgroupTag::TorelliLike:
            return trivial_action;
    }
    return false;
}

ModelSymp commutator(const ModelSymp& a, const ModelSymp& b) {
    if (!in_subgroup(a, SubgroupTag::Symp0) || !in_subgroup(b, SubgroupTag::Symp0))
        throw std::invalid_argument("commutator: arguments must have trivial action and kv=0");
    return compose(compose(a, b), compose(inverse(a), inverse(b)));
}

ModelSymp lift_generator(int g, Twist kind, int index, const CohVector& fC, const CohVector& kv,
                         const PolyScalar& cal) {
    return ModelSymp(g, twist_matrix(g, kind, index), fC, kv, cal);
}

ModelSymp flux_element(const CohVector& fC) {
    ModelSymp r(fC.g);
    r.fC = fC;
    return r;
}

namespace {

CohVector embed_vec(const CohVector& v, int total, int offset) {
    CohVector r(total);
    for (int i = 0; i < v.g; ++i) {
        r.c[offset + i] = v.c[i];
        r.c[total + offset + i] = v.c[v.g + i];
    }
    return r;
}

}  // namespace

ModelSymp embed_block(const ModelSymp& a, int total_genus, int offset) {
    if (offset < 0 || offset + a.g > total_genus)
        throw std::invalid_argument("embed_block: block does not fit");
    ModelSymp r(total_genus);
    // T acts on the (x_{offset+1..offset+g}, y_{offset+1..offset+g}) block
    for (int i = 0; i < 2 * a.g; ++i)
        for (int j = 0; j < 2 * a.g; ++j) {
            int ri = i < a.g ? offset + i : total_genus + offset + (i - a.g);
            int rj = j < a.g ? offset + j : total_genus + offset + (j - a.g);
            if (ri == rj) r.T.at(ri, rj) = a.T.at(i, j);
            else if (!a.T.at(i, j).is_zero()) r.T.at(ri, rj) = a.T.at(i, j);
        }
    r.fC = embed_vec(a.fC, total_genus, offset);
    r.kv = embed_vec(a.kv, total_genus, offset);
    r.cal = a.cal;
    return r;
}

}  // namespace fluxcoh
