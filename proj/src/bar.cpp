#include "fluxcoh/bar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace fluxcoh {

void BarChain::add_term(BarTuple t, const Rational& coef) {
    if (coef.is_zero()) return;
    if (static_cast<int>(t.size()) != degree_)
        throw std::invalid_argument("BarChain: tuple size does not match degree");
    for (const auto& e : t)
        if (e.g != g_) throw std::invalid_argument("BarChain: genus mismatch in tuple");
    auto it = terms_.find(t);
    if (it == terms_.end()) {
        terms_.emplace(std::move(t), coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BarChain& BarChain::operator+=(const BarChain& o) {
    if (g_ != o.g_ || degree_ != o.degree_)
        throw std::invalid_argument("BarChain: shape mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, c);
    return *this;
}

BarChain& BarChain::operator-=(const BarChain& o) {
    if (g_ != o.g_ || degree_ != o.degree_)
        throw std::invalid_argument("BarChain: shape mismatch");
    for (const auto& [t, c] : o.terms_) add_term(t, -c);
    return *this;
}

BarChain BarChain::scaled(const Rational& r) const {
    BarChain out(g_, degree_);
    if (r.is_zero()) return out;
    for (const auto& [t, c] : terms_) out.terms_.emplace(t, c * r);
    return out;
}

std::string BarChain::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [t, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += c.str() + "*(";
        for (size_t i = 0; i < t.size(); ++i) {
            if (i) s += ", ";
            s += t[i].str();
        }
        s += ")";
    }
    return s;
}

BarChain operator+(BarChain a, const BarChain& b) {
    a += b;
    return a;
}

BarChain operator-(BarChain a, const BarChain& b) {
    a -= b;
    return a;
}

BarChain single_chain(const BarTuple& t, const Rational& coef) {
    if (t.empty()) throw std::invalid_argument("single_chain: empty tuple needs explicit genus");
    BarChain c(t.front().g, static_cast<int>(t.size()));
    c.add_term(t, coef);
    return c;
}

BarChain boundary(const BarChain& c) {
    if (c.degree() < 1) throw std::invalid_argument("boundary: degree must be >= 1");
    BarChain out(c.genus(), c.degree() - 1);
    for (const auto& [t, coef] : c.terms()) {
        int n = static_cast<int>(t.size());
        out.add_term(BarTuple(t.begin() + 1, t.end()), coef);
        for (int i = 1; i < n; ++i) {
            BarTuple u;
            u.reserve(n - 1);
            u.insert(u.end(), t.begin(), t.begin() + (i - 1));
            u.push_back(compose(t[i - 1], t[i]));
            u.insert(u.end(), t.begin() + (i + 1), t.end());
            out.add_term(std::move(u), i % 2 == 0 ? coef : -coef);
        }
        out.add_term(BarTuple(t.begin(), t.end() - 1), n % 2 == 0 ? coef : -coef);
    }
    return out;
}

BarChain shuffle_cycle(const std::vector<ModelSymp>& gs) {
    if (gs.empty()) throw std::invalid_argument("shuffle_cycle: empty tuple");
    int g = gs.front().g;
    for (size_t i = 0; i < gs.size(); ++i)
        for (size_t j = i + 1; j < gs.size(); ++j)
            if (!(compose(gs[i], gs[j]) == compose(gs[j], gs[i])))
                throw std::invalid_argument("shuffle_cycle: elements do not commute");
    BarChain out(g, static_cast<int>(gs.size()));
    std::vector<int> perm(gs.size());
    std::iota(perm.begin(), perm.end(), 0);
    do {
        int inv = 0;
        for (size_t i = 0; i < perm.size(); ++i)
            for (size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inv;
        BarTuple t;
        t.reserve(gs.size());
        for (int idx : perm) t.push_back(gs[idx]);
        out.add_term(std::move(t), Rational(inv % 2 == 0 ? 1 : -1));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

BarChain embed_chain(const BarChain& c, int total_genus, int offset) {
    BarChain out(total_genus, c.degree());
    for (const auto& [t, coef] : c.terms()) {
        BarTuple u;
        u.reserve(t.size());
        for (const auto& e : t) u.push_back(embed_block(e, total_genus, offset));
        out.add_term(std::move(u), coef);
    }
    return out;
}

namespace {

// (p,q)-shuffles with sign, applied to a concatenated tuple.
void shuffle_terms(BarChain& out, const BarTuple& a, const BarTuple& b, const Rational& coef) {
    int p = static_cast<int>(a.size());
    int q = static_cast<int>(b.size());
    // enumerate all interleavings: choose positions of the b-entries
    std::vector<int> comb(q);
    std::iota(comb.begin(), comb.end(), 0);
    auto emit = [&](const std::vector<int>& pos_b) {
        BarTuple t(p + q, ModelSymp(out.genus()));
        std::vector<bool> used(p + q, false);
        for (int j = 0; j < q; ++j) {
            t[pos_b[j]] = b[j];
            used[pos_b[j]] = true;
        }
        int ai = 0;
        for (int i = 0; i < p + q; ++i)
            if (!used[i]) t[i] = a[ai++];
        // sign: number of transpositions moving b-entries left past a-entries
        long inversions = 0;
        for (int j = 0; j < q; ++j) inversions += (p + j) - pos_b[j];
        out.add_term(std::move(t), inversions % 2 == 0 ? coef : -coef);
    };
    if (q == 0) {
        out.add_term(a, coef);
        return;
    }
    if (p == 0) {
        out.add_term(b, coef);
        return;
    }
    while (true) {
        emit(comb);
        int i = q - 1;
        while (i >= 0 && comb[i] == p + i) --i;
        if (i < 0) break;
        ++comb[i];
        for (int j = i + 1; j < q; ++j) comb[j] = comb[j - 1] + 1;
    }
}

}  // namespace

BarChain cross_product(const BarChain& c1, const BarChain& c2) {
    int total = c1.genus() + c2.genus();
    BarChain e1 = embed_chain(c1, total, 0);
    BarChain e2 = embed_chain(c2, total, c1.genus());
    BarChain out(total, c1.degree() + c2.degree());
    for (const auto& [ta, ca] : e1.terms())
        for (const auto& [tb, cb] : e2.terms()) shuffle_terms(out, ta, tb, ca * cb);
    return out;
}

BarChain express_as_boundary(const BarChain& z) {
    if (z.degree() != 1) throw std::invalid_argument("express_as_boundary: degree must be 1");
    int g = z.genus();
    ModelSymp id = identity_element(g);

    CohVector total(g);
    for (const auto& [t, c] : z.terms()) {
        if (!in_subgroup(t[0], SubgroupTag::Symp0))
            throw std::invalid_argument(
                "express_as_boundary: chain must lie in the trivial-action, kv=0 submodel");
        total = total + scale(PolyScalar(c), t[0].fC);
    }
    if (!total.is_zero())
        throw std::invalid_argument("express_as_boundary: nonzero total flux, not a boundary");

    // clear denominators so terms can be treated as multisets
    BigInt N = 1;
    for (const auto& [t, c] : z.terms()) N = boost::multiprecision::lcm(N, c.den());
    Rational Nr(N);

    BarChain d(g, 2);  // accumulates, in the scaled-up chain, pairs with z_N = positives + boundary(d)
    std::vector<ModelSymp> positives;
    for (const auto& [t, c] : z.terms()) {
        Rational m = c * Nr;
        BigInt count = m.num();  // m.den() == 1
        bool neg = count < 0;
        if (neg) count = -count;
        for (BigInt i = 0; i < count; ++i) {
            if (!neg) {
                positives.push_back(t[0]);
            } else {
                // -(h) = (h^{-1}) - boundary((id,id)) - boundary((h,h^{-1}))
                ModelSymp hinv = inverse(t[0]);
                positives.push_back(hinv);
                d.add_term({id, id}, Rational(-1));
                d.add_term({t[0], hinv}, Rational(-1));
            }
        }
    }

    ModelSymp h = id;
    if (!positives.empty()) {
        h = positives[0];
        for (size_t i = 1; i + 0 < positives.size(); ++i) {
            // (h) + (g) = (hg) + boundary((h,g))
            d.add_term({h, positives[i]}, Rational(1));
            h = compose(h, positives[i]);
        }
    }
    // h is now central: trivial action, zero flux, possibly nonzero cal
    if (!h.fC.is_zero() || !h.kv.is_zero())
        throw std::logic_error("express_as_boundary: residue is not central");
    if (h.cal.is_zero()) {
        if (!positives.empty()) d.add_term({id, id}, Rational(1));  // (id) = boundary((id,id))
    } else {
        // realize h as a commutator [a,b] with 2*iota(fC(a), fC(b)) = cal(h)
        PolyScalar half = h.cal * PolyScalar(Rational(1, 2));
        ModelSymp a = flux_element(scale(half, x_star(g, 1)));
        ModelSymp b = flux_element(y_star(g, 1));
        // (h) = boundary((h, ba) + (b, a) - (a, b)) when h = [a, b]
        ModelSymp ba = compose(b, a);
        d.add_term({h, ba}, Rational(1));
        d.add_term({b, a}, Rational(1));
        d.add_term({a, b}, Rational(-1));
    }

    BarChain out = d.scaled(Rational(1) / Nr);
    if (!(boundary(out) == z)) throw std::logic_error("express_as_boundary: verification failed");
    return out;
}

BarChain lift_twisted_cycle(const std::vector<TwistedCycleTerm>& data) {
    if (data.empty()) throw std::invalid_argument("lift_twisted_cycle: empty data");
    int g = data.front().lift.g;
    ModelSymp id = identity_element(g);
    BarChain out(g, 2);
    BarChain defect(g, 1);
    for (const auto& term : data) {
        if (term.sign != 1 && term.sign != -1)
            throw std::invalid_argument("lift_twisted_cycle: sign must be +1 or -1");
        if (!in_subgroup(term.kernel, SubgroupTag::Symp0))
            throw std::invalid_argument("lift_twisted_cycle: kernel element not in submodel");
        ModelSymp q = term.lift;
        ModelSymp k = term.sign == 1 ? term.kernel : inverse(term.kernel);
        ModelSymp qinv = inverse(q);
        ModelSymp qk = compose(q, k);
        out.add_term({q, k}, Rational(1));
        out.add_term({qk, qinv}, Rational(1));
        out.add_term({q, qinv}, Rational(-1));
        out.add_term({id, id}, Rational(-1));
        defect.add_term({compose(qk, qinv)}, Rational(1));
        defect.add_term({k}, Rational(-1));
    }
    out += express_as_boundary(defect);
    if (!boundary(out).is_zero()) throw std::logic_error("lift_twisted_cycle: not a cycle");
    return out;
}

}  // namespace fluxcoh
