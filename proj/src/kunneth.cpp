#include "fluxcoh/kunneth.hpp"

#include <algorithm>
#include <stdexcept>

#include "fluxcoh/linalg.hpp"

namespace fluxcoh {

int fiber_mu(int g) { return 2 * g; }

namespace {

// merge two sorted squarefree monomials; returns 0 sign on a repeat
int merge_base(const std::vector<int>& a, const std::vector<int>& b, std::vector<int>& out) {
    out = a;
    int sign = 1;
    for (int gen : b) {
        // count entries of out greater than gen (transpositions needed)
        auto it = std::lower_bound(out.begin(), out.end(), gen);
        if (it != out.end() && *it == gen) return 0;
        int moved = static_cast<int>(out.end() - it);
        if (moved % 2 == 1) sign = -sign;
        out.insert(it, gen);
    }
    return sign;
}

std::vector<std::vector<int>> squarefree_monomials(int n, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == d) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < n; ++i) {
            cur.push_back(i);
            self(self, i + 1);
            cur.pop_back();
        }
    };
    rec(rec, 0);
    return out;
}

// Echelonized spanning set of the degree-d piece of the ideal generated
// by (base symplectic form) * (each degree-1 generator).
std::vector<std::vector<Rational>> ideal_echelon(int g, int d,
                                                 const std::map<std::vector<int>, int>& index) {
    std::vector<std::vector<Rational>> rows;
    if (d < 3) return rows;
    for (int i = 0; i < 2 * g; ++i) {
        // omega * gen_i = sum_j x_j y_j gen_i as a degree-3 monomial sum
        std::vector<std::pair<std::vector<int>, int>> gen3;
        for (int j = 0; j < g; ++j) {
            std::vector<int> m;
            int s = merge_base({j, g + j}, {i}, m);
            if (s != 0) gen3.push_back({std::move(m), s});
        }
        for (const auto& rest : squarefree_monomials(2 * g, d - 3)) {
            std::vector<Rational> row(index.size());
            bool nonzero = false;
            for (const auto& [m3, s3] : gen3) {
                std::vector<int> full;
                int s = merge_base(m3, rest, full);
                if (s == 0) continue;
                row[index.at(full)] += Rational(s * s3);
                nonzero = true;
            }
            if (nonzero) rows.push_back(std::move(row));
        }
    }
    row_reduce(rows);
    while (!rows.empty()) {
        bool zero = true;
        for (const auto& x : rows.back())
            if (!x.is_zero()) {
                zero = false;
                break;
            }
        if (!zero) break;
        rows.pop_back();
    }
    return rows;
}

}  // namespace

void KunnethClass::add_term(int fiber, std::vector<int> base, const Rational& coef) {
    if (coef.is_zero()) return;
    if (fiber < -1 || fiber > 2 * g_) throw std::invalid_argument("KunnethClass: bad fiber code");
    if (!std::is_sorted(base.begin(), base.end()) ||
        std::adjacent_find(base.begin(), base.end()) != base.end())
        throw std::invalid_argument("KunnethClass: base monomial must be sorted and squarefree");
    for (int b : base)
        if (b < 0 || b >= 2 * g_) throw std::invalid_argument("KunnethClass: base index range");
    Key key{fiber, std::move(base)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

KunnethClass& KunnethClass::operator+=(const KunnethClass& o) {
    if (g_ != o.g_ || mode_ != o.mode_) throw std::invalid_argument("KunnethClass: shape mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

KunnethClass& KunnethClass::operator-=(const KunnethClass& o) {
    if (g_ != o.g_ || mode_ != o.mode_) throw std::invalid_argument("KunnethClass: shape mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, -c);
    return *this;
}

KunnethClass KunnethClass::scaled(const Rational& r) const {
    KunnethClass out(g_, mode_);
    if (r.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * r);
    return out;
}

std::string KunnethClass::str() const {
    if (terms_.empty()) return "0";
    auto base_name = [this](int i) {
        return (i < g_ ? "xt" : "yt") + std::to_string(i < g_ ? i + 1 : i - g_ + 1);
    };
    std::string s;
    for (const auto& [k, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*";
        if (k.first < 0) s += "1";
        else if (k.first == 2 * g_) s += "mu";
        else if (k.first < g_) s += "xs" + std::to_string(k.first + 1);
        else s += "ys" + std::to_string(k.first - g_ + 1);
        for (int b : k.second) s += "*" + base_name(b);
    }
    return s;
}

void KunnethClass::reduce() {
    // group terms by (fiber, base degree) and reduce modulo the ideal
    std::map<std::pair<int, int>, std::vector<std::pair<std::vector<int>, Rational>>> groups;
    for (const auto& [k, c] : terms_)
        groups[{k.first, static_cast<int>(k.second.size())}].push_back({k.second, c});
    terms_.clear();
    for (auto& [fd, entries] : groups) {
        int d = fd.second;
        if (d < 3) {
            for (auto& [m, c] : entries) add_term(fd.first, std::move(m), c);
            continue;
        }
        auto monos = squarefree_monomials(2 * g_, d);
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < monos.size(); ++i) index[monos[i]] = static_cast<int>(i);
        auto ech = ideal_echelon(g_, d, index);
        std::vector<Rational> vec(monos.size());
        for (const auto& [m, c] : entries) vec[index.at(m)] += c;
        for (const auto& row : ech) {
            size_t piv = 0;
            while (piv < row.size() && row[piv].is_zero()) ++piv;
            if (piv == row.size() || vec[piv].is_zero()) continue;
            Rational factor = vec[piv] / row[piv];
            for (size_t i = piv; i < row.size(); ++i) vec[i] -= factor * row[i];
        }
        for (size_t i = 0; i < monos.size(); ++i)
            if (!vec[i].is_zero()) add_term(fd.first, monos[i], vec[i]);
    }
}

KunnethClass operator+(KunnethClass a, const KunnethClass& b) {
    a += b;
    return a;
}

KunnethClass operator-(KunnethClass a, const KunnethClass& b) {
    a -= b;
    return a;
}

KunnethClass multiply(const KunnethClass& a, const KunnethClass& b) {
    if (a.genus() != b.genus() || a.mode() != b.mode())
        throw std::invalid_argument("multiply: shape mismatch");
    int g = a.genus();
    int mu = fiber_mu(g);
    KunnethClass out(g, a.mode());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            int fa = ka.first, fb = kb.first;
            // fiber product with the surface relations
            int fiber;
            int fsign = 1;
            if (fa < 0) fiber = fb;
            else if (fb < 0) fiber = fa;
            else if (fa == mu || fb == mu) continue;      // degree >= 3
            else if (fb == fa + g && fa < g) fiber = mu;  // x* y* = mu
            else if (fa == fb + g && fb < g) {            // y* x* = -mu
                fiber = mu;
                fsign = -1;
            } else
                continue;
            // Koszul sign: fiber part of b moves past the base part of a
            int kos = (out.fiber_degree(fb) * static_cast<int>(ka.second.size())) % 2 == 0 ? 1 : -1;
            std::vector<int> base;
            int bsign = merge_base(ka.second, kb.second, base);
            if (bsign == 0) continue;
            out.add_term(fiber, std::move(base), ca * cb * Rational(fsign * kos * bsign));
        }
    if (out.mode() == RelationsMode::Reduced) out.reduce();
    return out;
}

KunnethClass zero_class(int g, RelationsMode mode) { return KunnethClass(g, mode); }

KunnethClass mu_class(int g, RelationsMode mode) {
    KunnethClass c(g, mode);
    c.add_term(fiber_mu(g), {}, Rational(1));
    return c;
}

KunnethClass flux_class(int g, RelationsMode mode) {
    KunnethClass c(g, mode);
    for (int i = 0; i < 2 * g; ++i) c.add_term(i, {i}, Rational(1));
    return c;
}

KunnethClass omega0t_class(int g, RelationsMode mode) {
    KunnethClass c(g, mode);
    for (int i = 0; i < g; ++i) c.add_term(fiber_one(), {i, g + i}, Rational(1));
    return c;
}

KunnethClass e_class(int g, RelationsMode mode) {
    return mu_class(g, mode).scaled(Rational(2 - 2 * g));
}

KunnethClass gamma_class(int g, RelationsMode mode) {
    return omega0t_class(g, mode).scaled(Rational(BigInt(1), BigInt(2 * g - 2)));
}

KunnethClass v_class(int g, RelationsMode mode) {
    return mu_class(g, mode).scaled(Rational(2 * g - 2)) + flux_class(g, mode) +
           gamma_class(g, mode);
}

KunnethClass fiber_component(const KunnethClass& a, int fiber_deg) {
    KunnethClass out(a.genus(), a.mode());
    for (const auto& [k, c] : a.terms())
        if (a.fiber_degree(k.first) == fiber_deg) out.add_term(k.first, k.second, c);
    return out;
}

KunnethClass pi_star(const KunnethClass& a) {
    KunnethClass out(a.genus(), a.mode());
    int mu = fiber_mu(a.genus());
    for (const auto& [k, c] : a.terms())
        if (k.first == mu) out.add_term(fiber_one(), k.second, c);
    return out;
}

KunnethClass fiber_restriction(const KunnethClass& a) {
    KunnethClass out(a.genus(), a.mode());
    for (const auto& [k, c] : a.terms())
        if (k.second.empty()) out.add_term(k.first, k.second, c);
    return out;
}

}  // namespace fluxcoh
