#include "fluxcoh/symplectic.hpp"

#include <algorithm>
#include <stdexcept>

namespace fluxcoh {

void check_genus(int g) {
    if (g < 2) throw std::invalid_argument("genus must be >= 2");
}

int pairing_sign(int g, int i, int j) {
    if (j == i + g) return 1;
    if (i == j + g) return -1;
    return 0;
}

namespace {

void check_same_genus(int a, int b) {
    if (a != b) throw std::invalid_argument("genus mismatch");
}

void check_index(int g, int i, int max) {
    if (i < 1 || i > max)
        throw std::invalid_argument("basis index " + std::to_string(i) + " out of range for genus " +
                                    std::to_string(g));
}

}  // namespace

bool CohVector::is_zero() const {
    for (const auto& x : c)
        if (!x.is_zero()) return false;
    return true;
}

bool CohVector::is_rational() const {
    for (const auto& x : c)
        if (!x.is_rational()) return false;
    return true;
}

HomVector x_hom(int g, int i) {
    check_index(g, i, g);
    HomVector v(g);
    v.c[i - 1] = PolyScalar(1);
    return v;
}

HomVector y_hom(int g, int i) {
    check_index(g, i, g);
    HomVector v(g);
    v.c[g + i - 1] = PolyScalar(1);
    return v;
}

CohVector x_star(int g, int i) {
    check_index(g, i, g);
    CohVector v(g);
    v.c[i - 1] = PolyScalar(1);
    return v;
}

CohVector y_star(int g, int i) {
    check_index(g, i, g);
    CohVector v(g);
    v.c[g + i - 1] = PolyScalar(1);
    return v;
}

CohVector operator+(const CohVector& a, const CohVector& b) {
    check_same_genus(a.g, b.g);
    CohVector r(a.g);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

CohVector operator-(const CohVector& a, const CohVector& b) {
    check_same_genus(a.g, b.g);
    CohVector r(a.g);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] - b.c[i];
    return r;
}

CohVector operator-(const CohVector& a) {
    CohVector r(a.g);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = -a.c[i];
    return r;
}

CohVector scale(const PolyScalar& s, const CohVector& v) {
    CohVector r(v.g);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = s * v.c[i];
    return r;
}

HomVector operator+(const HomVector& a, const HomVector& b) {
    check_same_genus(a.g, b.g);
    HomVector r(a.g);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = a.c[i] + b.c[i];
    return r;
}

HomVector scale(const PolyScalar& s, const HomVector& v) {
    HomVector r(v.g);
    for (size_t i = 0; i < r.c.size(); ++i) r.c[i] = s * v.c[i];
    return r;
}

PolyScalar intersect(const HomVector& a, const HomVector& b) {
    check_same_genus(a.g, b.g);
    PolyScalar r;
    for (int i = 0; i < a.g; ++i) {
        r += a.c[i] * b.c[i + a.g];
        r -= a.c[i + a.g] * b.c[i];
    }
    return r;
}

PolyScalar iota(const CohVector& u, const CohVector& v) {
    check_same_genus(u.g, v.g);
    PolyScalar r;
    for (int i = 0; i < u.g; ++i) {
        r += u.c[i] * v.c[i + u.g];
        r -= u.c[i + u.g] * v.c[i];
    }
    return r;
}

CohVector pd(const HomVector& a) {
    CohVector u(a.g);
    for (int i = 0; i < a.g; ++i) {
        u.c[a.g + i] = -a.c[i];  // x_i -> -y*_i
        u.c[i] = a.c[a.g + i];   // y_i -> x*_i
    }
    return u;
}

HomVector pd_inv(const CohVector& u) {
    HomVector a(u.g);
    for (int i = 0; i < u.g; ++i) {
        a.c[i] = -u.c[u.g + i];
        a.c[u.g + i] = u.c[i];
    }
    return a;
}

SymElement iota_disc(const CohVector& u, const CohVector& v) {
    check_same_genus(u.g, v.g);
    SymElement r(2);
    for (int i = 0; i < 2 * u.g; ++i)
        for (int j = 0; j < 2 * u.g; ++j) {
            int s = pairing_sign(u.g, i, j);
            if (s == 0) continue;
            SymElement prod = sym_mul(SymElement::hat(u.c[i]), SymElement::hat(v.c[j]));
            r += (s > 0) ? prod : -prod;
        }
    return r;
}

void DiscWedge::add_term(Factor a, Factor b, const Rational& coef) {
    if (coef.is_zero() || a == b) return;
    Rational c = coef;
    if (b < a) {
        std::swap(a, b);
        c = -c;
    }
    Key key{std::move(a), std::move(b)};
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiscWedge& DiscWedge::operator+=(const DiscWedge& o) {
    check_same_genus(g_, o.g_);
    for (const auto& [k, c] : o.terms_) add_term(k.first, k.second, c);
    return *this;
}

DiscWedge DiscWedge::scaled(const Rational& r) const {
    DiscWedge out(g_);
    if (r.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * r);
    return out;
}

DiscWedge disc_wedge(const CohVector& u, const CohVector& v) {
    check_same_genus(u.g, v.g);
    DiscWedge w(u.g);
    for (int i = 0; i < 2 * u.g; ++i)
        for (const auto& [mi, qi] : u.c[i].terms())
            for (int j = 0; j < 2 * v.g; ++j)
                for (const auto& [mj, qj] : v.c[j].terms())
                    w.add_term({mi, i}, {mj, j}, qi * qj);
    return w;
}

DiscWedge act(const QMat& A, const DiscWedge& w) {
    int n = 2 * w.genus();
    if (A.rows() != n || A.cols() != n) throw std::invalid_argument("act: matrix size mismatch");
    DiscWedge out(w.genus());
    for (const auto& [key, c] : w.terms()) {
        const auto& [fa, fb] = key;
        for (int k = 0; k < n; ++k) {
            if (A.at(k, fa.second).is_zero()) continue;
            for (int l = 0; l < n; ++l) {
                if (A.at(l, fb.second).is_zero()) continue;
                out.add_term({fa.first, k}, {fb.first, l},
                             c * A.at(k, fa.second) * A.at(l, fb.second));
            }
        }
    }
    return out;
}

SymElement la2_coinvariant(const DiscWedge& w) {
    SymElement r(2);
    for (const auto& [key, c] : w.terms()) {
        const auto& [fa, fb] = key;
        int s = pairing_sign(w.genus(), fa.second, fb.second);
        if (s == 0) continue;
        HatKey hk{fa.first, fb.first};
        r.add_term(std::move(hk), s > 0 ? c : -c);
    }
    return r;
}

QMat intersection_form(int g) {
    QMat j(2 * g, 2 * g);
    for (int i = 0; i < g; ++i) {
        j.at(i, g + i) = Rational(1);
        j.at(g + i, i) = Rational(-1);
    }
    return j;
}

bool is_symplectic(int g, const QMat& t) {
    if (t.rows() != 2 * g || t.cols() != 2 * g) return false;
    QMat j = intersection_form(g);
    return t.transpose() * j * t == j;
}

QMat transvection(int g, const std::vector<Rational>& curve) {
    if (static_cast<int>(curve.size()) != 2 * g)
        throw std::invalid_argument("transvection: curve class has wrong length");
    // t_c(e_j) = e_j - <e_j, c> c
    QMat t = QMat::identity(2 * g);
    for (int j = 0; j < 2 * g; ++j) {
        Rational pair(0);
        for (int i = 0; i < 2 * g; ++i) {
            int s = pairing_sign(g, j, i);
            if (s != 0) pair += (s > 0 ? curve[i] : -curve[i]);
        }
        if (pair.is_zero()) continue;
        for (int i = 0; i < 2 * g; ++i) t.at(i, j) -= pair * curve[i];
    }
    return t;
}

QMat twist_matrix(int g, Twist kind, int i) {
    check_genus(g);
    std::vector<Rational> c(2 * g);
    switch (kind) {
        case Twist::Lambda:
            check_index(g, i, g);
            c[i - 1] = Rational(1);  // x_i
            break;
        case Twist::Mu:
            check_index(g, i, g);
            c[g + i - 1] = Rational(1);  // y_i
            break;
        case Twist::Nu:
            check_index(g, i, g - 1);
            c[g + i - 1] = Rational(1);  // y_i - y_{i+1}
            c[g + i] = Rational(-1);
            break;
    }
    return transvection(g, c);
}

QMat act_on_coh(int g, const QMat& t) {
    if (!is_symplectic(g, t)) throw std::invalid_argument("act_on_coh: matrix is not symplectic");
    // T^{-1} = J^{-1} T^t J; the action on the dual basis is (T^{-1})^t.
    QMat j = intersection_form(g);
    QMat jinv = j.transpose();  // J^{-1} = -J = J^t
    return (jinv * t.transpose() * j).transpose();
}

CohVector apply(const QMat& a, const CohVector& v) {
    if (a.cols() != static_cast<int>(v.c.size()))
        throw std::invalid_argument("apply: size mismatch");
    CohVector r(v.g);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            PolyScalar scaled = v.c[k];
            scaled *= PolyScalar(a.at(i, k));
            r.c[i] += scaled;
        }
    return r;
}

HomVector apply(const QMat& a, const HomVector& v) {
    if (a.cols() != static_cast<int>(v.c.size()))
        throw std::invalid_argument("apply: size mismatch");
    HomVector r(v.g);
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            if (a.at(i, k).is_zero()) continue;
            PolyScalar scaled = v.c[k];
            scaled *= PolyScalar(a.at(i, k));
            r.c[i] += scaled;
        }
    return r;
}

void ExtElement::add_term(std::vector<int> key, const PolyScalar& coef) {
    if (coef.is_zero()) return;
    if (static_cast<int>(key.size()) != degree_)
        throw std::invalid_argument("ExtElement: key size does not match degree");
    // insertion sort tracking the sign; duplicates kill the term
    int sign = 1;
    for (size_t i = 1; i < key.size(); ++i)
        for (size_t j = i; j > 0 && key[j] < key[j - 1]; --j) {
            std::swap(key[j], key[j - 1]);
            sign = -sign;
        }
    for (size_t i = 0; i + 1 < key.size(); ++i)
        if (key[i] == key[i + 1]) return;
    for (int idx : key)
        if (idx < 0 || idx >= 2 * g_) throw std::invalid_argument("ExtElement: index out of range");
    PolyScalar c = sign > 0 ? coef : -coef;
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), std::move(c));
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

ExtElement& ExtElement::operator+=(const ExtElement& o) {
    check_same_genus(g_, o.g_);
    if (degree_ != o.degree_) throw std::invalid_argument("ExtElement: degree mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

ExtElement& ExtElement::operator-=(const ExtElement& o) {
    check_same_genus(g_, o.g_);
    if (degree_ != o.degree_) throw std::invalid_argument("ExtElement: degree mismatch");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

ExtElement ExtElement::scaled(const PolyScalar& s) const {
    ExtElement out(g_, degree_);
    if (s.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.add_term(k, c * s);
    return out;
}

std::string ExtElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        if (!s.empty()) s += " + ";
        s += "(" + c.str() + ")*e";
        for (int idx : key) s += "_" + std::to_string(idx + 1);
        if (key.empty()) s += "_[]";
    }
    return s;
}

ExtElement ext_from_hom(const HomVector& v) {
    ExtElement e(v.g, 1);
    for (int i = 0; i < 2 * v.g; ++i) e.add_term({i}, v.c[i]);
    return e;
}

ExtElement ext_from_coh(const CohVector& v) {
    ExtElement e(v.g, 1);
    for (int i = 0; i < 2 * v.g; ++i) e.add_term({i}, v.c[i]);
    return e;
}

ExtElement wedge(const ExtElement& a, const ExtElement& b) {
    check_same_genus(a.genus(), b.genus());
    ExtElement r(a.genus(), a.degree() + b.degree());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            std::vector<int> key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            r.add_term(std::move(key), ca * cb);
        }
    return r;
}

ExtElement omega0(int g) {
    ExtElement w(g, 2);
    for (int i = 0; i < g; ++i) w.add_term({i, g + i}, PolyScalar(1));
    return w;
}

ExtElement contract(const ExtElement& w) {
    if (w.degree() < 2) throw std::invalid_argument("contract: degree must be >= 2");
    ExtElement r(w.genus(), w.degree() - 2);
    int g = w.genus();
    for (const auto& [key, c] : w.terms()) {
        int k = static_cast<int>(key.size());
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) {
                int s = pairing_sign(g, key[i], key[j]);
                if (s == 0) continue;
                // Laplace sign (-1)^{i+j-1} for 1-based positions, times
                // the normalization factor 2.
                int sign = ((i + 1) + (j + 1) - 1) % 2 == 0 ? 1 : -1;
                std::vector<int> rest;
                rest.reserve(k - 2);
                for (int t = 0; t < k; ++t)
                    if (t != i && t != j) rest.push_back(key[t]);
                PolyScalar coef = c;
                coef *= PolyScalar(Rational(2 * sign * s));
                r.add_term(std::move(rest), coef);
            }
    }
    return r;
}

PolyScalar pair_ext(const ExtElement& xi, const ExtElement& eta) {
    check_same_genus(xi.genus(), eta.genus());
    if (xi.degree() != eta.degree()) throw std::invalid_argument("pair_ext: degree mismatch");
    PolyScalar r;
    for (const auto& [k, c] : xi.terms()) {
        auto it = eta.terms().find(k);
        if (it != eta.terms().end()) r += c * it->second;
    }
    return r;
}

namespace {

std::vector<std::vector<int>> subsets(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int start) -> void {
        if (static_cast<int>(cur.size()) == k) {
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

std::vector<Rational> ext_coords(const ExtElement& e, const std::map<std::vector<int>, int>& index) {
    std::vector<Rational> v(index.size());
    for (const auto& [k, c] : e.terms()) v[index.at(k)] = c.rational_value();
    return v;
}

}  // namespace

std::vector<ExtElement> rep_1k_basis(int g, int k) {
    check_genus(g);
    if (k < 1 || k > g) throw std::invalid_argument("rep_1k_basis: need 1 <= k <= g");
    auto keys = subsets(2 * g, k);
    std::vector<ExtElement> basis;
    if (k == 1) {
        for (const auto& key : keys) {
            ExtElement e(g, 1);
            e.add_term(key, PolyScalar(1));
            basis.push_back(std::move(e));
        }
        return basis;
    }
    auto low_keys = subsets(2 * g, k - 2);
    std::map<std::vector<int>, int> low_index;
    for (size_t i = 0; i < low_keys.size(); ++i) low_index[low_keys[i]] = static_cast<int>(i);

    QMat m(static_cast<int>(low_keys.size()), static_cast<int>(keys.size()));
    for (size_t col = 0; col < keys.size(); ++col) {
        ExtElement e(g, k);
        e.add_term(keys[col], PolyScalar(1));
        ExtElement ce = contract(e);
        for (const auto& [key, c] : ce.terms()) m.at(low_index.at(key), static_cast<int>(col)) = c.rational_value();
    }
    for (const auto& v : nullspace(m)) {
        ExtElement e(g, k);
        for (size_t col = 0; col < keys.size(); ++col)
            if (!v[col].is_zero()) e.add_term(keys[col], PolyScalar(v[col]));
        basis.push_back(std::move(e));
    }
    return basis;
}

long rep_1k_dim(int g, int k) {
    auto binom = [](int n, int r) -> long {
        if (r < 0 || r > n) return 0;
        long b = 1;
        for (int i = 0; i < r; ++i) b = b * (n - i) / (i + 1);
        return b;
    };
    return binom(2 * g, k) - binom(2 * g, k - 2);
}

std::vector<long> ideal_quotient_dims(int g, int up_to) {
    check_genus(g);
    if (up_to < 0 || up_to > 2 * g) throw std::invalid_argument("ideal_quotient_dims: range");
    std::vector<long> dims;
    ExtElement w0 = omega0(g);
    for (int d = 0; d <= up_to; ++d) {
        auto keys = subsets(2 * g, d);
        if (d < 3) {
            dims.push_back(static_cast<long>(keys.size()));
            continue;
        }
        std::map<std::vector<int>, int> index;
        for (size_t i = 0; i < keys.size(); ++i) index[keys[i]] = static_cast<int>(i);
        std::vector<std::vector<Rational>> gens;
        for (int i = 0; i < 2 * g; ++i) {
            ExtElement ei(g, 1);
            ei.add_term({i}, PolyScalar(1));
            ExtElement base = wedge(w0, ei);
            for (const auto& rest : subsets(2 * g, d - 3)) {
                ExtElement m(g, d - 3);
                m.add_term(rest, PolyScalar(1));
                ExtElement genv = wedge(base, m);
                if (genv.is_zero()) continue;
                gens.push_back(ext_coords(genv, index));
            }
        }
        long rk = gens.empty() ? 0 : rank(std::move(gens));
        dims.push_back(static_cast<long>(keys.size()) - rk);
    }
    return dims;
}

}  // namespace fluxcoh
