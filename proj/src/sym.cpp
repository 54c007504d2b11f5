#include "fluxcoh/sym.hpp"

#include <algorithm>

namespace fluxcoh {

SymElement SymElement::hat(const PolyScalar& a) {
    SymElement r(1);
    for (const auto& [m, c] : a.terms()) r.add_term(HatKey{m}, c);
    return r;
}

void SymElement::add_term(HatKey key, const Rational& coef) {
    if (coef.is_zero()) return;
    if (static_cast<int>(key.size()) != degree_)
        throw std::invalid_argument("SymElement: key size does not match degree");
    std::sort(key.begin(), key.end());
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymElement SymElement::operator-() const {
    SymElement r(degree_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

SymElement& SymElement::operator+=(const SymElement& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("SymElement: degree mismatch in sum");
    for (const auto& [k, c] : o.terms_) add_term(k, c);
    return *this;
}

SymElement& SymElement::operator-=(const SymElement& o) {
    if (degree_ != o.degree_) throw std::invalid_argument("SymElement: degree mismatch in sum");
    for (const auto& [k, c] : o.terms_) add_term(k, -c);
    return *this;
}

SymElement SymElement::scaled(const Rational& r) const {
    SymElement out(degree_);
    if (r.is_zero()) return out;
    for (const auto& [k, c] : terms_) out.terms_.emplace(k, c * r);
    return out;
}

PolyScalar SymElement::project() const {
    PolyScalar p;
    for (const auto& [key, c] : terms_) {
        Monomial prod;
        for (const Monomial& m : key) prod = monomial_mul(prod, m);
        p.add_term(prod, c);
    }
    return p;
}

SymElement sym_mul(const SymElement& a, const SymElement& b) {
    SymElement r(a.degree() + b.degree());
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            HatKey key = ka;
            key.insert(key.end(), kb.begin(), kb.end());
            r.add_term(std::move(key), ca * cb);
        }
    return r;
}

std::string SymElement::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [key, c] : terms_) {
        Rational abs = c < Rational(0) ? -c : c;
        if (s.empty()) {
            if (c < Rational(0)) s += "-";
        } else {
            s += c < Rational(0) ? " - " : " + ";
        }
        if (abs != Rational(1)) s += abs.str() + "*";
        for (const Monomial& m : key) s += "hat(" + monomial_str(m) + ")";
    }
    return s;
}

}  // namespace fluxcoh
