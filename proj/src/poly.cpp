#include "fluxcoh/poly.hpp"

#include <cctype>
#include <sstream>
#include <stdexcept>

namespace fluxcoh {

Monomial monomial_mul(const Monomial& a, const Monomial& b) {
    Monomial r = a;
    for (const auto& [sym, exp] : b) {
        int& e = r[sym];
        e += exp;
        if (e == 0) r.erase(sym);
    }
    return r;
}

std::string monomial_str(const Monomial& m) {
    if (m.empty()) return "1";
    std::string s;
    for (const auto& [sym, exp] : m) {
        if (!s.empty()) s += "*";
        s += sym;
        if (exp != 1) s += "^" + std::to_string(exp);
    }
    return s;
}

PolyScalar PolyScalar::symbol(const std::string& name) {
    if (name.empty()) throw std::invalid_argument("PolyScalar: empty symbol name");
    PolyScalar p;
    p.add_term(Monomial{{name, 1}}, Rational(1));
    return p;
}

bool PolyScalar::is_rational() const {
    return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.empty());
}

Rational PolyScalar::rational_value() const {
    if (terms_.empty()) return Rational(0);
    if (!is_rational()) throw std::domain_error("PolyScalar: not a rational constant: " + str());
    return terms_.begin()->second;
}

void PolyScalar::add_term(const Monomial& m, const Rational& coef) {
    if (coef.is_zero()) return;
    auto it = terms_.find(m);
    if (it == terms_.end()) {
        terms_.emplace(m, coef);
    } else {
        it->second += coef;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

PolyScalar PolyScalar::operator-() const {
    PolyScalar r;
    for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
    return r;
}

PolyScalar& PolyScalar::operator+=(const PolyScalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, c);
    return *this;
}

PolyScalar& PolyScalar::operator-=(const PolyScalar& o) {
    for (const auto& [m, c] : o.terms_) add_term(m, -c);
    return *this;
}

PolyScalar operator*(const PolyScalar& a, const PolyScalar& b) {
    PolyScalar r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) r.add_term(monomial_mul(ma, mb), ca * cb);
    return r;
}

Rational PolyScalar::eval(const std::map<std::string, Rational>& env) const {
    Rational total(0);
    for (const auto& [m, c] : terms_) {
        Rational v = c;
        for (const auto& [sym, exp] : m) {
            auto it = env.find(sym);
            if (it == env.end())
                throw std::invalid_argument("PolyScalar::eval: unbound symbol \"" + sym + "\"");
            for (int e = 0; e < exp; ++e) v *= it->second;
        }
        total += v;
    }
    return total;
}

std::string PolyScalar::str() const {
    if (terms_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        Rational abs = c < Rational(0) ? -c : c;
        if (s.empty()) {
            if (c < Rational(0)) s += "-";
        } else {
            s += c < Rational(0) ? " - " : " + ";
        }
        if (m.empty()) {
            s += abs.str();
        } else if (abs == Rational(1)) {
            s += monomial_str(m);
        } else {
            s += abs.str() + "*" + monomial_str(m);
        }
    }
    return s;
}

namespace {

// Recursive-descent parser for the sorted-term-list serialization:
//   poly  := [-] term (('+'|'-') term)*
//   term  := factor ('*' factor)*
//   factor:= rational | symbol ['^' int]
struct PolyParser {
    const std::string& s;
    size_t pos = 0;

    explicit PolyParser(const std::string& text) : s(text) {}

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }

    bool eof() {
        skip_ws();
        return pos >= s.size();
    }

    char peek() {
        skip_ws();
        return pos < s.size() ? s[pos] : '\0';
    }

    std::string read_number() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (pos == start) fail("digit expected");
        return s.substr(start, pos - start);
    }

    std::string read_ident() {
        skip_ws();
        size_t start = pos;
        while (pos < s.size() &&
               (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        if (pos == start) fail("symbol expected");
        return s.substr(start, pos - start);
    }

    PolyScalar parse_term() {
        Rational coef(1);
        Monomial mono;
        bool first = true;
        while (true) {
            char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                std::string n = read_number();
                if (peek() == '/') {
                    ++pos;
                    n += "/" + read_number();
                }
                coef *= Rational::parse(n);
            } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
                std::string sym = read_ident();
                int exp = 1;
                if (peek() == '^') {
                    ++pos;
                    exp = std::stoi(read_number());
                }
                mono[sym] += exp;
            } else if (first) {
                fail("term expected");
            }
            first = false;
            if (peek() == '*') {
                ++pos;
                continue;
            }
            break;
        }
        PolyScalar t;
        t.add_term(mono, coef);
        return t;
    }

    PolyScalar parse() {
        PolyScalar total;
        bool negate = false;
        if (peek() == '-') {
            ++pos;
            negate = true;
        } else if (peek() == '+') {
            ++pos;
        }
        while (true) {
            PolyScalar t = parse_term();
            total += negate ? -t : t;
            if (eof()) break;
            char c = peek();
            if (c == '+') {
                negate = false;
            } else if (c == '-') {
                negate = true;
            } else {
                fail("'+' or '-' expected");
            }
            ++pos;
        }
        return total;
    }

    [[noreturn]] void fail(const std::string& what) {
        throw std::invalid_argument("PolyScalar: parse error at position " +
                                    std::to_string(pos) + " of \"" + s + "\": " + what);
    }
};

}  // namespace

PolyScalar PolyScalar::parse(const std::string& text) {
    PolyParser p(text);
    if (p.eof()) throw std::invalid_argument("PolyScalar: empty input");
    if (p.peek() == '0') {
        size_t save = p.pos;
        ++p.pos;
        if (p.eof()) return PolyScalar();
        p.pos = save;
    }
    return p.parse();
}

}  // namespace fluxcoh
