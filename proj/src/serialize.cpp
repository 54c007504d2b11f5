#include "fluxcoh/serialize.hpp"

#include <sstream>
#include <stdexcept>

#include "fluxcoh/cocycles.hpp"

namespace fluxcoh {

namespace {

QMat parse_word(int g, const Json& word) {
    QMat t = QMat::identity(2 * g);
    for (const auto& entry : word) {
        std::string s = entry.get<std::string>();
        Twist kind;
        size_t skip;
        if (s.rfind("lambda", 0) == 0) {
            kind = Twist::Lambda;
            skip = 6;
        } else if (s.rfind("mu", 0) == 0) {
            kind = Twist::Mu;
            skip = 2;
        } else if (s.rfind("nu", 0) == 0) {
            kind = Twist::Nu;
            skip = 2;
        } else {
            throw std::invalid_argument("unknown generator name: " + s);
        }
        int idx = std::stoi(s.substr(skip));
        t = t * twist_matrix(g, kind, idx);
    }
    return t;
}

CohVector parse_coh(int g, const Json& arr) {
    if (static_cast<int>(arr.size()) != 2 * g)
        throw std::invalid_argument("coefficient vector must have length 2*genus");
    CohVector v(g);
    for (int i = 0; i < 2 * g; ++i) v.c[i] = PolyScalar::parse(arr[i].get<std::string>());
    return v;
}

Json coh_to_json(const CohVector& v) {
    Json arr = Json::array();
    for (const auto& c : v.c) arr.push_back(c.str());
    return arr;
}

}  // namespace

ModelSymp parse_element(const Json& j) {
    int g = j.at("genus").get<int>();
    check_genus(g);
    ModelSymp e(g);
    if (j.contains("word") && j.contains("action"))
        throw std::invalid_argument("give either a word or an action matrix, not both");
    if (j.contains("word")) e.T = parse_word(g, j.at("word"));
    if (j.contains("action")) {
        const Json& rows = j.at("action");
        if (static_cast<int>(rows.size()) != 2 * g)
            throw std::invalid_argument("action matrix must be 2*genus square");
        QMat t(2 * g, 2 * g);
        for (int i = 0; i < 2 * g; ++i) {
            const Json& row = rows[i];
            if (static_cast<int>(row.size()) != 2 * g)
                throw std::invalid_argument("action matrix must be 2*genus square");
            for (int k = 0; k < 2 * g; ++k)
                t.at(i, k) = Rational::parse(row[k].get<std::string>());
        }
        if (!is_symplectic(g, t)) throw std::invalid_argument("action matrix is not symplectic");
        e.T = t;
    }
    if (j.contains("fC")) e.fC = parse_coh(g, j.at("fC"));
    if (j.contains("kv")) e.kv = parse_coh(g, j.at("kv"));
    if (j.contains("cal")) e.cal = PolyScalar::parse(j.at("cal").get<std::string>());
    return ModelSymp(g, e.T, e.fC, e.kv, e.cal);
}

Json element_to_json(const ModelSymp& e) {
    Json j;
    j["genus"] = e.g;
    Json rows = Json::array();
    for (int i = 0; i < e.T.rows(); ++i) {
        Json row = Json::array();
        for (int k = 0; k < e.T.cols(); ++k) row.push_back(e.T.at(i, k).str());
        rows.push_back(row);
    }
    j["action"] = rows;
    j["fC"] = coh_to_json(e.fC);
    j["kv"] = coh_to_json(e.kv);
    j["cal"] = e.cal.str();
    return j;
}

BarChain parse_chain(const Json& j) {
    int g = j.at("genus").get<int>();
    int degree = j.at("degree").get<int>();
    BarChain c(g, degree);
    for (const auto& term : j.at("terms")) {
        BarTuple t;
        for (const auto& ej : term.at("tuple")) {
            Json full = ej;
            if (!full.contains("genus")) full["genus"] = g;
            t.push_back(parse_element(full));
        }
        c.add_term(std::move(t), Rational::parse(term.at("coef").get<std::string>()));
    }
    return c;
}

Json chain_to_json(const BarChain& c) {
    Json j;
    j["genus"] = c.genus();
    j["degree"] = c.degree();
    Json terms = Json::array();
    for (const auto& [t, coef] : c.terms()) {
        Json term;
        term["coef"] = coef.str();
        Json tuple = Json::array();
        for (const auto& e : t) tuple.push_back(element_to_json(e));
        term["tuple"] = tuple;
        terms.push_back(term);
    }
    j["terms"] = terms;
    return j;
}

ExtElement parse_wedge(int g, const std::string& text) {
    std::vector<int> key;
    std::stringstream ss(text);
    std::string part;
    while (std::getline(ss, part, '^')) {
        if (part.empty()) throw std::invalid_argument("bad wedge descriptor: " + text);
        char kind = part[0];
        int idx = std::stoi(part.substr(1));
        if (idx < 1 || idx > g) throw std::invalid_argument("wedge index out of range: " + part);
        if (kind == 'x') key.push_back(idx - 1);
        else if (kind == 'y') key.push_back(g + idx - 1);
        else throw std::invalid_argument("bad wedge factor: " + part);
    }
    ExtElement e(g, static_cast<int>(key.size()));
    e.add_term(std::move(key), PolyScalar(1));
    return e;
}

NamedCocycle lookup_cocycle(int g, const std::string& name) {
    NamedCocycle out;
    out.name = name;
    if (name == "alpha") {
        out.degree = 2;
        out.scalar = alpha(g, 1);
        return out;
    }
    if (name.rfind("alpha_tilde:", 0) == 0) {
        int k = std::stoi(name.substr(12));
        out.degree = 2 * k;
        out.symmetric_valued = true;
        out.symmetric = alpha_tilde(g, k);
        return out;
    }
    if (name == "omega0_tilde") {
        out.degree = 2;
        out.scalar = omega0_tilde(g);
        return out;
    }
    if (name.rfind("flux_pullback:", 0) == 0) {
        ExtElement xi = parse_wedge(g, name.substr(14));
        out.degree = xi.degree();
        out.scalar = flux_pullback(xi);
        return out;
    }
    if (name == "pair:kR,fluxc") {
        out.degree = 2;
        out.scalar = pair_cocycle(kv_cochain(g), fc_cochain(g));
        return out;
    }
    throw std::invalid_argument("unknown cocycle name: " + name);
}

}  // namespace fluxcoh
