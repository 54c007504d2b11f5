#pragma once

#include <json.hpp>

#include "fluxcoh/bar.hpp"
#include "fluxcoh/cochain.hpp"

namespace fluxcoh {

using Json = nlohmann::json;

// element descriptor:
//   {"genus": g, "word": ["nu1","mu2",...], "fC": [...], "kv": [...], "cal": "..."}
// word entries name twist generators (lambda/mu i in 1..g, nu i in 1..g-1);
// fC entries are polynomial strings, kv entries rational strings; all
// decoration fields optional.
ModelSymp parse_element(const Json& j);
Json element_to_json(const ModelSymp& e);

// chain descriptor: {"genus": g, "degree": n, "terms": [{"coef": "...", "tuple": [...]}]}
BarChain parse_chain(const Json& j);
Json chain_to_json(const BarChain& c);

// wedge descriptor over the homology basis, e.g. "x1^y2^x3"
ExtElement parse_wedge(int g, const std::string& text);

// registered cocycle names: "alpha", "alpha_tilde:<k>", "omega0_tilde",
// "flux_pullback:<wedge>", "pair:kR,fluxc"
struct NamedCocycle {
    std::string name;
    int degree;
    // exactly one of the two evaluators is set
    bool symmetric_valued = false;
    Cochain<PolyScalar> scalar;
    Cochain<SymElement> symmetric;
};
NamedCocycle lookup_cocycle(int g, const std::string& name);

}  // namespace fluxcoh
