#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "fluxcoh/bar.hpp"

namespace fluxcoh {

// Deterministic source of random test data.  All draws go through the
// fixed-width engine directly (no distribution objects), so a given seed
// produces the same stream everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t raw() { return eng_(); }
    long below(long n) { return static_cast<long>(eng_() % static_cast<std::uint64_t>(n)); }
    long range(long lo, long hi) { return lo + below(hi - lo + 1); }  // inclusive
    bool coin() { return below(2) == 1; }

    Rational rational();
    PolyScalar poly(const std::vector<std::string>& symbols);
    Monomial monomial(const std::vector<std::string>& symbols, int max_degree = 2);
    CohVector coh(int g, const std::vector<std::string>& symbols);
    CohVector rational_coh(int g);

    // trivial-action element: random flux and central value, kv = 0
    ModelSymp symp0(int g, const std::vector<std::string>& symbols);
    // general element: short random word of twists with random decorations
    ModelSymp element(int g, const std::vector<std::string>& symbols);
    // random matrix-group action from a short twist word
    QMat twist_word(int g, int length);

    BarChain chain(int g, int degree, int nterms, const std::vector<std::string>& symbols,
                   bool trivial_action_only = false);

    // pair of trivial-action elements whose fluxes pair to zero
    std::pair<ModelSymp, ModelSymp> isotropic_pair(int g, const std::vector<std::string>& symbols);
    std::vector<ModelSymp> isotropic_tuple(int g, int n, const std::vector<std::string>& symbols);

private:
    std::mt19937_64 eng_;
};

}  // namespace fluxcoh
