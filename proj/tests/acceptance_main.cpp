// Acceptance gate: runs the ten certification criteria and prints one
// pass/fail line per criterion.  Exit status 0 iff everything passes.
#include <iostream>
#include <string>
#include <vector>

#include "fluxcoh/suites.hpp"

using namespace fluxcoh;

int main() {
    SuiteConfig cfg;  // genus 2, symbol "th", seed 7, 100 cases

    struct Criterion {
        int number;
        std::string suite;
        std::string description;
    };
    const std::vector<Criterion> criteria = {
        {1, "eqcr", "twisted test cycles evaluate to 2r under randomized choices"},
        {2, "flux2v", "flux-class square and v-square identities, genus 2..5"},
        {3, "alom", "alpha - 2*omega is an explicit coboundary; isotropic cycles vanish"},
        {4, "om2", "torus pairings, ideal vanishing, and quotient dimension counts"},
        {5, "cocycle-delta", "closedness of the named cochains and the central law"},
        {6, "fluxc", "degree-2 decomposition on base-trivial cycles"},
        {7, "stability", "block-embedding invariance and the level-2 product oracle"},
        {8, "johnson", "contraction normalization on the standard degree-3 element"},
        {9, "la2", "coinvariant map: twist invariance and surjectivity witnesses"},
        {10, "structural", "differentials, adjunction, group axioms, commutator law"},
    };

    bool all_pass = true;
    for (const auto& c : criteria) {
        bool pass = true;
        std::string detail;
        try {
            for (const auto& r : run_suite(c.suite, cfg)) {
                if (!r.pass) {
                    pass = false;
                    detail = r.name + ": expected " + r.expected + ", got " + r.actual;
                    break;
                }
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = std::string("exception: ") + e.what();
        }
        std::cout << (pass ? "PASS" : "FAIL") << "  criterion " << c.number << ": "
                  << c.description << "\n";
        if (!pass) {
            std::cout << "      " << detail << "\n";
            all_pass = false;
        }
    }
    return all_pass ? 0 : 1;
}
