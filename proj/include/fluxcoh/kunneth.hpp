#pragma once

#include <map>
#include <string>
#include <vector>

#include "fluxcoh/rational.hpp"
#include "fluxcoh/symplectic.hpp"

namespace fluxcoh {

enum class RelationsMode { Free, Reduced };

// Bigraded product algebra of a surface's cohomology with the free
// graded-commutative base algebra on 2g degree-1 generators.
// Fiber part: -1 = unit, 0..2g-1 = covector basis element, 2g = the
// degree-2 fundamental class.  Base part: squarefree sorted monomial in
// the degree-1 generators (0..g-1 the x-type, g..2g-1 the y-type).
class KunnethClass {
public:
    using Key = std::pair<int, std::vector<int>>;

    KunnethClass(int g, RelationsMode mode) : g_(g), mode_(mode) { check_genus(g); }

    int genus() const { return g_; }
    RelationsMode mode() const { return mode_; }
    const std::map<Key, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    int fiber_degree(int fiber) const { return fiber < 0 ? 0 : (fiber == 2 * g_ ? 2 : 1); }

    void add_term(int fiber, std::vector<int> base, const Rational& coef);
    KunnethClass& operator+=(const KunnethClass& o);
    KunnethClass& operator-=(const KunnethClass& o);
    KunnethClass scaled(const Rational& r) const;
    bool operator==(const KunnethClass& o) const {
        return g_ == o.g_ && mode_ == o.mode_ && terms_ == o.terms_;
    }
    std::string str() const;

    // quotient by the ideal generated by the base products of the
    // symplectic base form with each degree-1 generator
    void reduce();

private:
    int g_;
    RelationsMode mode_;
    std::map<Key, Rational> terms_;
};

// the fiber codes
inline int fiber_one() { return -1; }
int fiber_mu(int g);

KunnethClass operator+(KunnethClass a, const KunnethClass& b);
KunnethClass operator-(KunnethClass a, const KunnethClass& b);
KunnethClass multiply(const KunnethClass& a, const KunnethClass& b);

KunnethClass zero_class(int g, RelationsMode mode);
KunnethClass mu_class(int g, RelationsMode mode);
KunnethClass flux_class(int g, RelationsMode mode);
KunnethClass omega0t_class(int g, RelationsMode mode);  // base-only symplectic form
KunnethClass e_class(int g, RelationsMode mode);        // (2-2g) mu
KunnethClass gamma_class(int g, RelationsMode mode);    // omega0t / (2g-2)
KunnethClass v_class(int g, RelationsMode mode);

// keep only the given fiber degree's component
KunnethClass fiber_component(const KunnethClass& a, int fiber_deg);

// integration over the fiber: mu (x) b -> 1 (x) b, all else -> 0
KunnethClass pi_star(const KunnethClass& a);

// drop every term with nonzero base degree (restriction to the fiber)
KunnethClass fiber_restriction(const KunnethClass& a);

}  // namespace fluxcoh
