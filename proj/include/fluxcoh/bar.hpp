#pragma once

#include <map>
#include <string>
#include <vector>

#include "fluxcoh/group.hpp"
#include "fluxcoh/rational.hpp"

namespace fluxcoh {

using BarTuple = std::vector<ModelSymp>;

// An inhomogeneous bar chain: finite rational combination of tuples of
// group elements.  Degree-0 chains are multiples of the empty tuple.
class BarChain {
public:
    BarChain(int g, int degree) : g_(g), degree_(degree) { check_genus(g); }

    int genus() const { return g_; }
    int degree() const { return degree_; }
    const std::map<BarTuple, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    void add_term(BarTuple t, const Rational& coef);
    BarChain& operator+=(const BarChain& o);
    BarChain& operator-=(const BarChain& o);
    BarChain scaled(const Rational& r) const;
    bool operator==(const BarChain& o) const {
        return g_ == o.g_ && degree_ == o.degree_ && terms_ == o.terms_;
    }
    std::string str() const;

private:
    int g_;
    int degree_;
    std::map<BarTuple, Rational> terms_;
};

BarChain operator+(BarChain a, const BarChain& b);
BarChain operator-(BarChain a, const BarChain& b);

BarChain single_chain(const BarTuple& t, const Rational& coef = Rational(1));

BarChain boundary(const BarChain& c);

// Signed sum over permutations of a pairwise-commuting tuple; a cycle.
BarChain shuffle_cycle(const std::vector<ModelSymp>& gs);

// Re-express every element of a chain in a larger genus via embed_block.
BarChain embed_chain(const BarChain& c, int total_genus, int offset);

// Eilenberg-Zilber product of chains living on disjoint handle blocks:
// embeds the first factor at block 0 and the second after it, then
// shuffles the tuples with signs.  Satisfies the Leibniz rule.
BarChain cross_product(const BarChain& c1, const BarChain& c2);

// Given a degree-1 chain z supported on elements with trivial action and
// kv = 0 whose total flux (with multiplicity) vanishes, produce d with
// boundary(d) == z exactly.  Throws if the flux obstruction is nonzero.
BarChain express_as_boundary(const BarChain& z);

struct TwistedCycleTerm {
    ModelSymp lift;    // q-tilde
    ModelSymp kernel;  // k, trivial action and kv = 0
    int sign = 1;      // +1 or -1
};

// Builds the 2-cycle
//   sum_i { (q_i, k_i) + (q_i k_i, q_i^{-1}) - (q_i, q_i^{-1}) - (id,id) } + d
// where a sign of -1 replaces k_i by its inverse and d closes the
// conjugation defect.  Verifies boundary(result) == 0.
BarChain lift_twisted_cycle(const std::vector<TwistedCycleTerm>& data);

}  // namespace fluxcoh
