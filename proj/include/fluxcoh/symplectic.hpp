#pragma once

#include "fluxcoh/linalg.hpp"
#include "fluxcoh/poly.hpp"
#include "fluxcoh/sym.hpp"

#include <map>
#include <utility>
#include <vector>

namespace fluxcoh {

// Basis convention, fixed throughout: indices 0..g-1 are x_1..x_g and
// g..2g-1 are y_1..y_g (dually x*_i, y*_i), with <x_i,y_j> = delta_ij and
// iota(x*_i, y*_j) = delta_ij.

void check_genus(int g);

/// <e_i, e_j> on H_1, equal to iota(e*_i, e*_j) on the dual basis.
int pairing_sign(int g, int i, int j);

/// Coordinate vector in H_1(Sigma_g) over Q[Theta].
struct HomVector {
    int g = 0;
    std::vector<PolyScalar> c;

    HomVector() = default;
    explicit HomVector(int genus) : g(genus), c(2 * genus) { check_genus(genus); }

    friend bool operator==(const HomVector&, const HomVector&) = default;
    friend bool operator<(const HomVector& a, const HomVector& b) {
        return std::tie(a.g, a.c) < std::tie(b.g, b.c);
    }
};

/// Coordinate vector in H^1(Sigma_g) over Q[Theta], in the dual basis.
struct CohVector {
    int g = 0;
    std::vector<PolyScalar> c;

    CohVector() = default;
    explicit CohVector(int genus) : g(genus), c(2 * genus) { check_genus(genus); }

    bool is_zero() const;
    bool is_rational() const;

    friend bool operator==(const CohVector&, const CohVector&) = default;
    friend bool operator<(const CohVector& a, const CohVector& b) {
        return std::tie(a.g, a.c) < std::tie(b.g, b.c);
    }
};

HomVector x_hom(int g, int i);  // i is 1-based
HomVector y_hom(int g, int i);
CohVector x_star(int g, int i);
CohVector y_star(int g, int i);

CohVector operator+(const CohVector& a, const CohVector& b);
CohVector operator-(const CohVector& a, const CohVector& b);
CohVector operator-(const CohVector& a);
CohVector scale(const PolyScalar& s, const CohVector& v);
HomVector operator+(const HomVector& a, const HomVector& b);
HomVector scale(const PolyScalar& s, const HomVector& v);

/// Intersection pairing on homology.
PolyScalar intersect(const HomVector& a, const HomVector& b);

/// Cup-product pairing on cohomology.
PolyScalar iota(const CohVector& u, const CohVector& v);

/// Poincare duality x_i -> -y*_i, y_i -> x*_i, and its inverse.
CohVector pd(const HomVector& a);
HomVector pd_inv(const CohVector& u);

/// Discontinuous intersection pairing: skew lift of iota valued in S^2.
SymElement iota_disc(const CohVector& u, const CohVector& v);

/// Degree-2 exterior power of H^1 over Z (equivalently over Q), with basis
/// the wedges of monomial-weighted dual basis covectors. This retains the
/// Q-linear structure that a PolyScalar-coefficient wedge would collapse,
/// which is exactly what la2_coinvariant depends on.
class DiscWedge {
public:
    using Factor = std::pair<Monomial, int>;  // (monomial weight, basis index)
    using Key = std::pair<Factor, Factor>;    // normalized: first < second

    DiscWedge() = default;
    explicit DiscWedge(int genus) : g_(genus) { check_genus(genus); }

    int genus() const { return g_; }
    const std::map<Key, Rational>& terms() const { return terms_; }

    void add_term(Factor a, Factor b, const Rational& coef);

    DiscWedge& operator+=(const DiscWedge& o);
    friend DiscWedge operator+(DiscWedge a, const DiscWedge& b) { return a += b; }
    DiscWedge scaled(const Rational& r) const;

    friend bool operator==(const DiscWedge&, const DiscWedge&) = default;

private:
    int g_ = 0;
    std::map<Key, Rational> terms_;
};

/// u wedge v as an element of Lambda^2_Z H^1, expanded over monomials.
DiscWedge disc_wedge(const CohVector& u, const CohVector& v);

/// Diagonal action of a rational matrix A on H^1 (apply act_on_coh first).
DiscWedge act(const QMat& A, const DiscWedge& w);

/// The coinvariants map Lambda^2_Z H^1 -> S^2: u wedge v -> sum of
/// iota(e*_i, e*_j) m̂ m̂' over the monomial expansion.
SymElement la2_coinvariant(const DiscWedge& w);

enum class Twist { Lambda, Mu, Nu };

/// Matrix of the intersection form <.,.> in the chosen basis.
QMat intersection_form(int g);

bool is_symplectic(int g, const QMat& t);

/// Homology action of a Lickorish generator, as the transvection
/// t_c(a) = a - <a,c> c with c(lambda_i)=x_i, c(mu_i)=y_i,
/// c(nu_i)=y_i-y_{i+1}.  i is 1-based; nu needs i <= g-1.
QMat twist_matrix(int g, Twist kind, int i);

/// Transvection along an arbitrary rational homology class.
QMat transvection(int g, const std::vector<Rational>& curve);

/// Left action on H^1 induced by T on H_1: A = (T^{-1})^t. Throws if T is
/// not symplectic.
QMat act_on_coh(int g, const QMat& t);

CohVector apply(const QMat& a, const CohVector& v);
HomVector apply(const QMat& a, const HomVector& v);

/// Element of an exterior power of H_1 or H^1, with PolyScalar coefficients
/// on strictly increasing index tuples.
class ExtElement {
public:
    ExtElement() = default;
    ExtElement(int genus, int degree) : g_(genus), degree_(degree) {
        check_genus(genus);
        if (degree < 0 || degree > 2 * genus)
            throw std::invalid_argument("ExtElement: degree out of range");
    }

    int genus() const { return g_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, PolyScalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Adds coef * e_{key}; the key is sorted with the sign of the sort.
    void add_term(std::vector<int> key, const PolyScalar& coef);

    ExtElement& operator+=(const ExtElement& o);
    ExtElement& operator-=(const ExtElement& o);
    friend ExtElement operator+(ExtElement a, const ExtElement& b) { return a += b; }
    friend ExtElement operator-(ExtElement a, const ExtElement& b) { return a -= b; }
    ExtElement scaled(const PolyScalar& s) const;

    friend bool operator==(const ExtElement&, const ExtElement&) = default;

    std::string str() const;

private:
    int g_ = 0;
    int degree_ = 0;
    std::map<std::vector<int>, PolyScalar> terms_;
};

ExtElement ext_from_hom(const HomVector& v);
ExtElement ext_from_coh(const CohVector& v);

ExtElement wedge(const ExtElement& a, const ExtElement& b);

/// omega_0 = sum x_i wedge y_i (same coordinates on H_1 and on H^1).
ExtElement omega0(int g);

/// Contraction C = 2 C_0 induced by the intersection pairing, normalized so
/// that C((x_1^y_1+...+x_{g-1}^y_{g-1})^y_g) = 2(g-1) y_g.
ExtElement contract(const ExtElement& w);

/// Kronecker pairing of Lambda^k H_1 with Lambda^k H^1 via <x_i,x*_j>=d_ij,
/// i.e. coefficientwise on matching index tuples.
PolyScalar pair_ext(const ExtElement& xi, const ExtElement& eta);

/// Basis of ker C in Lambda^k H_1 over Q; for k=1 all of H_1.
std::vector<ExtElement> rep_1k_basis(int g, int k);

long rep_1k_dim(int g, int k);

/// Dimensions, by degree 0..up_to, of Lambda^* H_1 modulo the ideal
/// generated by omega_0 wedge H_1.
std::vector<long> ideal_quotient_dims(int g, int up_to);

}  // namespace fluxcoh
