#ifndef MAGICWIN_KTHEORY_HPP
#define MAGICWIN_KTHEORY_HPP

#include <map>
#include <optional>
#include <stdexcept>
#include <vector>

#include "magicwin/linalg.hpp"
#include "magicwin/windows.hpp"

namespace magicwin {

// A broken internal invariant (a bug, not bad input).
struct InternalError : std::logic_error {
    using std::logic_error::logic_error;
};

// Class in K_0(Rep G) as a combination of irreducibles, keyed by dominant highest weight.
using KClass = std::map<IntVec, Integer>;

void add_scaled(KClass& into, const KClass& from, const Integer& scale);
void prune(KClass& cls);
std::string to_string(const KClass& cls);

// Class of the (virtual) character e^nu via the dominant shift.
KClass ch_to_kclass(const GroupDatum& g, const IntVec& nu);

enum class ComplexKind { C, D };
const char* to_string(ComplexKind k);

// C: sum over subsets S of {beta : <lambda,beta> < 0} of (-1)^|S| ch(chi - sum S).
// D: sum over subsets S of {beta : <lambda,beta> > 0} of (-1)^|S| ch(chi + sum S).
// lambda must be antidominant.
KClass border_complex_class(ComplexKind kind, const IntVec& lambda, const IntVec& chi, const Representation& rep);

// Least r with v = sum a_i beta_i, a_i in [-r, 0] (linear program).
Rational r_of(const RatVec& v, const Zonotope& z);
// Number of coefficients equal to -r in every such expression with the optimal r.
std::size_t p_of(const RatVec& v, const Rational& r, const Zonotope& z);

struct Measure {
    Rational r;
    std::size_t p;
    bool operator==(const Measure&) const = default;
    bool operator<(const Measure& o) const { return r != o.r ? r < o.r : p < o.p; }
    bool operator>=(const Measure& o) const { return !(*this < o); }
};

struct Separation {
    Rational r;
    IntVec tight_normal;  // lexicographically least outer normal of a facet through v / r
    IntVec lambda;        // antidominant: minus the dominant conjugate of tight_normal
    Rational pairing;     // <lambda, l>
    ComplexKind kind;     // D when pairing < 0, C when pairing > 0
};

// v plays the role of chi + rho - delta; requires r_of(v) > 0 and l generic.
Separation separating_lambda(const RatVec& v, const WindowGeometry& geom, const RatVec& l);

// Rewrites classes in terms of the window {chi dominant : r(chi + rho - center) <= 1/2}.
class Rewriter {
public:
    Rewriter(const WindowGeometry& geom, RatVec center, RatVec l);

    Rational r(const IntVec& chi);
    Measure measure(const IntVec& chi);
    // [V(chi)] expressed through the other terms of its border complex; every term
    // has strictly smaller measure (checked, InternalError otherwise).
    KClass relation(const IntVec& chi);
    KClass express(const KClass& cls);

    std::size_t steps() const { return steps_; }
    const RatVec& center() const { return center_; }

private:
    RatVec shifted(const IntVec& chi) const;

    const WindowGeometry& geom_;
    RatVec center_, l_, rho_;
    std::map<IntVec, Rational> r_cache_;
    std::map<IntVec, std::size_t> p_cache_;
    std::map<IntVec, KClass> relation_cache_;
    std::size_t steps_ = 0;
};

// delta0 + t * eps with t in (0, 1] small enough that no wall lies in (delta0, delta0 + t eps].
RatVec perturbed_center(const WindowGeometry& geom, const RatVec& delta0, const RatVec& eps);

// Coordinates of cls over window_weights(delta0, eps).
std::vector<Integer> express_in_window(const KClass& cls, const RatVec& delta0, const RatVec& eps, const RatVec& l,
                                       const WindowGeometry& geom);

// Matrix with rows indexed by target and columns by source basis weights.
struct BasisMatrix {
    std::vector<IntVec> source, target;
    IntMatrix entries;

    bool is_identity() const;
    Integer determinant() const { return magicwin::determinant(entries); }
    BasisMatrix inverse() const;
    // Image of the source basis weight chi.
    KClass column(const IntVec& chi) const;
};

// this after first
BasisMatrix compose(const BasisMatrix& second, const BasisMatrix& first);
BasisMatrix identity_on(const std::vector<IntVec>& basis);

// Closed window at a vertex off the arrangement.
std::vector<IntVec> vertex_window(const WindowGeometry& geom, const RatVec& delta);
// Direction for the half-open windows at a wall point, oriented like dir.
RatVec generic_direction(const WindowGeometry& geom, const RatVec& dir);

// Change of basis across at most one wall, from window(delta) to window(delta').
BasisMatrix wall_cross_matrix(const WindowGeometry& geom, const RatVec& delta, const RatVec& delta2, const RatVec& l);
// chi -> chi + m from window(delta) to window(delta + m).
BasisMatrix translation_matrix(const WindowGeometry& geom, const RatVec& delta, const IntVec& m);

}  // namespace magicwin

#endif
