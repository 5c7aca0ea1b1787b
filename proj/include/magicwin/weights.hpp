#ifndef MAGICWIN_WEIGHTS_HPP
#define MAGICWIN_WEIGHTS_HPP

#include <optional>
#include <vector>

#include "magicwin/root_datum.hpp"

namespace magicwin {

struct QuasiSymmetryReport {
    bool ok = true;
    IntVec line;      // primitive direction of the first failing line
    IntVec line_sum;  // its weight sum
};

// Every line through the origin carries weights summing to zero (zeros ignored).
QuasiSymmetryReport quasi_symmetry(const std::vector<IntVec>& weights);
inline bool is_quasi_symmetric(const std::vector<IntVec>& weights) { return quasi_symmetry(weights).ok; }

std::vector<IntVec> dual_weights(const std::vector<IntVec>& weights);
std::vector<IntVec> symplectic_double(const std::vector<IntVec>& weights);
// Appends the roots and rank-many zero weights (Cartan part).
std::vector<IntVec> adjoin_adjoint(const GroupDatum& g, const std::vector<IntVec>& weights);
// Multiset stable under the Weyl group.
bool is_weyl_stable(const GroupDatum& g, const std::vector<IntVec>& weights);

// Formal difference plus - minus of weight multisets.
struct VirtualClass {
    std::vector<IntVec> plus;
    std::vector<IntVec> minus;
};

// Sum of positive pairings over plus minus the same over minus.
std::int64_t eta(const VirtualClass& vc, const IntVec& lambda);

// A quasi-symmetric representation, stored through its dual weights, which are
// the generators consumed by every zonotope and complex construction.
struct Representation {
    GroupDatum group;
    std::vector<IntVec> x_weights;   // as supplied
    std::vector<IntVec> beta;        // nonzero weights of the dual

    static Representation from_x_weights(const GroupDatum& g, const std::vector<IntVec>& x);
    static Representation from_dual_weights(const GroupDatum& g, const std::vector<IntVec>& dual);

    std::size_t rank() const { return group.rank(); }
    VirtualClass virtual_class() const { return {beta, group.roots()}; }
    std::int64_t eta(const IntVec& lambda) const;
};

}  // namespace magicwin

#endif
