#ifndef MAGICWIN_ROOT_DATUM_HPP
#define MAGICWIN_ROOT_DATUM_HPP

#include <optional>
#include <vector>

#include "magicwin/rational.hpp"

namespace magicwin {

// Product of GL(n_i) factors times a torus of the given rank. Coordinates are
// laid out factor by factor (standard characters e_1..e_n), torus last.
struct GroupDatum {
    std::vector<int> gl_factors;
    int torus_rank = 0;

    std::size_t rank() const;
    struct Block {
        std::size_t offset, size;
    };
    std::vector<Block> blocks() const;   // GL factors only

    IntVec zero() const { return IntVec(rank(), 0); }
    RatVec rho() const;                  // half sum of positive roots
    std::vector<IntVec> positive_roots() const;
    std::vector<IntVec> roots() const;   // positive then negative

    bool is_dominant(const IntVec& v) const;
    bool is_dominant(const RatVec& v) const;
    bool is_antidominant(const IntVec& v) const;
    bool is_invariant(const RatVec& v) const;   // fixed by the Weyl group

    IntVec w0_apply(const IntVec& v) const;
    IntVec dual_weight(const IntVec& v) const { return -w0_apply(v); }
    // Dominant conjugate (each block sorted decreasingly).
    IntVec dominant_conjugate(const IntVec& v) const;
    std::vector<IntVec> weyl_orbit(const IntVec& v) const;   // sorted, distinct
    std::vector<IntVec> weyl_orbit_all(const IntVec& v) const;  // |W| images, with repeats
    std::size_t weyl_order() const;

    // Basis of M^W: block indicator vectors, then torus unit vectors.
    std::vector<IntVec> invariant_subspace_basis() const;
    // Coordinates of an invariant vector in that basis.
    RatVec invariant_coordinates(const RatVec& v) const;

    bool operator==(const GroupDatum&) const = default;
};

struct ShiftedWeight {
    IntVec weight;   // dominant
    int sign;        // +1 or -1
};

// Dominant representative of w(mu + rho) - rho with sign(w); nullopt when mu + rho
// is fixed by a reflection (the character vanishes).
std::optional<ShiftedWeight> dominant_shift(const GroupDatum& g, const IntVec& mu);

}  // namespace magicwin

#endif
