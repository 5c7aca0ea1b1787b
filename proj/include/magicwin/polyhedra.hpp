#ifndef MAGICWIN_POLYHEDRA_HPP
#define MAGICWIN_POLYHEDRA_HPP

#include <vector>

#include "magicwin/lp.hpp"
#include "magicwin/rational.hpp"

namespace magicwin {

// <normal, x> <= bound, or < bound when strict.
struct HalfSpace {
    RatVec normal;
    Rational bound;
    bool strict = false;
};

struct HalfSpaceSystem {
    std::size_t dim = 0;
    std::vector<HalfSpace> constraints;

    void add(RatVec normal, Rational bound, bool strict = false);
    bool contains(const RatVec& x) const;
    bool contains(const IntVec& x) const;
    // True when x satisfies every constraint and meets at least one with equality.
    bool on_boundary(const RatVec& x) const;
};

enum class Sense { Minimize, Maximize };

// Strict constraints are replaced by their closure.
LpResult lp_optimize(const RatVec& objective, const HalfSpaceSystem& system, Sense sense);

// All integer points, sorted lexicographically. Throws DomainError if unbounded.
std::vector<IntVec> lattice_points(const HalfSpaceSystem& system);

// {x : <normal, x> = offset}, normal primitive integral with first nonzero entry positive.
struct AffineHyperplane {
    IntVec normal;
    Rational offset;

    static AffineHyperplane make(const RatVec& normal, const Rational& offset);
    Rational eval(const RatVec& x) const { return dot(normal, x) - offset; }
    bool operator==(const AffineHyperplane&) const = default;
    bool operator<(const AffineHyperplane& o) const
    {
        return normal != o.normal ? normal < o.normal : offset < o.offset;
    }
};

struct Crossing {
    AffineHyperplane wall;
    Rational t;               // parameter on a + t (b - a)
    bool degenerate = false;  // the wall contains the whole segment
};

// Walls meeting the open segment (a, b), ordered by t then wall.
// Throws DomainError when an endpoint lies on a wall that does not contain the segment.
std::vector<Crossing> segment_crossings(const RatVec& a, const RatVec& b,
                                        const std::vector<AffineHyperplane>& walls);

}  // namespace magicwin

#endif
