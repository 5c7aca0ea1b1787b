#ifndef MAGICWIN_WINDOWS_HPP
#define MAGICWIN_WINDOWS_HPP

#include <optional>
#include <utility>
#include <vector>

#include "magicwin/polyhedra.hpp"
#include "magicwin/weights.hpp"
#include "magicwin/zonotope.hpp"

namespace magicwin {

// Walls {c in M^W : <normal, c> in offset + Z}, in invariant-basis coordinates.
struct WallFamily {
    IntVec normal;    // primitive, first nonzero entry positive
    Rational offset;  // in [0, 1)
    bool operator==(const WallFamily&) const = default;
    bool operator<(const WallFamily& o) const { return normal != o.normal ? normal < o.normal : offset < o.offset; }
};

// Periodic arrangement generated by hyperplanes <u, delta> in bound + Z,
// restricted to M^W. Throws if some u vanishes on M^W.
std::vector<WallFamily> restrict_walls(const GroupDatum& g,
                                       const std::vector<std::pair<IntVec, Rational>>& normals_and_bounds);

// Walls where a translate of the full zonotope of the given generators has a
// lattice point on its boundary: <u, delta> in support(u) + Z.
std::vector<WallFamily> zonotope_boundary_walls(const GroupDatum& g, const std::vector<IntVec>& generators);

class WindowGeometry {
public:
    // Checks that the zonotope spans M and that M^W contains a generic point.
    explicit WindowGeometry(Representation rep);

    const Representation& rep() const { return rep_; }
    const GroupDatum& group() const { return rep_.group; }
    const Zonotope& zonotope() const { return zono_; }
    const std::vector<Facet>& facets() const { return facets_; }
    const IntVec& generic_point() const { return generic_; }

    // The polytope of lambda-pairings bounded by eta/2, one constraint per facet normal.
    HalfSpaceSystem nabla() const;
    HalfSpaceSystem translated_nabla(const RatVec& delta) const;
    // Indices into facets() whose constraints are facets of the nabla polytope.
    const std::vector<std::size_t>& irredundant() const { return irredundant_; }

    // Dominant lattice points of -rho + delta + (1/2) zonotope. Without eps the
    // polytope is closed and delta must be boundary-free; with eps a facet is kept
    // iff its outer normal pairs positively with eps.
    std::vector<IntVec> window_weights(const RatVec& delta, const std::optional<RatVec>& eps = std::nullopt) const;
    bool boundary_free(const RatVec& delta) const;
    // Weyl orbit of the closed window: the lattice points of delta + nabla.
    std::vector<IntVec> orbit_window_oracle(const RatVec& delta) const;

    const std::vector<WallFamily>& walls() const { return walls_; }
    bool on_arrangement(const RatVec& delta) const;
    // Distinct walls met by the open segment, with their parameters.
    std::vector<Crossing> crossings(const RatVec& from, const RatVec& to) const;
    // Smallest s > 0 with delta + s * dir on a wall.
    std::optional<Rational> first_wall_parameter(const RatVec& delta, const RatVec& dir) const;
    // Lattice points of delta + nabla computed straight from the half-spaces.
    std::vector<IntVec> nabla_lattice_points(const RatVec& delta) const;

    void require_invariant(const RatVec& v, const char* what) const;

private:
    std::vector<IntVec> window_points(const RatVec& delta, const std::optional<RatVec>& eps) const;

    Representation rep_;
    Zonotope zono_;
    std::vector<Facet> facets_;
    std::vector<std::size_t> irredundant_;
    std::vector<WallFamily> walls_;
    IntVec generic_;
};

}  // namespace magicwin

#endif
