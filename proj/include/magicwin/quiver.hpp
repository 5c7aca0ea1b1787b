#ifndef MAGICWIN_QUIVER_HPP
#define MAGICWIN_QUIVER_HPP

#include <optional>
#include <utility>
#include <vector>

#include "magicwin/weights.hpp"

namespace magicwin {

struct QuiverSpec {
    int vertices = 0;
    std::vector<std::pair<int, int>> edges;   // undirected, loops allowed
    std::vector<int> v, w;
    std::optional<RatVec> zeta;

    void validate() const;
};

// Representation input: X weights (the supplied half when symplectic), flags, defaults.
struct RepSpec {
    GroupDatum group;
    std::vector<IntVec> weights;
    bool symplectic = false;       // supplied weights are doubled by their negatives
    bool adjoin_adjoint = false;   // append the adjoint representation
    std::optional<RatVec> ell, delta;

    void validate() const;
    std::vector<IntVec> base_weights() const;        // after doubling
    std::vector<IntVec> effective_weights() const;   // after doubling and the adjoint
    Representation representation() const;          // from effective_weights
};

// Coordinates are (vertex i, copy alpha) for vertices with v_i > 0, vertex-major.
std::vector<std::pair<int, int>> quiver_coordinates(const QuiverSpec& q);
// Weights of M_Q(v, w): both orientations of every edge plus the framing terms.
std::vector<IntVec> quiver_weights(const QuiverSpec& q);
// Weights of the gauge Lie algebra, sum of gl(v_i), Cartan zeros included.
std::vector<IntVec> gauge_weights(const QuiverSpec& q);
RepSpec nakajima_weights(const QuiverSpec& q);

// One vertex per coordinate, an extra loop at every original vertex, v' = 1.
QuiverSpec q_prime(const QuiverSpec& q);
RatVec zeta_prime(const QuiverSpec& q, const RatVec& zeta);
RatVec theta_from_prime(const QuiverSpec& q, const RatVec& theta_prime);

// theta . zeta != 0 for every theta in prod [0, v_i] other than 0.
bool stability_generic(const RatVec& zeta, const std::vector<int>& v);

RepSpec hilbert_example(int n);

}  // namespace magicwin

#endif
