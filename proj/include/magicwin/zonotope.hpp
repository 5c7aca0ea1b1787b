#ifndef MAGICWIN_ZONOTOPE_HPP
#define MAGICWIN_ZONOTOPE_HPP

#include <optional>
#include <vector>

#include "magicwin/root_datum.hpp"

namespace magicwin {

// Minkowski sum of the segments [-beta, 0] over the generators.
struct Zonotope {
    std::size_t dim = 0;
    std::vector<IntVec> generators;

    // max over the zonotope of <u, x>
    std::int64_t support(const IntVec& u) const;
    Rational support(const RatVec& u) const;
    std::size_t span_rank() const;
    bool spans_ambient() const { return span_rank() == dim; }
    bool in_span(const RatVec& v) const;
};

struct Facet {
    IntVec normal;          // primitive outer normal
    std::int64_t support;   // max of <normal, x> over the zonotope
};

// Facets of the zonotope inside its linear span, both orientations, sorted by normal.
std::vector<Facet> facets(const Zonotope& z);
// One normal per +/- pair (first nonzero entry positive), sorted.
std::vector<IntVec> canonical_normals(const std::vector<Facet>& fs);

// l lies in the span and pairs nonzero with every facet normal.
bool is_generic(const Zonotope& z, const RatVec& l);
// For every maximal proper subspace V of the span spanned by generators, some
// lambda kills V but not l; decided by rank tests, independently of facets().
bool exists_destabilizing_lambda(const Zonotope& z, const RatVec& l);
// Signs of <u, l> over the canonical normals. Throws unless l is generic.
std::vector<int> chamber_signature(const Zonotope& z, const RatVec& l);
// A generic lattice point of M^W (inside the span), or nullopt if none exists.
std::optional<IntVec> sample_generic_in_MW(const Zonotope& z, const GroupDatum& g);

}  // namespace magicwin

#endif
