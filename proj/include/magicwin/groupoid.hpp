#ifndef MAGICWIN_GROUPOID_HPP
#define MAGICWIN_GROUPOID_HPP

#include <map>
#include <string>
#include <tuple>
#include <vector>

#include "magicwin/ktheory.hpp"

namespace magicwin {

struct Arrow {
    enum class Kind { Cross, Translate };
    Kind kind = Kind::Cross;
    RatVec from, to;       // the underlying arrow runs from -> to
    RatVec label;          // Cross only
    IntVec shift;          // Translate only: to = from + shift
    bool inverse = false;  // traverse to -> from

    const RatVec& start() const { return inverse ? to : from; }
    const RatVec& end() const { return inverse ? from : to; }
};

struct Word {
    RatVec start;
    std::vector<Arrow> arrows;
};

// Endpoints off the arrangement, l generic in M^W and transverse to each crossed wall.
bool edge_valid(const WindowGeometry& geom, const RatVec& delta, const RatVec& delta2, const RatVec& l);
// Number of walls separating the two vertices.
std::size_t separation_distance(const WindowGeometry& geom, const RatVec& delta, const RatVec& delta2);

// Evaluates arrows as basis changes, caching single-wall crossings.
class GroupoidEvaluator {
public:
    explicit GroupoidEvaluator(const WindowGeometry& geom) : geom_(geom) {}

    // Straight segment split between consecutive crossings; split in (0, 1) places
    // the intermediate vertices between crossing parameters.
    BasisMatrix cross(const RatVec& delta, const RatVec& delta2, const RatVec& l, const Rational& split = Rational(1, 2));
    BasisMatrix translate(const RatVec& delta, const IntVec& m);
    BasisMatrix arrow(const Arrow& a);
    BasisMatrix word(const Word& w);
    // Path through the chambers met by the segment, each step labelled by +l or -l,
    // whichever points across the wall in the direction of travel.
    BasisMatrix minimal_positive_path(const RatVec& delta, const RatVec& delta2, const RatVec& l,
                                      const Rational& split = Rational(1, 2));
    const WindowGeometry& geometry() const { return geom_; }

private:
    std::vector<RatVec> subdivision(const RatVec& delta, const RatVec& delta2, const Rational& split,
                                    std::vector<IntVec>* wall_normals = nullptr);
    const WindowGeometry& geom_;
    std::map<std::tuple<RatVec, RatVec, RatVec>, BasisMatrix> single_;
};

BasisMatrix word_to_matrix(const WindowGeometry& geom, const Word& w);

struct GroupoidFixture {
    std::vector<RatVec> vertices;
    std::vector<RatVec> labels;
    std::vector<IntVec> translations;
};

struct CongruenceCheck {
    std::string family;
    std::string detail;
    bool passed;
};

struct CongruenceReport {
    std::vector<CongruenceCheck> checks;
    bool all_passed() const;
    std::size_t count(const std::string& family) const;
    std::size_t failures(const std::string& family) const;
};

inline const std::vector<std::string>& congruence_families()
{
    static const std::vector<std::string> f{"identity_loops", "composition", "label_independence", "translation",
                                            "minimal_positive_path"};
    return f;
}

CongruenceReport verify_congruences(const WindowGeometry& geom, const GroupoidFixture& fx);

}  // namespace magicwin

#endif
