#include "magicwin/groupoid.hpp"

#include <algorithm>

namespace magicwin {

namespace {

bool same(const BasisMatrix& a, const BasisMatrix& b)
{
    return a.source == b.source && a.target == b.target && a.entries == b.entries;
}

int sign_of(const Rational& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

bool collinear(const RatVec& a, const RatVec& b, const RatVec& c)
{
    return rank_of(std::vector<RatVec>{b - a, c - a}) <= 1;
}

}  // namespace

bool edge_valid(const WindowGeometry& geom, const RatVec& delta, const RatVec& delta2, const RatVec& l)
{
    const auto& g = geom.group();
    if (!g.is_invariant(delta) || !g.is_invariant(delta2) || !g.is_invariant(l)) return false;
    if (geom.on_arrangement(delta) || geom.on_arrangement(delta2)) return false;
    if (!is_generic(geom.zonotope(), l)) return false;
    RatVec lc = g.invariant_coordinates(l);
    for (const auto& c : geom.crossings(delta, delta2))
        if (c.degenerate || dot(c.wall.normal, lc) == 0) return false;
    return true;
}

std::size_t separation_distance(const WindowGeometry& geom, const RatVec& delta, const RatVec& delta2)
{
    if (geom.on_arrangement(delta) || geom.on_arrangement(delta2))
        throw DomainError("separation distance needs vertices off the arrangement");
    return geom.crossings(delta, delta2).size();
}

std::vector<RatVec> GroupoidEvaluator::subdivision(const RatVec& delta, const RatVec& delta2, const Rational& split,
                                                   std::vector<IntVec>* wall_normals)
{
    if (split <= 0 || split >= 1) throw DomainError("split parameter must lie in (0, 1)");
    auto cr = geom_.crossings(delta, delta2);
    for (std::size_t i = 0; i < cr.size(); ++i) {
        if (cr[i].degenerate) throw DomainError("segment lies inside a wall");
        if (i > 0 && cr[i].t == cr[i - 1].t)
            throw DomainError("segment meets several walls at one point; perturb the endpoints");
    }
    std::vector<RatVec> pts{delta};
    RatVec dir = delta2 - delta;
    for (std::size_t i = 0; i + 1 < cr.size(); ++i) {
        Rational t = cr[i].t + split * (cr[i + 1].t - cr[i].t);
        pts.push_back(delta + t * dir);
    }
    if (!cr.empty()) pts.push_back(delta2);
    if (wall_normals)
        for (const auto& c : cr) wall_normals->push_back(c.wall.normal);
    return pts;
}

BasisMatrix GroupoidEvaluator::cross(const RatVec& delta, const RatVec& delta2, const RatVec& l, const Rational& split)
{
    if (!edge_valid(geom_, delta, delta2, l))
        throw DomainError("invalid arrow " + to_string(delta) + " -> " + to_string(delta2) + " with label " +
                          to_string(l));
    auto pts = subdivision(delta, delta2, split);
    BasisMatrix out = identity_on(vertex_window(geom_, delta));
    for (std::size_t i = 1; i < pts.size(); ++i) {
        auto key = std::make_tuple(pts[i - 1], pts[i], l);
        auto it = single_.find(key);
        if (it == single_.end()) it = single_.emplace(key, wall_cross_matrix(geom_, pts[i - 1], pts[i], l)).first;
        out = compose(it->second, out);
    }
    return out;
}

BasisMatrix GroupoidEvaluator::minimal_positive_path(const RatVec& delta, const RatVec& delta2, const RatVec& l,
                                                     const Rational& split)
{
    std::vector<IntVec> normals;
    auto pts = subdivision(delta, delta2, split, &normals);
    const auto& g = geom_.group();
    RatVec lc = g.invariant_coordinates(l);
    BasisMatrix out = identity_on(vertex_window(geom_, delta));
    for (std::size_t i = 1; i < pts.size(); ++i) {
        RatVec step = g.invariant_coordinates(pts[i] - pts[i - 1]);
        int s = sign_of(dot(normals[i - 1], step)) * sign_of(dot(normals[i - 1], lc));
        if (s == 0) throw DomainError("label is parallel to a crossed wall");
        out = compose(cross(pts[i - 1], pts[i], Rational(s) * l), out);
    }
    return out;
}

BasisMatrix GroupoidEvaluator::translate(const RatVec& delta, const IntVec& m)
{
    return translation_matrix(geom_, delta, m);
}

BasisMatrix GroupoidEvaluator::arrow(const Arrow& a)
{
    BasisMatrix m;
    if (a.kind == Arrow::Kind::Cross) {
        m = cross(a.from, a.to, a.label);
    } else {
        if (a.to != a.from + to_rat(a.shift)) throw DomainError("translation arrow endpoints do not differ by its shift");
        m = translate(a.from, a.shift);
    }
    return a.inverse ? m.inverse() : m;
}

BasisMatrix GroupoidEvaluator::word(const Word& w)
{
    RatVec cur = w.start;
    BasisMatrix out = identity_on(vertex_window(geom_, cur));
    for (const auto& a : w.arrows) {
        if (a.start() != cur)
            throw DomainError("arrow starts at " + to_string(a.start()) + " but the path is at " + to_string(cur));
        out = compose(arrow(a), out);
        cur = a.end();
    }
    return out;
}

BasisMatrix word_to_matrix(const WindowGeometry& geom, const Word& w)
{
    GroupoidEvaluator ev(geom);
    return ev.word(w);
}

bool CongruenceReport::all_passed() const
{
    return std::all_of(checks.begin(), checks.end(), [](const CongruenceCheck& c) { return c.passed; });
}

std::size_t CongruenceReport::count(const std::string& family) const
{
    return std::count_if(checks.begin(), checks.end(), [&](const CongruenceCheck& c) { return c.family == family; });
}

std::size_t CongruenceReport::failures(const std::string& family) const
{
    return std::count_if(checks.begin(), checks.end(),
                         [&](const CongruenceCheck& c) { return c.family == family && !c.passed; });
}

CongruenceReport verify_congruences(const WindowGeometry& geom, const GroupoidFixture& fx)
{
    GroupoidEvaluator ev(geom);
    CongruenceReport rep;
    const auto& g = geom.group();
    auto record = [&](const std::string& family, const std::string& detail, auto&& check) {
        bool ok;
        std::string d = detail;
        try {
            ok = check();
        } catch (const std::exception& e) {
            ok = false;
            d += " [" + std::string(e.what()) + "]";
        }
        rep.checks.push_back({family, d, ok});
    };
    auto arrow_name = [](const RatVec& a, const RatVec& b, const RatVec& l) {
        return to_string(a) + "->" + to_string(b) + " l=" + to_string(l);
    };
    const auto& V = fx.vertices;
    const auto& L = fx.labels;

    for (const auto& v : V)
        for (const auto& l : L)
            record("identity_loops", arrow_name(v, v, l), [&] { return ev.cross(v, v, l).is_identity(); });

    for (const auto& a : V)
        for (const auto& b : V)
            for (const auto& c : V) {
                if (!collinear(a, b, c)) continue;
                for (const auto& l : L)
                    record("composition", to_string(a) + "->" + to_string(b) + "->" + to_string(c) + " l=" + to_string(l),
                           [&] { return same(compose(ev.cross(b, c, l), ev.cross(a, b, l)), ev.cross(a, c, l)); });
            }

    for (const auto& a : V)
        for (const auto& b : V) {
            auto cr = geom.crossings(a, b);
            for (std::size_t i = 0; i < L.size(); ++i)
                for (std::size_t j = i + 1; j < L.size(); ++j) {
                    RatVec ci = g.invariant_coordinates(L[i]), cj = g.invariant_coordinates(L[j]);
                    bool same_side = std::all_of(cr.begin(), cr.end(), [&](const Crossing& c) {
                        return sign_of(dot(c.wall.normal, ci)) == sign_of(dot(c.wall.normal, cj));
                    });
                    if (!same_side) continue;
                    record("label_independence", arrow_name(a, b, L[i]) + " vs " + to_string(L[j]),
                           [&] { return same(ev.cross(a, b, L[i]), ev.cross(a, b, L[j])); });
                }
        }

    for (const auto& m : fx.translations) {
        RatVec mr = to_rat(m);
        for (const auto& a : V)
            for (const auto& b : V)
                for (const auto& l : L)
                    record("translation", "commute " + arrow_name(a, b, l) + " m=" + to_string(m), [&] {
                        return same(compose(ev.translate(b, m), ev.cross(a, b, l)),
                                    compose(ev.cross(a + mr, b + mr, l), ev.translate(a, m)));
                    });
        for (const auto& m2 : fx.translations)
            for (const auto& a : V)
                record("translation", "additive at " + to_string(a) + " m=" + to_string(m) + " m'=" + to_string(m2), [&] {
                    return same(compose(ev.translate(a + mr, m2), ev.translate(a, m)), ev.translate(a, m + m2));
                });
    }

    for (const auto& a : V)
        for (const auto& b : V) {
            if (a == b) continue;
            for (const auto& l : L)
                record("minimal_positive_path", to_string(a) + "->" + to_string(b) + " l0=" + to_string(l), [&] {
                    auto p1 = ev.minimal_positive_path(a, b, l);
                    auto p2 = ev.minimal_positive_path(a, b, l, Rational(1, 3));
                    auto direct = ev.cross(a, b, generic_direction(geom, b - a));
                    return same(p1, p2) && same(p1, direct);
                });
        }
    return rep;
}

}  // namespace magicwin
