#include "magicwin/polyhedra.hpp"

#include <algorithm>

#include "magicwin/linalg.hpp"

namespace magicwin {

void HalfSpaceSystem::add(RatVec normal, Rational bound, bool strict)
{
    if (normal.size() != dim) throw DomainError("half-space has wrong dimension");
    constraints.push_back({std::move(normal), std::move(bound), strict});
}

bool HalfSpaceSystem::contains(const RatVec& x) const
{
    for (const auto& h : constraints) {
        Rational v = dot(h.normal, x);
        if (h.strict ? v >= h.bound : v > h.bound) return false;
    }
    return true;
}

bool HalfSpaceSystem::contains(const IntVec& x) const { return contains(to_rat(x)); }

bool HalfSpaceSystem::on_boundary(const RatVec& x) const
{
    if (!contains(x)) return false;
    for (const auto& h : constraints)
        if (dot(h.normal, x) == h.bound) return true;
    return false;
}

LpResult lp_optimize(const RatVec& objective, const HalfSpaceSystem& system, Sense sense)
{
    if (objective.size() != system.dim) throw DomainError("objective has wrong dimension");
    std::vector<LpRow> rows;
    rows.reserve(system.constraints.size());
    for (const auto& h : system.constraints) rows.push_back({h.normal, Relation::LessEq, h.bound});
    return solve_lp(objective, rows, sense == Sense::Maximize);
}

std::vector<IntVec> lattice_points(const HalfSpaceSystem& system)
{
    const std::size_t n = system.dim;
    std::vector<std::int64_t> lo(n), hi(n);
    for (std::size_t j = 0; j < n; ++j) {
        RatVec e(n, Rational(0));
        e[j] = 1;
        auto mn = lp_optimize(e, system, Sense::Minimize);
        if (mn.status == LpStatus::Infeasible) return {};
        auto mx = lp_optimize(e, system, Sense::Maximize);
        if (mn.status == LpStatus::Unbounded || mx.status == LpStatus::Unbounded)
            throw DomainError("polyhedron is unbounded");
        lo[j] = to_int64(ceil_of(mn.value));
        hi[j] = to_int64(floor_of(mx.value));
        if (lo[j] > hi[j]) return {};
    }
    std::vector<IntVec> out;
    if (n == 0) {
        if (system.contains(IntVec{})) out.push_back({});
        return out;
    }
    IntVec x(lo);
    for (;;) {
        if (system.contains(x)) out.push_back(x);
        std::size_t k = n;
        while (k > 0) {
            --k;
            if (x[k] < hi[k]) {
                ++x[k];
                for (std::size_t r = k + 1; r < n; ++r) x[r] = lo[r];
                break;
            }
            if (k == 0) return out;
        }
    }
}

AffineHyperplane AffineHyperplane::make(const RatVec& normal, const Rational& offset)
{
    IntVec p = primitive(normal);
    bool zero = std::all_of(p.begin(), p.end(), [](auto x) { return x == 0; });
    if (zero) throw DomainError("hyperplane with zero normal");
    IntVec c = canonical_sign(p);
    // scale factor s with c = s * normal
    std::size_t k = 0;
    while (normal[k] == 0) ++k;
    Rational s = Rational(c[k]) / normal[k];
    return {c, s * offset};
}

std::vector<Crossing> segment_crossings(const RatVec& a, const RatVec& b,
                                        const std::vector<AffineHyperplane>& walls)
{
    std::vector<Crossing> out;
    if (a == b) return out;
    for (const auto& w : walls) {
        Rational fa = w.eval(a), fb = w.eval(b);
        if (fa == 0 && fb == 0) {
            out.push_back({w, Rational(0), true});
            continue;
        }
        if (fa == 0 || fb == 0)
            throw DomainError("segment endpoint lies on a wall");
        if ((fa < 0) == (fb < 0)) continue;
        out.push_back({w, fa / (fa - fb), false});
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) {
        if (x.t != y.t) return x.t < y.t;
        return x.wall < y.wall;
    });
    out.erase(std::unique(out.begin(), out.end(),
                          [](const Crossing& x, const Crossing& y) { return x.wall == y.wall; }),
              out.end());
    return out;
}

}  // namespace magicwin
