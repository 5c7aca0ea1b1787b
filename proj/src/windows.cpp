#include "magicwin/windows.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "magicwin/linalg.hpp"

namespace magicwin {

namespace {

Rational frac(const Rational& x) { return x - Rational(floor_of(x)); }

}  // namespace

std::vector<WallFamily> restrict_walls(const GroupDatum& g,
                                       const std::vector<std::pair<IntVec, Rational>>& normals_and_bounds)
{
    auto basis = g.invariant_subspace_basis();
    std::set<WallFamily> out;
    for (const auto& [u, b] : normals_and_bounds) {
        IntVec r;
        for (const auto& v : basis) r.push_back(dot(u, v));
        std::int64_t gcd = 0;
        for (auto x : r) gcd = std::gcd(gcd, x);
        if (gcd == 0) throw DomainError("normal " + to_string(u) + " vanishes on the invariant subspace");
        Rational bound = b;
        for (auto& x : r) x /= gcd;
        if (canonical_sign(r) != r) {
            r = -r;
            bound = -bound;
        }
        for (std::int64_t k = 0; k < gcd; ++k) out.insert({r, frac((bound + k) / gcd)});
    }
    return {out.begin(), out.end()};
}

std::vector<WallFamily> zonotope_boundary_walls(const GroupDatum& g, const std::vector<IntVec>& generators)
{
    Zonotope z{g.rank(), generators};
    std::vector<std::pair<IntVec, Rational>> nb;
    for (const auto& f : facets(z)) nb.emplace_back(f.normal, Rational(f.support));
    return restrict_walls(g, nb);
}

WindowGeometry::WindowGeometry(Representation rep) : rep_(std::move(rep))
{
    zono_.dim = rep_.rank();
    zono_.generators = rep_.beta;
    if (!zono_.spans_ambient()) throw DomainError("zonotope of the dual weights does not span the weight space");
    facets_ = magicwin::facets(zono_);
    auto g = sample_generic_in_MW(zono_, rep_.group);
    if (!g) throw DomainError("no generic point in the invariant subspace");
    generic_ = *g;

    HalfSpaceSystem all = nabla();
    std::vector<std::pair<IntVec, Rational>> nb;
    for (std::size_t i = 0; i < facets_.size(); ++i) {
        HalfSpaceSystem others;
        others.dim = all.dim;
        for (std::size_t j = 0; j < facets_.size(); ++j)
            if (j != i) others.constraints.push_back(all.constraints[j]);
        const auto& h = all.constraints[i];
        auto res = lp_optimize(h.normal, others, Sense::Maximize);
        if (res.status == LpStatus::Unbounded || (res.status == LpStatus::Optimal && res.value > h.bound)) {
            irredundant_.push_back(i);
            nb.emplace_back(facets_[i].normal, h.bound);
        }
    }
    walls_ = restrict_walls(rep_.group, nb);
}

HalfSpaceSystem WindowGeometry::nabla() const
{
    HalfSpaceSystem s;
    s.dim = rep_.rank();
    for (const auto& f : facets_) s.add(to_rat(f.normal), Rational(rep_.eta(f.normal), 2));
    return s;
}

HalfSpaceSystem WindowGeometry::translated_nabla(const RatVec& delta) const
{
    HalfSpaceSystem s = nabla();
    for (auto& h : s.constraints) h.bound += dot(h.normal, delta);
    return s;
}

void WindowGeometry::require_invariant(const RatVec& v, const char* what) const
{
    if (v.size() != rep_.rank())
        throw DomainError(std::string(what) + " has dimension " + std::to_string(v.size()) + ", expected " +
                          std::to_string(rep_.rank()));
    if (!rep_.group.is_invariant(v))
        throw DomainError(std::string(what) + " " + to_string(v) + " is not Weyl-invariant");
}

std::vector<IntVec> WindowGeometry::window_points(const RatVec& delta, const std::optional<RatVec>& eps) const
{
    const auto& g = rep_.group;
    RatVec shift = delta - g.rho();
    HalfSpaceSystem s;
    s.dim = rep_.rank();
    for (const auto& f : facets_) {
        RatVec u = to_rat(f.normal);
        bool strict = false;
        if (eps) strict = dot(u, *eps) < 0;
        s.add(u, Rational(f.support, 2) + dot(u, shift), strict);
    }
    for (auto b : g.blocks())
        for (std::size_t i = 0; i + 1 < b.size; ++i) {
            RatVec u(s.dim, Rational(0));
            u[b.offset + i] = -1;
            u[b.offset + i + 1] = 1;
            s.add(u, Rational(0));
        }
    return lattice_points(s);
}

std::vector<IntVec> WindowGeometry::window_weights(const RatVec& delta, const std::optional<RatVec>& eps) const
{
    require_invariant(delta, "delta");
    if (eps) {
        require_invariant(*eps, "epsilon");
        for (const auto& f : facets_)
            if (dot(f.normal, *eps) == 0)
                throw DomainError("epsilon " + to_string(*eps) + " is not generic: it is orthogonal to facet normal " +
                                  to_string(f.normal));
    } else if (!boundary_free(delta)) {
        throw DomainError("delta " + to_string(delta) + " lies on the arrangement; supply a perturbation direction");
    }
    return window_points(delta, eps);
}

std::vector<IntVec> WindowGeometry::nabla_lattice_points(const RatVec& delta) const
{
    return lattice_points(translated_nabla(delta));
}

bool WindowGeometry::boundary_free(const RatVec& delta) const
{
    require_invariant(delta, "delta");
    auto sys = translated_nabla(delta);
    for (const auto& p : lattice_points(sys))
        if (sys.on_boundary(to_rat(p))) return false;
    return true;
}

std::vector<IntVec> WindowGeometry::orbit_window_oracle(const RatVec& delta) const
{
    require_invariant(delta, "delta");
    std::set<IntVec> out;
    for (const auto& chi : window_points(delta, std::nullopt))
        for (const auto& w : rep_.group.weyl_orbit(chi)) out.insert(w);
    return {out.begin(), out.end()};
}

bool WindowGeometry::on_arrangement(const RatVec& delta) const
{
    require_invariant(delta, "delta");
    RatVec c = rep_.group.invariant_coordinates(delta);
    for (const auto& w : walls_)
        if (is_integer(dot(w.normal, c) - w.offset)) return true;
    return false;
}

std::vector<Crossing> WindowGeometry::crossings(const RatVec& from, const RatVec& to) const
{
    require_invariant(from, "delta");
    require_invariant(to, "delta'");
    RatVec c0 = rep_.group.invariant_coordinates(from), c1 = rep_.group.invariant_coordinates(to);
    std::set<AffineHyperplane> hit;
    for (const auto& w : walls_) {
        Rational f0 = dot(w.normal, c0), f1 = dot(w.normal, c1);
        Rational lo = std::min(f0, f1), hi = std::max(f0, f1);
        for (Integer k = ceil_of(lo - w.offset); k <= floor_of(hi - w.offset); ++k)
            hit.insert(AffineHyperplane::make(to_rat(w.normal), w.offset + Rational(k)));
    }
    return segment_crossings(c0, c1, {hit.begin(), hit.end()});
}

std::optional<Rational> WindowGeometry::first_wall_parameter(const RatVec& delta, const RatVec& dir) const
{
    require_invariant(delta, "delta");
    require_invariant(dir, "direction");
    RatVec c = rep_.group.invariant_coordinates(delta), d = rep_.group.invariant_coordinates(dir);
    std::optional<Rational> best;
    for (const auto& w : walls_) {
        Rational f0 = dot(w.normal, c), slope = dot(w.normal, d);
        if (slope == 0) continue;
        Rational target = slope > 0 ? w.offset + Rational(floor_of(f0 - w.offset) + 1)
                                    : w.offset + Rational(ceil_of(f0 - w.offset) - 1);
        Rational s = (target - f0) / slope;
        if (!best || s < *best) best = s;
    }
    return best;
}

}  // namespace magicwin
