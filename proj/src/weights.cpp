#include "magicwin/weights.hpp"

#include <algorithm>
#include <map>

#include "magicwin/linalg.hpp"

namespace magicwin {

namespace {

bool is_zero(const IntVec& v)
{
    return std::all_of(v.begin(), v.end(), [](auto x) { return x == 0; });
}

}  // namespace

QuasiSymmetryReport quasi_symmetry(const std::vector<IntVec>& weights)
{
    std::map<IntVec, IntVec> sums;
    for (const auto& w : weights) {
        if (is_zero(w)) continue;
        IntVec dir = canonical_sign(primitive(to_rat(w)));
        auto it = sums.find(dir);
        if (it == sums.end()) sums.emplace(dir, w);
        else it->second = it->second + w;
    }
    for (const auto& [dir, s] : sums)
        if (!is_zero(s)) return {false, dir, s};
    return {};
}

std::vector<IntVec> dual_weights(const std::vector<IntVec>& weights)
{
    std::vector<IntVec> out;
    for (const auto& w : weights) out.push_back(-w);
    return out;
}

std::vector<IntVec> symplectic_double(const std::vector<IntVec>& weights)
{
    std::vector<IntVec> out(weights);
    for (const auto& w : weights) out.push_back(-w);
    return out;
}

std::vector<IntVec> adjoin_adjoint(const GroupDatum& g, const std::vector<IntVec>& weights)
{
    std::vector<IntVec> out(weights);
    for (const auto& r : g.roots()) out.push_back(r);
    for (std::size_t i = 0; i < g.rank(); ++i) out.push_back(g.zero());
    return out;
}

bool is_weyl_stable(const GroupDatum& g, const std::vector<IntVec>& weights)
{
    std::vector<IntVec> sorted(weights);
    std::sort(sorted.begin(), sorted.end());
    for (auto b : g.blocks())
        for (std::size_t i = 0; i + 1 < b.size; ++i) {
            std::vector<IntVec> moved(weights);
            for (auto& w : moved) std::swap(w[b.offset + i], w[b.offset + i + 1]);
            std::sort(moved.begin(), moved.end());
            if (moved != sorted) return false;
        }
    return true;
}

std::int64_t eta(const VirtualClass& vc, const IntVec& lambda)
{
    std::int64_t s = 0;
    for (const auto& b : vc.plus) s += std::max<std::int64_t>(0, dot(lambda, b));
    for (const auto& b : vc.minus) s -= std::max<std::int64_t>(0, dot(lambda, b));
    return s;
}

Representation Representation::from_x_weights(const GroupDatum& g, const std::vector<IntVec>& x)
{
    Representation rep = from_dual_weights(g, dual_weights(x));
    rep.x_weights = x;
    return rep;
}

Representation Representation::from_dual_weights(const GroupDatum& g, const std::vector<IntVec>& dual)
{
    for (const auto& w : dual)
        if (w.size() != g.rank())
            throw DomainError("weight " + to_string(w) + " does not match group rank " + std::to_string(g.rank()));
    auto qs = quasi_symmetry(dual);
    if (!qs.ok)
        throw DomainError("representation is not quasi-symmetric: line " + to_string(qs.line) +
                          " has weight sum " + to_string(qs.line_sum));
    if (!is_weyl_stable(g, dual)) throw DomainError("weights are not stable under the Weyl group");
    Representation rep;
    rep.group = g;
    rep.x_weights = dual_weights(dual);
    for (const auto& w : dual)
        if (!is_zero(w)) rep.beta.push_back(w);
    return rep;
}

std::int64_t Representation::eta(const IntVec& lambda) const { return magicwin::eta(virtual_class(), lambda); }

}  // namespace magicwin
