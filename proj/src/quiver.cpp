#include "magicwin/quiver.hpp"

#include <algorithm>

namespace magicwin {

void QuiverSpec::validate() const
{
    if (vertices < 1) throw ParseError("quiver needs at least one vertex");
    if (static_cast<int>(v.size()) != vertices || static_cast<int>(w.size()) != vertices)
        throw ParseError("dimension vectors must have one entry per vertex");
    for (int x : v)
        if (x < 0) throw ParseError("negative dimension vector entry");
    for (int x : w)
        if (x < 0) throw ParseError("negative framing entry");
    for (auto [a, b] : edges)
        if (a < 0 || b < 0 || a >= vertices || b >= vertices) throw ParseError("edge endpoint out of range");
    if (zeta && static_cast<int>(zeta->size()) != vertices) throw ParseError("zeta must have one entry per vertex");
}

void RepSpec::validate() const
{
    for (const auto& w : weights)
        if (w.size() != group.rank())
            throw ParseError("weight " + to_string(w) + " does not match group rank " + std::to_string(group.rank()));
    for (int n : group.gl_factors)
        if (n < 1) throw ParseError("GL factor sizes must be positive");
    if (group.torus_rank < 0) throw ParseError("negative torus rank");
    if (ell && ell->size() != group.rank()) throw ParseError("ell has the wrong dimension");
    if (delta && delta->size() != group.rank()) throw ParseError("delta has the wrong dimension");
}

std::vector<IntVec> RepSpec::base_weights() const { return symplectic ? symplectic_double(weights) : weights; }

std::vector<IntVec> RepSpec::effective_weights() const
{
    auto b = base_weights();
    return adjoin_adjoint ? magicwin::adjoin_adjoint(group, b) : b;
}

Representation RepSpec::representation() const
{
    validate();
    return Representation::from_x_weights(group, effective_weights());
}

std::vector<std::pair<int, int>> quiver_coordinates(const QuiverSpec& q)
{
    std::vector<std::pair<int, int>> out;
    for (int i = 0; i < q.vertices; ++i)
        for (int a = 0; a < q.v[i]; ++a) out.emplace_back(i, a);
    return out;
}

namespace {

std::vector<int> offsets(const QuiverSpec& q)
{
    std::vector<int> off(q.vertices + 1, 0);
    for (int i = 0; i < q.vertices; ++i) off[i + 1] = off[i] + q.v[i];
    return off;
}

}  // namespace

std::vector<IntVec> quiver_weights(const QuiverSpec& q)
{
    q.validate();
    auto off = offsets(q);
    const std::size_t rank = off.back();
    std::vector<IntVec> out;
    auto hom = [&](int src, int dst) {   // Hom(V_src, V_dst): e_{dst,a} - e_{src,b}
        for (int a = 0; a < q.v[dst]; ++a)
            for (int b = 0; b < q.v[src]; ++b) {
                IntVec x(rank, 0);
                x[off[dst] + a] += 1;
                x[off[src] + b] -= 1;
                out.push_back(x);
            }
    };
    for (auto [i, j] : q.edges) {
        hom(i, j);
        hom(j, i);
    }
    for (int i = 0; i < q.vertices; ++i)
        for (int k = 0; k < q.w[i]; ++k)
            for (int a = 0; a < q.v[i]; ++a) {
                IntVec x(rank, 0);
                x[off[i] + a] = 1;
                out.push_back(x);
                out.push_back(-x);
            }
    return out;
}

std::vector<IntVec> gauge_weights(const QuiverSpec& q)
{
    auto off = offsets(q);
    const std::size_t rank = off.back();
    std::vector<IntVec> out;
    for (int i = 0; i < q.vertices; ++i)
        for (int a = 0; a < q.v[i]; ++a)
            for (int b = 0; b < q.v[i]; ++b) {
                IntVec x(rank, 0);
                x[off[i] + a] += 1;
                x[off[i] + b] -= 1;
                out.push_back(x);
            }
    return out;
}

RepSpec nakajima_weights(const QuiverSpec& q)
{
    q.validate();
    RepSpec spec;
    for (int i = 0; i < q.vertices; ++i)
        if (q.v[i] > 0) spec.group.gl_factors.push_back(q.v[i]);
    if (spec.group.gl_factors.empty()) throw DomainError("dimension vector is zero");
    spec.weights = quiver_weights(q);
    spec.adjoin_adjoint = true;
    return spec;
}

QuiverSpec q_prime(const QuiverSpec& q)
{
    q.validate();
    auto coords = quiver_coordinates(q);
    auto off = offsets(q);
    QuiverSpec p;
    p.vertices = static_cast<int>(coords.size());
    for (const auto& [i, a] : coords) {
        p.v.push_back(1);
        p.w.push_back(q.w[i]);
    }
    std::vector<std::pair<int, int>> edges(q.edges);
    for (int i = 0; i < q.vertices; ++i) edges.emplace_back(i, i);
    // ordered pairs (alpha, beta): for a loop this gives a loop at each copy and
    // two edges between each pair of copies, matching both orientations of the loop
    for (auto [i, j] : edges)
        for (int a = 0; a < q.v[i]; ++a)
            for (int b = 0; b < q.v[j]; ++b) p.edges.emplace_back(off[i] + a, off[j] + b);
    if (q.zeta) p.zeta = zeta_prime(q, *q.zeta);
    return p;
}

RatVec zeta_prime(const QuiverSpec& q, const RatVec& zeta)
{
    RatVec out;
    for (const auto& [i, a] : quiver_coordinates(q)) out.push_back(zeta.at(i));
    return out;
}

RatVec theta_from_prime(const QuiverSpec& q, const RatVec& theta_prime)
{
    auto coords = quiver_coordinates(q);
    if (theta_prime.size() != coords.size()) throw DomainError("theta' has the wrong length");
    RatVec out(q.vertices, Rational(0));
    for (std::size_t k = 0; k < coords.size(); ++k) out[coords[k].first] += theta_prime[k];
    return out;
}

bool stability_generic(const RatVec& zeta, const std::vector<int>& v)
{
    if (zeta.size() != v.size()) throw DomainError("zeta and v have different lengths");
    std::vector<int> theta(v.size(), 0);
    for (;;) {
        std::size_t k = 0;
        while (k < v.size() && theta[k] == v[k]) theta[k++] = 0;
        if (k == v.size()) return true;
        ++theta[k];
        Rational s = 0;
        for (std::size_t i = 0; i < v.size(); ++i) s += theta[i] * zeta[i];
        if (s == 0) return false;
    }
}

RepSpec hilbert_example(int n)
{
    if (n < 1) throw DomainError("Hilbert scheme example needs n >= 1");
    QuiverSpec q;
    q.vertices = 1;
    q.edges = {{0, 0}};
    q.v = {n};
    q.w = {1};
    return nakajima_weights(q);
}

}  // namespace magicwin
