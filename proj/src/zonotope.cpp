#include "magicwin/zonotope.hpp"

#include <algorithm>
#include <set>

#include "magicwin/linalg.hpp"

namespace magicwin {

namespace {

std::vector<RatVec> as_rows(const std::vector<IntVec>& vs)
{
    std::vector<RatVec> out;
    for (const auto& v : vs) out.push_back(to_rat(v));
    return out;
}

// Distinct primitive directions of the nonzero generators.
std::vector<IntVec> directions(const Zonotope& z)
{
    std::set<IntVec> s;
    for (const auto& g : z.generators) {
        IntVec p = primitive(to_rat(g));
        if (std::any_of(p.begin(), p.end(), [](auto x) { return x != 0; })) s.insert(canonical_sign(p));
    }
    return {s.begin(), s.end()};
}

// Calls f on every k-subset of {0..n-1}.
template <typename F>
void for_each_subset(std::size_t n, std::size_t k, F&& f)
{
    std::vector<std::size_t> idx(k);
    for (std::size_t i = 0; i < k; ++i) idx[i] = i;
    if (k > n) return;
    for (;;) {
        f(idx);
        std::size_t i = k;
        while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
        if (i == 0) return;
        ++idx[i - 1];
        for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
    }
}

}  // namespace

std::int64_t Zonotope::support(const IntVec& u) const
{
    std::int64_t s = 0;
    for (const auto& b : generators) s += std::max<std::int64_t>(0, -dot(u, b));
    return s;
}

Rational Zonotope::support(const RatVec& u) const
{
    Rational s = 0;
    for (const auto& b : generators) {
        Rational p = dot(b, u);
        if (p < 0) s -= p;
    }
    return s;
}

std::size_t Zonotope::span_rank() const { return rank_of(generators); }

bool Zonotope::in_span(const RatVec& v) const { return magicwin::in_span(as_rows(generators), v); }

std::vector<Facet> facets(const Zonotope& z)
{
    auto dirs = directions(z);
    auto dir_rows = as_rows(dirs);
    std::size_t k = rank_of(dir_rows);
    if (k == 0) return {};
    auto annihilator = nullspace(dir_rows, z.dim);
    std::set<IntVec> normals;
    for_each_subset(dirs.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
        std::vector<RatVec> rows;
        for (auto i : idx) rows.push_back(dir_rows[i]);
        if (rank_of(rows) != k - 1) return;
        for (const auto& a : annihilator) rows.push_back(a);
        auto ns = nullspace(rows, z.dim);
        if (ns.size() != 1) return;
        IntVec u = primitive(ns[0]);
        normals.insert(u);
        normals.insert(-u);
    });
    std::vector<Facet> out;
    for (const auto& u : normals) out.push_back({u, z.support(u)});
    return out;
}

std::vector<IntVec> canonical_normals(const std::vector<Facet>& fs)
{
    std::set<IntVec> s;
    for (const auto& f : fs) s.insert(canonical_sign(f.normal));
    return {s.begin(), s.end()};
}

bool is_generic(const Zonotope& z, const RatVec& l)
{
    if (z.span_rank() == 0 || !z.in_span(l)) return false;
    for (const auto& f : facets(z))
        if (dot(f.normal, l) == 0) return false;
    return true;
}

bool exists_destabilizing_lambda(const Zonotope& z, const RatVec& l)
{
    auto dirs = as_rows(directions(z));
    std::size_t k = rank_of(dirs);
    if (k == 0) return false;
    bool ok = true;
    for_each_subset(dirs.size(), k - 1, [&](const std::vector<std::size_t>& idx) {
        if (!ok) return;
        std::vector<RatVec> rows;
        for (auto i : idx) rows.push_back(dirs[i]);
        if (rank_of(rows) != k - 1) return;
        // V = span(rows); a killing lambda with <lambda, l> != 0 exists iff l is not in V
        if (magicwin::in_span(rows, l)) ok = false;
    });
    return ok;
}

std::vector<int> chamber_signature(const Zonotope& z, const RatVec& l)
{
    if (!is_generic(z, l)) throw DomainError("point " + to_string(l) + " is not generic for the zonotope");
    std::vector<int> sig;
    for (const auto& u : canonical_normals(facets(z))) sig.push_back(dot(u, l) > 0 ? 1 : -1);
    return sig;
}

std::optional<IntVec> sample_generic_in_MW(const Zonotope& z, const GroupDatum& g)
{
    auto fs = facets(z);
    if (fs.empty()) return std::nullopt;
    // Basis of M^W intersected with the span.
    auto inv = as_rows(g.invariant_subspace_basis());
    auto ann = nullspace(as_rows(z.generators), z.dim);
    std::vector<RatVec> rows;
    // x = sum c_i inv_i must be orthogonal to the annihilator of the span
    for (const auto& a : ann) {
        RatVec r;
        for (const auto& b : inv) r.push_back(dot(a, b));
        rows.push_back(r);
    }
    auto coeff_basis = nullspace(rows, inv.size());
    std::vector<IntVec> basis;
    for (const auto& c : coeff_basis) {
        RatVec v(z.dim, Rational(0));
        for (std::size_t i = 0; i < inv.size(); ++i) v = v + c[i] * inv[i];
        basis.push_back(primitive(v));
    }
    if (basis.empty()) return std::nullopt;
    auto normals = canonical_normals(fs);
    for (const auto& u : normals) {
        bool kills = std::all_of(basis.begin(), basis.end(), [&](const IntVec& b) { return dot(u, b) == 0; });
        if (kills) return std::nullopt;
    }
    // Finitely many hyperplanes, none containing the subspace: a small point avoids all.
    std::size_t m = basis.size();
    for (std::int64_t radius = 1;; ++radius) {
        IntVec c(m, -radius);
        for (;;) {
            bool on_shell = std::any_of(c.begin(), c.end(), [&](auto x) { return x == radius || x == -radius; });
            if (on_shell) {
                IntVec x = z.dim ? IntVec(z.dim, 0) : IntVec{};
                for (std::size_t i = 0; i < m; ++i)
                    for (std::size_t j = 0; j < z.dim; ++j) x[j] -= c[i] * basis[i][j];
                bool generic = std::all_of(normals.begin(), normals.end(), [&](const IntVec& u) { return dot(u, x) != 0; });
                if (generic) return x;
            }
            std::size_t i = 0;
            while (i < m && c[i] == radius) c[i++] = -radius;
            if (i == m) break;
            ++c[i];
        }
    }
}

}  // namespace magicwin
