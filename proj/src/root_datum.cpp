#include "magicwin/root_datum.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace magicwin {

std::size_t GroupDatum::rank() const
{
    std::size_t r = torus_rank;
    for (int n : gl_factors) r += n;
    return r;
}

std::vector<GroupDatum::Block> GroupDatum::blocks() const
{
    std::vector<Block> out;
    std::size_t off = 0;
    for (int n : gl_factors) {
        out.push_back({off, static_cast<std::size_t>(n)});
        off += n;
    }
    return out;
}

RatVec GroupDatum::rho() const
{
    RatVec r(rank(), Rational(0));
    for (auto b : blocks())
        for (std::size_t i = 0; i < b.size; ++i)
            r[b.offset + i] = Rational(static_cast<long>(b.size) - 1 - 2 * static_cast<long>(i), 2);
    return r;
}

std::vector<IntVec> GroupDatum::positive_roots() const
{
    std::vector<IntVec> out;
    for (auto b : blocks())
        for (std::size_t i = 0; i < b.size; ++i)
            for (std::size_t j = i + 1; j < b.size; ++j) {
                IntVec v = zero();
                v[b.offset + i] = 1;
                v[b.offset + j] = -1;
                out.push_back(v);
            }
    return out;
}

std::vector<IntVec> GroupDatum::roots() const
{
    auto pos = positive_roots();
    std::vector<IntVec> out(pos);
    for (const auto& p : pos) out.push_back(-p);
    return out;
}

bool GroupDatum::is_dominant(const IntVec& v) const { return is_dominant(to_rat(v)); }

bool GroupDatum::is_dominant(const RatVec& v) const
{
    for (auto b : blocks())
        for (std::size_t i = 0; i + 1 < b.size; ++i)
            if (v[b.offset + i] < v[b.offset + i + 1]) return false;
    return true;
}

bool GroupDatum::is_antidominant(const IntVec& v) const { return is_dominant(-v); }

bool GroupDatum::is_invariant(const RatVec& v) const
{
    if (v.size() != rank()) return false;
    for (auto b : blocks())
        for (std::size_t i = 0; i + 1 < b.size; ++i)
            if (v[b.offset + i] != v[b.offset + i + 1]) return false;
    return true;
}

IntVec GroupDatum::w0_apply(const IntVec& v) const
{
    IntVec out(v);
    for (auto b : blocks()) std::reverse(out.begin() + b.offset, out.begin() + b.offset + b.size);
    return out;
}

IntVec GroupDatum::dominant_conjugate(const IntVec& v) const
{
    IntVec out(v);
    for (auto b : blocks())
        std::sort(out.begin() + b.offset, out.begin() + b.offset + b.size, std::greater<>());
    return out;
}

std::vector<IntVec> GroupDatum::weyl_orbit_all(const IntVec& v) const
{
    std::vector<IntVec> cur{v};
    for (auto b : blocks()) {
        std::vector<IntVec> next;
        std::vector<std::size_t> perm(b.size);
        std::iota(perm.begin(), perm.end(), 0);
        for (const auto& x : cur) {
            std::sort(perm.begin(), perm.end());
            do {
                IntVec y(x);
                for (std::size_t i = 0; i < b.size; ++i) y[b.offset + i] = x[b.offset + perm[i]];
                next.push_back(y);
            } while (std::next_permutation(perm.begin(), perm.end()));
        }
        cur = std::move(next);
    }
    return cur;
}

std::vector<IntVec> GroupDatum::weyl_orbit(const IntVec& v) const
{
    auto all = weyl_orbit_all(v);
    std::set<IntVec> s(all.begin(), all.end());
    return {s.begin(), s.end()};
}

std::size_t GroupDatum::weyl_order() const
{
    std::size_t w = 1;
    for (int n : gl_factors)
        for (int k = 2; k <= n; ++k) w *= k;
    return w;
}

std::vector<IntVec> GroupDatum::invariant_subspace_basis() const
{
    std::vector<IntVec> out;
    for (auto b : blocks()) {
        IntVec v = zero();
        for (std::size_t i = 0; i < b.size; ++i) v[b.offset + i] = 1;
        out.push_back(v);
    }
    for (std::size_t k = rank() - torus_rank; k < rank(); ++k) {
        IntVec v = zero();
        v[k] = 1;
        out.push_back(v);
    }
    return out;
}

RatVec GroupDatum::invariant_coordinates(const RatVec& v) const
{
    if (!is_invariant(v)) throw DomainError("vector " + to_string(v) + " is not Weyl-invariant");
    RatVec c;
    for (auto b : blocks()) c.push_back(v[b.offset]);
    for (std::size_t k = rank() - torus_rank; k < rank(); ++k) c.push_back(v[k]);
    return c;
}

std::optional<ShiftedWeight> dominant_shift(const GroupDatum& g, const IntVec& mu)
{
    if (mu.size() != g.rank()) throw DomainError("weight has wrong rank");
    // Work with 2(mu + rho), which is integral.
    RatVec rho = g.rho();
    IntVec s(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i) s[i] = 2 * mu[i] + to_int64(numerator(2 * rho[i]));
    int sign = 1;
    for (auto b : g.blocks()) {
        // insertion sort, decreasing, counting transpositions
        for (std::size_t i = 1; i < b.size; ++i)
            for (std::size_t j = i; j > 0 && s[b.offset + j - 1] < s[b.offset + j]; --j) {
                std::swap(s[b.offset + j - 1], s[b.offset + j]);
                sign = -sign;
            }
        for (std::size_t i = 0; i + 1 < b.size; ++i)
            if (s[b.offset + i] == s[b.offset + i + 1]) return std::nullopt;
    }
    IntVec out(mu.size());
    for (std::size_t i = 0; i < mu.size(); ++i)
        out[i] = (s[i] - to_int64(numerator(2 * rho[i]))) / 2;
    return ShiftedWeight{out, sign};
}

}  // namespace magicwin
