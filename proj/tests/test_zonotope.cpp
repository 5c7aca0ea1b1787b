#include <doctest.h>

#include "magicwin/quiver.hpp"
#include "magicwin/zonotope.hpp"
#include "oracles.hpp"
#include "random_fixtures.hpp"

using namespace magicwin;

namespace {

Representation gl2_sym3()
{
    return Representation::from_x_weights({{2}, 0}, symplectic_double({{3, 0}, {2, 1}, {1, 2}, {0, 3}}));
}

bool in_by_facets(const std::vector<Facet>& fs, const IntVec& p)
{
    for (const auto& f : fs)
        if (dot(f.normal, p) > f.support) return false;
    return true;
}

}  // namespace

TEST_SUITE("zonotope") {

TEST_CASE("facets of the GL2 symplectic cubic example")
{
    auto rep = gl2_sym3();
    Zonotope z{2, rep.beta};
    auto fs = facets(z);
    REQUIRE(fs.size() == 8);
    std::map<IntVec, std::int64_t> sup;
    for (const auto& f : fs) sup[f.normal] = f.support;
    CHECK(sup[IntVec{1, 0}] == 6);
    CHECK(sup[IntVec{0, 1}] == 6);
    CHECK(sup[IntVec{-1, 0}] == 6);
    CHECK(sup[IntVec{2, -1}] == 12);
    CHECK(sup[IntVec{-1, 2}] == 12);
    CHECK(sup[IntVec{1, -2}] == 12);
    CHECK(canonical_normals(fs) == std::vector<IntVec>{{0, 1}, {1, -2}, {1, 0}, {2, -1}});
    for (const auto& f : fs) CHECK(f.support == oracle::support(rep.beta, f.normal));
}

TEST_CASE("facet description cuts out the same lattice points as the segment sum")
{
    fixtures::Generator gen(41);
    for (int trial = 0; trial < 25; ++trial) {
        auto f = gen.next();
        const auto& z = f.geom->zonotope();
        if (z.dim > 2 && z.generators.size() > 8) continue;
        auto pts = oracle::subset_sums(z.generators, z.dim);
        IntVec lo(z.dim, 0), hi(z.dim, 0);
        for (const auto& p : pts)
            for (std::size_t i = 0; i < z.dim; ++i) {
                lo[i] = std::min(lo[i], p[i]);
                hi[i] = std::max(hi[i], p[i]);
            }
        IntVec p(lo);
        for (;;) {
            CHECK_MESSAGE(in_by_facets(f.geom->facets(), p) == oracle::in_zonotope(z.generators, to_rat(p)), f.describe);
            std::size_t k = 0;
            while (k < z.dim && p[k] == hi[k]) p[k] = lo[k], ++k;
            if (k == z.dim) break;
            ++p[k];
        }
    }
}

TEST_CASE("every facet spans a codimension-one face")
{
    fixtures::Generator gen(43);
    for (int trial = 0; trial < 30; ++trial) {
        auto f = gen.next();
        const auto& z = f.geom->zonotope();
        for (const auto& fc : f.geom->facets()) {
            std::vector<RatVec> along;
            for (const auto& b : z.generators)
                if (dot(fc.normal, b) == 0) along.push_back(to_rat(b));
            CHECK(rank_of(along) + 1 == z.span_rank());
            CHECK(fc.support == oracle::support(z.generators, fc.normal));
        }
    }
}

TEST_CASE("Hilbert scheme supports follow the subset-size formula")
{
    for (int n = 1; n <= 4; ++n) {
        auto spec = hilbert_example(n);
        auto rep = Representation::from_x_weights(spec.group, spec.base_weights());
        Zonotope z{static_cast<std::size_t>(n), rep.beta};
        auto fs = facets(z);
        CHECK(fs.size() == static_cast<std::size_t>((1 << (n + 1)) - 2));
        for (const auto& f : fs) {
            std::int64_t s = 0;
            for (auto c : f.normal) {
                CHECK((c == 0 || c == 1 || c == -1));
                s += c != 0;
            }
            CHECK(f.support == s + 2 * s * (n - s));
        }
    }
}

TEST_CASE("genericity agrees with the destabilizing-subspace test")
{
    fixtures::Generator gen(47);
    for (int trial = 0; trial < 60; ++trial) {
        auto f = gen.next();
        const auto& z = f.geom->zonotope();
        for (int k = 0; k < 5; ++k) {
            RatVec l = to_rat(gen.random_int(z.dim, 2));
            CHECK_MESSAGE(is_generic(z, l) == (z.in_span(l) && exists_destabilizing_lambda(z, l)), f.describe);
        }
        auto s = sample_generic_in_MW(z, f.rep.group);
        REQUIRE(s);
        CHECK(is_generic(z, to_rat(*s)));
        CHECK(f.rep.group.is_invariant(to_rat(*s)));
    }
}

TEST_CASE("genericity examples")
{
    auto rep = gl2_sym3();
    Zonotope z{2, rep.beta};
    CHECK(is_generic(z, {Rational(1), Rational(1)}));
    CHECK_FALSE(is_generic(z, {Rational(2), Rational(1)}));
    CHECK_FALSE(is_generic(z, {Rational(0), Rational(1)}));
    CHECK(sample_generic_in_MW(z, rep.group) == IntVec{1, 1});
    CHECK(chamber_signature(z, {Rational(1), Rational(1)}) == std::vector<int>{1, -1, 1, 1});
    CHECK_THROWS_AS(chamber_signature(z, {Rational(1), Rational(0)}), DomainError);
}

}
