#include <doctest.h>

#include <random>

#include "magicwin/linalg.hpp"
#include "magicwin/polyhedra.hpp"
#include "oracles.hpp"

using namespace magicwin;

namespace {

HalfSpaceSystem box(std::size_t dim, std::int64_t lo, std::int64_t hi)
{
    HalfSpaceSystem s;
    s.dim = dim;
    for (std::size_t j = 0; j < dim; ++j) {
        RatVec e(dim, Rational(0));
        e[j] = 1;
        s.add(e, Rational(hi));
        e[j] = -1;
        s.add(e, Rational(-lo));
    }
    return s;
}

}  // namespace

TEST_SUITE("linear_core") {

TEST_CASE("rationals parse and print exactly")
{
    CHECK(parse_rational("1/2") == Rational(1, 2));
    CHECK(parse_rational(" -6/4 ") == Rational(-3, 2));
    CHECK(parse_rational("7") == Rational(7));
    CHECK(to_string(Rational(1, 2)) == "1/2");
    CHECK(to_string(Rational(-6, 3)) == "-2");
    CHECK_THROWS_AS(parse_rational("0.5"), ParseError);
    CHECK_THROWS_AS(parse_rational("1/0"), ParseError);
    CHECK_THROWS_AS(parse_rational("x"), ParseError);
    CHECK(parse_rat_list("1/2, 1/2") == RatVec{Rational(1, 2), Rational(1, 2)});
    CHECK(floor_of(Rational(-1, 2)) == -1);
    CHECK(ceil_of(Rational(-1, 2)) == 0);
    CHECK(floor_of(Rational(7, 2)) == 3);
}

TEST_CASE("lp: bounded, infeasible and unbounded programs")
{
    HalfSpaceSystem s;
    s.dim = 1;
    s.add({Rational(-1)}, Rational(-3));  // x >= 3
    auto r = lp_optimize({Rational(1)}, s, Sense::Minimize);
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 3);
    CHECK(lp_optimize({Rational(1)}, s, Sense::Maximize).status == LpStatus::Unbounded);

    HalfSpaceSystem bad;
    bad.dim = 1;
    bad.add({Rational(-1)}, Rational(-1));  // x >= 1
    bad.add({Rational(1)}, Rational(0));    // x <= 0
    CHECK(lp_optimize({Rational(1)}, bad, Sense::Minimize).status == LpStatus::Infeasible);
}

TEST_CASE("lp agrees with vertex enumeration on random planar polygons")
{
    std::mt19937 rng(7);
    auto rnd = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    for (int trial = 0; trial < 200; ++trial) {
        HalfSpaceSystem s = box(2, -5, 5);
        int extra = rnd(1, 4);
        for (int k = 0; k < extra; ++k) s.add({Rational(rnd(-3, 3)), Rational(rnd(-3, 3))}, Rational(rnd(-4, 6), rnd(1, 3)));
        RatVec c{Rational(rnd(-4, 4)), Rational(rnd(-4, 4))};
        // oracle: best feasible intersection of two constraint lines
        std::optional<Rational> best;
        const auto& h = s.constraints;
        for (std::size_t i = 0; i < h.size(); ++i)
            for (std::size_t j = i + 1; j < h.size(); ++j) {
                Rational det = h[i].normal[0] * h[j].normal[1] - h[i].normal[1] * h[j].normal[0];
                if (det == 0) continue;
                RatVec x{(h[i].bound * h[j].normal[1] - h[j].bound * h[i].normal[1]) / det,
                         (h[i].normal[0] * h[j].bound - h[j].normal[0] * h[i].bound) / det};
                if (!s.contains(x)) continue;
                Rational v = dot(c, x);
                if (!best || v > *best) best = v;
            }
        auto res = lp_optimize(c, s, Sense::Maximize);
        if (!best) {
            CHECK(res.status == LpStatus::Infeasible);
        } else {
            REQUIRE(res.status == LpStatus::Optimal);
            CHECK(res.value == *best);
            CHECK(s.contains(res.witness));
        }
    }
}

TEST_CASE("lp with equality rows and nonnegative variables")
{
    // minimize x + y subject to x + 2y = 4, x, y >= 0  ->  2 at (0, 2)
    std::vector<LpRow> rows{{{Rational(1), Rational(2)}, Relation::Equal, Rational(4)}};
    auto r = solve_lp({Rational(1), Rational(1)}, rows, false, {true, true});
    REQUIRE(r.status == LpStatus::Optimal);
    CHECK(r.value == 2);
    CHECK(r.witness == RatVec{Rational(0), Rational(2)});
    // redundant duplicate equality rows are tolerated
    rows.push_back(rows[0]);
    CHECK(solve_lp({Rational(1), Rational(1)}, rows, false, {true, true}).value == 2);
}

TEST_CASE("lattice points of the unit square, closed and half-open")
{
    auto sq = box(2, 0, 1);
    auto pts = lattice_points(sq);
    CHECK(pts == std::vector<IntVec>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
    sq.constraints[0].strict = true;   // x < 1
    CHECK(lattice_points(sq) == std::vector<IntVec>{{0, 0}, {0, 1}});
}

TEST_CASE("lattice points of an interval and of random polytopes against brute force")
{
    HalfSpaceSystem iv;
    iv.dim = 1;
    iv.add({Rational(1)}, Rational(7, 10) + Rational(1, 2));
    iv.add({Rational(-1)}, -(Rational(7, 10) - Rational(1, 2)));
    CHECK(lattice_points(iv) == std::vector<IntVec>{{1}});

    std::mt19937 rng(11);
    auto rnd = [&](int lo, int hi) { return lo + static_cast<int>(rng() % (hi - lo + 1)); };
    for (int trial = 0; trial < 50; ++trial) {
        HalfSpaceSystem s = box(3, -3, 3);
        for (int k = 0; k < 3; ++k)
            s.add({Rational(rnd(-2, 2)), Rational(rnd(-2, 2)), Rational(rnd(-2, 2))}, Rational(rnd(-3, 5), rnd(1, 2)),
                  rnd(0, 1) == 1);
        std::vector<IntVec> brute;
        for (int x = -3; x <= 3; ++x)
            for (int y = -3; y <= 3; ++y)
                for (int z = -3; z <= 3; ++z)
                    if (s.contains(IntVec{x, y, z})) brute.push_back({x, y, z});
        CHECK(lattice_points(s) == brute);
    }
}

TEST_CASE("unbounded polyhedron has no finite lattice point set")
{
    HalfSpaceSystem s;
    s.dim = 1;
    s.add({Rational(-1)}, Rational(0));
    CHECK_THROWS_AS(lattice_points(s), DomainError);
}

TEST_CASE("hyperplanes are normalized to primitive normals with positive lead")
{
    auto h = AffineHyperplane::make({Rational(-2), Rational(4)}, Rational(1));
    CHECK(h.normal == IntVec{1, -2});
    CHECK(h.offset == Rational(-1, 2));
    auto g = AffineHyperplane::make({Rational(1, 3), Rational(0)}, Rational(1));
    CHECK(g.normal == IntVec{1, 0});
    CHECK(g.offset == 3);
}

TEST_CASE("segment crossings")
{
    std::vector<AffineHyperplane> walls;
    for (int k = -2; k <= 4; ++k) walls.push_back(AffineHyperplane::make({Rational(1)}, Rational(2 * k + 1, 2)));
    auto cr = segment_crossings({Rational(1, 5)}, {Rational(23, 10)}, walls);
    REQUIRE(cr.size() == 2);
    CHECK(cr[0].wall.offset == Rational(1, 2));
    CHECK(cr[1].wall.offset == Rational(3, 2));
    CHECK(cr[0].t == Rational(1, 7));
    CHECK(cr[1].t == Rational(13, 21));
    CHECK(segment_crossings({Rational(1, 5)}, {Rational(1, 5)}, walls).empty());
    CHECK_THROWS_AS(segment_crossings({Rational(1, 2)}, {Rational(1)}, walls), DomainError);

    auto diag = AffineHyperplane::make({Rational(1), Rational(-1)}, Rational(0));
    auto deg = segment_crossings({Rational(0), Rational(0)}, {Rational(1), Rational(1)}, {diag});
    REQUIRE(deg.size() == 1);
    CHECK(deg[0].degenerate);
}

TEST_CASE("linear algebra helpers")
{
    std::vector<RatVec> rows{{Rational(1), Rational(1), Rational(0)}, {Rational(0), Rational(1), Rational(1)}};
    CHECK(rank_of(rows) == 2);
    auto ns = nullspace(rows, 3);
    REQUIRE(ns.size() == 1);
    CHECK(dot(rows[0], ns[0]) == 0);
    CHECK(dot(rows[1], ns[0]) == 0);
    CHECK(primitive({Rational(2, 3), Rational(-4, 3)}) == IntVec{1, -2});
    CHECK(canonical_sign({0, -1, 2}) == IntVec{0, 1, -2});
    CHECK(in_span(rows, {Rational(1), Rational(2), Rational(1)}));
    CHECK_FALSE(in_span(rows, {Rational(1), Rational(0), Rational(1)}));
    auto c = combination_for(rows, {Rational(1), Rational(3), Rational(2)});
    REQUIRE(c);
    CHECK(*c == RatVec{Rational(1), Rational(2)});
}

TEST_CASE("determinant and integer inverse against the Leibniz expansion")
{
    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        std::size_t n = 1 + rng() % 5;
        IntMatrix m(n, std::vector<Integer>(n));
        for (auto& row : m)
            for (auto& x : row) x = static_cast<int>(rng() % 7) - 3;
        CHECK(determinant(m) == oracle::leibniz_det(m));
    }
    IntMatrix u{{Integer(2), Integer(1)}, {Integer(1), Integer(1)}};
    auto inv = integer_inverse(u);
    CHECK(multiply(u, inv) == identity_matrix(2));
    IntMatrix s{{Integer(2), Integer(0)}, {Integer(0), Integer(1)}};
    CHECK_THROWS_AS(integer_inverse(s), DomainError);
}

}
