#include <doctest.h>

#include <algorithm>

#include "magicwin/io.hpp"
#include "magicwin/quiver.hpp"

using namespace magicwin;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

QuiverSpec load(const std::string& name) { return quiver_from_json(parse_json(read_file(fixture(name)))); }

std::vector<IntVec> sorted(std::vector<IntVec> v)
{
    std::sort(v.begin(), v.end());
    return v;
}

// Weights of M_Q'(1, w') equal those of M_Q(v, w) plus two copies of the gauge algebra.
bool prime_identity(const QuiverSpec& q)
{
    auto lhs = quiver_weights(q_prime(q));
    auto rhs = quiver_weights(q);
    for (const auto& g : gauge_weights(q)) {
        rhs.push_back(g);
        rhs.push_back(-g);
    }
    return sorted(lhs) == sorted(rhs);
}

}  // namespace

TEST_SUITE("quiver") {

TEST_CASE("Hilbert scheme of one point")
{
    auto spec = hilbert_example(1);
    CHECK(sorted(spec.effective_weights()) == sorted({{0}, {0}, {1}, {-1}, {0}}));
    CHECK(spec.adjoin_adjoint);
}

TEST_CASE("Hilbert scheme of two points")
{
    auto spec = hilbert_example(2);
    auto w = spec.effective_weights();
    auto nonzero = std::count_if(w.begin(), w.end(), [](const IntVec& x) { return x != IntVec{0, 0}; });
    CHECK(nonzero == 10);
    CHECK(w.size() == 16);
    auto rep = spec.representation();
    CHECK(is_quasi_symmetric(rep.x_weights));
}

TEST_CASE("coordinates skip empty vertices")
{
    QuiverSpec q{3, {{0, 1}, {1, 2}}, {1, 0, 2}, {1, 0, 0}, std::nullopt};
    CHECK(quiver_coordinates(q) == std::vector<std::pair<int, int>>{{0, 0}, {2, 0}, {2, 1}});
    CHECK(gauge_weights(q).size() == 1 + 4);
}

TEST_CASE("the doubled quiver for a Jordan quiver of dimension one")
{
    auto q = load("jordan_v1.json");
    auto p = q_prime(q);
    CHECK(p.vertices == 1);
    CHECK(p.edges.size() == 2);
    CHECK(p.v == std::vector<int>{1});
    CHECK(prime_identity(q));
}

TEST_CASE("the weight identity holds for the sample quivers")
{
    for (auto name : {"jordan_v1.json", "jordan_v2.json", "jordan_v3.json", "a1.json", "a2.json"}) {
        auto q = load(name);
        CHECK_MESSAGE(prime_identity(q), name);
    }
    QuiverSpec cyc{3, {{0, 1}, {1, 2}, {2, 0}, {1, 1}}, {2, 1, 2}, {0, 1, 1}, std::nullopt};
    CHECK(prime_identity(cyc));
}

TEST_CASE("stability genericity")
{
    CHECK(stability_generic({Rational(1)}, {2}));
    CHECK_FALSE(stability_generic({Rational(0)}, {2}));
    CHECK(stability_generic({Rational(2), Rational(-1)}, {1, 1}));
    CHECK_FALSE(stability_generic({Rational(1), Rational(-1)}, {1, 1}));
    CHECK_FALSE(stability_generic({Rational(1), Rational(-1)}, {2, 1}));
    CHECK(stability_generic({Rational(2), Rational(-1)}, {1, 1}));
    CHECK_FALSE(stability_generic({Rational(1), Rational(-2)}, {2, 1}));
    CHECK(stability_generic({Rational(1), Rational(-2)}, {1, 1}));
}

TEST_CASE("stability parameters transfer to the doubled quiver")
{
    for (auto name : {"jordan_v2.json", "jordan_v3.json", "a2.json"}) {
        auto q = load(name);
        REQUIRE(q.zeta);
        auto zp = zeta_prime(q, *q.zeta);
        auto p = q_prime(q);
        CHECK(zp.size() == static_cast<std::size_t>(p.vertices));
        for (int mask = 1; mask < (1 << p.vertices); ++mask) {
            RatVec tp(p.vertices, Rational(0));
            for (int i = 0; i < p.vertices; ++i) tp[i] = (mask >> i) & 1;
            RatVec t = theta_from_prime(q, tp);
            CHECK(dot(tp, zp) == dot(t, *q.zeta));
        }
    }
}

TEST_CASE("invalid quivers are rejected")
{
    QuiverSpec q{2, {{0, 2}}, {1, 1}, {1, 0}, std::nullopt};
    CHECK_THROWS_AS(q.validate(), ParseError);
    QuiverSpec r{1, {}, {-1}, {1}, std::nullopt};
    CHECK_THROWS(r.validate());
}

}
