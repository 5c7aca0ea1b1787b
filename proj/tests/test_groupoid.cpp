#include <doctest.h>

#include "magicwin/groupoid.hpp"
#include "magicwin/io.hpp"
#include "magicwin/quiver.hpp"

using namespace magicwin;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

RatVec one(const Rational& t) { return {t}; }

}  // namespace

TEST_SUITE("groupoid") {

TEST_CASE("edge validity and separation")
{
    WindowGeometry geom(hilbert_example(1).representation());
    CHECK(edge_valid(geom, one(Rational(-1, 4)), one(Rational(3, 4)), one(Rational(1))));
    CHECK_FALSE(edge_valid(geom, one(Rational(1, 2)), one(Rational(3, 4)), one(Rational(1))));
    CHECK_FALSE(edge_valid(geom, one(Rational(1, 4)), one(Rational(3, 4)), one(Rational(0))));
    CHECK(separation_distance(geom, one(Rational(1, 5)), one(Rational(7, 4))) == 2);
    CHECK(separation_distance(geom, one(Rational(7, 4)), one(Rational(1, 5))) == 2);
    CHECK(separation_distance(geom, one(Rational(1, 5)), one(Rational(2, 5))) == 0);
}

TEST_CASE("the empty word is the identity on its start window")
{
    WindowGeometry geom(hilbert_example(1).representation());
    auto m = word_to_matrix(geom, {one(Rational(1, 5)), {}});
    CHECK(m.is_identity());
    CHECK(m.source == std::vector<IntVec>{{0}});
}

TEST_CASE("multi-wall crossings compose single crossings at any split")
{
    WindowGeometry geom(hilbert_example(1).representation());
    GroupoidEvaluator ev(geom);
    RatVec l = one(Rational(1));
    auto a = one(Rational(1, 5)), b = one(Rational(7, 4));
    auto direct = ev.cross(a, b, l);
    auto stepwise = compose(wall_cross_matrix(geom, one(Rational(1)), b, l), wall_cross_matrix(geom, a, one(Rational(1)), l));
    CHECK(direct.entries == stepwise.entries);
    CHECK(ev.cross(a, b, l, Rational(1, 3)).entries == direct.entries);
    CHECK(compose(ev.cross(b, a, l), direct).is_identity());
}

TEST_CASE("Hilbert scheme of one point: all congruence families hold")
{
    auto j = parse_json(read_file(fixture("hilbert1_groupoid.json")));
    WindowGeometry geom(rep_from_json(j.at("rep")).representation());
    auto fx = fixture_from_json(j);
    auto report = verify_congruences(geom, fx);
    for (const auto& fam : congruence_families()) {
        CHECK_MESSAGE(report.count(fam) > 0, fam);
        CHECK_MESSAGE(report.failures(fam) == 0, fam);
    }
    CHECK(report.all_passed());
}

TEST_CASE("GL2 word from a file returns to the identity")
{
    auto rep = rep_from_json(parse_json(read_file(fixture("gl2_sym3.json"))));
    WindowGeometry geom(rep.representation());
    auto w = word_from_json(parse_json(read_file(fixture("gl2_word.json"))));
    REQUIRE(w.arrows.size() == 2);
    CHECK(word_to_matrix(geom, w).is_identity());
}

TEST_CASE("words with mismatched endpoints are rejected")
{
    WindowGeometry geom(hilbert_example(1).representation());
    Arrow a;
    a.kind = Arrow::Kind::Cross;
    a.from = one(Rational(1, 5));
    a.to = one(Rational(7, 10));
    a.label = one(Rational(1));
    Word w{one(Rational(1, 4)), {a}};
    CHECK_THROWS_AS(word_to_matrix(geom, w), DomainError);
    a.inverse = true;
    Word v{one(Rational(7, 10)), {a}};
    auto m = word_to_matrix(geom, v);
    CHECK(m.source == std::vector<IntVec>{{1}});
    CHECK(m.target == std::vector<IntVec>{{0}});
}

}
