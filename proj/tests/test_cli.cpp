#include <doctest.h>

#include <set>
#include <sstream>

#include "magicwin/cli.hpp"
#include "magicwin/io.hpp"

using namespace magicwin;

namespace {

std::string fixture(const std::string& name) { return std::string(FIXTURE_DIR) + "/" + name; }

struct Run {
    int code;
    std::string out, err;
    Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    int code = run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

// Every scalar leaf is a string or a boolean: numbers never appear as JSON numbers.
bool numbers_are_strings(const Json& j)
{
    if (j.is_number()) return false;
    if (j.is_structured())
        for (const auto& x : j)
            if (!numbers_are_strings(x)) return false;
    return true;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check reports a quasi-symmetric representation")
{
    auto r = run({"check", fixture("gl2_sym3.json")});
    CHECK(r.code == 0);
    auto j = r.json();
    CHECK(j["command"].get<std::string>().rfind("check ", 0) == 0);
    CHECK(j["result"]["quasi_symmetric"] == true);
    CHECK(j["input_digest"].get<std::string>().size() == 16);
    CHECK(numbers_are_strings(j));
}

TEST_CASE("check names the offending line")
{
    auto r = run({"check", fixture("not_quasi_symmetric.json")});
    CHECK(r.code == 1);
    auto j = r.json();
    CHECK(j["result"]["offending_line"] == Json::array({"1", "0"}));
    CHECK(j["result"]["line_weight_sum"] == Json::array({"-1", "0"}));
}

TEST_CASE("parse and usage errors exit with code 2")
{
    CHECK(run({"window", fixture("gl2_sym3.json"), "--delta", "0.5,0.5"}).code == 2);
    CHECK(run({"window", fixture("gl2_sym3.json"), "--delta", "1/4"}).code == 2);
    CHECK(run({"nonsense"}).code == 2);
    CHECK(run({"window", fixture("missing.json"), "--delta", "1/4,1/4"}).code == 2);
    CHECK(run({"groupoid", fixture("gl2_sym3.json")}).code == 2);
}

TEST_CASE("domain errors exit with code 1")
{
    auto r = run({"window", fixture("gl2_sym3.json"), "--delta", "1/2,1/2"});
    CHECK(r.code == 1);
    CHECK_FALSE(r.err.empty());
    CHECK(run({"window", fixture("gl2_sym3.json"), "--delta", "1/4,0"}).code == 1);
    CHECK(run({"cross", fixture("gl2_sym3.json"), "--delta", "1/4,1/4", "--delta-prime", "3/4,3/4", "--ell", "2,1"}).code ==
          1);
}

TEST_CASE("window and cross outputs")
{
    auto w = run({"window", fixture("gl2_sym3.json"), "--delta", "1/4,1/4"});
    REQUIRE(w.code == 0);
    CHECK(w.json()["result"]["size"] == "12");
    auto c = run({"cross", fixture("gl2_sym3.json"), "--delta", "1/4,1/4", "--delta-prime", "3/4,3/4", "--ell", "1,1"});
    REQUIRE(c.code == 0);
    auto j = c.json();
    CHECK(j["result"]["determinant"] == "-1");
    CHECK(j["result"]["walls_crossed"] == "1");
    CHECK(j["result"]["rows"].size() == 12);
    CHECK(numbers_are_strings(j));
    CHECK(c.out.find("0.5") == std::string::npos);
}

TEST_CASE("outputs are deterministic")
{
    std::vector<std::vector<std::string>> cmds{
        {"facets", fixture("gl2_sym3.json")},
        {"walls", fixture("hilbert1.json")},
        {"cross", fixture("torus_rank1.json"), "--delta", "-1/4", "--delta-prime", "1/4", "--ell", "1"},
        {"quiver", fixture("a2.json"), "--qprime"},
        {"hilbert", "--n", "2", "--walls"},
    };
    for (const auto& cmd : cmds) {
        auto a = run(cmd), b = run(cmd);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
        CHECK(numbers_are_strings(a.json()));
    }
}

TEST_CASE("groupoid subcommand")
{
    auto w = run({"groupoid", fixture("gl2_sym3.json"), "--word", fixture("gl2_word.json")});
    REQUIRE(w.code == 0);
    auto rows = w.json()["result"]["rows"];
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t k = 0; k < rows[i].size(); ++k) CHECK(rows[i][k] == (i == k ? "1" : "0"));
    auto v = run({"groupoid", "--verify", fixture("hilbert1_groupoid.json")});
    CHECK(v.code == 0);
    CHECK(v.json()["result"]["all_passed"] == true);
}

TEST_CASE("quiver and hilbert subcommands")
{
    auto q = run({"quiver", fixture("a2.json"), "--qprime"});
    REQUIRE(q.code == 0);
    CHECK(q.json()["result"]["q_prime"]["weight_identity_holds"] == true);
    CHECK(q.json()["result"]["stability_generic"] == true);
    auto bad = run({"quiver", fixture("a2.json"), "--zeta", "1,-1"});
    CHECK(bad.json()["result"]["stability_generic"] == false);

    auto h = run({"hilbert", "--n", "3"});
    REQUIRE(h.code == 0);
    auto j = h.json()["result"];
    CHECK(j["supports_match_subset_formula"] == true);
    std::set<std::string> sup;
    for (const auto& f : j["facets"]) sup.insert(f["support"].get<std::string>());
    CHECK(sup == std::set<std::string>{"3", "5", "6"});
    CHECK(run({"hilbert", "--n", "0"}).code != 0);
}

}
