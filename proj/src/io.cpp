#include "magicwin/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace magicwin {

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ParseError("cannot read file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
}

std::string digest(const std::string& bytes)
{
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

Rational rational_from_json(const Json& j)
{
    if (j.is_number_integer()) return Rational(j.get<long long>());
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw ParseError("expected an integer or a \"p/q\" string, got " + j.dump());
}

RatVec ratvec_from_json(const Json& j)
{
    if (j.is_string()) return parse_rat_list(j.get<std::string>());
    if (!j.is_array()) throw ParseError("expected a vector, got " + j.dump());
    RatVec out;
    for (const auto& x : j) out.push_back(rational_from_json(x));
    return out;
}

IntVec intvec_from_json(const Json& j)
{
    if (j.is_string()) return parse_int_list(j.get<std::string>());
    if (!j.is_array()) throw ParseError("expected an integer vector, got " + j.dump());
    IntVec out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw ParseError("expected an integer, got " + x.dump());
        out.push_back(x.get<std::int64_t>());
    }
    return out;
}

namespace {

const Json& member(const Json& j, const char* key)
{
    if (!j.is_object() || !j.contains(key)) throw ParseError(std::string("missing field '") + key + "'");
    return j.at(key);
}

bool flag(const Json& j, const char* key)
{
    if (!j.contains(key)) return false;
    if (!j.at(key).is_boolean()) throw ParseError(std::string("field '") + key + "' must be a boolean");
    return j.at(key).get<bool>();
}

int small_int(const Json& j, const char* what)
{
    if (!j.is_number_integer()) throw ParseError(std::string(what) + " must be an integer");
    auto x = j.get<long long>();
    if (x < 0 || x > 1000) throw ParseError(std::string(what) + " out of range");
    return static_cast<int>(x);
}

}  // namespace

RepSpec rep_from_json(const Json& j)
{
    if (j.is_object() && j.contains("quiver")) {
        RepSpec spec = nakajima_weights(quiver_from_json(j.at("quiver")));
        if (j.contains("ell")) spec.ell = ratvec_from_json(j.at("ell"));
        if (j.contains("delta")) spec.delta = ratvec_from_json(j.at("delta"));
        spec.validate();
        return spec;
    }
    RepSpec spec;
    const Json& g = member(j, "group");
    if (g.contains("gl"))
        for (const auto& n : g.at("gl")) spec.group.gl_factors.push_back(small_int(n, "GL factor"));
    if (g.contains("torus")) spec.group.torus_rank = small_int(g.at("torus"), "torus rank");
    const Json& ws = member(j, "weights");
    if (!ws.is_array()) throw ParseError("'weights' must be a list");
    for (const auto& w : ws) spec.weights.push_back(intvec_from_json(w));
    spec.symplectic = flag(j, "symplectic");
    spec.adjoin_adjoint = flag(j, "adjoint");
    if (j.contains("ell")) spec.ell = ratvec_from_json(j.at("ell"));
    if (j.contains("delta")) spec.delta = ratvec_from_json(j.at("delta"));
    spec.validate();
    return spec;
}

QuiverSpec quiver_from_json(const Json& j)
{
    QuiverSpec q;
    q.vertices = small_int(member(j, "vertices"), "vertex count");
    if (j.contains("edges"))
        for (const auto& e : j.at("edges")) {
            if (!e.is_array() || e.size() != 2) throw ParseError("edges are pairs of vertex indices");
            q.edges.emplace_back(small_int(e[0], "edge endpoint"), small_int(e[1], "edge endpoint"));
        }
    for (const auto& x : member(j, "v")) q.v.push_back(small_int(x, "v entry"));
    for (const auto& x : member(j, "w")) q.w.push_back(small_int(x, "w entry"));
    if (j.contains("zeta")) q.zeta = ratvec_from_json(j.at("zeta"));
    q.validate();
    return q;
}

Word word_from_json(const Json& j)
{
    Word w;
    w.start = ratvec_from_json(member(j, "start"));
    RatVec cur = w.start;
    for (const auto& a : member(j, "arrows")) {
        Arrow ar;
        std::string kind = member(a, "kind").get<std::string>();
        ar.inverse = flag(a, "inverse");
        RatVec other;
        if (kind == "cross") {
            ar.kind = Arrow::Kind::Cross;
            ar.label = ratvec_from_json(member(a, "ell"));
            other = ratvec_from_json(member(a, "to"));
        } else if (kind == "translate") {
            ar.kind = Arrow::Kind::Translate;
            ar.shift = intvec_from_json(member(a, "m"));
            if (ar.shift.size() != cur.size()) throw ParseError("translation has the wrong dimension");
            other = ar.inverse ? cur - to_rat(ar.shift) : cur + to_rat(ar.shift);
        } else {
            throw ParseError("unknown arrow kind '" + kind + "'");
        }
        // an inverse arrow is the formal inverse of other -> cur
        if (ar.inverse) {
            ar.from = other;
            ar.to = cur;
        } else {
            ar.from = cur;
            ar.to = other;
        }
        cur = other;
        w.arrows.push_back(ar);
    }
    return w;
}

GroupoidFixture fixture_from_json(const Json& j)
{
    GroupoidFixture fx;
    for (const auto& v : member(j, "vertices")) fx.vertices.push_back(ratvec_from_json(v));
    for (const auto& l : member(j, "labels")) fx.labels.push_back(ratvec_from_json(l));
    if (j.contains("translations"))
        for (const auto& m : j.at("translations")) fx.translations.push_back(intvec_from_json(m));
    return fx;
}

Json to_json(const Rational& q) { return to_string(q); }
Json to_json(const Integer& z) { return z.str(); }

Json to_json(const RatVec& v)
{
    Json a = Json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

Json to_json(const IntVec& v)
{
    Json a = Json::array();
    for (auto x : v) a.push_back(std::to_string(x));
    return a;
}

Json to_json(const std::vector<IntVec>& vs)
{
    Json a = Json::array();
    for (const auto& v : vs) a.push_back(to_json(v));
    return a;
}

Json to_json(const KClass& cls)
{
    Json a = Json::array();
    for (const auto& [w, c] : cls) a.push_back({{"weight", to_json(w)}, {"coefficient", c.str()}});
    return a;
}

Json to_json(const BasisMatrix& m)
{
    Json rows = Json::array();
    for (const auto& r : m.entries) {
        Json row = Json::array();
        for (const auto& x : r) row.push_back(x.str());
        rows.push_back(row);
    }
    return {{"source_basis", to_json(m.source)}, {"target_basis", to_json(m.target)}, {"rows", rows}};
}

Json to_json(const GroupDatum& g)
{
    Json gl = Json::array();
    for (int n : g.gl_factors) gl.push_back(std::to_string(n));
    return {{"gl", gl}, {"torus", std::to_string(g.torus_rank)}};
}

}  // namespace magicwin
