#include "magicwin/cli.hpp"

#include <set>

#include <CLI11.hpp>

#include "magicwin/io.hpp"

namespace magicwin {

namespace {

struct Inputs {
    std::string bytes;   // concatenated input files, for the digest
    std::string load(const std::string& path)
    {
        std::string s = read_file(path);
        bytes += s;
        return s;
    }
};

Json facet_list(const std::vector<Facet>& fs)
{
    Json a = Json::array();
    for (const auto& f : fs) a.push_back({{"normal", to_json(f.normal)}, {"support", std::to_string(f.support)}});
    return a;
}

Json wall_list(const std::vector<WallFamily>& ws)
{
    Json a = Json::array();
    for (const auto& w : ws) a.push_back({{"normal", to_json(w.normal)}, {"offset", to_json(w.offset)}});
    return a;
}

RatVec sized(RatVec v, std::size_t rank, const char* name)
{
    if (v.size() != rank)
        throw ParseError(std::string(name) + " has " + std::to_string(v.size()) + " entries, expected " + std::to_string(rank));
    return v;
}

RatVec pick(const std::string& flag_value, const std::optional<RatVec>& file_value, const char* name, std::size_t rank)
{
    if (!flag_value.empty()) return sized(parse_rat_list(flag_value), rank, name);
    if (file_value) return sized(*file_value, rank, name);
    throw ParseError(std::string("missing --") + name);
}

Json cmd_check(const RepSpec& spec, int& code)
{
    auto x = spec.effective_weights();
    auto dual = dual_weights(x);
    Json r;
    r["group"] = to_json(spec.group);
    r["rank"] = std::to_string(spec.group.rank());
    r["weight_count"] = std::to_string(x.size());
    auto qs = quasi_symmetry(dual);
    r["quasi_symmetric"] = qs.ok;
    if (!qs.ok) {
        r["offending_line"] = to_json(qs.line);
        r["line_weight_sum"] = to_json(qs.line_sum);
        code = 1;
        return r;
    }
    r["weyl_stable"] = is_weyl_stable(spec.group, dual);
    std::vector<IntVec> nonzero;
    for (const auto& b : dual)
        if (std::any_of(b.begin(), b.end(), [](auto c) { return c != 0; })) nonzero.push_back(b);
    Zonotope z{spec.group.rank(), nonzero};
    r["span_rank"] = std::to_string(z.span_rank());
    r["spans"] = z.spans_ambient();
    auto g = sample_generic_in_MW(z, spec.group);
    r["generic_point_in_invariants"] = g ? to_json(*g) : Json(nullptr);
    if (!r["weyl_stable"].get<bool>() || !z.spans_ambient() || !g) code = 1;
    return r;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Exact window, wall and wall-crossing computations for quasi-symmetric representations", "magicwin"};
    app.require_subcommand(1);
    std::string rep_path, delta_s, eps_s, from_s, to_s, ell_s, word_path, verify_path, zeta_s;
    int n = 0;
    bool want_walls = false, want_qprime = false;

    auto* check = app.add_subcommand("check", "quasi-symmetry, span and generic-point checks");
    check->add_option("rep", rep_path, "representation file")->required();
    auto* fac = app.add_subcommand("facets", "facet normals and supports of the weight zonotope");
    fac->add_option("rep", rep_path, "representation file")->required();
    auto* win = app.add_subcommand("window", "window basis at delta");
    win->add_option("rep", rep_path, "representation file")->required();
    win->add_option("--delta", delta_s, "point of M^W, comma list of p/q");
    win->add_option("--eps", eps_s, "perturbation direction for a half-open window");
    auto* wal = app.add_subcommand("walls", "wall families and segment crossings");
    wal->add_option("rep", rep_path, "representation file")->required();
    wal->add_option("--from", from_s, "segment start");
    wal->add_option("--to", to_s, "segment end");
    auto* crs = app.add_subcommand("cross", "wall-crossing matrix between two vertices");
    crs->add_option("rep", rep_path, "representation file")->required();
    crs->add_option("--delta", delta_s, "source vertex");
    crs->add_option("--delta-prime", to_s, "target vertex")->required();
    crs->add_option("--ell", ell_s, "label");
    auto* grp = app.add_subcommand("groupoid", "path matrices and congruence checks");
    grp->add_option("rep", rep_path, "representation file");
    grp->add_option("--word", word_path, "word file");
    grp->add_option("--verify", verify_path, "congruence fixture file");
    auto* qui = app.add_subcommand("quiver", "representation data of a framed quiver");
    qui->add_option("quiver", rep_path, "quiver file")->required();
    qui->add_flag("--qprime", want_qprime, "also build the unit-dimension quiver and check its weights");
    qui->add_option("--zeta", zeta_s, "stability parameter per vertex");
    auto* hil = app.add_subcommand("hilbert", "Hilbert scheme of points on the plane");
    hil->add_option("--n", n, "number of points")->required();
    hil->add_flag("--walls", want_walls, "diagonal wall sets per period");

    std::vector<std::string> store{"magicwin"};
    store.insert(store.end(), args.begin(), args.end());
    std::vector<char*> argv;
    for (auto& s : store) argv.push_back(s.data());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    std::string command;
    for (const auto& a : args) command += (command.empty() ? "" : " ") + a;
    Json report;
    report["command"] = command;
    Json notes = Json::array();
    Inputs in;
    int code = 0;
    try {
        Json result;
        auto load_rep = [&](const std::string& path) { return rep_from_json(parse_json(in.load(path))); };
        if (*check) {
            result = cmd_check(load_rep(rep_path), code);
        } else if (*fac) {
            RepSpec spec = load_rep(rep_path);
            auto base = Representation::from_x_weights(spec.group, spec.base_weights());
            result["facets"] = facet_list(facets(Zonotope{spec.group.rank(), base.beta}));
            if (spec.adjoin_adjoint) {
                auto full = spec.representation();
                result["facets_with_adjoint"] = facet_list(facets(Zonotope{spec.group.rank(), full.beta}));
                notes.push_back("'facets' is the zonotope of the representation without the adjoint summand; "
                                "'facets_with_adjoint' is the one used for windows");
            }
        } else if (*win) {
            RepSpec spec = load_rep(rep_path);
            WindowGeometry geom(spec.representation());
            RatVec delta = pick(delta_s, spec.delta, "delta", spec.group.rank());
            result["delta"] = to_json(delta);
            result["boundary_free"] = geom.boundary_free(delta);
            result["on_arrangement"] = geom.on_arrangement(delta);
            std::optional<RatVec> eps;
            if (!eps_s.empty()) {
                eps = sized(parse_rat_list(eps_s), spec.group.rank(), "eps");
                result["eps"] = to_json(*eps);
            }
            auto basis = geom.window_weights(delta, eps);
            result["size"] = std::to_string(basis.size());
            result["basis"] = to_json(basis);
        } else if (*wal) {
            RepSpec spec = load_rep(rep_path);
            WindowGeometry geom(spec.representation());
            result["invariant_basis"] = to_json(spec.group.invariant_subspace_basis());
            result["nabla_convention_walls"] = wall_list(geom.walls());
            notes.push_back("walls are {c : <normal, c> in offset + Z} in invariant-basis coordinates");
            if (spec.adjoin_adjoint) {
                auto base = Representation::from_x_weights(spec.group, spec.base_weights());
                result["sigma_convention_walls"] = wall_list(zonotope_boundary_walls(spec.group, base.beta));
                notes.push_back("sigma_convention_walls: boundary of delta + zonotope of X without the adjoint summand");
            }
            if (!from_s.empty() || !to_s.empty()) {
                RatVec a = sized(parse_rat_list(from_s), spec.group.rank(), "from"), b = sized(parse_rat_list(to_s), spec.group.rank(), "to");
                Json cr = Json::array();
                for (const auto& c : geom.crossings(a, b))
                    cr.push_back({{"t", to_json(c.t)}, {"normal", to_json(c.wall.normal)}, {"offset", to_json(c.wall.offset)}});
                result["crossings"] = cr;
                if (!geom.on_arrangement(a) && !geom.on_arrangement(b))
                    result["separation_distance"] = std::to_string(separation_distance(geom, a, b));
            }
        } else if (*crs) {
            RepSpec spec = load_rep(rep_path);
            WindowGeometry geom(spec.representation());
            RatVec a = pick(delta_s, spec.delta, "delta", spec.group.rank());
            RatVec b = sized(parse_rat_list(to_s), spec.group.rank(), "delta-prime");
            RatVec l = pick(ell_s, spec.ell, "ell", spec.group.rank());
            GroupoidEvaluator ev(geom);
            auto m = ev.cross(a, b, l);
            result = to_json(m);
            result["walls_crossed"] = std::to_string(geom.crossings(a, b).size());
            result["determinant"] = m.determinant().str();
            notes.push_back("rows are indexed by the target basis, columns by the source basis");
        } else if (*grp) {
            if (word_path.empty() == verify_path.empty()) throw ParseError("groupoid needs exactly one of --word, --verify");
            if (!word_path.empty()) {
                if (rep_path.empty()) throw ParseError("groupoid --word needs a representation file");
                RepSpec spec = load_rep(rep_path);
                WindowGeometry geom(spec.representation());
                Word w = word_from_json(parse_json(in.load(word_path)));
                result = to_json(word_to_matrix(geom, w));
                result["arrows"] = std::to_string(w.arrows.size());
            } else {
                Json fj = parse_json(in.load(verify_path));
                RepSpec spec = rep_path.empty() ? rep_from_json(fj.at("rep")) : load_rep(rep_path);
                WindowGeometry geom(spec.representation());
                auto rep = verify_congruences(geom, fixture_from_json(fj));
                Json fams = Json::object();
                for (const auto& f : congruence_families())
                    fams[f] = {{"checks", std::to_string(rep.count(f))}, {"failures", std::to_string(rep.failures(f))}};
                result["families"] = fams;
                Json failed = Json::array();
                for (const auto& c : rep.checks)
                    if (!c.passed) failed.push_back({{"family", c.family}, {"detail", c.detail}});
                result["failed"] = failed;
                result["all_passed"] = rep.all_passed();
                if (!rep.all_passed()) code = 1;
            }
        } else if (*qui) {
            QuiverSpec q = quiver_from_json(parse_json(in.load(rep_path)));
            if (!zeta_s.empty()) q.zeta = parse_rat_list(zeta_s);
            RepSpec spec = nakajima_weights(q);
            result["group"] = to_json(spec.group);
            result["weights"] = to_json(spec.weights);
            result["adjoint_weights"] = to_json(adjoin_adjoint(spec.group, {}));
            result["quasi_symmetric"] = is_quasi_symmetric(spec.effective_weights());
            if (q.zeta) {
                result["zeta"] = to_json(*q.zeta);
                result["stability_generic"] = stability_generic(*q.zeta, q.v);
                result["theta_range"] = "0 <= theta_i <= v_i, theta != 0";
            }
            if (want_qprime) {
                QuiverSpec p = q_prime(q);
                Json edges = Json::array();
                for (auto [a, b] : p.edges) edges.push_back({std::to_string(a), std::to_string(b)});
                Json qp = {{"vertices", std::to_string(p.vertices)}, {"edges", edges}};
                Json v = Json::array(), w = Json::array();
                for (int x : p.v) v.push_back(std::to_string(x));
                for (int x : p.w) w.push_back(std::to_string(x));
                qp["v"] = v;
                qp["w"] = w;
                if (p.zeta) qp["zeta"] = to_json(*p.zeta);
                auto lhs = quiver_weights(p);
                auto rhs = quiver_weights(q);
                for (int k = 0; k < 2; ++k)
                    for (const auto& g : gauge_weights(q)) rhs.push_back(k ? -g : g);
                std::sort(lhs.begin(), lhs.end());
                std::sort(rhs.begin(), rhs.end());
                qp["weight_identity_holds"] = lhs == rhs;
                result["q_prime"] = qp;
            }
        } else if (*hil) {
            in.bytes = command;
            RepSpec spec = hilbert_example(n);
            auto base = Representation::from_x_weights(spec.group, spec.base_weights());
            auto fs = facets(Zonotope{spec.group.rank(), base.beta});
            Json fl = Json::array();
            bool matches = true;
            for (const auto& f : fs) {
                std::int64_t s = 0;
                for (auto c : f.normal) s += c != 0;
                std::int64_t expected = s + 2 * s * (n - s);
                fl.push_back({{"normal", to_json(f.normal)}, {"support", std::to_string(f.support)},
                              {"subset_size", std::to_string(s)}});
                matches = matches && f.support == expected;
            }
            result["n"] = std::to_string(n);
            result["facets"] = fl;
            result["supports_match_subset_formula"] = matches;
            if (want_walls) {
                WindowGeometry geom(spec.representation());
                auto to_set = [](const std::vector<WallFamily>& ws) {
                    std::set<Rational> s;
                    for (const auto& w : ws) s.insert(w.offset);
                    return s;
                };
                auto sig = to_set(zonotope_boundary_walls(spec.group, base.beta));
                auto nab = to_set(geom.walls());
                Json sj = Json::array(), nj = Json::array();
                for (const auto& t : sig) sj.push_back(to_string(t));
                for (const auto& t : nab) nj.push_back(to_string(t));
                result["sigma_convention_walls"] = sj;
                result["nabla_convention_walls"] = nj;
                result["conventions_differ"] = sig != nab;
                result["roots_of_unity"] = "q^k != 1 for k = 1.." + std::to_string(n);
                notes.push_back("wall parameters t in [0,1) on the diagonal delta = t(1,...,1); q = exp(2 pi i (delta + i l))");
                notes.push_back("sigma convention: lattice points on the boundary of delta + zonotope(X); "
                                "nabla convention: lattice points on the boundary of delta + nabla for X plus the adjoint");
            }
        }
        report["input_digest"] = digest(in.bytes);
        report["result"] = result;
        report["notes"] = notes;
    } catch (const ParseError& e) {
        err << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        err << "domain error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    out << report.dump(2) << "\n";
    return code;
}

}  // namespace magicwin
