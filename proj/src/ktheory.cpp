#include "magicwin/ktheory.hpp"

#include <algorithm>
#include <set>

namespace magicwin {

void add_scaled(KClass& into, const KClass& from, const Integer& scale)
{
    for (const auto& [w, c] : from) {
        Integer& slot = into[w];
        slot += scale * c;
        if (slot == 0) into.erase(w);
    }
}

void prune(KClass& cls)
{
    for (auto it = cls.begin(); it != cls.end();) it = it->second == 0 ? cls.erase(it) : std::next(it);
}

std::string to_string(const KClass& cls)
{
    if (cls.empty()) return "0";
    std::string s;
    for (const auto& [w, c] : cls) {
        if (!s.empty()) s += c < 0 ? " - " : " + ";
        else if (c < 0) s += "-";
        Integer a = abs(c);
        if (a != 1) s += a.str() + "*";
        s += "V" + magicwin::to_string(w);
    }
    return s;
}

KClass ch_to_kclass(const GroupDatum& g, const IntVec& nu)
{
    auto sh = dominant_shift(g, nu);
    if (!sh) return {};
    return {{sh->weight, Integer(sh->sign)}};
}

const char* to_string(ComplexKind k) { return k == ComplexKind::C ? "C" : "D"; }

KClass border_complex_class(ComplexKind kind, const IntVec& lambda, const IntVec& chi, const Representation& rep)
{
    const auto& g = rep.group;
    if (!g.is_antidominant(lambda)) throw DomainError("lambda " + to_string(lambda) + " is not antidominant");
    std::vector<IntVec> I;
    for (const auto& b : rep.beta) {
        auto p = dot(lambda, b);
        if (kind == ComplexKind::C ? p < 0 : p > 0) I.push_back(kind == ComplexKind::C ? -b : b);
    }
    if (I.size() > 24) throw DomainError("border complex too large");
    // signed count of each subset sum, then one character per distinct sum
    std::map<IntVec, Integer> sums;
    std::vector<std::pair<IntVec, int>> cur{{chi, 1}};
    for (const auto& b : I) {
        std::vector<std::pair<IntVec, int>> next(cur);
        for (const auto& [v, s] : cur) next.emplace_back(v + b, -s);
        // merge duplicates to keep the list small
        std::map<IntVec, int> merged;
        for (const auto& [v, s] : next) merged[v] += s;
        cur.clear();
        for (const auto& [v, s] : merged)
            if (s != 0) cur.emplace_back(v, s);
    }
    KClass out;
    for (const auto& [v, s] : cur) add_scaled(out, ch_to_kclass(g, v), Integer(s));
    return out;
}

namespace {

// Rows expressing sum b_i (-beta_i) = v with 0 <= b_i <= r (r a variable when r_var).
std::vector<LpRow> coefficient_rows(const RatVec& v, const Zonotope& z, std::size_t nvars, const Rational* r)
{
    std::vector<LpRow> rows;
    const std::size_t d = z.generators.size();
    for (std::size_t k = 0; k < z.dim; ++k) {
        RatVec c(nvars, Rational(0));
        for (std::size_t i = 0; i < d; ++i) c[i] = -z.generators[i][k];
        rows.push_back({c, Relation::Equal, v[k]});
    }
    for (std::size_t i = 0; i < d; ++i) {
        RatVec c(nvars, Rational(0));
        c[i] = 1;
        if (r) {
            rows.push_back({c, Relation::LessEq, *r});
        } else {
            c[d] = -1;
            rows.push_back({c, Relation::LessEq, Rational(0)});
        }
    }
    return rows;
}

}  // namespace

Rational r_of(const RatVec& v, const Zonotope& z)
{
    if (v.size() != z.dim) throw DomainError("vector has wrong dimension");
    const std::size_t d = z.generators.size();
    RatVec obj(d + 1, Rational(0));
    obj[d] = 1;
    auto res = solve_lp(obj, coefficient_rows(v, z, d + 1, nullptr), false, std::vector<bool>(d + 1, true));
    if (res.status != LpStatus::Optimal)
        throw DomainError("vector " + to_string(v) + " is not in the span of the weights");
    return res.value;
}

std::size_t p_of(const RatVec& v, const Rational& r, const Zonotope& z)
{
    if (r == 0) return 0;
    const std::size_t d = z.generators.size();
    auto rows = coefficient_rows(v, z, d, &r);
    std::size_t p = 0;
    for (std::size_t i = 0; i < d; ++i) {
        RatVec obj(d, Rational(0));
        obj[i] = 1;
        auto res = solve_lp(obj, rows, false, std::vector<bool>(d, true));
        if (res.status != LpStatus::Optimal) throw DomainError("r is below the optimum for " + to_string(v));
        if (res.value == r) ++p;
    }
    return p;
}

Separation separating_lambda(const RatVec& v, const WindowGeometry& geom, const RatVec& l)
{
    const auto& z = geom.zonotope();
    const auto& g = geom.group();
    Separation s;
    s.r = r_of(v, z);
    if (s.r == 0) throw DomainError("no separating lambda for the origin");
    std::optional<IntVec> best;
    for (const auto& f : geom.facets())
        if (dot(f.normal, v) == s.r * f.support && (!best || f.normal < *best)) best = f.normal;
    if (!best) throw InternalError("no facet is tight at " + to_string(v));
    s.tight_normal = *best;
    IntVec dom = g.dominant_conjugate(s.tight_normal);
    if (g.is_dominant(v) && dot(dom, v) != s.r * z.support(dom))
        throw InternalError("dominant conjugate of the tight normal is not tight");
    s.lambda = -dom;
    s.pairing = dot(s.lambda, l);
    if (s.pairing == 0) throw DomainError("l " + to_string(l) + " is orthogonal to lambda " + to_string(s.lambda));
    s.kind = s.pairing < 0 ? ComplexKind::D : ComplexKind::C;
    return s;
}

Rewriter::Rewriter(const WindowGeometry& geom, RatVec center, RatVec l)
    : geom_(geom), center_(std::move(center)), l_(std::move(l)), rho_(geom.group().rho())
{
}

RatVec Rewriter::shifted(const IntVec& chi) const { return to_rat(chi) + rho_ - center_; }

Rational Rewriter::r(const IntVec& chi)
{
    auto it = r_cache_.find(chi);
    if (it != r_cache_.end()) return it->second;
    Rational v = r_of(shifted(chi), geom_.zonotope());
    r_cache_.emplace(chi, v);
    return v;
}

Measure Rewriter::measure(const IntVec& chi)
{
    Rational rv = r(chi);
    auto it = p_cache_.find(chi);
    if (it == p_cache_.end()) it = p_cache_.emplace(chi, p_of(shifted(chi), rv, geom_.zonotope())).first;
    return {rv, it->second};
}

KClass Rewriter::relation(const IntVec& chi)
{
    auto cached = relation_cache_.find(chi);
    if (cached != relation_cache_.end()) return cached->second;
    auto sep = separating_lambda(shifted(chi), geom_, l_);
    KClass cls = border_complex_class(sep.kind, sep.lambda, chi, geom_.rep());
    auto self = cls.find(chi);
    if (self == cls.end() || self->second != 1)
        throw InternalError("border complex for " + to_string(chi) + " does not contain it once");
    cls.erase(self);
    KClass rel;
    add_scaled(rel, cls, Integer(-1));
    Measure top{0, 0};
    bool have_top = false;
    for (const auto& [mu, c] : rel) {
        Rational rm = r(mu);
        if (rm < sep.r) continue;
        if (!have_top) {
            top = measure(chi);
            have_top = true;
        }
        if (rm > sep.r || measure(mu) >= top)
            throw InternalError("rewrite of " + to_string(chi) + " does not decrease (r,p) at " + to_string(mu));
    }
    relation_cache_.emplace(chi, rel);
    return rel;
}

KClass Rewriter::express(const KClass& cls)
{
    KClass work(cls);
    prune(work);
    const Rational half(1, 2);
    for (std::size_t guard = 0;; ++guard) {
        if (guard > 1000000) throw InternalError("rewriting did not terminate");
        std::optional<IntVec> pick;
        Rational pick_r = 0;
        for (const auto& [chi, c] : work) {
            Rational rv = r(chi);
            if (rv > half && (!pick || rv > pick_r || (rv == pick_r && chi > *pick))) {
                pick = chi;
                pick_r = rv;
            }
        }
        if (!pick) return work;
        Integer c = work[*pick];
        work.erase(*pick);
        add_scaled(work, relation(*pick), c);
        ++steps_;
    }
}

RatVec perturbed_center(const WindowGeometry& geom, const RatVec& delta0, const RatVec& eps)
{
    Rational t = 1;
    if (auto s = geom.first_wall_parameter(delta0, eps); s && *s / 2 < t) t = *s / 2;
    return delta0 + t * eps;
}

std::vector<Integer> express_in_window(const KClass& cls, const RatVec& delta0, const RatVec& eps, const RatVec& l,
                                       const WindowGeometry& geom)
{
    auto basis = geom.window_weights(delta0, eps);
    RatVec center = perturbed_center(geom, delta0, eps);
    if (geom.window_weights(center) != basis)
        throw InternalError("perturbed window differs from the half-open window");
    Rewriter rw(geom, center, l);
    KClass out = rw.express(cls);
    std::vector<Integer> coords(basis.size(), Integer(0));
    for (const auto& [chi, c] : out) {
        auto it = std::lower_bound(basis.begin(), basis.end(), chi);
        if (it == basis.end() || *it != chi) throw InternalError("rewritten term " + to_string(chi) + " is outside the window");
        coords[it - basis.begin()] = c;
    }
    return coords;
}

bool BasisMatrix::is_identity() const { return source == target && entries == identity_matrix(source.size()); }

BasisMatrix BasisMatrix::inverse() const
{
    if (source.size() != target.size()) throw DomainError("basis change is not square");
    return {target, source, integer_inverse(entries)};
}

KClass BasisMatrix::column(const IntVec& chi) const
{
    auto it = std::lower_bound(source.begin(), source.end(), chi);
    if (it == source.end() || *it != chi) throw DomainError(to_string(chi) + " is not a source basis weight");
    std::size_t j = it - source.begin();
    KClass out;
    for (std::size_t i = 0; i < target.size(); ++i)
        if (entries[i][j] != 0) out[target[i]] = entries[i][j];
    return out;
}

BasisMatrix compose(const BasisMatrix& second, const BasisMatrix& first)
{
    if (first.target != second.source) throw DomainError("composed basis changes do not match");
    return {first.source, second.target, multiply(second.entries, first.entries)};
}

BasisMatrix identity_on(const std::vector<IntVec>& basis) { return {basis, basis, identity_matrix(basis.size())}; }

std::vector<IntVec> vertex_window(const WindowGeometry& geom, const RatVec& delta)
{
    if (geom.on_arrangement(delta)) throw DomainError("vertex " + to_string(delta) + " lies on the arrangement");
    return geom.window_weights(delta);
}

RatVec generic_direction(const WindowGeometry& geom, const RatVec& dir)
{
    const auto& fs = geom.facets();
    auto generic = [&](const RatVec& e) {
        return std::all_of(fs.begin(), fs.end(), [&](const Facet& f) { return dot(f.normal, e) != 0; });
    };
    if (generic(dir)) return dir;
    RatVec g = to_rat(geom.generic_point());
    for (Rational s = 1; s > Rational(1, 1 << 30); s /= 2) {
        RatVec e = dir + s * g;
        bool keeps = std::all_of(fs.begin(), fs.end(), [&](const Facet& f) {
            Rational a = dot(f.normal, dir), b = dot(f.normal, e);
            return a == 0 || (a > 0) == (b > 0);
        });
        if (keeps && generic(e)) return e;
    }
    throw InternalError("could not perturb direction " + to_string(dir));
}

BasisMatrix wall_cross_matrix(const WindowGeometry& geom, const RatVec& delta, const RatVec& delta2, const RatVec& l)
{
    auto source = vertex_window(geom, delta);
    auto target = vertex_window(geom, delta2);
    geom.require_invariant(l, "l");
    if (!is_generic(geom.zonotope(), l)) throw DomainError("l " + to_string(l) + " is not generic");
    auto cr = geom.crossings(delta, delta2);
    if (cr.empty()) {
        if (source != target) throw InternalError("window changed without crossing a wall");
        return identity_on(source);
    }
    if (cr.size() > 1 || cr[0].degenerate)
        throw DomainError("segment meets " + std::to_string(cr.size()) + " walls; subdivide it");
    RatVec dir = delta2 - delta;
    RatVec delta0 = delta + cr[0].t * dir;
    RatVec eps = generic_direction(geom, dir);
    if (geom.window_weights(delta0, -Rational(1) * eps) != source || geom.window_weights(delta0, eps) != target)
        throw InternalError("half-open windows at the wall do not match the vertex windows");
    RatVec center = perturbed_center(geom, delta0, eps);
    if (geom.window_weights(center) != target) throw InternalError("perturbed window differs from the target window");
    Rewriter rw(geom, center, l);
    BasisMatrix m{source, target, IntMatrix(target.size(), std::vector<Integer>(source.size(), Integer(0)))};
    for (std::size_t j = 0; j < source.size(); ++j) {
        KClass img = rw.express({{source[j], Integer(1)}});
        for (const auto& [chi, c] : img) {
            auto it = std::lower_bound(target.begin(), target.end(), chi);
            if (it == target.end() || *it != chi)
                throw InternalError("image term " + to_string(chi) + " is outside the target window");
            m.entries[it - target.begin()][j] = c;
        }
    }
    return m;
}

BasisMatrix translation_matrix(const WindowGeometry& geom, const RatVec& delta, const IntVec& m)
{
    geom.require_invariant(to_rat(m), "translation");
    auto source = vertex_window(geom, delta);
    auto target = vertex_window(geom, delta + to_rat(m));
    if (source.size() != target.size()) throw DomainError("translated window has a different size");
    BasisMatrix out{source, target, IntMatrix(target.size(), std::vector<Integer>(source.size(), Integer(0)))};
    for (std::size_t j = 0; j < source.size(); ++j) {
        IntVec img = source[j] + m;
        auto it = std::lower_bound(target.begin(), target.end(), img);
        if (it == target.end() || *it != img) throw DomainError("translate of " + to_string(source[j]) + " leaves the window");
        out.entries[it - target.begin()][j] = 1;
    }
    return out;
}

}  // namespace magicwin
