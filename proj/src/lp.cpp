#include "magicwin/lp.hpp"

namespace magicwin {

namespace {

struct Tableau {
    std::vector<RatVec> t;           // m rows, ncols + 1 entries (last = rhs)
    std::vector<std::size_t> basis;  // basic column per row
    std::size_t ncols = 0;

    void pivot(std::size_t row, std::size_t col)
    {
        Rational inv = 1 / t[row][col];
        for (auto& x : t[row]) x *= inv;
        for (std::size_t r = 0; r < t.size(); ++r) {
            if (r == row || t[r][col] == 0) continue;
            Rational f = t[r][col];
            for (std::size_t k = 0; k <= ncols; ++k)
                if (t[row][k] != 0) t[r][k] -= f * t[row][k];
        }
        basis[row] = col;
    }

    // Maximizes cost over columns not banned. Returns false when unbounded.
    bool maximize(const RatVec& cost, const std::vector<bool>& banned)
    {
        for (;;) {
            std::size_t enter = ncols;
            for (std::size_t j = 0; j < ncols && enter == ncols; ++j) {
                if (banned[j]) continue;
                Rational d = cost[j];
                for (std::size_t i = 0; i < t.size(); ++i)
                    if (t[i][j] != 0) d -= cost[basis[i]] * t[i][j];
                if (d > 0) enter = j;
            }
            if (enter == ncols) return true;
            std::size_t leave = t.size();
            Rational best;
            for (std::size_t i = 0; i < t.size(); ++i) {
                if (t[i][enter] <= 0) continue;
                Rational ratio = t[i][ncols] / t[i][enter];
                if (leave == t.size() || ratio < best ||
                    (ratio == best && basis[i] < basis[leave])) {
                    leave = i;
                    best = ratio;
                }
            }
            if (leave == t.size()) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

LpResult solve_lp(const RatVec& objective, const std::vector<LpRow>& rows, bool maximize,
                  const std::vector<bool>& nonneg)
{
    const std::size_t n = objective.size();
    for (const auto& r : rows)
        if (r.coeffs.size() != n) throw DomainError("LP row has wrong dimension");

    // Column layout: structural columns, then slack/surplus, then artificials.
    std::vector<std::size_t> plus(n), minus(n, SIZE_MAX);
    std::size_t col = 0;
    for (std::size_t j = 0; j < n; ++j) {
        plus[j] = col++;
        if (nonneg.empty() || !nonneg[j]) minus[j] = col++;
    }
    const std::size_t structural = col;

    std::size_t nslack = 0, nart = 0;
    for (const auto& r : rows) {
        bool flip = r.rhs < 0;
        Relation rel = r.rel;
        if (flip && rel != Relation::Equal) rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
        if (rel != Relation::Equal) ++nslack;
        if (rel != Relation::LessEq) ++nart;
    }

    Tableau tab;
    tab.ncols = structural + nslack + nart;
    std::vector<bool> artificial(tab.ncols, false);
    std::size_t slack_col = structural, art_col = structural + nslack;
    for (const auto& r : rows) {
        RatVec line(tab.ncols + 1, Rational(0));
        bool flip = r.rhs < 0;
        Rational sign = flip ? -1 : 1;
        Relation rel = r.rel;
        if (flip && rel != Relation::Equal) rel = rel == Relation::LessEq ? Relation::GreaterEq : Relation::LessEq;
        for (std::size_t j = 0; j < n; ++j) {
            if (r.coeffs[j] == 0) continue;
            line[plus[j]] = sign * r.coeffs[j];
            if (minus[j] != SIZE_MAX) line[minus[j]] = -sign * r.coeffs[j];
        }
        line[tab.ncols] = sign * r.rhs;
        std::size_t basic;
        if (rel == Relation::LessEq) {
            line[slack_col] = 1;
            basic = slack_col++;
        } else {
            if (rel == Relation::GreaterEq) line[slack_col++] = -1;
            line[art_col] = 1;
            artificial[art_col] = true;
            basic = art_col++;
        }
        tab.t.push_back(std::move(line));
        tab.basis.push_back(basic);
    }

    LpResult result;
    std::vector<bool> none(tab.ncols, false);
    if (nart > 0) {
        RatVec phase1(tab.ncols, Rational(0));
        for (std::size_t j = 0; j < tab.ncols; ++j)
            if (artificial[j]) phase1[j] = -1;
        tab.maximize(phase1, none);
        Rational infeas = 0;
        for (std::size_t i = 0; i < tab.t.size(); ++i)
            if (artificial[tab.basis[i]]) infeas += tab.t[i][tab.ncols];
        if (infeas != 0) {
            result.status = LpStatus::Infeasible;
            return result;
        }
        // Drive remaining (zero-valued) artificials out; drop redundant rows.
        for (std::size_t i = 0; i < tab.t.size();) {
            if (!artificial[tab.basis[i]]) {
                ++i;
                continue;
            }
            std::size_t j = 0;
            while (j < tab.ncols && (artificial[j] || tab.t[i][j] == 0)) ++j;
            if (j < tab.ncols) {
                tab.pivot(i, j);
                ++i;
            } else {
                tab.t.erase(tab.t.begin() + i);
                tab.basis.erase(tab.basis.begin() + i);
            }
        }
    }

    RatVec cost(tab.ncols, Rational(0));
    Rational dir = maximize ? 1 : -1;
    for (std::size_t j = 0; j < n; ++j) {
        cost[plus[j]] = dir * objective[j];
        if (minus[j] != SIZE_MAX) cost[minus[j]] = -dir * objective[j];
    }
    if (!tab.maximize(cost, artificial)) {
        result.status = LpStatus::Unbounded;
        return result;
    }

    RatVec colval(tab.ncols, Rational(0));
    for (std::size_t i = 0; i < tab.t.size(); ++i) colval[tab.basis[i]] = tab.t[i][tab.ncols];
    result.witness.assign(n, Rational(0));
    for (std::size_t j = 0; j < n; ++j) {
        result.witness[j] = colval[plus[j]];
        if (minus[j] != SIZE_MAX) result.witness[j] -= colval[minus[j]];
    }
    result.status = LpStatus::Optimal;
    result.value = dot(objective, result.witness);
    return result;
}

}  // namespace magicwin
