#include "magicwin/linalg.hpp"

#include <numeric>

namespace magicwin {

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& a, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    std::size_t row = 0;
    for (std::size_t c = 0; c < cols && row < a.size(); ++c) {
        std::size_t p = row;
        while (p < a.size() && a[p][c] == 0) ++p;
        if (p == a.size()) continue;
        std::swap(a[p], a[row]);
        Rational inv = 1 / a[row][c];
        for (auto& x : a[row]) x *= inv;
        for (std::size_t r = 0; r < a.size(); ++r) {
            if (r == row || a[r][c] == 0) continue;
            Rational f = a[r][c];
            for (std::size_t k = 0; k < cols; ++k) a[r][k] -= f * a[row][k];
        }
        pivots.push_back(c);
        ++row;
    }
    return pivots;
}

}  // namespace

std::size_t rank_of(const std::vector<RatVec>& rows)
{
    if (rows.empty()) return 0;
    RatMatrix a(rows);
    return rref(a, a[0].size()).size();
}

std::size_t rank_of(const std::vector<IntVec>& rows)
{
    std::vector<RatVec> r;
    for (const auto& v : rows) r.push_back(to_rat(v));
    return rank_of(r);
}

std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t dim)
{
    RatMatrix a(rows);
    auto pivots = rref(a, dim);
    std::vector<bool> is_pivot(dim, false);
    for (auto p : pivots) is_pivot[p] = true;
    std::vector<RatVec> basis;
    for (std::size_t f = 0; f < dim; ++f) {
        if (is_pivot[f]) continue;
        RatVec v(dim, Rational(0));
        v[f] = 1;
        for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -a[i][f];
        basis.push_back(v);
    }
    return basis;
}

bool in_span(const std::vector<RatVec>& rows, const RatVec& v)
{
    auto ext = rows;
    ext.push_back(v);
    return rank_of(ext) == rank_of(rows);
}

std::optional<RatVec> combination_for(const std::vector<RatVec>& rows, const RatVec& v)
{
    // Solve A^T x = v with A's rows = rows: augmented system with dim equations.
    std::size_t n = rows.size(), dim = v.size();
    RatMatrix aug(dim, RatVec(n + 1, Rational(0)));
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < n; ++i) aug[j][i] = rows[i][j];
        aug[j][n] = v[j];
    }
    auto pivots = rref(aug, n + 1);
    if (!pivots.empty() && pivots.back() == n) return std::nullopt;
    RatVec x(n, Rational(0));
    for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][n];
    return x;
}

IntVec primitive(const RatVec& v)
{
    Integer l = 1;
    for (const auto& x : v) l = boost::multiprecision::lcm(l, Integer(denominator(x)));
    std::vector<Integer> z;
    Integer g = 0;
    for (const auto& x : v) {
        Integer e = numerator(x) * (l / denominator(x));
        z.push_back(e);
        g = boost::multiprecision::gcd(g, e);
    }
    IntVec out;
    for (auto& e : z) out.push_back(g == 0 ? 0 : to_int64(e / abs(g)));
    return out;
}

IntVec canonical_sign(const IntVec& v)
{
    for (auto x : v) {
        if (x > 0) return v;
        if (x < 0) return -v;
    }
    return v;
}

IntMatrix identity_matrix(std::size_t n)
{
    IntMatrix m(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
    return m;
}

IntMatrix multiply(const IntMatrix& a, const IntMatrix& b)
{
    std::size_t inner = b.size();
    std::size_t cols = inner ? b[0].size() : 0;
    IntMatrix c(a.size(), std::vector<Integer>(cols, Integer(0)));
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].size() != inner) throw DomainError("matrix dimension mismatch");
        for (std::size_t k = 0; k < inner; ++k) {
            if (a[i][k] == 0) continue;
            for (std::size_t j = 0; j < cols; ++j) c[i][j] += a[i][k] * b[k][j];
        }
    }
    return c;
}

Integer determinant(const IntMatrix& m)
{
    std::size_t n = m.size();
    if (n == 0) return 1;
    RatMatrix a;
    for (const auto& row : m) {
        if (row.size() != n) throw DomainError("determinant of a non-square matrix");
        RatVec r;
        for (const auto& x : row) r.emplace_back(x);
        a.push_back(r);
    }
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a[p][c] == 0) ++p;
        if (p == n) return 0;
        if (p != c) {
            std::swap(a[p], a[c]);
            det = -det;
        }
        det *= a[c][c];
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a[r][c] == 0) continue;
            Rational f = a[r][c] / a[c][c];
            for (std::size_t k = c; k < n; ++k) a[r][k] -= f * a[c][k];
        }
    }
    return numerator(det);
}

IntMatrix integer_inverse(const IntMatrix& m)
{
    std::size_t n = m.size();
    RatMatrix a;
    for (std::size_t i = 0; i < n; ++i) {
        if (m[i].size() != n) throw DomainError("inverse of a non-square matrix");
        RatVec r;
        for (const auto& x : m[i]) r.emplace_back(x);
        for (std::size_t j = 0; j < n; ++j) r.emplace_back(i == j ? 1 : 0);
        a.push_back(r);
    }
    auto pivots = rref(a, 2 * n);
    if (pivots.size() < n || pivots[n - 1] != n - 1) throw DomainError("matrix is singular");
    IntMatrix inv(n, std::vector<Integer>(n, Integer(0)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Rational& x = a[i][n + j];
            if (!is_integer(x)) throw DomainError("inverse is not integral");
            inv[i][j] = numerator(x);
        }
    return inv;
}

}  // namespace magicwin
