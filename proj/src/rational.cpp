#include "magicwin/rational.hpp"

#include <cctype>
#include <limits>
#include <sstream>

namespace magicwin {

namespace {

std::string trim(const std::string& s)
{
    std::size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
    return s.substr(b, e - b);
}

bool is_int_literal(const std::string& s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
    return true;
}

std::vector<std::string> split_commas(const std::string& text)
{
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream in(text);
    while (std::getline(in, cur, ',')) parts.push_back(trim(cur));
    if (parts.empty()) throw ParseError("empty vector literal");
    return parts;
}

}  // namespace

Rational parse_rational(const std::string& text)
{
    std::string s = trim(text);
    auto slash = s.find('/');
    std::string num = slash == std::string::npos ? s : trim(s.substr(0, slash));
    std::string den = slash == std::string::npos ? "1" : trim(s.substr(slash + 1));
    if (!is_int_literal(num) || !is_int_literal(den))
        throw ParseError("not an exact rational: '" + text + "'");
    if (num[0] == '+') num = num.substr(1);
    if (den[0] == '+') den = den.substr(1);
    Integer d(den);
    if (d == 0) throw ParseError("zero denominator: '" + text + "'");
    return Rational(Integer(num), d);
}

RatVec parse_rat_list(const std::string& text)
{
    RatVec out;
    for (const auto& p : split_commas(text)) out.push_back(parse_rational(p));
    return out;
}

IntVec parse_int_list(const std::string& text)
{
    IntVec out;
    for (const auto& p : split_commas(text)) {
        if (!is_int_literal(p)) throw ParseError("not an integer: '" + p + "'");
        out.push_back(std::stoll(p));
    }
    return out;
}

std::string to_string(const Rational& q)
{
    if (denominator(q) == 1) return numerator(q).str();
    return numerator(q).str() + "/" + denominator(q).str();
}

std::string to_string(const Integer& z) { return z.str(); }

Integer floor_of(const Rational& q)
{
    Integer n = numerator(q), d = denominator(q);
    Integer f = n / d;  // truncates toward zero
    if (n < 0 && f * d != n) f -= 1;
    return f;
}

Integer ceil_of(const Rational& q) { return -floor_of(-q); }

bool is_integer(const Rational& q) { return denominator(q) == 1; }

std::int64_t to_int64(const Integer& z)
{
    if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
        throw DomainError("integer out of 64-bit range: " + z.str());
    return z.convert_to<std::int64_t>();
}

RatVec to_rat(const IntVec& v)
{
    RatVec out;
    out.reserve(v.size());
    for (auto x : v) out.emplace_back(x);
    return out;
}

IntVec to_int(const RatVec& v)
{
    IntVec out;
    out.reserve(v.size());
    for (const auto& x : v) {
        if (!is_integer(x)) throw DomainError("expected a lattice point, got " + to_string(v));
        out.push_back(to_int64(numerator(x)));
    }
    return out;
}

Rational dot(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw DomainError("dimension mismatch in pairing");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

Rational dot(const IntVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw DomainError("dimension mismatch in pairing");
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0) s += a[i] * b[i];
    return s;
}

std::int64_t dot(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size()) throw DomainError("dimension mismatch in pairing");
    std::int64_t s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

RatVec operator+(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw DomainError("dimension mismatch");
    RatVec c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

RatVec operator-(const RatVec& a, const RatVec& b)
{
    if (a.size() != b.size()) throw DomainError("dimension mismatch");
    RatVec c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

RatVec operator*(const Rational& s, const RatVec& a)
{
    RatVec c(a);
    for (auto& x : c) x *= s;
    return c;
}

IntVec operator+(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size()) throw DomainError("dimension mismatch");
    IntVec c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] += b[i];
    return c;
}

IntVec operator-(const IntVec& a, const IntVec& b)
{
    if (a.size() != b.size()) throw DomainError("dimension mismatch");
    IntVec c(a);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] -= b[i];
    return c;
}

IntVec operator-(const IntVec& a)
{
    IntVec c(a);
    for (auto& x : c) x = -x;
    return c;
}

std::string to_string(const IntVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
    return s + ")";
}

std::string to_string(const RatVec& v)
{
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + to_string(v[i]);
    return s + ")";
}

}  // namespace magicwin
