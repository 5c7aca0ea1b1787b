#ifndef MAGICWIN_RATIONAL_HPP
#define MAGICWIN_RATIONAL_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <boost/multiprecision/gmp.hpp>

namespace magicwin {

using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational, boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int, boost::multiprecision::et_off>;

using RatVec = std::vector<Rational>;
using IntVec = std::vector<std::int64_t>;

// Invalid mathematical input: violated preconditions, degenerate geometry.
struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed text or file input.
struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Rational parse_rational(const std::string& text);
RatVec parse_rat_list(const std::string& text);   // "1/2,1/2"
IntVec parse_int_list(const std::string& text);

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& z);

Integer floor_of(const Rational& q);
Integer ceil_of(const Rational& q);
bool is_integer(const Rational& q);
std::int64_t to_int64(const Integer& z);

RatVec to_rat(const IntVec& v);
// Throws DomainError unless every entry is integral.
IntVec to_int(const RatVec& v);

Rational dot(const RatVec& a, const RatVec& b);
Rational dot(const IntVec& a, const RatVec& b);
std::int64_t dot(const IntVec& a, const IntVec& b);

RatVec operator+(const RatVec& a, const RatVec& b);
RatVec operator-(const RatVec& a, const RatVec& b);
RatVec operator*(const Rational& s, const RatVec& a);
IntVec operator+(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a, const IntVec& b);
IntVec operator-(const IntVec& a);

std::string to_string(const IntVec& v);   // "(1,-2)"
std::string to_string(const RatVec& v);

}  // namespace magicwin

#endif
