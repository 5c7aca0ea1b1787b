#ifndef MAGICWIN_IO_HPP
#define MAGICWIN_IO_HPP

#include <string>

#include <json.hpp>

#include "magicwin/groupoid.hpp"
#include "magicwin/quiver.hpp"

namespace magicwin {

using Json = nlohmann::ordered_json;

std::string read_file(const std::string& path);
Json parse_json(const std::string& text);
// 64-bit FNV-1a of the bytes, as 16 hex digits.
std::string digest(const std::string& bytes);

Rational rational_from_json(const Json& j);
RatVec ratvec_from_json(const Json& j);
IntVec intvec_from_json(const Json& j);

// A representation object, or an object with a "quiver" member.
RepSpec rep_from_json(const Json& j);
QuiverSpec quiver_from_json(const Json& j);
Word word_from_json(const Json& j);
GroupoidFixture fixture_from_json(const Json& j);

Json to_json(const Rational& q);
Json to_json(const Integer& z);
Json to_json(const RatVec& v);
Json to_json(const IntVec& v);
Json to_json(const std::vector<IntVec>& vs);
Json to_json(const KClass& cls);
Json to_json(const BasisMatrix& m);
Json to_json(const GroupDatum& g);

}  // namespace magicwin

#endif
