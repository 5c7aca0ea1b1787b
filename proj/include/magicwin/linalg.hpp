#ifndef MAGICWIN_LINALG_HPP
#define MAGICWIN_LINALG_HPP

#include <optional>
#include <vector>

#include "magicwin/rational.hpp"

namespace magicwin {

using RatMatrix = std::vector<RatVec>;                 // row-major
using IntMatrix = std::vector<std::vector<Integer>>;   // row-major

std::size_t rank_of(const std::vector<RatVec>& rows);
std::size_t rank_of(const std::vector<IntVec>& rows);

// Basis of {x : <row, x> = 0 for every row}, in reduced form.
std::vector<RatVec> nullspace(const std::vector<RatVec>& rows, std::size_t dim);

bool in_span(const std::vector<RatVec>& rows, const RatVec& v);

// Some x with sum x_i rows[i] = v, if one exists.
std::optional<RatVec> combination_for(const std::vector<RatVec>& rows, const RatVec& v);

// Smallest positive integer multiple, entries coprime. Zero vector stays zero.
IntVec primitive(const RatVec& v);
// First nonzero entry made positive.
IntVec canonical_sign(const IntVec& v);

IntMatrix identity_matrix(std::size_t n);
IntMatrix multiply(const IntMatrix& a, const IntMatrix& b);
Integer determinant(const IntMatrix& m);
// Throws DomainError if the matrix is singular or the inverse is not integral.
IntMatrix integer_inverse(const IntMatrix& m);

}  // namespace magicwin

#endif
