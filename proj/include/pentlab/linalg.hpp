#pragma once

#include "pentlab/rational.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace pentlab {

// Row-major dense matrices; every row has the same length.
using IntMatrix = std::vector<IntVec>;
using QMatrix = std::vector<Vec>;

// Fraction-free (Bareiss) elimination.
Integer determinant(IntMatrix m);
Rational determinant(const QMatrix& m);
std::size_t rank(IntMatrix m);
std::size_t rank(const QMatrix& m);

// Basis of {x : m x = 0}, read off the reduced row echelon form.
std::vector<Vec> nullspace(const QMatrix& m, std::size_t cols);

// Some x with m x = b (free variables zero), or nullopt when inconsistent.
std::optional<Vec> solve(const QMatrix& m, const Vec& b, std::size_t cols);

// Nonzero rows of the reduced row echelon form.
QMatrix row_reduce(QMatrix m);

QMatrix inverse(const QMatrix& m);
QMatrix multiply(const QMatrix& a, const QMatrix& b);
Vec multiply(const QMatrix& a, const Vec& x);

// Signed maximal minors of a k x (k+1) matrix: v_i = (-1)^i det(minor without column i).
// The result is orthogonal to every row; it vanishes iff the rows are dependent.
IntVec generalized_cross(const IntMatrix& rows);
Vec generalized_cross(const QMatrix& rows);

// Divide by the content and make the leading nonzero entry positive.
IntVec primitive(IntVec v);
IntVec clear_denominators(const Vec& v);
Vec to_rational(const IntVec& v);

bool is_zero(const IntVec& v);
bool is_zero(const Vec& v);
Rational dot(const Vec& a, const Vec& b);
Vec add(const Vec& a, const Vec& b);
Vec sub(const Vec& a, const Vec& b);
Vec scale(const Rational& s, const Vec& a);

}  // namespace pentlab
