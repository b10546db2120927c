#pragma once

// Small dense exact linear algebra over the rationals.

#include "theta/rational.hpp"

#include <optional>
#include <vector>

namespace theta {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> rref(RationalMatrix& a);

std::size_t rank(RationalMatrix a);

/// Basis of {x : a x = 0}; `cols` is needed when `a` has no rows.
std::vector<RationalVector> nullspace(RationalMatrix a, std::size_t cols);

/// Inverse of a square matrix, or nullopt when singular.
std::optional<RationalMatrix> inverse(const RationalMatrix& a);

/// Some solution of a x = b, or nullopt when inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, const RationalVector& b);

/// Exact positive-semidefiniteness test of a symmetric matrix by symmetric
/// Gaussian elimination with diagonal pivoting.
bool is_positive_semidefinite(RationalMatrix a);

}  // namespace theta
