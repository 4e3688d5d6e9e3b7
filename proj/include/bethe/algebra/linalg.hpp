#pragma once

#include <vector>

#include "bethe/algebra/ratfunc.hpp"

namespace bethe {

using Matrix = std::vector<std::vector<Scalar>>;

struct RowEchelon {
  Matrix m;                 // reduced row echelon form
  std::vector<int> pivots;  // pivot column of each nonzero row
};

RowEchelon rref(Matrix m);
int rank(const Matrix& m);
/// Basis of {v : m v = 0}.
std::vector<std::vector<Scalar>> kernel(const Matrix& m, int cols);

struct LinearSolution {
  bool consistent = false;
  std::vector<Scalar> particular;
  std::vector<std::vector<Scalar>> kernel;
};

/// Solves A v = b for an rows x cols matrix A.
LinearSolution solve_linear(const Matrix& a, const std::vector<Scalar>& b, int cols);

Scalar determinant(Matrix m);
/// Fraction-free (Bareiss) determinant of a polynomial matrix.
Poly determinant(std::vector<std::vector<Poly>> m);
/// Clears denominators column by column, then uses the polynomial determinant.
RatFunc determinant(const std::vector<std::vector<RatFunc>>& m);

}  // namespace bethe
