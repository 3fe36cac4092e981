#pragma once

#include "parinv/matrix.hpp"

#include <functional>
#include <vector>

namespace parinv {

/// Exact determinant. Row denominators are cleared and the integer matrix is
/// reduced by fraction-free (Bareiss) elimination with full pivot search.
Rational det(const RationalMatrix& m);

/// Determinant of x + εv truncated at first order. Elimination pivots on
/// entries with a nonzero value part; once none is left the remaining block is
/// purely infinitesimal and contributes ε·entry for a 1×1 block, zero otherwise.
DualScalar det(const DualMatrix& m);

/// Transposed matrix of signed cofactors; m·adj(m) = adj(m)·m = det(m)·E for
/// every square m, singular included.
template <class T>
Matrix<T> adjugate(const Matrix<T>& m) {
  if (!m.square()) throw DimensionError("adjugate of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix<T> adj(n, n);
  if (n == 0) return adj;
  if (n == 1) {
    adj(0, 0) = T(1);
    return adj;
  }
  std::vector<std::size_t> keep_r(n - 1), keep_c(n - 1);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t k = 0, t = 0; k < n; ++k)
      if (k != r) keep_r[t++] = k;
    for (std::size_t c = 0; c < n; ++c) {
      for (std::size_t k = 0, t = 0; k < n; ++k)
        if (k != c) keep_c[t++] = k;
      T cof = det(m.select(keep_r, keep_c));
      if ((r + c) % 2 == 1) cof = -cof;
      adj(c, r) = std::move(cof);
    }
  }
  return adj;
}

/// Converts a 1-based index list into 0-based storage indices, rejecting
/// duplicates and out-of-range entries.
std::vector<std::size_t> to_storage_indices(const std::vector<int>& one_based, std::size_t bound);

/// Determinant of the submatrix with the given 1-based rows and columns, taken
/// in the listed order (so the order fixes the sign).
template <class T>
T minor(const Matrix<T>& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  if (rows.size() != cols.size()) throw DimensionError("minor needs equally many rows and columns");
  return det(m.select(to_storage_indices(rows, m.rows()), to_storage_indices(cols, m.cols())));
}

std::size_t rank(const RationalMatrix& m);

/// Basis of {v : m·v = 0}; each basis vector is returned as a column vector.
std::vector<RationalMatrix> nullspace_basis(const RationalMatrix& m);

/// Throws std::domain_error for singular input.
RationalMatrix inverse(const RationalMatrix& m);

using DualPolynomial = std::function<DualScalar(const DualMatrix&)>;

/// Derivative of f at `point` along `direction`.
Rational directional_derivative(const DualPolynomial& f, const RationalMatrix& point,
                                const RationalMatrix& direction);

/// ∂f/∂x_ij at `point`.
Rational partial_derivative(const DualPolynomial& f, const RationalMatrix& point, IndexPair coordinate);

}  // namespace parinv
