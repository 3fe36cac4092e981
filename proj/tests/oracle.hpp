#pragma once

// Independent reference computations for the tests. Nothing here calls the
// library's elimination, adjugate or index-set code.

#include "parinv/matrix.hpp"
#include "parinv/rational.hpp"
#include "parinv/rng.hpp"

#include <numeric>
#include <vector>

namespace oracle {

using parinv::Rational;
using parinv::RationalMatrix;

/// Laplace expansion along the first row.
inline Rational cofactor_det(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);
  if (n == 1) return m(0, 0);
  Rational total;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    RationalMatrix sub(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r)
      for (std::size_t k = 0, kk = 0; k < n; ++k) {
        if (k == c) continue;
        sub(r - 1, kk++) = m(r, k);
      }
    const Rational term = m(0, c) * cofactor_det(sub);
    total = (c % 2 == 0) ? total + term : total - term;
  }
  return total;
}

/// Sign of a permutation of 0..n-1 by inversion count.
inline int permutation_sign(const std::vector<int>& p) {
  int inversions = 0;
  for (std::size_t a = 0; a < p.size(); ++a)
    for (std::size_t b = a + 1; b < p.size(); ++b)
      if (p[a] > p[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

/// Minor with 1-based rows and columns in listed order.
inline Rational minor(const RationalMatrix& m, const std::vector<int>& rows, const std::vector<int>& cols) {
  RationalMatrix sub(rows.size(), cols.size());
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < cols.size(); ++c)
      sub(r, c) = m(static_cast<std::size_t>(rows[r] - 1), static_cast<std::size_t>(cols[c] - 1));
  return cofactor_det(sub);
}

inline RationalMatrix adjugate(const RationalMatrix& m) {
  const std::size_t n = m.rows();
  RationalMatrix out(n, n);
  if (n == 1) {
    out(0, 0) = Rational(1);
    return out;
  }
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) {
      std::vector<int> rows, cols;
      for (std::size_t k = 0; k < n; ++k) {
        if (k != r) rows.push_back(static_cast<int>(k + 1));
        if (k != c) cols.push_back(static_cast<int>(k + 1));
      }
      const Rational cof = minor(m, rows, cols);
      out(c, r) = ((r + c) % 2 == 0) ? cof : -cof;
    }
  return out;
}

inline RationalMatrix random_matrix(parinv::CounterRng& rng, std::size_t rows, std::size_t cols, int bound) {
  RationalMatrix m(rows, cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) m(r, c) = Rational(static_cast<long>(rng.uniform_int(-bound, bound)));
  return m;
}

/// Block index (1-based) of position i for a composition.
inline int block_of(const std::vector<int>& parts, int i) {
  int end = 0;
  for (std::size_t k = 0; k < parts.size(); ++k) {
    end += parts[k];
    if (i <= end) return static_cast<int>(k + 1);
  }
  return -1;
}

/// (i,j) with i in I_k and n+1-j in I_m, k >= m.
inline bool gl_pattern(int n, const std::vector<int>& parts, int i, int j) {
  return block_of(parts, i) >= block_of(parts, n + 1 - j);
}

/// dim of the block upper unitriangular group of a composition.
inline std::size_t gl_radical_dim(int n, const std::vector<int>& parts) {
  const int squares = std::accumulate(parts.begin(), parts.end(), 0, [](int acc, int p) { return acc + p * p; });
  return static_cast<std::size_t>((n * n - squares) / 2);
}

/// Value of J_ij on the S₀ slice: the anti-diagonal entries s_{n,1} … s_{n-j+2,j-1}
/// times s_ij, with the sign of reversing j columns.
inline Rational s0_monomial(const RationalMatrix& s, int i, int j) {
  const int n = static_cast<int>(s.rows());
  Rational value = s(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
  for (int k = 1; k < j; ++k) value = value * s(static_cast<std::size_t>(n - k), static_cast<std::size_t>(k - 1));
  return (j * (j - 1) / 2) % 2 == 0 ? value : -value;
}

/// All compositions of n.
inline std::vector<std::vector<int>> compositions(int n) {
  if (n == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int first = 1; first <= n; ++first)
    for (auto rest : compositions(n - first)) {
      rest.insert(rest.begin(), first);
      out.push_back(std::move(rest));
    }
  return out;
}

}  // namespace oracle
