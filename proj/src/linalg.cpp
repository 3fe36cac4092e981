#include "parinv/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace parinv {

DualMatrix seed_dual(const RationalMatrix& point, const RationalMatrix& direction) {
  if (point.rows() != direction.rows() || point.cols() != direction.cols())
    throw DimensionError("direction shape differs from point");
  DualMatrix d(point.rows(), point.cols());
  for (std::size_t r = 0; r < point.rows(); ++r)
    for (std::size_t c = 0; c < point.cols(); ++c) d(r, c) = DualScalar(point(r, c), direction(r, c));
  return d;
}

Rational det(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return Rational(1);

  // Scale each row to integers; the product of scalings divides the result.
  std::vector<mpz_class> a(n * n);
  mpz_class scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    mpz_class l = 1;
    for (std::size_t c = 0; c < n; ++c) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(r, c).raw().get_den_mpz_t());
    for (std::size_t c = 0; c < n; ++c) a[r * n + c] = m(r, c).numerator() * (l / m(r, c).denominator());
    scale *= l;
  }
  const auto at = [&](std::size_t r, std::size_t c) -> mpz_class& { return a[r * n + c]; };

  int sign = 1;
  mpz_class prev = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t c = k; c < n && pr == n; ++c)
      for (std::size_t r = k; r < n; ++r)
        if (at(r, c) != 0) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == n) return Rational(0);
    if (pr != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(at(pr, c), at(k, c));
      sign = -sign;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(at(r, pc), at(r, k));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class t = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    }
    prev = at(k, k);
  }
  mpz_class d = at(n - 1, n - 1);
  if (sign < 0) d = -d;
  return Rational(d, scale);
}

DualScalar det(const DualMatrix& input) {
  if (!input.square()) throw DimensionError("determinant of a non-square matrix");
  DualMatrix m = input;
  const std::size_t n = m.rows();
  DualScalar result(1);
  bool negate = false;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pr = n, pc = n;
    for (std::size_t c = k; c < n && pr == n; ++c)
      for (std::size_t r = k; r < n; ++r)
        if (!m(r, c).value.is_zero()) {
          pr = r;
          pc = c;
          break;
        }
    if (pr == n) {
      // Remaining block is ε·B: its determinant is ε^(n-k)·det B.
      if (n - k >= 2) return DualScalar(0);
      result *= m(k, k);
      return negate ? -result : result;
    }
    if (pr != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(pr, c), m(k, c));
      negate = !negate;
    }
    if (pc != k) {
      for (std::size_t r = 0; r < n; ++r) std::swap(m(r, pc), m(r, k));
      negate = !negate;
    }
    const DualScalar pivot = m(k, k);
    result *= pivot;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (m(i, k).is_zero()) continue;
      const DualScalar f = m(i, k) / pivot;
      for (std::size_t j = k + 1; j < n; ++j) m(i, j) -= f * m(k, j);
    }
  }
  return negate ? -result : result;
}

DualScalar& DualScalar::operator/=(const DualScalar& o) {
  if (o.value.is_zero()) throw std::domain_error("dual division by a purely infinitesimal value");
  // (a + bε)/(c + dε) = a/c + (bc - ad)/c² ε
  derivative = (derivative * o.value - value * o.derivative) / (o.value * o.value);
  value /= o.value;
  return *this;
}

std::vector<std::size_t> to_storage_indices(const std::vector<int>& one_based, std::size_t bound) {
  std::vector<std::size_t> out;
  out.reserve(one_based.size());
  std::vector<bool> seen(bound, false);
  for (int v : one_based) {
    if (v < 1 || static_cast<std::size_t>(v) > bound) throw DimensionError("index " + std::to_string(v) + " out of range");
    const auto k = static_cast<std::size_t>(v - 1);
    if (seen[k]) throw std::invalid_argument("duplicate index " + std::to_string(v));
    seen[k] = true;
    out.push_back(k);
  }
  return out;
}

namespace {

// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t c = 0; c < m.cols() && row < m.rows(); ++c) {
    std::size_t p = row;
    while (p < m.rows() && m(p, c).is_zero()) ++p;
    if (p == m.rows()) continue;
    if (p != row)
      for (std::size_t k = 0; k < m.cols(); ++k) std::swap(m(p, k), m(row, k));
    const Rational inv = Rational(1) / m(row, c);
    for (std::size_t k = c; k < m.cols(); ++k) m(row, k) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, c).is_zero()) continue;
      const Rational f = m(r, c);
      for (std::size_t k = c; k < m.cols(); ++k) m(r, k) -= f * m(row, k);
    }
    pivots.push_back(c);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& m) {
  RationalMatrix work = m;
  return rref(work).size();
}

std::vector<RationalMatrix> nullspace_basis(const RationalMatrix& m) {
  RationalMatrix work = m;
  const auto pivots = rref(work);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<RationalMatrix> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RationalMatrix v(m.cols(), 1);
    v(free, 0) = Rational(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v(pivots[r], 0) = -work(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

RationalMatrix inverse(const RationalMatrix& m) {
  if (!m.square()) throw DimensionError("inverse of a non-square matrix");
  const std::size_t n = m.rows();
  RationalMatrix aug(n, 2 * n);
  aug.place(0, 0, m);
  aug.place(0, n, RationalMatrix::identity(n));
  const auto pivots = rref(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw std::domain_error("matrix is singular");
  return aug.block(0, n, n, n);
}

Rational directional_derivative(const DualPolynomial& f, const RationalMatrix& point,
                                const RationalMatrix& direction) {
  return f(seed_dual(point, direction)).derivative;
}

Rational partial_derivative(const DualPolynomial& f, const RationalMatrix& point, IndexPair coordinate) {
  RationalMatrix dir(point.rows(), point.cols());
  dir.at(coordinate) = Rational(1);
  return directional_derivative(f, point, dir);
}

}  // namespace parinv
