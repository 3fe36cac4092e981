#pragma once

// Combinatorial descriptors of the determinantal invariants J_ij and their
// evaluation at a point, over exact rationals or first-order dual numbers.

#include "parinv/linalg.hpp"
#include "parinv/shape.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace parinv {

/// Minor of X with rows and columns in listed order.
struct MinorRecipe {
  std::vector<int> rows;
  std::vector<int> cols;
  friend bool operator==(const MinorRecipe&, const MinorRecipe&) = default;
};

/// det of the matrix whose top rows are rows `x_rows` of X and bottom rows are
/// rows `adj_rows` of the adjugate X*, all restricted to `cols`.
struct StackedRecipe {
  std::vector<int> x_rows;
  std::vector<int> adj_rows;
  std::vector<int> cols;
  friend bool operator==(const StackedRecipe&, const StackedRecipe&) = default;
};

struct RatioRecipe {
  MinorRecipe numerator;
  MinorRecipe denominator;
  friend bool operator==(const RatioRecipe&, const RatioRecipe&) = default;
};

using Recipe = std::variant<MinorRecipe, StackedRecipe, RatioRecipe>;

/// J: determinantal generator; M0/M: the minors M₀ and M_ij; P: the ratio M_ij/M₀.
enum class Role { J, M0, M, P };

struct GeneratorDescriptor {
  /// Absent only for the denominator minor M₀.
  std::optional<IndexPair> pair;
  Recipe recipe;
  Role role = Role::J;

  std::string label() const;
  friend bool operator==(const GeneratorDescriptor&, const GeneratorDescriptor&) = default;
};

/// Throws std::invalid_argument if list lengths disagree or indices leave [1, n].
void validate(const GeneratorDescriptor& desc, int n);

class RatioUndefinedError : public std::domain_error {
 public:
  RatioUndefinedError() : std::domain_error("ratio undefined at this point") {}
};

/// Evaluates descriptors at one point, computing the adjugate at most once.
/// Not meant to be shared between threads.
template <class T>
class PointEvaluator {
 public:
  explicit PointEvaluator(Matrix<T> point) : point_(std::move(point)) {
    if (!point_.square()) throw DimensionError("evaluation point must be square");
  }

  const Matrix<T>& point() const { return point_; }

  const Matrix<T>& adjugate_matrix() const {
    if (!adjugate_) adjugate_ = adjugate(point_);
    return *adjugate_;
  }

  T operator()(const GeneratorDescriptor& desc) const {
    return std::visit([this](const auto& r) { return evaluate(r); }, desc.recipe);
  }

 private:
  T evaluate(const MinorRecipe& r) const { return minor(point_, r.rows, r.cols); }

  T evaluate(const StackedRecipe& r) const {
    if (r.x_rows.size() + r.adj_rows.size() != r.cols.size())
      throw DimensionError("stacked recipe row count differs from column count");
    const auto cols = to_storage_indices(r.cols, point_.cols());
    const auto top = to_storage_indices(r.x_rows, point_.rows());
    Matrix<T> y = point_.select(top, cols);
    if (!r.adj_rows.empty()) {
      const auto bottom = to_storage_indices(r.adj_rows, point_.rows());
      Matrix<T> stacked(r.cols.size(), r.cols.size());
      stacked.place(0, 0, y);
      stacked.place(top.size(), 0, adjugate_matrix().select(bottom, cols));
      y = std::move(stacked);
    }
    return det(y);
  }

  T evaluate(const RatioRecipe& r) const {
    const T den = evaluate(r.denominator);
    if (is_undefined_divisor(den)) throw RatioUndefinedError();
    return evaluate(r.numerator) / den;
  }

  static bool is_undefined_divisor(const Rational& v) { return v.is_zero(); }
  static bool is_undefined_divisor(const DualScalar& v) { return v.value.is_zero(); }

  Matrix<T> point_;
  mutable std::optional<Matrix<T>> adjugate_;
};

/// Descriptors {J_ij} for a GL or SL shape in ≺ order. Throws ShapeError for O/SP.
std::vector<GeneratorDescriptor> build_generators(const FlagShape& shape);

/// Descriptor for one pair of the GL pattern of `shape`'s composition.
GeneratorDescriptor gl_descriptor(int n, IndexPair p);

Rational eval_generator(const GeneratorDescriptor& desc, const RationalMatrix& point);
std::vector<Rational> eval_all(const FlagShape& shape, const RationalMatrix& point);

template <class T>
std::vector<T> eval_descriptors(const std::vector<GeneratorDescriptor>& descs, const Matrix<T>& point) {
  PointEvaluator<T> evaluator(point);
  std::vector<T> out;
  out.reserve(descs.size());
  for (const auto& d : descs) out.push_back(evaluator(d));
  return out;
}

/// Deterministic witness for a pair below the anti-diagonal: ones on the
/// anti-diagonal and at (i+k, j-k) for k = 0..n-i.
RationalMatrix nonvanishing_witness(int n, IndexPair p);

/// ±s_{n,1}·s_{n-1,2}⋯s_{j'+1,j-1}·s_{ij}: value of an on-or-above-anti-diagonal
/// J_ij at a point supported on the S₀ pattern.
Rational slice_monomial(const RationalMatrix& s0_point, IndexPair p);

enum class Mutation { ShiftLeadingRow, ShiftLastColumn, TrailingColumns };

std::string to_string(Mutation m);

/// A perturbed copy of `desc` used as a negative control, if the mutation applies.
std::optional<GeneratorDescriptor> mutate(const GeneratorDescriptor& desc, int n, Mutation m);

}  // namespace parinv
