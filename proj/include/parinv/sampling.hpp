#pragma once

// Seeded exact sampling of group elements, Lie algebra bases and slice points.

#include "parinv/matrix.hpp"
#include "parinv/rng.hpp"
#include "parinv/shape.hpp"

#include <stdexcept>
#include <vector>

namespace parinv {

constexpr int kDefaultBound = 10;
constexpr int kResampleBudget = 64;

class SamplingError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when a construction that must land in the group does not.
class InternalConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

/// I_N (ones on the anti-diagonal) for O, J_N = [[0,-I],[I,0]] for SP.
RationalMatrix form_matrix(GroupKind kind, int size);

/// Exact membership test for the group named by shape.kind().
bool in_group(const FlagShape& shape, const RationalMatrix& m);

class GroupPoint {
 public:
  /// Throws std::invalid_argument if `m` is not in the group of `shape`.
  static GroupPoint make(FlagShape shape, RationalMatrix m);

  const FlagShape& shape() const { return shape_; }
  const RationalMatrix& matrix() const { return matrix_; }

 private:
  GroupPoint(FlagShape s, RationalMatrix m) : shape_(std::move(s)), matrix_(std::move(m)) {}
  FlagShape shape_;
  RationalMatrix matrix_;
};

/// Pieces of a parabolic element of O/SP: `levi_top` is A (N₀×N₀), `center` is
/// A₀ ∈ G₀, `v` is N₀×n₀ and `b` satisfies B^σ = -B (O) or B^σ = B (SP).
struct ParabolicParts {
  RationalMatrix levi_top;
  RationalMatrix center;
  RationalMatrix v;
  RationalMatrix b;
};

/// W = -J₀·Vᵗ·I₀.
RationalMatrix coupling_block(const FlagShape& shape, const RationalMatrix& v);

/// diag(A, A₀, (A^σ)⁻¹)·[[E,V,B+½VW],[0,E,W],[0,0,E]] (middle row/column absent for even ℓ).
RationalMatrix assemble_parabolic(const FlagShape& shape, const ParabolicParts& parts);

/// The slice block matrix
///   [[0, 0, ±I₀(A^σ)⁻¹], [0, J₀A₀, J₀A₀W], [I₀A, I₀AV, I₀A(B+½VW)]]
/// for the given sign of the top-right block.
RationalMatrix assemble_slice_circ(const FlagShape& shape, const ParabolicParts& parts, int sign);

GroupPoint sample_unipotent_radical(const FlagShape& shape, CounterRng& rng, int bound = kDefaultBound);
GroupPoint sample_unipotent_radical(const FlagShape& shape, Seed seed, int bound = kDefaultBound);

/// `second_component` post-multiplies orthogonal samples by the 1↔n coordinate swap.
GroupPoint sample_group_point(const FlagShape& shape, CounterRng& rng, int bound = kDefaultBound,
                              bool second_component = false);
GroupPoint sample_group_point(const FlagShape& shape, Seed seed, int bound = kDefaultBound,
                              bool second_component = false);

/// O(n) for even n: the component (det +1 or -1) that contains the slice S°.
/// Only there is the generator system generic; the other component lies outside
/// the closure of the U-conjugates of S°. Returns +1 for every other group.
int slice_component_det(const FlagShape& shape);

/// Group sample from the component of slice_component_det().
GroupPoint sample_generic_point(const FlagShape& shape, CounterRng& rng, int bound = kDefaultBound);

/// Cayley sample of O(size) or Sp(size) for the form of `kind`.
RationalMatrix sample_form_group(GroupKind kind, int size, CounterRng& rng, int bound);

/// The 1↔n coordinate swap; preserves I_N.
RationalMatrix orthogonal_swap(int size);

enum class LieScope { Full, Radical };

std::vector<RationalMatrix> lie_algebra_basis(const FlagShape& shape, LieScope scope);

enum class SliceVariant { S, S0, SCirc };

struct SlicePoint {
  GroupPoint point;
  /// Sign of the top-right block that satisfied the form equation (S° only; 0 otherwise).
  int resolved_sign = 0;
};

SlicePoint sample_slice(const FlagShape& shape, CounterRng& rng, int bound, SliceVariant variant);
SlicePoint sample_slice(const FlagShape& shape, Seed seed, int bound, SliceVariant variant);

/// n_L·w₀·b with n_L ∈ UT(n) ∩ L and b upper triangular.
RationalMatrix sample_bruhat_product(const FlagShape& shape, CounterRng& rng, int bound);

/// Random upper unitriangular matrix.
RationalMatrix sample_unitriangular(int n, CounterRng& rng, int bound);

/// Random integer matrix with entries in [-bound, bound], resampled until invertible.
RationalMatrix sample_invertible(int n, CounterRng& rng, int bound);

}  // namespace parinv
