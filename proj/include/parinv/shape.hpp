#pragma once

// Group kind and composition of [1,n], plus all index combinatorics derived
// from them. Indices are 1-based throughout.

#include "parinv/matrix.hpp"

#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace parinv {

enum class GroupKind { GL, SL, O, SP };

std::string to_string(GroupKind kind);
/// Accepts "gl", "sl", "o", "sp" (any case).
GroupKind parse_group_kind(std::string_view text);

class ShapeError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class FlagShape {
 public:
  /// Validates and builds a shape; throws ShapeError.
  static FlagShape make(GroupKind kind, int n, std::vector<int> parts);

  GroupKind kind() const { return kind_; }
  int n() const { return n_; }
  const std::vector<int>& parts() const { return parts_; }
  int blocks() const { return static_cast<int>(parts_.size()); }

  bool orthosymplectic() const { return kind_ == GroupKind::O || kind_ == GroupKind::SP; }

  /// k such that i ∈ I_k (1-based).
  int block_of(int i) const;
  int segment_begin(int k) const;
  int segment_end(int k) const;
  std::vector<int> segment(int k) const;

  /// i' = n + 1 - i.
  int mirror(int i) const;

  /// ℓ₀ = ⌊ℓ/2⌋.
  int half_blocks() const { return blocks() / 2; }
  /// N₀ = n₁ + … + n_{ℓ₀}.
  int half_size() const;
  bool has_center() const { return blocks() % 2 == 1; }
  /// n₀ for odd ℓ, 0 otherwise.
  int center_size() const;
  /// I₀ for odd ℓ, empty otherwise.
  std::vector<int> center_segment() const;

  /// Same composition viewed as a GL(n) parabolic.
  FlagShape as_gl() const;

  friend bool operator==(const FlagShape&, const FlagShape&) = default;

 private:
  FlagShape(GroupKind kind, int n, std::vector<int> parts)
      : kind_(kind), n_(n), parts_(std::move(parts)) {}

  GroupKind kind_ = GroupKind::GL;
  int n_ = 0;
  std::vector<int> parts_;
  std::vector<int> starts_;
};

FlagShape make_shape(GroupKind kind, int n, std::vector<int> parts);

/// Throws std::out_of_range for i outside [1, n].
int mirror(const FlagShape& shape, int i);

/// (i₁,j₁) ≺ (i,j) iff j₁ < j, or j₁ = j and i₁ > i.
bool precedes(IndexPair a, IndexPair b);

/// On or above the anti-diagonal: i + j ≤ n + 1.
inline bool on_or_above_antidiagonal(int n, IndexPair p) { return p.i + p.j <= n + 1; }

/// Membership in the GL pattern: i ∈ I_k, j ∈ I'_m with k ≥ m.
bool in_gl_pattern(const FlagShape& shape, IndexPair p);

struct GeneratorIndexSet {
  /// Sorted ascending by ≺.
  std::vector<IndexPair> all;
  /// Parallel to `all`: true for pairs on or above the anti-diagonal.
  std::vector<bool> sigma0;
  /// I₀ × I₀ for odd-length orthogonal/symplectic compositions; empty otherwise.
  std::vector<IndexPair> gamma0;

  bool contains(IndexPair p) const;
  std::size_t size() const { return all.size(); }
};

GeneratorIndexSet index_set(const FlagShape& shape);

std::size_t dim_group(const FlagShape& shape);
std::size_t dim_unipotent_radical(const FlagShape& shape);
/// dim O(n₀) or dim Sp(n₀); zero for GL/SL and for even ℓ.
std::size_t dim_g0(const FlagShape& shape);
std::size_t dim_levi(const FlagShape& shape);

/// Positions of the strictly upper blocks M_km, k < m.
bool in_radical_support(const FlagShape& shape, IndexPair p);

}  // namespace parinv
