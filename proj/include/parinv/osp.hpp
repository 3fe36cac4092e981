#pragma once

// Generator system for orthogonal and symplectic groups: the restricted
// determinants J°_ij, the minors M₀ and M_ij, and the ratios P_ij = M_ij/M₀.

#include "parinv/generators.hpp"
#include "parinv/sampling.hpp"

#include <optional>
#include <vector>

namespace parinv {

struct OspGeneratorSystem {
  FlagShape shape;
  /// GL descriptors of the same composition, restricted to the O/SP index set, in ≺ order.
  std::vector<GeneratorDescriptor> j_circ;
  /// Rows: the last N₀ indices; columns: [1, N₀].
  GeneratorDescriptor m0;
  /// M_ij for (i,j) ∈ I₀ × I₀: M₀ with row i and column j added.
  std::vector<GeneratorDescriptor> m_minors;
  /// P_ij = M_ij / M₀, parallel to m_minors.
  std::vector<GeneratorDescriptor> p_ratios;
};

/// Throws ShapeError for GL/SL shapes.
OspGeneratorSystem build_osp_system(const FlagShape& shape);

struct OspValues {
  std::vector<Rational> j_values;
  Rational m0;
  std::vector<Rational> m_values;
  /// Empty when M₀ vanishes at the point ("ratio undefined at this point").
  std::optional<std::vector<Rational>> p_values;
};

OspValues eval_osp(const OspGeneratorSystem& system, const GroupPoint& point);
OspValues eval_osp(const OspGeneratorSystem& system, const RationalMatrix& point);

/// Every polynomial invariant of the system: J°, M₀ and every M_ij.
std::vector<GeneratorDescriptor> polynomial_invariants(const OspGeneratorSystem& system);

}  // namespace parinv
