#pragma once

// Data-parallel kernels: invariance trials and generator Jacobians. Each has an
// OpenMP version and a serial reference; both produce identical results
// because every trial or column draws from its own forked counter stream and
// results are reduced in index order.

#include "parinv/generators.hpp"
#include "parinv/rng.hpp"
#include "parinv/sampling.hpp"

#include <optional>
#include <vector>

namespace parinv {

/// Applies PARINV_THREADS (if set and positive) as the OpenMP thread cap.
void configure_threads_from_env();
int max_threads();

struct InvarianceFailure {
  std::size_t trial = 0;
  RationalMatrix x;
  RationalMatrix g;
  Rational before;
  Rational after;
};

struct InvarianceOutcome {
  std::size_t trials = 0;
  /// Earliest failing trial for each descriptor, if any.
  std::vector<std::optional<InvarianceFailure>> first_failure;
  /// Ratio evaluations skipped because the denominator vanished.
  std::size_t undefined_ratio_skips = 0;

  bool all_pass() const;
  std::size_t failing_descriptors() const;
};

/// For each trial t: x from the group, g from the unipotent radical, both drawn
/// from CounterRng(seed).fork(t); every descriptor must satisfy f(g⁻¹xg) = f(x).
/// For O(n), odd trials draw x from the det -1 component.
InvarianceOutcome invariance_trials_serial(const FlagShape& shape, const std::vector<GeneratorDescriptor>& descs,
                                           Seed seed, std::size_t trials, int bound);
InvarianceOutcome invariance_trials_parallel(const FlagShape& shape, const std::vector<GeneratorDescriptor>& descs,
                                             Seed seed, std::size_t trials, int bound);

/// Rows follow `descs`, columns follow `directions`: entry (r, c) is the
/// derivative of descs[r] at `point` along directions[c].
RationalMatrix jacobian_serial(const std::vector<GeneratorDescriptor>& descs, const RationalMatrix& point,
                               const std::vector<RationalMatrix>& directions);
RationalMatrix jacobian_parallel(const std::vector<GeneratorDescriptor>& descs, const RationalMatrix& point,
                                 const std::vector<RationalMatrix>& directions);

}  // namespace parinv
