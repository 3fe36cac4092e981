#pragma once

// Machine checks of the invariant-theoretic statements: invariance under the
// unipotent radical, Jacobian independence on the tangent space, orbit
// dimensions and transcendence-degree counts, non-vanishing witnesses, and a
// few structural identities. Every comparison is an exact equality of rationals.

#include "parinv/json_io.hpp"
#include "parinv/kernels.hpp"
#include "parinv/osp.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace parinv {

enum class Execution { Serial, Parallel };

struct CheckResult {
  std::string name;
  bool pass = false;
  Json details = Json::object();
  std::optional<Json> counterexample;
};

struct VerificationReport {
  FlagShape shape;
  std::uint64_t seed = 0;
  int bound = kDefaultBound;
  std::size_t trials = 0;
  std::vector<CheckResult> checks;
  /// Sign of the top-right slice block that satisfied the form equation (O/SP).
  std::optional<int> s_circ_sign;
  /// Only filled when timing is requested; reports stay byte-identical otherwise.
  std::optional<double> duration_ms;

  bool all_pass() const;
  const CheckResult* find(const std::string& name) const;
  Json to_json() const;
};

/// The invariants whose U-invariance is asserted: J for GL/SL; J°, M₀, M_ij for O/SP.
std::vector<GeneratorDescriptor> invariant_family(const FlagShape& shape);

/// Directions spanning the tangent space of the group at `point`: coordinate
/// units for GL, point·A over a Lie algebra basis otherwise.
std::vector<RationalMatrix> tangent_basis(const FlagShape& shape, const RationalMatrix& point);

CheckResult check_invariance(const FlagShape& shape, std::uint64_t seed, std::size_t trials, int bound,
                             Execution exec = Execution::Parallel);

/// Same check over an explicit descriptor list.
CheckResult check_invariance_of(const FlagShape& shape, const std::vector<GeneratorDescriptor>& descs,
                                std::uint64_t seed, std::size_t trials, int bound,
                                Execution exec = Execution::Parallel);

/// Rank of A ↦ x·A − A·x over a basis of the radical's Lie algebra.
std::size_t orbit_dimension(const FlagShape& shape, const RationalMatrix& point);

struct IndependenceResult {
  std::size_t rank = 0;
  std::size_t expected = 0;
  /// O/SP only: ranks of the J° family, the P_ij family and J° ∪ {M₀, M_ij}.
  std::optional<std::size_t> j_family_rank;
  std::optional<std::size_t> gamma_family_rank;
  std::optional<std::size_t> minor_family_rank;
};

/// Throws RatioUndefinedError for O/SP points where M₀ vanishes.
IndependenceResult independence_rank(const FlagShape& shape, const RationalMatrix& point,
                                     Execution exec = Execution::Parallel);

CheckResult check_independence(const FlagShape& shape, std::uint64_t seed, int bound, int points = 3,
                               Execution exec = Execution::Parallel);
CheckResult check_orbit_and_count(const FlagShape& shape, std::uint64_t seed, int bound, int points = 3);
CheckResult check_index_counts(const FlagShape& shape);
CheckResult check_nonvanishing(const FlagShape& shape, std::uint64_t seed, int bound, int samples = 10);
CheckResult check_adjugate_minor_lemma(int n, std::uint64_t seed, std::size_t trials, int bound);
CheckResult check_monomial_restriction(const FlagShape& shape, std::uint64_t seed, std::size_t points, int bound);
CheckResult check_bruhat_inclusion(const FlagShape& shape, std::uint64_t seed, std::size_t samples, int bound);
CheckResult check_slice_circ(const FlagShape& shape, std::uint64_t seed, std::size_t samples, int bound,
                             std::optional<int>& resolved_sign);
/// Passes when at least `required` mutated descriptors fail invariance.
CheckResult check_negative_controls(const FlagShape& shape, std::uint64_t seed, std::size_t trials, int bound,
                                    std::size_t required = 3, Execution exec = Execution::Parallel);
CheckResult check_worked_examples(const FlagShape& shape);

struct SuiteOptions {
  Execution execution = Execution::Parallel;
  /// Debug aid: appends a mutated generator to the invariance family.
  bool inject_mutation = false;
  bool record_timing = false;
};

VerificationReport run_suite(const FlagShape& shape, std::uint64_t seed, std::size_t trials, int bound,
                             const SuiteOptions& options = {});

}  // namespace parinv
