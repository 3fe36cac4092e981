#include "parinv/kernels.hpp"

#include "parinv/linalg.hpp"

#include <omp.h>

#include <cstdlib>
#include <exception>
#include <string>

namespace parinv {

void configure_threads_from_env() {
  const char* env = std::getenv("PARINV_THREADS");
  if (env == nullptr) return;
  try {
    const int n = std::stoi(env);
    if (n > 0) omp_set_num_threads(n);
  } catch (const std::exception&) {
    // Malformed values leave the OpenMP default in place.
  }
}

int max_threads() { return omp_get_max_threads(); }

bool InvarianceOutcome::all_pass() const { return failing_descriptors() == 0; }

std::size_t InvarianceOutcome::failing_descriptors() const {
  std::size_t count = 0;
  for (const auto& f : first_failure)
    if (f) ++count;
  return count;
}

namespace {

// Exceptions must not escape an OpenMP region; the first one is kept and
// rethrown on the calling thread.
class ErrorSlot {
 public:
  template <class F>
  void guard(F&& f) {
    try {
      f();
    } catch (...) {
#pragma omp critical(parinv_error_slot)
      if (!error_) error_ = std::current_exception();
    }
  }
  void rethrow() const {
    if (error_) std::rethrow_exception(error_);
  }

 private:
  std::exception_ptr error_;
};

struct TrialResult {
  RationalMatrix x;
  RationalMatrix g;
  std::vector<Rational> before;
  std::vector<Rational> after;
  std::vector<bool> defined;
};

std::optional<Rational> try_eval(const PointEvaluator<Rational>& ev, const GeneratorDescriptor& d) {
  try {
    return ev(d);
  } catch (const RatioUndefinedError&) {
    return std::nullopt;
  }
}

TrialResult run_trial(const FlagShape& shape, const std::vector<GeneratorDescriptor>& descs, const CounterRng& base,
                      std::size_t trial, int bound) {
  CounterRng rng = base.fork(trial);
  TrialResult r;
  // Odd trials of orthogonal shapes use the det -1 component.
  r.x = sample_group_point(shape, rng, bound, trial % 2 == 1).matrix();
  r.g = sample_unipotent_radical(shape, rng, bound).matrix();
  const RationalMatrix moved = inverse(r.g) * r.x * r.g;
  const PointEvaluator<Rational> at_x(r.x);
  const PointEvaluator<Rational> at_moved(moved);
  r.before.resize(descs.size());
  r.after.resize(descs.size());
  r.defined.assign(descs.size(), true);
  for (std::size_t k = 0; k < descs.size(); ++k) {
    auto b = try_eval(at_x, descs[k]);
    auto a = try_eval(at_moved, descs[k]);
    if (!b || !a) {
      r.defined[k] = false;
      continue;
    }
    r.before[k] = std::move(*b);
    r.after[k] = std::move(*a);
  }
  return r;
}

InvarianceOutcome reduce(std::vector<TrialResult>& results, std::size_t n_descs) {
  InvarianceOutcome out;
  out.trials = results.size();
  out.first_failure.resize(n_descs);
  for (std::size_t t = 0; t < results.size(); ++t) {
    auto& r = results[t];
    for (std::size_t k = 0; k < n_descs; ++k) {
      if (!r.defined[k]) {
        ++out.undefined_ratio_skips;
        continue;
      }
      if (out.first_failure[k] || r.before[k] == r.after[k]) continue;
      out.first_failure[k] = InvarianceFailure{t, r.x, r.g, r.before[k], r.after[k]};
    }
  }
  return out;
}

}  // namespace

InvarianceOutcome invariance_trials_serial(const FlagShape& shape, const std::vector<GeneratorDescriptor>& descs,
                                           Seed seed, std::size_t trials, int bound) {
  const CounterRng base(seed);
  std::vector<TrialResult> results;
  results.reserve(trials);
  for (std::size_t t = 0; t < trials; ++t) results.push_back(run_trial(shape, descs, base, t, bound));
  return reduce(results, descs.size());
}

InvarianceOutcome invariance_trials_parallel(const FlagShape& shape, const std::vector<GeneratorDescriptor>& descs,
                                             Seed seed, std::size_t trials, int bound) {
  const CounterRng base(seed);
  std::vector<TrialResult> results(trials);
  const auto count = static_cast<long>(trials);
  ErrorSlot error;
#pragma omp parallel for schedule(dynamic)
  for (long t = 0; t < count; ++t) {
    error.guard([&] {
      results[static_cast<std::size_t>(t)] = run_trial(shape, descs, base, static_cast<std::size_t>(t), bound);
    });
  }
  error.rethrow();
  return reduce(results, descs.size());
}

namespace {

void jacobian_column(const std::vector<GeneratorDescriptor>& descs, const RationalMatrix& point,
                     const RationalMatrix& direction, std::size_t col, RationalMatrix& out) {
  const PointEvaluator<DualScalar> ev(seed_dual(point, direction));
  for (std::size_t r = 0; r < descs.size(); ++r) out(r, col) = ev(descs[r]).derivative;
}

}  // namespace

RationalMatrix jacobian_serial(const std::vector<GeneratorDescriptor>& descs, const RationalMatrix& point,
                               const std::vector<RationalMatrix>& directions) {
  RationalMatrix out(descs.size(), directions.size());
  for (std::size_t c = 0; c < directions.size(); ++c) jacobian_column(descs, point, directions[c], c, out);
  return out;
}

RationalMatrix jacobian_parallel(const std::vector<GeneratorDescriptor>& descs, const RationalMatrix& point,
                                 const std::vector<RationalMatrix>& directions) {
  RationalMatrix out(descs.size(), directions.size());
  const auto count = static_cast<long>(directions.size());
  ErrorSlot error;
  // Each column writes a disjoint set of entries.
#pragma omp parallel for schedule(dynamic)
  for (long c = 0; c < count; ++c) {
    const auto col = static_cast<std::size_t>(c);
    error.guard([&] { jacobian_column(descs, point, directions[col], col, out); });
  }
  error.rethrow();
  return out;
}

}  // namespace parinv
