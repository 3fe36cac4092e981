#include "parinv/verification.hpp"

#include "parinv/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>

namespace parinv {

namespace {

// Sub-streams of the user seed, one per check.
enum Stream : std::uint64_t {
  kInvariance = 1,
  kIndependence = 2,
  kOrbit = 3,
  kWitness = 4,
  kLemma = 5,
  kMonomial = 6,
  kBruhat = 7,
  kSlice = 8,
  kNegative = 9,
};

Json pair_json(const std::optional<IndexPair>& p) { return p ? Json{p->i, p->j} : Json(nullptr); }

Json pairs_json(const std::vector<IndexPair>& ps) {
  Json out = Json::array();
  for (const auto& p : ps) out.push_back(Json{p.i, p.j});
  return out;
}

std::vector<int> range_inclusive(int lo, int hi) {
  std::vector<int> out;
  for (int v = lo; v <= hi; ++v) out.push_back(v);
  return out;
}

RationalMatrix rows_of(const RationalMatrix& m, std::size_t first, std::size_t count) {
  return m.block(first, 0, count, m.cols());
}

RationalMatrix stack_rows(const RationalMatrix& a, const RationalMatrix& b) {
  RationalMatrix out(a.rows() + b.rows(), a.cols());
  out.place(0, 0, a);
  out.place(a.rows(), 0, b);
  return out;
}

RationalMatrix flatten_column(const RationalMatrix& m) {
  RationalMatrix v(m.rows() * m.cols(), 1);
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) v(r * m.cols() + c, 0) = m(r, c);
  return v;
}

InvarianceOutcome run_invariance(const FlagShape& shape, const std::vector<GeneratorDescriptor>& descs, Seed seed,
                                 std::size_t trials, int bound, Execution exec) {
  return exec == Execution::Parallel ? invariance_trials_parallel(shape, descs, seed, trials, bound)
                                     : invariance_trials_serial(shape, descs, seed, trials, bound);
}

RationalMatrix run_jacobian(const std::vector<GeneratorDescriptor>& descs, const RationalMatrix& point,
                            const std::vector<RationalMatrix>& dirs, Execution exec) {
  return exec == Execution::Parallel ? jacobian_parallel(descs, point, dirs) : jacobian_serial(descs, point, dirs);
}

// Mutated copies of the J generators, largest first, that differ from every genuine descriptor.
std::vector<std::pair<GeneratorDescriptor, Mutation>> mutation_candidates(const FlagShape& shape, std::size_t limit) {
  const auto family = invariant_family(shape);
  std::vector<std::pair<GeneratorDescriptor, Mutation>> out;
  for (auto it = family.rbegin(); it != family.rend() && out.size() < limit; ++it) {
    if (it->role != Role::J) continue;
    for (Mutation m : {Mutation::TrailingColumns, Mutation::ShiftLastColumn, Mutation::ShiftLeadingRow}) {
      if (out.size() >= limit) break;
      auto mutated = mutate(*it, shape.n(), m);
      if (!mutated) continue;
      const bool genuine = std::any_of(family.begin(), family.end(),
                                       [&](const GeneratorDescriptor& d) { return d.recipe == mutated->recipe; });
      const bool duplicate = std::any_of(out.begin(), out.end(),
                                         [&](const auto& c) { return c.first.recipe == mutated->recipe; });
      if (!genuine && !duplicate) out.emplace_back(std::move(*mutated), m);
    }
  }
  return out;
}

GroupPoint sample_point_with_defined_ratios(const FlagShape& shape, CounterRng& rng, int bound) {
  if (!shape.orthosymplectic() || !shape.has_center()) return sample_generic_point(shape, rng, bound);
  const auto sys = build_osp_system(shape);
  for (int attempt = 0; attempt < kResampleBudget; ++attempt) {
    auto x = sample_generic_point(shape, rng, bound);
    if (!eval_generator(sys.m0, x.matrix()).is_zero()) return x;
  }
  throw SamplingError("M0 vanished at every sampled point");
}

}  // namespace

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.pass; });
}

const CheckResult* VerificationReport::find(const std::string& name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

Json VerificationReport::to_json() const {
  Json out;
  out["shape"] = parinv::to_json(shape);
  out["seed"] = seed;
  out["bound"] = bound;
  out["trials"] = trials;
  if (s_circ_sign) out["s_circ_sign"] = *s_circ_sign;
  out["pass"] = all_pass();
  Json list = Json::array();
  for (const auto& c : checks) {
    Json item;
    item["name"] = c.name;
    item["pass"] = c.pass;
    item["details"] = c.details;
    if (c.counterexample) item["counterexample"] = *c.counterexample;
    list.push_back(std::move(item));
  }
  out["checks"] = std::move(list);
  out["duration_ms"] = duration_ms ? Json(*duration_ms) : Json(nullptr);
  return out;
}

std::vector<GeneratorDescriptor> invariant_family(const FlagShape& shape) {
  if (!shape.orthosymplectic()) return build_generators(shape);
  const auto sys = build_osp_system(shape);
  auto out = polynomial_invariants(sys);
  out.insert(out.end(), sys.p_ratios.begin(), sys.p_ratios.end());
  return out;
}

std::vector<RationalMatrix> tangent_basis(const FlagShape& shape, const RationalMatrix& point) {
  std::vector<RationalMatrix> dirs;
  if (shape.kind() == GroupKind::GL) {
    const auto n = static_cast<std::size_t>(shape.n());
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c < n; ++c) {
        RationalMatrix e(n, n);
        e(r, c) = Rational(1);
        dirs.push_back(std::move(e));
      }
    return dirs;
  }
  for (const auto& a : lie_algebra_basis(shape, LieScope::Full)) dirs.push_back(point * a);
  return dirs;
}

CheckResult check_invariance_of(const FlagShape& shape, const std::vector<GeneratorDescriptor>& descs,
                                std::uint64_t seed, std::size_t trials, int bound, Execution exec) {
  CheckResult out;
  out.name = "invariance";
  const auto outcome = run_invariance(shape, descs, Seed{seed, kInvariance}, trials, bound, exec);
  out.pass = outcome.all_pass();
  out.details["generators"] = descs.size();
  out.details["trials"] = outcome.trials;
  out.details["failing_generators"] = outcome.failing_descriptors();
  out.details["undefined_ratio_skips"] = outcome.undefined_ratio_skips;
  for (std::size_t k = 0; k < descs.size(); ++k) {
    const auto& f = outcome.first_failure[k];
    if (!f) continue;
    out.counterexample = Json{{"generator", descs[k].label()},
                              {"pair", pair_json(descs[k].pair)},
                              {"descriptor", to_json(descs[k])},
                              {"trial", f->trial},
                              {"x", to_json(f->x)},
                              {"g", to_json(f->g)},
                              {"value_at_x", f->before.str()},
                              {"value_at_conjugate", f->after.str()}};
    break;
  }
  return out;
}

CheckResult check_invariance(const FlagShape& shape, std::uint64_t seed, std::size_t trials, int bound,
                             Execution exec) {
  return check_invariance_of(shape, invariant_family(shape), seed, trials, bound, exec);
}

std::size_t orbit_dimension(const FlagShape& shape, const RationalMatrix& point) {
  const auto basis = lie_algebra_basis(shape, LieScope::Radical);
  if (basis.empty()) return 0;
  RationalMatrix images(point.rows() * point.cols(), basis.size());
  for (std::size_t k = 0; k < basis.size(); ++k)
    images.place(0, k, flatten_column(point * basis[k] - basis[k] * point));
  return rank(images);
}

IndependenceResult independence_rank(const FlagShape& shape, const RationalMatrix& point, Execution exec) {
  IndependenceResult out;
  const auto dirs = tangent_basis(shape, point);
  if (!shape.orthosymplectic()) {
    const auto descs = build_generators(shape);
    out.rank = rank(run_jacobian(descs, point, dirs, exec));
    out.expected = descs.size();
    return out;
  }
  const auto sys = build_osp_system(shape);
  if (shape.has_center() && eval_generator(sys.m0, point).is_zero()) throw RatioUndefinedError();
  std::vector<GeneratorDescriptor> all = sys.j_circ;
  all.insert(all.end(), sys.p_ratios.begin(), sys.p_ratios.end());
  all.push_back(sys.m0);
  all.insert(all.end(), sys.m_minors.begin(), sys.m_minors.end());
  const RationalMatrix jac = run_jacobian(all, point, dirs, exec);

  const std::size_t nj = sys.j_circ.size();
  const std::size_t np = sys.p_ratios.size();
  const RationalMatrix j_rows = rows_of(jac, 0, nj);
  const RationalMatrix p_rows = rows_of(jac, nj, np);
  const RationalMatrix m_rows = rows_of(jac, nj + np, 1 + sys.m_minors.size());
  out.j_family_rank = rank(j_rows);
  out.gamma_family_rank = rank(p_rows);
  out.minor_family_rank = rank(stack_rows(j_rows, m_rows));
  out.rank = rank(stack_rows(j_rows, p_rows));
  out.expected = nj + dim_g0(shape);
  return out;
}

CheckResult check_independence(const FlagShape& shape, std::uint64_t seed, int bound, int points, Execution exec) {
  CheckResult out;
  out.name = "independence";
  CounterRng base(Seed{seed, kIndependence});
  std::size_t best = 0;
  std::optional<IndependenceResult> best_result;
  Json per_point = Json::array();
  Json used = Json::array();
  for (int k = 0; k < points; ++k) {
    CounterRng rng = base.fork(static_cast<std::uint64_t>(k));
    const auto x = sample_point_with_defined_ratios(shape, rng, bound);
    const auto r = independence_rank(shape, x.matrix(), exec);
    Json entry{{"rank", r.rank}};
    if (r.j_family_rank) {
      entry["j_family_rank"] = *r.j_family_rank;
      entry["gamma_family_rank"] = *r.gamma_family_rank;
      entry["j_and_minor_family_rank"] = *r.minor_family_rank;
    }
    per_point.push_back(std::move(entry));
    used.push_back(to_json(x.matrix()));
    if (!best_result || r.rank > best) {
      best = r.rank;
      best_result = r;
    }
  }
  const auto& r = *best_result;
  out.details["expected"] = r.expected;
  out.details["max_rank"] = r.rank;
  out.details["per_point"] = std::move(per_point);
  out.details["points"] = std::move(used);
  out.pass = r.rank == r.expected;
  if (r.j_family_rank) {
    const std::size_t n_j = index_set(shape).size();
    out.details["expected_j_family_rank"] = n_j;
    out.details["expected_gamma_family_rank"] = dim_g0(shape);
    out.pass = out.pass && *r.j_family_rank == n_j && *r.gamma_family_rank == dim_g0(shape);
  }
  return out;
}

CheckResult check_orbit_and_count(const FlagShape& shape, std::uint64_t seed, int bound, int points) {
  CheckResult out;
  out.name = "orbit_count_identity";
  CounterRng base(Seed{seed, kOrbit});
  std::vector<std::size_t> dims;
  for (int k = 0; k < points; ++k) {
    CounterRng rng = base.fork(static_cast<std::uint64_t>(k));
    dims.push_back(orbit_dimension(shape, sample_generic_point(shape, rng, bound).matrix()));
  }
  const std::size_t orbit = *std::max_element(dims.begin(), dims.end());
  const bool stable = std::all_of(dims.begin(), dims.end(), [&](std::size_t d) { return d == orbit; });
  const std::size_t generators = index_set(shape).size();
  const std::size_t g0 = dim_g0(shape);
  const std::size_t dim_g = dim_group(shape);
  const std::size_t dim_u = dim_unipotent_radical(shape);
  out.details["orbit_dimensions"] = dims;
  out.details["dim_group"] = dim_g;
  out.details["dim_unipotent_radical"] = dim_u;
  out.details["generators"] = generators;
  out.details["dim_g0"] = g0;
  out.details["identity"] = std::to_string(generators) + " + " + std::to_string(g0) + " = " + std::to_string(dim_g) +
                            " - " + std::to_string(orbit);
  out.pass = stable && orbit == dim_u && generators + g0 + orbit == dim_g;
  return out;
}

CheckResult check_index_counts(const FlagShape& shape) {
  CheckResult out;
  out.name = "index_set";
  const FlagShape gl = shape.as_gl();
  const int n = shape.n();
  std::size_t pattern = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j)
      if (in_gl_pattern(gl, {i, j})) ++pattern;
  const std::size_t gl_formula = static_cast<std::size_t>(n * n) - dim_unipotent_radical(gl);
  const auto set = index_set(shape);
  bool ok = pattern == gl_formula;

  bool strictly_ordered = true;
  for (std::size_t k = 1; k < set.all.size(); ++k)
    if (!precedes(set.all[k - 1], set.all[k])) strictly_ordered = false;
  ok = ok && strictly_ordered;

  const auto gl_set = index_set(gl);
  for (const auto& p : set.all)
    if (!gl_set.contains(p)) ok = false;
  switch (shape.kind()) {
    case GroupKind::GL:
      ok = ok && set.size() == pattern && !set.all.empty() && set.all.front() == IndexPair{n, 1};
      break;
    case GroupKind::SL:
      ok = ok && set.size() + 1 == gl_set.size() && !set.contains({1, n});
      break;
    default:
      for (const auto& p : set.all)
        if (p.i <= n - shape.half_size()) ok = false;
      ok = ok && set.gamma0.size() == static_cast<std::size_t>(shape.center_size() * shape.center_size());
      break;
  }
  out.details["gl_pattern_count"] = pattern;
  out.details["n_squared_minus_dim_u"] = gl_formula;
  out.details["index_set_size"] = set.size();
  out.details["sigma0_size"] = std::count(set.sigma0.begin(), set.sigma0.end(), true);
  out.details["gamma0_size"] = set.gamma0.size();
  out.details["pairs"] = pairs_json(set.all);
  out.pass = ok;
  return out;
}

CheckResult check_nonvanishing(const FlagShape& shape, std::uint64_t seed, int bound, int samples) {
  CheckResult out;
  out.name = "nonvanishing";
  std::vector<GeneratorDescriptor> family;
  for (auto& d : invariant_family(shape))
    if (d.role != Role::P) family.push_back(std::move(d));
  std::vector<int> witness(family.size(), -1);
  CounterRng base(Seed{seed, kWitness});
  for (int s = 0; s < samples; ++s) {
    CounterRng rng = base.fork(static_cast<std::uint64_t>(s));
    // Alternate components of O(n): some M_ij vanish on one of them.
    const auto x = sample_group_point(shape, rng, bound, s % 2 == 1);
    const PointEvaluator<Rational> ev(x.matrix());
    for (std::size_t k = 0; k < family.size(); ++k)
      if (witness[k] < 0 && !ev(family[k]).is_zero()) witness[k] = s;
  }
  Json missing = Json::array();
  for (std::size_t k = 0; k < family.size(); ++k)
    if (witness[k] < 0) missing.push_back(family[k].label());
  out.details["generators"] = family.size();
  out.details["first_witness_sample"] = witness;
  out.details["missing"] = missing;
  out.pass = missing.empty();

  if (!shape.orthosymplectic()) {
    // Explicit witnesses for the pairs below the anti-diagonal.
    std::size_t total = 0, nonzero = 0;
    Json failed = Json::array();
    for (const auto& d : family) {
      const IndexPair p = *d.pair;
      if (on_or_above_antidiagonal(shape.n(), p)) continue;
      ++total;
      if (!eval_generator(d, nonvanishing_witness(shape.n(), p)).is_zero()) {
        ++nonzero;
      } else {
        failed.push_back(d.label());
      }
    }
    out.details["explicit_witnesses"] = Json{{"pairs", total}, {"nonzero", nonzero}, {"failed", failed}};
    out.pass = out.pass && nonzero == total;
  }
  if (!out.pass) out.counterexample = Json{{"missing", missing}};
  return out;
}

CheckResult check_adjugate_minor_lemma(int n, std::uint64_t seed, std::size_t trials, int bound) {
  CheckResult out;
  out.name = "adjugate_minor_lemma";
  CounterRng base(Seed{seed, kLemma});
  std::size_t comparisons = 0;
  for (std::size_t t = 0; t < trials && !out.counterexample; ++t) {
    CounterRng rng = base.fork(t);
    RationalMatrix x(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (std::size_t r = 0; r < x.rows(); ++r)
      for (std::size_t c = 0; c < x.cols(); ++c) x(r, c) = Rational(static_cast<long>(rng.uniform_int(-bound, bound)));
    const RationalMatrix g = sample_unitriangular(n, rng, bound);
    const RationalMatrix adj_x = adjugate(x);
    const RationalMatrix adj_xg = adjugate(x * g);
    for (int a = 1; a <= n && !out.counterexample; ++a) {
      const auto rows = range_inclusive(a, n);
      const int k = n - a + 1;
      std::vector<int> all_cols = range_inclusive(1, n);
      // Random k-subset of columns by partial Fisher–Yates.
      for (int s = 0; s < k; ++s) {
        const auto pick = static_cast<std::size_t>(rng.uniform_int(s, n - 1));
        std::swap(all_cols[static_cast<std::size_t>(s)], all_cols[pick]);
      }
      std::vector<int> random_cols(all_cols.begin(), all_cols.begin() + k);
      std::sort(random_cols.begin(), random_cols.end());
      for (const auto& cols : {range_inclusive(1, k), random_cols}) {
        ++comparisons;
        const Rational before = minor(adj_x, rows, cols);
        const Rational after = minor(adj_xg, rows, cols);
        if (before != after) {
          out.counterexample = Json{{"trial", t},  {"rows", rows},   {"cols", cols},
                                    {"x", to_json(x)}, {"g", to_json(g)}, {"before", before.str()},
                                    {"after", after.str()}};
          break;
        }
      }
    }
  }
  out.details["n"] = n;
  out.details["trials"] = trials;
  out.details["comparisons"] = comparisons;
  out.pass = !out.counterexample;
  return out;
}

CheckResult check_monomial_restriction(const FlagShape& shape, std::uint64_t seed, std::size_t points, int bound) {
  CheckResult out;
  out.name = "monomial_restriction";
  const auto descs = build_generators(shape);
  CounterRng base(Seed{seed, kMonomial});
  std::size_t comparisons = 0;
  for (std::size_t t = 0; t < points && !out.counterexample; ++t) {
    CounterRng rng = base.fork(t);
    const auto s0 = sample_slice(shape, rng, bound, SliceVariant::S0).point.matrix();
    const PointEvaluator<Rational> ev(s0);
    for (const auto& d : descs) {
      if (!on_or_above_antidiagonal(shape.n(), *d.pair)) continue;
      ++comparisons;
      const Rational value = ev(d);
      const Rational expected = slice_monomial(s0, *d.pair);
      if (value != expected) {
        out.counterexample = Json{{"generator", d.label()}, {"point", to_json(s0)}, {"value", value.str()},
                                  {"monomial", expected.str()}};
        break;
      }
    }
  }
  out.details["points"] = points;
  out.details["comparisons"] = comparisons;
  out.pass = !out.counterexample;
  return out;
}

CheckResult check_bruhat_inclusion(const FlagShape& shape, std::uint64_t seed, std::size_t samples, int bound) {
  CheckResult out;
  out.name = "bruhat_inclusion";
  CounterRng base(Seed{seed, kBruhat});
  for (std::size_t t = 0; t < samples && !out.counterexample; ++t) {
    CounterRng rng = base.fork(t);
    const RationalMatrix m = sample_bruhat_product(shape, rng, bound);
    for (int i = 1; i <= shape.n() && !out.counterexample; ++i)
      for (int j = 1; j <= shape.n(); ++j)
        if (!in_gl_pattern(shape, {i, j}) && !m.at({i, j}).is_zero()) {
          out.counterexample = Json{{"sample", t}, {"product", to_json(m)}, {"position", Json{i, j}}};
          break;
        }
  }
  out.details["samples"] = samples;
  out.pass = !out.counterexample;
  return out;
}

CheckResult check_slice_circ(const FlagShape& shape, std::uint64_t seed, std::size_t samples, int bound,
                             std::optional<int>& resolved_sign) {
  CheckResult out;
  out.name = "slice_circ";
  CounterRng base(Seed{seed, kSlice});
  std::set<int> signs;
  for (std::size_t t = 0; t < samples && !out.counterexample; ++t) {
    CounterRng rng = base.fork(t);
    const auto sp = sample_slice(shape, rng, bound, SliceVariant::SCirc);
    signs.insert(sp.resolved_sign);
    const auto& m = sp.point.matrix();
    for (int i = 1; i <= shape.n() && !out.counterexample; ++i)
      for (int j = 1; j <= shape.n(); ++j)
        if (!in_gl_pattern(shape, {i, j}) && !m.at({i, j}).is_zero()) {
          out.counterexample = Json{{"sample", t}, {"point", to_json(m)}, {"position", Json{i, j}}};
          break;
        }
  }
  out.details["samples"] = samples;
  out.details["resolved_signs"] = std::vector<int>(signs.begin(), signs.end());
  out.pass = !out.counterexample && signs.size() == 1;
  if (signs.size() == 1) resolved_sign = *signs.begin();
  return out;
}

CheckResult check_negative_controls(const FlagShape& shape, std::uint64_t seed, std::size_t trials, int bound,
                                    std::size_t required, Execution exec) {
  CheckResult out;
  out.name = "negative_controls";
  if (dim_unipotent_radical(shape) == 0) {
    out.pass = true;
    out.details["note"] = "unipotent radical is trivial; every function is invariant";
    return out;
  }
  const auto candidates = mutation_candidates(shape, 8 * required);
  std::vector<GeneratorDescriptor> descs;
  for (const auto& c : candidates) descs.push_back(c.first);
  const auto outcome = run_invariance(shape, descs, Seed{seed, kNegative}, trials, bound, exec);
  Json rows = Json::array();
  for (std::size_t k = 0; k < descs.size(); ++k) {
    Json row{{"mutation", to_string(candidates[k].second)}, {"descriptor", to_json(descs[k])},
             {"failed", outcome.first_failure[k].has_value()}};
    if (outcome.first_failure[k]) row["first_failing_trial"] = outcome.first_failure[k]->trial;
    rows.push_back(std::move(row));
  }

  // Conjugating by the opposite radical must move at least one genuine generator.
  const auto family = invariant_family(shape);
  std::optional<std::size_t> opposite_trial;
  CounterRng base(Seed{seed, kNegative + 100});
  for (std::size_t t = 0; t < 10 && !opposite_trial; ++t) {
    CounterRng rng = base.fork(t);
    const RationalMatrix x = sample_generic_point(shape, rng, bound).matrix();
    const RationalMatrix g = sample_unipotent_radical(shape, rng, bound).matrix().transpose();
    const PointEvaluator<Rational> before(x);
    const PointEvaluator<Rational> after(inverse(g) * x * g);
    for (const auto& d : family) {
      try {
        if (before(d) != after(d)) {
          opposite_trial = t;
          break;
        }
      } catch (const RatioUndefinedError&) {
      }
    }
  }

  out.details["mutants"] = std::move(rows);
  out.details["failing"] = outcome.failing_descriptors();
  out.details["required"] = required;
  out.details["opposite_radical_breaks_invariance"] = opposite_trial.has_value();
  out.pass = outcome.failing_descriptors() >= required && opposite_trial.has_value();
  return out;
}

CheckResult check_worked_examples(const FlagShape& shape) {
  CheckResult out;
  out.name = "worked_example";
  bool ok = true;
  if (shape == make_shape(GroupKind::GL, 5, {1, 2, 2})) {
    const std::vector<IndexPair> expected{{5, 1}, {4, 1}, {5, 2}, {4, 2}, {5, 3}, {4, 3}, {3, 3}, {2, 3}, {5, 4},
                                          {4, 4}, {3, 4}, {2, 4}, {5, 5}, {4, 5}, {3, 5}, {2, 5}, {1, 5}};
    const auto descs = build_generators(shape);
    std::vector<IndexPair> got;
    for (const auto& d : descs) got.push_back(*d.pair);
    ok = ok && got == expected;
    const auto find = [&](IndexPair p) { return *std::find_if(descs.begin(), descs.end(), [&](const auto& d) { return *d.pair == p; }); };
    ok = ok && find({5, 1}).recipe == Recipe{MinorRecipe{{5}, {1}}};
    ok = ok && find({4, 2}).recipe == Recipe{MinorRecipe{{4, 5}, {1, 2}}};
    ok = ok && find({1, 5}).recipe == Recipe{MinorRecipe{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}}};
    ok = ok && find({5, 3}).recipe == Recipe{StackedRecipe{{5}, {4, 5}, {1, 2, 3}}};
    const Rational j44 = eval_generator(find({4, 4}), nonvanishing_witness(5, {4, 4}));
    ok = ok && j44 == Rational(1);
    out.details["example"] = "GL(5), composition 1,2,2";
    out.details["pairs"] = pairs_json(got);
    out.details["J44_at_witness"] = j44.str();
  } else if (shape == make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1})) {
    const auto set = index_set(shape);
    std::vector<IndexPair> expected;
    for (int j = 2; j <= 6; ++j) expected.push_back({6, j});
    for (int j = 2; j <= 7; ++j) expected.push_back({7, j});
    for (int j = 1; j <= 8; ++j) expected.push_back({8, j});
    std::sort(expected.begin(), expected.end(), precedes);
    ok = ok && set.all == expected;
    std::vector<IndexPair> sigma0;
    for (std::size_t k = 0; k < set.size(); ++k)
      if (set.sigma0[k]) sigma0.push_back(set.all[k]);
    std::vector<IndexPair> expected_sigma0{{8, 1}, {7, 2}, {6, 2}, {6, 3}};
    ok = ok && sigma0 == expected_sigma0;
    ok = ok && set.gamma0 == std::vector<IndexPair>{{4, 4}, {4, 5}, {5, 4}, {5, 5}};
    const auto sys = build_osp_system(shape);
    ok = ok && sys.m0.recipe == Recipe{MinorRecipe{{6, 7, 8}, {1, 2, 3}}};
    out.details["example"] = "Sp(8), composition 1,2,2,2,1";
    out.details["index_set_size"] = set.size();
    out.details["sigma0"] = pairs_json(sigma0);
    out.details["gamma0"] = pairs_json(set.gamma0);
  } else {
    out.details["applicable"] = false;
  }
  out.pass = ok;
  return out;
}

VerificationReport run_suite(const FlagShape& shape, std::uint64_t seed, std::size_t trials, int bound,
                             const SuiteOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report{shape, seed, bound, trials, {}, std::nullopt, std::nullopt};
  auto& checks = report.checks;

  checks.push_back(check_index_counts(shape));

  auto family = invariant_family(shape);
  if (options.inject_mutation) {
    const auto candidates = mutation_candidates(shape, 1);
    if (!candidates.empty()) family.push_back(candidates.front().first);
  }
  checks.push_back(check_invariance_of(shape, family, seed, trials, bound, options.execution));
  const bool invariance_ok = checks.back().pass;

  checks.push_back(check_independence(shape, seed, bound, 3, options.execution));
  const bool independence_ok = checks.back().pass;
  checks.push_back(check_orbit_and_count(shape, seed, bound, 3));
  const bool count_ok = checks.back().pass;
  checks.push_back(check_nonvanishing(shape, seed, bound, 10));

  if (shape.orthosymplectic()) {
    checks.push_back(check_slice_circ(shape, seed, 5, bound, report.s_circ_sign));
  } else {
    checks.push_back(check_adjugate_minor_lemma(shape.n(), seed, std::min<std::size_t>(trials, 50), bound));
    checks.push_back(check_monomial_restriction(shape, seed, 20, bound));
    checks.push_back(check_bruhat_inclusion(shape, seed, 5, bound));
  }
  checks.push_back(check_negative_controls(shape, seed, trials, bound, 3, options.execution));

  auto worked = check_worked_examples(shape);
  if (!worked.details.contains("applicable")) checks.push_back(std::move(worked));

  CheckResult proxy;
  proxy.name = "field_generation_proxy";
  proxy.pass = invariance_ok && independence_ok && count_ok;
  proxy.details["statement"] =
      "free generation of the invariant field is certified by the conjunction of invariance, full tangent-space "
      "Jacobian rank, and the transcendence-degree count";
  proxy.details["invariance"] = invariance_ok;
  proxy.details["independence"] = independence_ok;
  proxy.details["count_identity"] = count_ok;
  checks.push_back(std::move(proxy));

  if (options.record_timing) {
    report.duration_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return report;
}

}  // namespace parinv
