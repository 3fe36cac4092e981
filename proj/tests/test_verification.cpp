#include "parinv/verification.hpp"

#include <gtest/gtest.h>

using namespace parinv;

namespace {

std::size_t max_rank(const FlagShape& s, std::uint64_t seed) {
  const auto check = check_independence(s, seed, kDefaultBound, 3);
  return check.details["max_rank"].get<std::size_t>();
}

}  // namespace

TEST(Independence, SpecRanks) {
  EXPECT_EQ(max_rank(make_shape(GroupKind::GL, 5, {1, 2, 2}), 1), 17u);
  EXPECT_EQ(max_rank(make_shape(GroupKind::GL, 2, {2}), 1), 4u);
  EXPECT_EQ(max_rank(make_shape(GroupKind::SL, 5, {1, 2, 2}), 1), 16u);
  const auto sp = check_independence(make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1}), 1, kDefaultBound, 3);
  EXPECT_TRUE(sp.pass);
  EXPECT_EQ(sp.details["max_rank"], 22);
  for (const auto& p : sp.details["per_point"]) EXPECT_EQ(p["gamma_family_rank"], 3);
}

TEST(Independence, EvenOrthogonalIdentityComponentIsDegenerate) {
  // For O(6) the generic behaviour lives on the det -1 component.
  const FlagShape s = make_shape(GroupKind::O, 6, {3, 3});
  EXPECT_EQ(slice_component_det(s), -1);
  CounterRng rng(Seed{71, 0});
  const auto identity_component = sample_group_point(s, rng).matrix();
  EXPECT_EQ(independence_rank(s, identity_component).rank, 11u);
  EXPECT_EQ(independence_rank(s, sample_generic_point(s, rng).matrix()).rank, 12u);
  EXPECT_TRUE(check_independence(s, 1, kDefaultBound, 3).pass);
}

TEST(Independence, SerialAndParallelAgree) {
  const FlagShape s = make_shape(GroupKind::O, 5, {1, 3, 1});
  CounterRng rng(Seed{72, 0});
  const RationalMatrix x = sample_group_point(s, rng).matrix();
  const auto a = independence_rank(s, x, Execution::Serial);
  const auto b = independence_rank(s, x, Execution::Parallel);
  EXPECT_EQ(a.rank, b.rank);
  EXPECT_EQ(a.gamma_family_rank, b.gamma_family_rank);
}

TEST(Orbit, DimensionEqualsRadicalAndCountIdentity) {
  for (const auto& s : {make_shape(GroupKind::GL, 5, {1, 2, 2}), make_shape(GroupKind::SL, 5, {1, 2, 2}),
                        make_shape(GroupKind::O, 6, {2, 2, 2}), make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1})}) {
    const auto c = check_orbit_and_count(s, 3, kDefaultBound, 3);
    EXPECT_TRUE(c.pass) << c.details.dump();
  }
  const auto sp = check_orbit_and_count(make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1}), 3, kDefaultBound, 3);
  EXPECT_EQ(sp.details["identity"], "19 + 3 = 36 - 14");
  EXPECT_EQ(orbit_dimension(make_shape(GroupKind::GL, 3, {3}), RationalMatrix::identity(3)), 0u);
  // The identity is fixed by conjugation.
  EXPECT_EQ(orbit_dimension(make_shape(GroupKind::GL, 5, {1, 2, 2}), RationalMatrix::identity(5)), 0u);
}

TEST(Checks, LemmaAndStructuralChecksPass) {
  for (int n : {4, 5, 6}) EXPECT_TRUE(check_adjugate_minor_lemma(n, 5, 20, kDefaultBound).pass);
  const FlagShape gl = make_shape(GroupKind::GL, 5, {1, 2, 2});
  EXPECT_TRUE(check_monomial_restriction(gl, 5, 10, kDefaultBound).pass);
  EXPECT_TRUE(check_bruhat_inclusion(gl, 5, 5, kDefaultBound).pass);
  EXPECT_TRUE(check_index_counts(gl).pass);
  EXPECT_TRUE(check_nonvanishing(gl, 5, kDefaultBound).pass);
  EXPECT_TRUE(check_worked_examples(gl).pass);
  EXPECT_TRUE(check_worked_examples(make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1})).pass);
  std::optional<int> sign;
  EXPECT_TRUE(check_slice_circ(make_shape(GroupKind::O, 5, {1, 3, 1}), 5, 3, kDefaultBound, sign).pass);
  EXPECT_EQ(sign, 1);
}

TEST(Checks, InvarianceFailsForMutatedDescriptor) {
  const FlagShape s = make_shape(GroupKind::GL, 5, {1, 2, 2});
  auto descs = build_generators(s);
  descs.push_back(*mutate(descs[3], 5, Mutation::ShiftLeadingRow));
  const auto c = check_invariance_of(s, descs, 1, 20, kDefaultBound);
  EXPECT_FALSE(c.pass);
  ASSERT_TRUE(c.counterexample);
  const auto& ce = *c.counterexample;
  EXPECT_NE(ce["value_at_x"], ce["value_at_conjugate"]);
  // Replayable from the report alone.
  const RationalMatrix x = matrix_from_json(ce["x"]), g = matrix_from_json(ce["g"]);
  const auto d = descriptor_from_json(ce["descriptor"]);
  EXPECT_EQ(eval_generator(d, x).str(), ce["value_at_x"]);
  EXPECT_EQ(eval_generator(d, inverse(g) * x * g).str(), ce["value_at_conjugate"]);
}

TEST(Checks, NegativeControlsFindFailures) {
  for (const auto& s : {make_shape(GroupKind::GL, 6, {3, 3}), make_shape(GroupKind::SP, 4, {1, 2, 1})}) {
    const auto c = check_negative_controls(s, 1, 50, kDefaultBound);
    EXPECT_TRUE(c.pass) << c.details.dump();
    EXPECT_GE(c.details["failing"].get<std::size_t>(), 3u);
  }
  EXPECT_TRUE(check_negative_controls(make_shape(GroupKind::GL, 3, {3}), 1, 10, kDefaultBound).pass);
}

TEST(Suite, WorkedExamplePassesAndIsDeterministic) {
  const FlagShape s = make_shape(GroupKind::GL, 5, {1, 2, 2});
  const auto a = run_suite(s, 1, 30, kDefaultBound);
  EXPECT_TRUE(a.all_pass());
  ASSERT_NE(a.find("worked_example"), nullptr);
  EXPECT_EQ(a.find("worked_example")->details["J44_at_witness"], "1");
  ASSERT_NE(a.find("field_generation_proxy"), nullptr);
  const auto b = run_suite(s, 1, 30, kDefaultBound, SuiteOptions{Execution::Serial, false, false});
  EXPECT_EQ(a.to_json().dump(), b.to_json().dump());
  EXPECT_TRUE(a.to_json()["duration_ms"].is_null());
}

TEST(Suite, MutationInjectionFails) {
  const auto r = run_suite(make_shape(GroupKind::GL, 4, {1, 3}), 1, 20, kDefaultBound,
                           SuiteOptions{Execution::Parallel, true, true});
  EXPECT_FALSE(r.all_pass());
  EXPECT_FALSE(r.find("invariance")->pass);
  EXPECT_TRUE(r.find("invariance")->counterexample.has_value());
  EXPECT_TRUE(r.to_json()["duration_ms"].is_number());
}

TEST(Suite, Sp8ReportsCounts) {
  const auto r = run_suite(make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1}), 2, 10, kDefaultBound);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.s_circ_sign, -1);
  const auto& d = r.find("orbit_count_identity")->details;
  EXPECT_EQ(d["generators"], 19);
  EXPECT_EQ(d["dim_g0"], 3);
  EXPECT_EQ(d["orbit_dimensions"][0], 14);
}
