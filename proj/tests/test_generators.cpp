#include "parinv/generators.hpp"
#include "parinv/json_io.hpp"
#include "parinv/osp.hpp"
#include "parinv/sampling.hpp"

#include "oracle.hpp"

#include <gtest/gtest.h>

using namespace parinv;

namespace {

const GeneratorDescriptor& find(const std::vector<GeneratorDescriptor>& descs, IndexPair p) {
  for (const auto& d : descs)
    if (d.pair && *d.pair == p) return d;
  throw std::out_of_range("pair not found");
}

// The witness from the non-vanishing argument for J_44 in GL(5) with parts 1,2,2.
RationalMatrix witness_44() {
  return RationalMatrix{{0, 0, 0, 0, 1}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}, {0, 1, 0, 0, 0}, {1, 0, 0, 0, 0}} +
         RationalMatrix{{0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 0, 0}, {0, 0, 0, 1, 0}, {0, 0, 1, 0, 0}};
}

}  // namespace

TEST(Generators, WorkedExampleDescriptors) {
  const auto descs = build_generators(make_shape(GroupKind::GL, 5, {1, 2, 2}));
  ASSERT_EQ(descs.size(), 17u);
  EXPECT_EQ(find(descs, {5, 1}).recipe, (Recipe{MinorRecipe{{5}, {1}}}));
  EXPECT_EQ(find(descs, {4, 2}).recipe, (Recipe{MinorRecipe{{4, 5}, {1, 2}}}));
  EXPECT_EQ(find(descs, {2, 3}).recipe, (Recipe{MinorRecipe{{2, 4, 5}, {1, 2, 3}}}));
  EXPECT_EQ(find(descs, {1, 5}).recipe, (Recipe{MinorRecipe{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}}}));
  // Below the anti-diagonal: last i' rows of X over last j - i' rows of X*.
  EXPECT_EQ(find(descs, {4, 4}).recipe, (Recipe{StackedRecipe{{4, 5}, {4, 5}, {1, 2, 3, 4}}}));
  EXPECT_EQ(find(descs, {5, 3}).recipe, (Recipe{StackedRecipe{{5}, {4, 5}, {1, 2, 3}}}));
  for (const auto& d : descs) EXPECT_NO_THROW(validate(d, 5));
}

TEST(Generators, ClosedFormValues) {
  const FlagShape s = make_shape(GroupKind::GL, 5, {1, 2, 2});
  const auto descs = build_generators(s);
  CounterRng rng(Seed{51, 0});
  const RationalMatrix x = sample_invertible(5, rng, 10);
  EXPECT_EQ(eval_generator(find(descs, {5, 1}), x), x.at({5, 1}));
  EXPECT_EQ(eval_generator(find(descs, {4, 2}), x), x.at({4, 1}) * x.at({5, 2}) - x.at({4, 2}) * x.at({5, 1}));
  EXPECT_EQ(eval_generator(find(descs, {1, 5}), x), oracle::cofactor_det(x));
  const auto values = eval_all(s, RationalMatrix::identity(5));
  EXPECT_EQ(values.back(), Rational(1));
}

TEST(Generators, StackedMatchesOracle) {
  const auto descs = build_generators(make_shape(GroupKind::GL, 6, {1, 2, 3}));
  CounterRng rng(Seed{52, 0});
  const RationalMatrix x = oracle::random_matrix(rng, 6, 6, 4);
  const RationalMatrix adj = oracle::adjugate(x);
  for (const auto& d : descs) {
    const auto* st = std::get_if<StackedRecipe>(&d.recipe);
    if (!st) continue;
    RationalMatrix y(st->cols.size(), st->cols.size());
    std::size_t r = 0;
    for (int row : st->x_rows) {
      for (std::size_t c = 0; c < st->cols.size(); ++c) y(r, c) = x.at({row, st->cols[c]});
      ++r;
    }
    for (int row : st->adj_rows) {
      for (std::size_t c = 0; c < st->cols.size(); ++c) y(r, c) = adj.at({row, st->cols[c]});
      ++r;
    }
    EXPECT_EQ(eval_generator(d, x), oracle::cofactor_det(y)) << d.label();
  }
}

TEST(Generators, WitnessGivesOne) {
  const auto descs = build_generators(make_shape(GroupKind::GL, 5, {1, 2, 2}));
  EXPECT_EQ(eval_generator(find(descs, {4, 4}), witness_44()), Rational(1));
  EXPECT_EQ(nonvanishing_witness(5, {4, 4}), witness_44());
  // A* has zeros strictly below the anti-diagonal and ones on it.
  const RationalMatrix adj = oracle::adjugate(witness_44());
  for (int i = 1; i <= 5; ++i)
    for (int j = 1; j <= 5; ++j) {
      if (i + j > 6) EXPECT_TRUE(adj.at({i, j}).is_zero());
      if (i + j == 6) EXPECT_EQ(adj.at({i, j}), Rational(1));
    }
}

TEST(Generators, DeterministicWitnessesAreNonzero) {
  for (int n = 2; n <= 7; ++n)
    for (const auto& parts : oracle::compositions(n)) {
      const FlagShape s = make_shape(GroupKind::GL, n, parts);
      for (const auto& d : build_generators(s)) {
        if (on_or_above_antidiagonal(n, *d.pair)) continue;
        const RationalMatrix w = nonvanishing_witness(n, *d.pair);
        EXPECT_FALSE(det(w).is_zero());
        EXPECT_FALSE(eval_generator(d, w).is_zero()) << d.label() << " n=" << n;
      }
    }
}

TEST(Generators, MonomialOnS0Slice) {
  const FlagShape s = make_shape(GroupKind::GL, 5, {1, 2, 2});
  const auto descs = build_generators(s);
  CounterRng rng(Seed{53, 0});
  for (int t = 0; t < 10; ++t) {
    const RationalMatrix p = sample_slice(s, rng, 10, SliceVariant::S0).point.matrix();
    const Rational j23 = eval_generator(find(descs, {2, 3}), p);
    EXPECT_EQ(j23, -(p.at({5, 1}) * p.at({4, 2}) * p.at({2, 3})));
    for (const auto& d : descs) {
      if (!on_or_above_antidiagonal(5, *d.pair)) continue;
      const Rational v = eval_generator(d, p);
      EXPECT_EQ(v, oracle::s0_monomial(p, d.pair->i, d.pair->j)) << d.label();
      EXPECT_EQ(v, slice_monomial(p, *d.pair)) << d.label();
    }
  }
}

TEST(Generators, SlSmallestCase) {
  const auto descs = build_generators(make_shape(GroupKind::SL, 2, {1, 1}));
  ASSERT_EQ(descs.size(), 2u);
  EXPECT_EQ(*descs[0].pair, (IndexPair{2, 1}));
  EXPECT_EQ(*descs[1].pair, (IndexPair{2, 2}));
  EXPECT_THROW(build_generators(make_shape(GroupKind::O, 3, {1, 1, 1})), ShapeError);
}

TEST(Generators, ValidateRejectsMalformedRecipes) {
  EXPECT_THROW(validate({IndexPair{1, 1}, MinorRecipe{{1, 2}, {1}}}, 3), std::invalid_argument);
  EXPECT_THROW(validate({IndexPair{1, 1}, MinorRecipe{{4}, {1}}}, 3), std::invalid_argument);
  EXPECT_THROW(validate({IndexPair{1, 1}, StackedRecipe{{1}, {2}, {1, 2, 3}}}, 3), std::invalid_argument);
  EXPECT_NO_THROW(validate({IndexPair{1, 1}, StackedRecipe{{1}, {2, 3}, {1, 2, 3}}}, 3));
}

TEST(Generators, DualEvaluationGivesDirectionalDerivative) {
  const auto descs = build_generators(make_shape(GroupKind::GL, 5, {1, 2, 2}));
  CounterRng rng(Seed{54, 0});
  const RationalMatrix x = sample_invertible(5, rng, 5);
  const RationalMatrix v = oracle::random_matrix(rng, 5, 5, 3);
  for (const auto& d : descs) {
    const DualPolynomial f = [&](const DualMatrix& m) { return PointEvaluator<DualScalar>(m)(d); };
    EXPECT_EQ(directional_derivative(f, x, v), PointEvaluator<DualScalar>(seed_dual(x, v))(d).derivative);
    EXPECT_EQ(PointEvaluator<DualScalar>(seed_dual(x, v))(d).value, eval_generator(d, x));
  }
  // J_42 derivative along E_ij equals the signed cofactor of the 2x2 block.
  const auto& j42 = find(descs, {4, 2});
  const DualPolynomial f = [&](const DualMatrix& m) { return PointEvaluator<DualScalar>(m)(j42); };
  EXPECT_EQ(partial_derivative(f, x, {4, 1}), x.at({5, 2}));
  EXPECT_EQ(partial_derivative(f, x, {5, 1}), -x.at({4, 2}));
  EXPECT_EQ(partial_derivative(f, x, {3, 3}), Rational(0));
}

TEST(Generators, MutationsChangeTheRecipe) {
  const GeneratorDescriptor d{IndexPair{4, 2}, MinorRecipe{{4, 5}, {1, 2}}};
  const auto row = mutate(d, 5, Mutation::ShiftLeadingRow);
  ASSERT_TRUE(row);
  EXPECT_EQ(row->recipe, (Recipe{MinorRecipe{{3, 5}, {1, 2}}}));
  const auto col = mutate(d, 5, Mutation::ShiftLastColumn);
  ASSERT_TRUE(col);
  EXPECT_EQ(col->recipe, (Recipe{MinorRecipe{{4, 5}, {1, 3}}}));
  const auto trailing = mutate(d, 5, Mutation::TrailingColumns);
  ASSERT_TRUE(trailing);
  EXPECT_EQ(trailing->recipe, (Recipe{MinorRecipe{{4, 5}, {4, 5}}}));
  EXPECT_FALSE(mutate({IndexPair{1, 5}, MinorRecipe{{1, 2, 3, 4, 5}, {1, 2, 3, 4, 5}}}, 5, Mutation::ShiftLastColumn));
}

TEST(Osp, Sp8System) {
  const FlagShape s = make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1});
  const auto sys = build_osp_system(s);
  EXPECT_EQ(sys.j_circ.size(), 19u);
  EXPECT_EQ(sys.m0.recipe, (Recipe{MinorRecipe{{6, 7, 8}, {1, 2, 3}}}));
  ASSERT_EQ(sys.m_minors.size(), 4u);
  EXPECT_EQ(sys.m_minors[1].recipe, (Recipe{MinorRecipe{{4, 6, 7, 8}, {1, 2, 3, 5}}}));
  EXPECT_EQ(sys.p_ratios[1].recipe, (Recipe{RatioRecipe{MinorRecipe{{4, 6, 7, 8}, {1, 2, 3, 5}}, MinorRecipe{{6, 7, 8}, {1, 2, 3}}}}));
  EXPECT_EQ(polynomial_invariants(sys).size(), 24u);
  const auto gl = build_generators(s.as_gl());
  for (const auto& d : sys.j_circ) EXPECT_EQ(d.recipe, find(gl, *d.pair).recipe);
  EXPECT_THROW(build_osp_system(make_shape(GroupKind::GL, 4, {2, 2})), ShapeError);
}

TEST(Osp, RatiosUndefinedWhenM0Vanishes) {
  const FlagShape s = make_shape(GroupKind::O, 5, {1, 3, 1});
  const auto sys = build_osp_system(s);
  const auto at_identity = eval_osp(sys, RationalMatrix::identity(5));
  EXPECT_TRUE(at_identity.m0.is_zero());
  EXPECT_FALSE(at_identity.p_values.has_value());
  EXPECT_THROW(eval_generator(sys.p_ratios.front(), RationalMatrix::identity(5)), RatioUndefinedError);
  CounterRng rng(Seed{55, 0});
  const auto x = sample_group_point(s, rng);
  const auto values = eval_osp(sys, x);
  ASSERT_TRUE(values.p_values.has_value());
  for (std::size_t k = 0; k < values.m_values.size(); ++k)
    EXPECT_EQ((*values.p_values)[k] * values.m0, values.m_values[k]);
}

TEST(Osp, EvenLengthHasNoRatios) {
  const auto sys = build_osp_system(make_shape(GroupKind::O, 6, {3, 3}));
  EXPECT_TRUE(sys.m_minors.empty());
  EXPECT_TRUE(sys.p_ratios.empty());
  EXPECT_EQ(sys.j_circ.size(), 12u);
}

TEST(Json, MatrixRoundTrip) {
  const RationalMatrix m{{Rational::parse("-3/7"), Rational(2)}, {Rational(0), Rational::parse("5/2")}};
  const Json j = to_json(m);
  EXPECT_EQ(j.dump(), R"([["-3/7","2"],["0","5/2"]])");
  EXPECT_EQ(matrix_from_json(j), m);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1","2"],["3"]])")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([[1,2],[3,4]])")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(Json::parse(R"([["1/0"]])")), std::invalid_argument);
  EXPECT_THROW(matrix_from_json(Json::parse(R"({"a":1})")), std::invalid_argument);
}

TEST(Json, ShapeAndDescriptorRoundTrip) {
  const FlagShape s = make_shape(GroupKind::SP, 8, {1, 2, 2, 2, 1});
  EXPECT_EQ(to_json(s).dump(), R"({"kind":"sp","n":8,"parts":[1,2,2,2,1]})");
  EXPECT_EQ(shape_from_json(to_json(s)), s);
  const auto sys = build_osp_system(s);
  std::vector<GeneratorDescriptor> all = sys.j_circ;
  all.push_back(sys.m0);
  all.insert(all.end(), sys.m_minors.begin(), sys.m_minors.end());
  all.insert(all.end(), sys.p_ratios.begin(), sys.p_ratios.end());
  for (const auto& d : all) EXPECT_EQ(descriptor_from_json(to_json(d)), d) << d.label();
  EXPECT_EQ(to_json(build_generators(make_shape(GroupKind::GL, 5, {1, 2, 2})).front()).dump(),
            R"({"pair":[5,1],"role":"J","kind":"minor","x_rows":[5],"adj_rows":[],"cols":[1]})");
}
