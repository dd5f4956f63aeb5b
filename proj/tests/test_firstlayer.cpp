#include "dysonct/firstlayer.hpp"

#include "oracle.hpp"
#include "support.hpp"

#include <gtest/gtest.h>

using dysonct::DysonSpec;
using dysonct::LayerSpec;

TEST(LayerSpec, Validation) {
  EXPECT_THROW(LayerSpec::make(2, {0}, {}), dysonct::InvalidParameters);
  EXPECT_THROW(LayerSpec::make(2, {0}, {3}), dysonct::InvalidParameters);
  EXPECT_THROW(LayerSpec::make(2, {1, 0}, {2, 2}), dysonct::InvalidParameters);
  EXPECT_THROW(LayerSpec::make(3, {0, 1}, {3, 2}), dysonct::InvalidParameters);
  EXPECT_THROW(LayerSpec::make(2, {0}, {0}), dysonct::InvalidParameters);
  EXPECT_THROW(LayerSpec::make(1, {0, 1}, {1, 0}), dysonct::InvalidParameters);
  const auto layer = LayerSpec::make(3, {0, 2}, {1, 3});
  EXPECT_EQ(layer.m(), 2);
  EXPECT_EQ(layer.full_mask(), 3U);
  EXPECT_EQ(layer.select(2), std::vector<int>{2});
  const auto sub = layer.sublayer(2);
  EXPECT_EQ(sub.I, std::vector<int>{2});
  EXPECT_EQ(sub.J, std::vector<int>{3});
}

TEST(FirstLayer, Counting) {
  const std::vector<int> S = {1, 1, 3};
  EXPECT_EQ(dysonct::count_upto(0, S), 0);
  EXPECT_EQ(dysonct::count_upto(1, S), 2);
  EXPECT_EQ(dysonct::count_upto(5, S), 3);
  const std::vector<int> a = {4, 5, 6};
  const std::vector<int> T = {1};
  EXPECT_EQ(dysonct::weight_vector(a, T), (std::vector<int>{4, 0, 6}));
}

TEST(FirstLayer, ExponentExamples) {
  const std::vector<int> a = {1, 1, 1};
  const std::vector<int> T0 = {0};
  EXPECT_EQ(dysonct::l_exponent(T0, LayerSpec::make(2, {0}, {1}), a), 0);
  EXPECT_EQ(dysonct::l_exponent(T0, LayerSpec::make(2, {0}, {2}), a), 1);
  const std::vector<int> T1 = {1};
  const std::vector<int> T2 = {2};
  EXPECT_EQ(dysonct::l_star_exponent(T1, LayerSpec::make(2, {1}, {0}), a), 2);
  EXPECT_EQ(dysonct::l_star_exponent(T2, LayerSpec::make(2, {2}, {0}), a), 1);
}

TEST(FirstLayer, ExponentPreconditions) {
  const std::vector<int> a = {1, 1, 1};
  const auto layer = LayerSpec::make(2, {1}, {0});
  const std::vector<int> T = {1};
  const std::vector<int> outside = {2};
  const std::vector<int> none;
  EXPECT_THROW(dysonct::l_exponent(T, layer, a), dysonct::PreconditionError);
  EXPECT_THROW(dysonct::l_star_exponent(outside, layer, a), dysonct::PreconditionError);
  EXPECT_THROW(dysonct::l_star_exponent(none, layer, a), dysonct::PreconditionError);
}

TEST(FirstLayerProperty, StarFormReducesWhenLayerStartsAtZero) {
  for (int n = 1; n <= 3; ++n) {
    for (const auto& [I, J] : support::layouts(n, 1, n)) {
      if (I.front() != 0) continue;
      const auto layer = LayerSpec::make(n, I, J);
      for (const auto& a : support::grid(n, 2)) {
        for (unsigned mask = 1; mask < (1U << I.size()); ++mask) {
          const auto T = layer.select(mask);
          EXPECT_EQ(dysonct::l_star_exponent(T, layer, a), dysonct::l_exponent(T, layer, a));
        }
      }
    }
  }
}

TEST(FirstLayer, TargetMonomial) {
  const auto layer = LayerSpec::make(3, {1, 2}, {0, 0});
  EXPECT_EQ(dysonct::first_layer_target(layer).to_vector(), (std::vector<int>{-2, 1, 1, 0}));
}

TEST(FirstLayer, SmallestCases) {
  const auto layer = LayerSpec::make(1, {0}, {1});
  EXPECT_EQ(dysonct::first_layer_brute(layer, DysonSpec(1, {1, 1})).to_string(), "-1");
  const auto two = LayerSpec::make(2, {0}, {1});
  const auto value = dysonct::first_layer_closed(two, DysonSpec(2, {1, 1, 1})).as_polynomial();
  ASSERT_TRUE(value.has_value());
  EXPECT_EQ(value->to_string(), "-1 - q");
  EXPECT_EQ(dysonct::first_layer_q1_closed(two, DysonSpec(2, {1, 1, 1})), -2);
}

TEST(FirstLayer, BruteForceMatchesOracle) {
  for (int n = 1; n <= 2; ++n) {
    for (const auto& [I, J] : support::layouts(n, 1, n)) {
      const auto layer = LayerSpec::make(n, I, J);
      for (const auto& a : support::grid(n, 2)) {
        const auto expected = oracle::coefficient(oracle::q_dyson(a), oracle::layer_target(n + 1, I, J));
        EXPECT_EQ(support::to_series(dysonct::first_layer_brute(layer, DysonSpec(n, a))), expected);
        const auto classical = oracle::coefficient(oracle::dyson(a), oracle::layer_target(n + 1, I, J));
        EXPECT_EQ(dysonct::first_layer_q1_brute(layer, DysonSpec(n, a)), oracle::at_one(classical));
      }
    }
  }
}

TEST(FirstLayer, ClosedFormMatchesOracle) {
  for (int n = 1; n <= 3; ++n) {
    const int amax = n == 3 ? 1 : 2;
    for (const auto& [I, J] : support::layouts(n, 1, 2)) {
      const auto layer = LayerSpec::make(n, I, J);
      for (const auto& a : support::grid(n, amax)) {
        const auto expected = oracle::coefficient(oracle::q_dyson(a), oracle::layer_target(n + 1, I, J));
        const auto closed = dysonct::first_layer_closed(layer, DysonSpec(n, a));
        EXPECT_EQ(closed, dysonct::QRat(support::from_series(expected)));
        EXPECT_EQ(dysonct::first_layer_q1_closed(layer, DysonSpec(n, a)), oracle::at_one(expected));
      }
    }
  }
}

TEST(FirstLayer, ShiftedLayoutsUseTheStarBranch) {
  // i_1 > 0 with partners on both sides of i_1.
  const auto layer = LayerSpec::make(3, {1, 2}, {0, 3});
  const std::vector<int> a = {1, 2, 1, 1};
  const auto r = dysonct::verify_first_layer(layer, DysonSpec(3, a));
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.lhs, oracle::render(oracle::coefficient(oracle::q_dyson(a), oracle::layer_target(4, {1, 2}, {0, 3}))));
  EXPECT_TRUE(r.params.extra.at("q1_holds").get<bool>());
}

TEST(FirstLayer, EmptyLayerRejected) {
  const auto layer = LayerSpec::make(2, {}, {});
  EXPECT_THROW(dysonct::first_layer_closed(layer, DysonSpec(2, {1, 1, 1})), dysonct::PreconditionError);
  EXPECT_THROW(dysonct::first_layer_q1_closed(layer, DysonSpec(2, {1, 1, 1})), dysonct::PreconditionError);
  EXPECT_THROW(dysonct::first_layer_closed(LayerSpec::make(3, {0}, {1}), DysonSpec(2, {1, 1, 1})),
               dysonct::InvalidParameters);
}

TEST(FirstLayerProperty, ClassicalValueIndependentOfJ) {
  for (int n = 1; n <= 3; ++n) {
    const auto all = support::layouts(n, 1, n);
    for (const auto& a : support::grid(n, n == 3 ? 1 : 2)) {
      for (std::size_t k = 0; k < all.size(); ++k) {
        const auto layer = LayerSpec::make(n, all[k].I, all[k].J);
        const auto value = dysonct::first_layer_q1_brute(layer, DysonSpec(n, a));
        EXPECT_EQ(dysonct::first_layer_q1_closed(layer, DysonSpec(n, a)), value);
        for (std::size_t other = k + 1; other < all.size(); ++other) {
          if (all[other].I != all[k].I) continue;
          const auto layer2 = LayerSpec::make(n, all[other].I, all[other].J);
          EXPECT_EQ(dysonct::first_layer_q1_brute(layer2, DysonSpec(n, a)), value);
        }
      }
    }
  }
}
