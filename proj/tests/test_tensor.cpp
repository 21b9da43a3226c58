#include <gtest/gtest.h>

#include <random>

#include "bsgamma/combinatorics.hpp"
#include "bsgamma/errors.hpp"
#include "bsgamma/gamma.hpp"
#include "bsgamma/tensor.hpp"
#include "coefficient.hpp"

namespace bsgamma {
namespace {

CoreState random_state(std::mt19937& rng, int p, int k) {
  CoreState s{p, k, {}};
  const std::uint64_t full = (std::uint64_t{1} << k) - 1;
  std::uniform_int_distribution<std::uint64_t> subset(0, full - 1);
  std::uniform_int_distribution<int> mult(1, 4);
  std::uniform_int_distribution<int> size(1, 5);
  for (int i = size(rng); i > 0; --i) s.classes[subset(rng)] += mult(rng);
  return s;
}

TEST(TensorClasses, Examples) {
  const auto same = tensor_classes(0b1, 0b1, 3, 3);
  ASSERT_TRUE(same);
  EXPECT_EQ(same->blocks, 0b1u);
  EXPECT_EQ(same->multiplicity, 3);

  const auto trivial = tensor_classes(0, 0b101, 3, 2);
  ASSERT_TRUE(trivial);
  EXPECT_EQ(trivial->blocks, 0b101u);
  EXPECT_EQ(trivial->multiplicity, 1);

  EXPECT_FALSE(tensor_classes(0b011, 0b110, 3, 2));
  EXPECT_EQ(tensor_product(0b011, 0b110, 2).multiplicity, 2);
}

TEST(TensorClasses, DimensionBookkeeping) {
  for (int p : {2, 3, 5})
    for (std::uint64_t a = 0; a < 16; ++a)
      for (std::uint64_t b = 0; b < 16; ++b) {
        const ClassProduct c = tensor_product(a, b, p);
        EXPECT_EQ(c.blocks, a | b);
        EXPECT_EQ(ipow(p, static_cast<unsigned long>(std::popcount(a))) * ipow(p, static_cast<unsigned long>(std::popcount(b))),
                  c.multiplicity * ipow(p, static_cast<unsigned long>(std::popcount(a | b))));
        EXPECT_EQ(tensor_classes(a, b, 4, p).has_value(), (a | b) != 15u);
      }
}

TEST(CoreOf, Examples) {
  const auto d4 = decompose_enumerated(PartitionPair::from_nr(4, 2), ElementaryGroup(max_rank_type(4, 2)));
  EXPECT_EQ(core_of(d4).classes, (std::map<std::uint64_t, BigInt>{{0, 2}}));

  const auto d6 = decompose_enumerated(PartitionPair::from_nr(6, 2), ElementaryGroup(max_rank_type(6, 2)));
  const CoreState c6 = core_of(d6);
  EXPECT_EQ(c6.classes, (std::map<std::uint64_t, BigInt>{{0, 3}, {0b011, 1}, {0b101, 1}, {0b110, 1}}));
  EXPECT_EQ(core_of(decompose_formula(PartitionPair::from_nr(6, 2), 2)), c6);

  Decomposition empty{2, 2, 2, {}};
  EXPECT_TRUE(core_of(empty).empty());
}

TEST(TensorStep, Examples) {
  const CoreState two{2, 2, {{0, 2}}};
  EXPECT_EQ(tensor_step(two, two).classes, (std::map<std::uint64_t, BigInt>{{0, 4}}));
  const CoreState b1{2, 3, {{0b001, 1}}}, b2{2, 3, {{0b010, 1}}};
  EXPECT_EQ(tensor_step(b1, b2).classes, (std::map<std::uint64_t, BigInt>{{0b011, 1}}));
  const CoreState b12{2, 3, {{0b011, 1}}}, b23{2, 3, {{0b110, 1}}};
  EXPECT_TRUE(tensor_step(b12, b23).empty());
}

TEST(TensorStep, CommutativeAssociativeAndTransformAgrees) {
  std::mt19937 rng(20241016);
  for (int trial = 0; trial < 200; ++trial) {
    const int p = trial % 2 == 0 ? 2 : 3;
    const int k = 1 + trial % 5;
    const CoreState a = random_state(rng, p, k), b = random_state(rng, p, k), c = random_state(rng, p, k);
    const CoreState ab = tensor_step(a, b);
    EXPECT_EQ(ab, tensor_step(b, a));
    EXPECT_EQ(tensor_step(ab, c), tensor_step(a, tensor_step(b, c)));
    EXPECT_EQ(tensor_step_transform(a, b), ab);
    for (const auto& [blocks, mult] : ab.classes) {
      EXPECT_GT(mult, 0);
      EXPECT_NE(blocks, (std::uint64_t{1} << k) - 1);
    }
  }
}

// Running union of a product chain: the chain leaves the core exactly when
// the union first covers every block.
TEST(TensorStep, ChainLeavesCoreOnlyWhenUnionIsFull) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    const int k = 2 + trial % 4;
    std::uniform_int_distribution<std::uint64_t> subset(0, (std::uint64_t{1} << k) - 2);
    CoreState state{2, k, {{subset(rng), 1}}};
    std::uint64_t running = state.classes.begin()->first;
    for (int step = 0; step < 6; ++step) {
      const std::uint64_t next = subset(rng);
      running |= next;
      state = tensor_step(state, CoreState{2, k, {{next, 1}}});
      EXPECT_EQ(state.empty(), running == (std::uint64_t{1} << k) - 1);
      if (state.empty()) break;
    }
  }
}

TEST(Growth, Examples) {
  const GrowthEstimate g4 = growth(PartitionPair::from_nr(4, 2), 2, GrowthOptions{20});
  for (std::size_t j = 0; j < g4.c_values.size(); ++j) EXPECT_EQ(g4.c_values[j], ipow(2, j + 1));
  ASSERT_EQ(g4.ratios.size(), 19u);
  for (const auto& r : g4.ratios) EXPECT_EQ(*r, 2);

  const GrowthEstimate g6 = growth(PartitionPair::from_nr(6, 2), 2, GrowthOptions{120, 16, BigInt(7)});
  EXPECT_EQ(g6.c_values[0], 15);
  EXPECT_LT(*g6.relative_errors.back(), BigRational(1, 1000));

  const GrowthEstimate g0 = growth(PartitionPair::from_nr(7, 0), 3, GrowthOptions{10});
  for (const auto& c : g0.c_values) EXPECT_EQ(c, 1);
  for (const auto& r : g0.ratios) EXPECT_EQ(*r, 1);
  EXPECT_DOUBLE_EQ(g0.roots.back(), 1.0);
}

TEST(Growth, EmptyCoreAndLimits) {
  const GrowthEstimate g = growth(PartitionPair::from_nr(5, 2), 5, GrowthOptions{5});
  for (const auto& c : g.c_values) EXPECT_EQ(c, 0);
  for (const auto& r : g.ratios) EXPECT_FALSE(r);
  EXPECT_THROW(growth(PartitionPair::from_nr(40, 3), 2), InstanceTooLarge);
  EXPECT_THROW(growth(PartitionPair::from_nr(6, 2), 2, GrowthOptions{1}), InvalidArgument);
}

TEST(Growth, FaceSumsMatchIteration) {
  for (auto [n, r, p] : {std::tuple{6, 2, 2}, std::tuple{8, 3, 2}, std::tuple{9, 4, 3}, std::tuple{7, 2, 3},
                         std::tuple{10, 4, 2}, std::tuple{11, 5, 5}}) {
    const auto pp = PartitionPair::from_nr(n, r);
    const GrowthEstimate g = growth(pp, p, GrowthOptions{30});
    const CoreState m = core_of(decompose_formula(pp, p));
    for (int j = 1; j <= 30; ++j) EXPECT_EQ(g.c_values[static_cast<std::size_t>(j - 1)], core_dimension_by_faces(m, j));
  }
}

TEST(Growth, IntegerRoot) {
  EXPECT_NEAR(integer_root(BigInt(1024), 10), 2.0, 1e-12);
  EXPECT_NEAR(integer_root(ipow(7, 500), 500), 7.0, 1e-9);
  EXPECT_EQ(integer_root(BigInt(0), 3), 0.0);
}

TEST(Coefficient, CompositionSumMatchesWords) {
  for (auto [n, r, p] : {std::tuple{4, 2, 2}, std::tuple{6, 2, 2}, std::tuple{5, 1, 2}, std::tuple{7, 2, 3}}) {
    const auto all = coefficient::instances(core_of(decompose_formula(PartitionPair::from_nr(n, r), p)));
    const int k = n / p;
    for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << all.size()); ++mask) {
      std::vector<oracle::Summand> J;
      for (std::size_t a = 0; a < all.size(); ++a)
        if (mask >> a & 1) J.push_back(all[a]);
      for (int m = 1; m <= 6; ++m) {
        const BigInt formula = coefficient::by_compositions(J, m, p);
        EXPECT_EQ(formula, oracle::coefficient_by_words(J, m, p));
        EXPECT_EQ(formula, oracle::coefficient_by_word_dp(J, 6, p)[static_cast<std::size_t>(m - 1)]);
        if (auto via_steps = coefficient::by_tensor_step(J, m, p, k)) EXPECT_EQ(*via_steps, formula);
      }
    }
  }
}

}  // namespace
}  // namespace bsgamma
