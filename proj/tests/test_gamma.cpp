#include <gtest/gtest.h>

#include "bsgamma/combinatorics.hpp"
#include "bsgamma/errors.hpp"
#include "bsgamma/gamma.hpp"
#include "oracles.hpp"

namespace bsgamma {
namespace {

// Largest fixed-point count over every cyclic subgroup of order p, taken over
// the full element list of the group.
BigInt brute_gamma(int n, int r, const OrbitType& type) {
  ElementaryGroup g(type);
  const auto elements = oracle::all_elements(g.generators(), type.p, n);
  const auto subsets = oracle::all_subsets(n, r);
  long best = 0;
  for (const Permutation& z : elements) {
    bool identity = true;
    for (int x = 0; x < n; ++x) identity = identity && z[static_cast<std::size_t>(x)] == x;
    if (identity) continue;
    long fixed = 0;
    for (std::uint64_t t : subsets)
      if (oracle::image(z, t) == t) ++fixed;
    best = std::max(best, fixed);
  }
  return best;
}

TEST(GammaClosed, Examples) {
  EXPECT_EQ(gamma_closed(PartitionPair::from_nr(4, 2), 2), 2);
  EXPECT_EQ(gamma_closed(PartitionPair::from_nr(7, 2), 3), 6);
  EXPECT_EQ(gamma_closed(PartitionPair::from_nr(9, 0), 3), 1);
  EXPECT_EQ(gamma_closed(PartitionPair::from_nr(5, 2), 5), 0);
  EXPECT_THROW(gamma_closed(PartitionPair::from_nr(4, 2), 5), PrimeTooLarge);
  EXPECT_THROW(gamma_closed(PartitionPair::from_nr(6, 2), 4), InvalidArgument);
}

TEST(GammaStructural, Examples) {
  const StructuralGamma g = gamma_structural(PartitionPair::from_nr(6, 2), 2);
  EXPECT_EQ(g.gamma, 7);
  EXPECT_EQ(g.witness_block, 3);
  EXPECT_EQ(gamma_structural(PartitionPair::from_nr(4, 2), 2).gamma, 2);
  EXPECT_EQ(gamma_structural(PartitionPair::from_nr(7, 2), 3).gamma, 6);
}

TEST(GammaStructural, ExplicitSumAgrees) {
  for (auto [n, r, p] : {std::tuple{6, 2, 2}, std::tuple{9, 4, 2}, std::tuple{11, 4, 3}, std::tuple{10, 5, 5}}) {
    const auto pp = PartitionPair::from_nr(n, r);
    EXPECT_EQ(gamma_structural_explicit(decompose_formula(pp, p).expand()), gamma_structural(pp, p).gamma);
  }
}

TEST(GammaOracle, Examples) {
  const OracleGamma g = gamma_oracle(PartitionPair::from_nr(4, 2), max_rank_type(4, 2));
  EXPECT_EQ(g.gamma, 2);
  EXPECT_EQ(g.witness.line, (std::vector<int>{1, 0}));
  EXPECT_EQ(gamma_oracle(PartitionPair::from_nr(4, 2), enumerate_orbit_types(4, 2)[1]).gamma, 2);
  EXPECT_EQ(gamma_oracle(PartitionPair::from_nr(6, 2), max_rank_type(6, 2)).gamma, 7);
  EXPECT_THROW(gamma_oracle(PartitionPair::from_nr(40, 20), max_rank_type(40, 2)), InstanceTooLarge);
}

TEST(GammaOracle, AgainstFullElementScan) {
  for (auto [n, p] : {std::pair{6, 2}, std::pair{8, 2}, std::pair{7, 3}, std::pair{9, 3}})
    for (int r = 0; 2 * r <= n; ++r)
      for (const OrbitType& type : enumerate_orbit_types(n, p))
        EXPECT_EQ(gamma_oracle(PartitionPair::from_nr(n, r), type).gamma, brute_gamma(n, r, type))
            << n << " " << r << " " << type.encoding();
}

TEST(GammaSymmetricGroup, Examples) {
  EXPECT_EQ(gamma_symmetric_group(PartitionPair::from_lambda(3, 2), 2).gamma_closed, 4);
  EXPECT_EQ(gamma_symmetric_group(PartitionPair::from_lambda(2, 2), 2).gamma_closed, 2);
  const GammaReport zero = gamma_symmetric_group(PartitionPair::from_lambda(3, 2), 5);
  EXPECT_EQ(zero.gamma_closed, 0);
  EXPECT_TRUE(zero.agree);
  const GammaReport seq = gamma_symmetric_group(PartitionPair::from_nr(9, 3), 2, GammaOptions{kDefaultBudget, false});
  const GammaReport par = gamma_symmetric_group(PartitionPair::from_nr(9, 3), 2, GammaOptions{kDefaultBudget, true});
  EXPECT_EQ(seq.gamma_oracle, par.gamma_oracle);
  ASSERT_EQ(seq.per_orbit_type.size(), par.per_orbit_type.size());
  for (std::size_t i = 0; i < seq.per_orbit_type.size(); ++i) {
    EXPECT_EQ(seq.per_orbit_type[i].type, par.per_orbit_type[i].type);
    EXPECT_EQ(seq.per_orbit_type[i].gamma, par.per_orbit_type[i].gamma);
    if (i > 0) EXPECT_LT(seq.per_orbit_type[i - 1].type.encoding(), seq.per_orbit_type[i].type.encoding());
  }
}

TEST(GammaSymmetricGroup, OracleSkippedOverBudget) {
  const GammaReport big = gamma_symmetric_group(PartitionPair::from_nr(60, 30), 2, GammaOptions{10000, true});
  EXPECT_TRUE(big.oracle_skipped);
  EXPECT_FALSE(big.gamma_oracle);
  EXPECT_TRUE(big.agree);
  EXPECT_EQ(big.gamma_closed, binom(58, 30) + binom(58, 30));
}

// Closed, structural and coordinate-line fixed count for every n <= 64.
TEST(GammaRoutes, AgreeUpToDegree64) {
  for (int p : {2, 3, 5, 7, 11, 13, 31, 61})
    for (int n = p; n <= 64; ++n) {
      ElementaryGroup g(max_rank_type(n, p));
      std::vector<int> line(static_cast<std::size_t>(g.rank()), 0);
      line[0] = 1;
      for (int r = 0; 2 * r <= n; ++r) {
        const auto pp = PartitionPair::from_nr(n, r);
        const BigInt closed = gamma_closed(pp, p);
        ASSERT_EQ(gamma_structural(pp, p).gamma, closed) << n << " " << r << " " << p;
        ASSERT_EQ(fixed_count(g, SubgroupOrderP{line}, pp, 0), closed);
      }
    }
}

TEST(GammaRoutes, ZeroExactlyWhenProjective) {
  for (int p : {2, 3, 5})
    for (int n = p; n <= 12; ++n)
      for (int r = 0; 2 * r <= n; ++r) {
        const auto pp = PartitionPair::from_nr(n, r);
        const auto dec = decompose_formula(pp, p).expand();
        bool projective = true;
        for (const auto& [s, m] : dec.multiplicities) projective = projective && dec.is_projective(s);
        EXPECT_EQ(gamma_closed(pp, p) == 0, projective) << n << " " << r << " " << p;
      }
}

// M(n, r) is a summand of the restriction of M(n+1, r) to S_n.
TEST(GammaRoutes, MonotoneInDegree) {
  for (int p : {2, 3, 5})
    for (int n = p; n < 40; ++n)
      for (int r = 0; 2 * r <= n; ++r)
        EXPECT_LE(gamma_closed(PartitionPair::from_nr(n, r), p), gamma_closed(PartitionPair::from_nr(n + 1, r), p));
}

TEST(YoungHook, Examples) {
  const YoungHook a = young_gamma_first_hook(6, 2);
  EXPECT_EQ(a.dimension, 6);
  EXPECT_EQ(a.gamma, 4);
  const YoungHook b = young_gamma_first_hook(7, 2);
  EXPECT_EQ(b.dimension, 6);
  EXPECT_EQ(b.gamma, 4);
  for (int p : {2, 3, 5, 7}) {
    const YoungHook c = young_gamma_first_hook(p, p);
    EXPECT_EQ(c.dimension, p);
    EXPECT_EQ(c.gamma, 0);
  }
}

}  // namespace
}  // namespace bsgamma
