#ifndef BSGAMMA_GAMMA_HPP
#define BSGAMMA_GAMMA_HPP

#include <optional>
#include <string>
#include <vector>

#include "bsgamma/bigint.hpp"
#include "bsgamma/group.hpp"
#include "bsgamma/tabloid.hpp"

namespace bsgamma {

/// C(n-p, lambda1) + C(n-p, lambda2). Throws PrimeTooLarge when p > n.
BigInt gamma_closed(const PartitionPair& pp, int p);

struct StructuralGamma {
  BigInt gamma;
  int witness_block = 0;  // 1-based index of the omitted block
};

/// Total dimension of the summands of the max-rank restriction whose
/// partial blocks avoid the last block B_k.
StructuralGamma gamma_structural(const PartitionPair& pp, int p);

/// Same sum taken signature by signature over an explicit decomposition.
BigInt gamma_structural_explicit(const Decomposition& dec);

struct OracleGamma {
  BigInt gamma;
  SubgroupOrderP witness;
};

/// Largest number of tabloids fixed by an order-p subgroup of the group of
/// the given orbit type. Throws InstanceTooLarge over budget.
OracleGamma gamma_oracle(const PartitionPair& pp, const OrbitType& type, std::uint64_t budget = kDefaultBudget);

struct OrbitTypeGamma {
  OrbitType type;
  BigInt gamma;
  SubgroupOrderP witness;
};

struct GammaReport {
  PartitionPair pp = PartitionPair::from_nr(1, 0);
  int p = 0;
  BigInt gamma_closed;
  BigInt gamma_structural;
  std::optional<BigInt> gamma_oracle;
  bool oracle_skipped = false;
  std::vector<OrbitTypeGamma> per_orbit_type;
  int witness_block = 0;
  std::optional<SubgroupOrderP> witness_line;
  bool agree = false;
  std::vector<std::string> disagreements;
};

struct GammaOptions {
  std::uint64_t budget = kDefaultBudget;
  bool parallel = true;
};

/// Reconciles the closed formula, the structural sum and, within budget, the
/// fixed-point oracle over every orbit type.
GammaReport gamma_symmetric_group(const PartitionPair& pp, int p, const GammaOptions& options = {});

struct YoungHook {
  BigInt dimension;
  BigInt gamma;
};

/// Young module for (n-1, 1): dimension n if p | n else n-1, gamma = dim - p.
/// Throws std::logic_error if the direct-sum cross-check fails.
YoungHook young_gamma_first_hook(int n, int p);

}  // namespace bsgamma

#endif
