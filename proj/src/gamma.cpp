#include "bsgamma/gamma.hpp"

#include <algorithm>
#include <bit>
#include <future>

#include "bsgamma/combinatorics.hpp"
#include "bsgamma/errors.hpp"

namespace bsgamma {

namespace {

void check_instance(const PartitionPair& pp, int p) {
  if (!is_prime(p)) throw InvalidArgument("p = " + std::to_string(p) + " is not prime");
  if (p > pp.n()) throw PrimeTooLarge(p, pp.n());
}

}  // namespace

BigInt gamma_closed(const PartitionPair& pp, int p) {
  check_instance(pp, p);
  return binom(pp.n() - p, pp.lambda1()) + binom(pp.n() - p, pp.lambda2());
}

StructuralGamma gamma_structural(const PartitionPair& pp, int p) {
  check_instance(pp, p);
  const SymmetricDecomposition dec = decompose_formula(pp, p);
  // Signatures avoiding B_k: C(k-1, d) subsets of each size d.
  BigInt total = 0;
  for (int d = 0; d < dec.k; ++d)
    total += binom(dec.k - 1, d) * dec.per_subset[static_cast<std::size_t>(d)] * ipow(p, static_cast<unsigned long>(d));
  return StructuralGamma{total, dec.k};
}

BigInt gamma_structural_explicit(const Decomposition& dec) {
  const std::uint64_t last = std::uint64_t{1} << (dec.block_count - 1);
  BigInt total = 0;
  for (const auto& [sig, mult] : dec.multiplicities)
    if ((sig.blocks & last) == 0) total += mult * ipow(dec.p, static_cast<unsigned long>(sig.d));
  return total;
}

OracleGamma gamma_oracle(const PartitionPair& pp, const OrbitType& type, std::uint64_t budget) {
  if (type.n != pp.n()) throw InvalidArgument("orbit type degree does not match the partition");
  const std::uint64_t tabloids = tabloid_count(pp.n(), pp.r());
  if (tabloids > budget)
    throw InstanceTooLarge("oracle: " + std::to_string(tabloids) + " tabloids exceeds the budget " +
                           std::to_string(budget));
  if (order_p_subgroup_count(type.rank(), type.p) > budget)
    throw InstanceTooLarge("oracle: too many order-p subgroups for the budget");

  const ElementaryGroup group(type);
  std::optional<OracleGamma> best;
  SubgroupStream lines = order_p_subgroups(group);
  while (lines.next()) {
    BigInt fixed = fixed_count(group, lines.current(), pp, budget);
    if (!best || fixed > best->gamma) best = OracleGamma{std::move(fixed), lines.current()};
  }
  return *best;
}

GammaReport gamma_symmetric_group(const PartitionPair& pp, int p, const GammaOptions& options) {
  check_instance(pp, p);
  GammaReport report;
  report.pp = pp;
  report.p = p;
  report.gamma_closed = gamma_closed(pp, p);
  const StructuralGamma structural = gamma_structural(pp, p);
  report.gamma_structural = structural.gamma;
  report.witness_block = structural.witness_block;
  if (report.gamma_structural != report.gamma_closed)
    report.disagreements.push_back("structural " + to_decimal(report.gamma_structural) + " != closed " +
                                   to_decimal(report.gamma_closed));

  const bool within_budget = tabloid_count(pp.n(), pp.r()) <= options.budget &&
                             order_p_subgroup_count(pp.n() / p, p) <= options.budget;
  if (!within_budget) {
    report.oracle_skipped = true;
  } else {
    const std::vector<OrbitType> types = enumerate_orbit_types(pp.n(), p);
    std::vector<OracleGamma> results;
    if (options.parallel && types.size() > 1) {
      std::vector<std::future<OracleGamma>> pending;
      for (const OrbitType& t : types)
        pending.push_back(std::async(std::launch::async, [&pp, t, &options] { return gamma_oracle(pp, t, options.budget); }));
      for (auto& f : pending) results.push_back(f.get());
    } else {
      for (const OrbitType& t : types) results.push_back(gamma_oracle(pp, t, options.budget));
    }

    for (std::size_t i = 0; i < types.size(); ++i) {
      report.per_orbit_type.push_back(OrbitTypeGamma{types[i], results[i].gamma, results[i].witness});
      if (types[i].is_max_rank()) {
        report.gamma_oracle = results[i].gamma;
        report.witness_line = results[i].witness;
      }
    }
    std::sort(report.per_orbit_type.begin(), report.per_orbit_type.end(),
              [](const OrbitTypeGamma& a, const OrbitTypeGamma& b) { return a.type.encoding() < b.type.encoding(); });
    if (report.gamma_oracle != report.gamma_closed)
      report.disagreements.push_back("oracle on the max-rank type " + to_decimal(*report.gamma_oracle) +
                                     " != closed " + to_decimal(report.gamma_closed));
    for (const auto& entry : report.per_orbit_type)
      if (entry.gamma > *report.gamma_oracle)
        report.disagreements.push_back("orbit type " + entry.type.encoding() + " exceeds the max-rank value");
  }
  report.agree = report.disagreements.empty();
  return report;
}

YoungHook young_gamma_first_hook(int n, int p) {
  if (n < 2) throw InvalidArgument("young_gamma_first_hook: need n >= 2");
  const PartitionPair hook = PartitionPair::from_lambda(n - 1, 1);
  const BigInt permutation_gamma = gamma_closed(hook, p);
  const bool divides = n % p == 0;
  YoungHook out;
  out.dimension = divides ? n : n - 1;
  out.gamma = divides ? BigInt(n - p) : BigInt(n - p - 1);
  // M = Y when p | n, and M = k + Y otherwise, which adds exactly 1 to gamma.
  const BigInt via_sum = divides ? permutation_gamma : permutation_gamma - 1;
  if (via_sum != out.gamma) throw std::logic_error("Young hook gamma disagrees with the permutation module");
  if (out.gamma != out.dimension - p) throw std::logic_error("Young hook gamma is not dim - p");
  return out;
}

}  // namespace bsgamma
